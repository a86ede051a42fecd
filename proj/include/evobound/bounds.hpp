#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace evobound {

/// Scalar envelope norm kappa(t) = ||K(t)|| consumed by the analytic bounds.
/// Constant and sinusoidal kinds carry exact antiderivatives; tabulated data
/// is interpolated linearly between samples.
class EnvelopeNorm {
public:
    enum class Kind { Constant, Sinusoidal, Tabulated };

    static EnvelopeNorm constant(double gamma);
    static EnvelopeNorm sinusoidal(double gamma, double omega);
    static EnvelopeNorm tabulated(std::vector<std::pair<double, double>> samples);

    Kind kind() const noexcept { return kind_; }
    double gamma() const noexcept { return gamma_; }
    double omega() const noexcept { return omega_; }
    bool has_closed_form() const noexcept { return kind_ != Kind::Tabulated; }

    double kappa(double t) const;

    /// int_0^t kappa(u) du. Exact antiderivative for constant/sinusoidal,
    /// exact piecewise-linear integral for tabulated.
    double integral(double t) const;

    /// Points in (0, T) where kappa is not smooth: |sin| kinks, table nodes.
    std::vector<double> breakpoints(double T) const;

    /// Throws unless the envelope is defined on all of [0, T].
    void require_coverage(double T) const;

private:
    EnvelopeNorm() = default;

    Kind kind_ = Kind::Constant;
    double gamma_ = 0.0;
    double omega_ = 0.0;
    std::vector<std::pair<double, double>> samples_;
};

/// int_0^T kappa(s) exp(int_s^T kappa(u) du) ds by quadrature. The inner
/// integral is accumulated once over the grid (O(n) total work).
double bound_general(const EnvelopeNorm& env, double T, int quad_points = 4096);

/// Same bound through the exact antiderivative: exp(int_0^T kappa) - 1.
/// Rejects tabulated envelopes; use bound_general for those.
double bound_general_closed(const EnvelopeNorm& env, double T);

/// int_0^T kappa(u) du, the tighter first-order bound valid for Hermitian
/// perturbations (unit-norm perturbed state).
double bound_linear(const EnvelopeNorm& env, double T);

/// exp(gamma T) - 1, the constant-envelope closed form.
double bound_constant(double gamma, double T);

/// Prefactor omega^2 (1 + e^{-gamma pi / omega}) / (pi (gamma^2 + omega^2))
/// of the sinusoidal-envelope closed form.
double c_factor(double gamma, double omega);

/// Sinusoidal-envelope closed form C(gamma, omega) * gamma T e^{gamma T}.
/// Requires T to be an integer multiple of the half period pi/omega.
double bound_sinusoidal(double gamma, double omega, double T);

/// The same bound written as the explicit N-period sum
/// gamma e^{gamma T} N (1/omega)(1 + e^{-gamma pi/omega}) / ((gamma/omega)^2 + 1).
/// Algebraically identical to bound_sinusoidal; kept as an independent route.
double bound_sinusoidal_period_sum(double gamma, double omega, double T);

/// Every analytic bound evaluated over a shared time grid.
struct BoundCurve {
    std::vector<double> times;
    std::vector<double> linear;
    std::vector<double> gronwall;
    // Case-specific closed form (constant or sinusoidal formula); empty where
    // the formula does not apply (sinusoidal off period multiples, tabulated).
    std::vector<std::optional<double>> closed_form;
    std::string label;
};

/// Fills all bound columns on `times`, which must be increasing and start at 0.
BoundCurve bound_curve(const EnvelopeNorm& env, const std::vector<double>& times);

}  // namespace evobound

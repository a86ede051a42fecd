#pragma once

#include <functional>
#include <vector>

#include "evobound/bounds.hpp"
#include "evobound/linalg.hpp"

namespace evobound {

enum class EnvelopeKind { Constant, Sinusoidal, Custom };

/// Time-dependent perturbation K(t) = envelope(t) * generator. Because the
/// spatial part is fixed, ||K(t)|| = ||generator|| * |envelope(t)| exactly.
class PerturbationSpec {
public:
    static PerturbationSpec constant(HermitianOperator generator);
    static PerturbationSpec sinusoidal(HermitianOperator generator, double omega);
    static PerturbationSpec custom(HermitianOperator generator,
                                   std::function<double(double)> envelope);

    const HermitianOperator& generator() const noexcept { return generator_; }
    EnvelopeKind kind() const noexcept { return kind_; }
    double omega() const noexcept { return omega_; }
    double generator_norm() const noexcept { return generator_norm_; }
    Eigen::Index dim() const noexcept { return generator_.dim(); }

    /// Signed scalar envelope at time t.
    double envelope(double t) const;

    /// kappa(t) = ||K(t)||.
    double norm_at(double t) const;

    /// sup of kappa over [0, horizon]; sampled for custom envelopes.
    double max_norm(double horizon) const;

    /// Matching scalar envelope for the bounds module. Throws for custom
    /// envelopes, which have no closed-form norm.
    EnvelopeNorm envelope_norm() const;

private:
    PerturbationSpec(HermitianOperator generator, EnvelopeKind kind, double omega,
                     std::function<double(double)> envelope);

    HermitianOperator generator_;
    double generator_norm_;
    EnvelopeKind kind_;
    double omega_ = 0.0;
    std::function<double(double)> envelope_;
};

/// Ideal and perturbed trajectories on a shared time grid, with the exact
/// deviation norm ||psi(t) - phi(t)|| recorded per grid point.
struct EvolutionTrace {
    std::vector<double> times;
    std::vector<ComplexVector> psi;  // evolves under H alone
    std::vector<ComplexVector> phi;  // evolves under H + K(t)
    std::vector<double> deviation;

    double dt = 0.0;
    double h_norm = 0.0;
    double max_kappa = 0.0;
};

/// max(1000, ceil(20 T (||H|| + max kappa))): keeps the step-size
/// precondition dt (||H|| + kappa) <= 0.1 with margin.
int default_steps(double h_norm, double max_kappa, double T);

/// Integrates both Schrodinger equations with the exponential midpoint rule
/// (generator evaluated at t + dt/2, exact matrix exponential per step).
/// Norm-preserving by construction; no renormalization is ever applied.
EvolutionTrace evolve_pair(const HermitianOperator& h, const PerturbationSpec& k,
                           const ComplexVector& psi0, double T, int steps);

using TimeDependentHamiltonian = std::function<HermitianOperator(double)>;

/// Same integrator with a time-dependent ideal Hamiltonian. `h_norm_bound`
/// must dominate sup_t ||H(t)|| (used for the step-size precondition).
EvolutionTrace evolve_pair(const TimeDependentHamiltonian& h, double h_norm_bound,
                           const PerturbationSpec& k, const ComplexVector& psi0,
                           double T, int steps);

/// kappa(t_k)(1 + dev_k) minus the centered difference d(dev)/dt at each
/// interior grid point. Nonnegative up to discretization error when the
/// differential inequality holds.
std::vector<double> pointwise_inequality_residual(const EvolutionTrace& trace,
                                                  const PerturbationSpec& k);

/// 10 dt^2 (||H|| + max kappa)^3 + 1e-8, the slack the residuals are allowed.
double discretization_tolerance(const EvolutionTrace& trace);

}  // namespace evobound

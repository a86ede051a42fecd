#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "evobound/dynamics.hpp"

namespace evobound {

enum class GroverKind { Effective, Full };

/// Continuous-time search model over N database items.
///
/// Effective kind: the two-level picture in the ordered basis
/// (unmarked complement, marked state) with H = Omega sigma_y.
/// Full kind: H = |w><w| + |+><+| on the full 2^n-dimensional register.
struct GroverModel {
    GroverKind kind;
    std::int64_t n_items;   // database size N
    std::int64_t target;    // marked item index w
    double theta;           // arcsin(1/sqrt(N))
    double rabi_frequency;  // Omega = 2 theta
    double t_paper;         // pi / (2 Omega)
    double t_exact;         // unperturbed success-probability-1 time
    HermitianOperator hamiltonian;
    ComplexVector initial;
};

/// Effective kind accepts any N >= 2; full kind needs N = 2^n, n <= 12.
GroverModel build_grover(GroverKind kind, std::int64_t n_items, std::int64_t target = 0);

/// |<w|phi(T)>|^2 with phi evolved under hamiltonian + K(t).
/// steps <= 0 picks default_steps.
double success_probability(const GroverModel& model, const PerturbationSpec& k,
                           double T, int steps = 0);

/// (max(0, 1 - deviation_bound))^2. Clamped at zero: once the bound exceeds
/// one the squared expression no longer certifies anything.
double success_lower_bound(double deviation_bound);

/// (max(0, 2 - e^{gamma T}))^2, i.e. success_lower_bound(bound_constant).
double success_lower_bound_constant(double gamma, double T);

/// First-order expansion 1 - 2 gamma T of the constant-envelope bound,
/// exposed for reporting only (valid for gamma T << 1, may go negative).
double success_lower_bound_linearized(double gamma, double T);

/// Largest constant error strength that still certifies success probability
/// >= 1 - epsilon at runtime T = pi sqrt(N)/4:
/// (4 / (pi sqrt(N))) ln(2 - sqrt(1 - epsilon)).
double gamma_tolerance(std::int64_t n_items, double epsilon);

/// Envelope kind for a sweep row: constant, or sinusoidal with `omega`.
struct SweepEnvelope {
    EnvelopeKind kind = EnvelopeKind::Constant;
    double omega = 0.0;

    std::string label() const;
};

struct RobustnessRow {
    double gamma = 0.0;
    std::string envelope;
    double time = 0.0;
    double deviation_bound = 0.0;
    double psucc_simulated = 0.0;
    double psucc_lower_bound = 0.0;
    bool certified = false;
    bool gamma_tolerance_used = false;
};

struct RobustnessReport {
    std::vector<RobustnessRow> rows;
    // 1 - |<w|psi(T)>| of the unperturbed run, i.e. how far the ideal state
    // is from the marked state at the sweep time.
    double ideal_overlap_residual = 0.0;

    bool all_certified() const;
};

struct SweepOptions {
    int steps = 0;        // <= 0: default_steps
    double time = 0.0;    // <= 0: model.t_paper
    int error_qubit = 1;  // full kind: qubit carrying the Y perturbation
};

/// One row per (gamma, envelope), in grid order. Certified rows satisfy
/// psucc_simulated >= psucc_lower_bound - 1e-6; violations are flagged, they
/// indicate a bug rather than data.
RobustnessReport robustness_sweep(const GroverModel& model,
                                  const std::vector<double>& gammas,
                                  const std::vector<SweepEnvelope>& envelopes,
                                  const SweepOptions& opts = {});

/// Slack allowed before a certificate row counts as violated.
inline constexpr double kCertificateSlack = 1e-6;

}  // namespace evobound

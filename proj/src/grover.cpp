#include "evobound/grover.hpp"

#include <cmath>
#include <stdexcept>

#include "evobound/bounds.hpp"

namespace evobound {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

bool is_power_of_two(std::int64_t n) { return n > 0 && (n & (n - 1)) == 0; }

int log2_exact(std::int64_t n) {
    int k = 0;
    while ((std::int64_t(1) << k) < n) ++k;
    return k;
}

HermitianOperator perturbation_generator(const GroverModel& model, double gamma,
                                         int error_qubit) {
    if (model.kind == GroverKind::Effective) {
        return gamma * pauli_y();
    }
    const int n_qubits = log2_exact(model.n_items);
    return gamma * embed_pauli_y(n_qubits, error_qubit);
}

PerturbationSpec perturbation_for(const GroverModel& model, double gamma,
                                  const SweepEnvelope& env, int error_qubit) {
    HermitianOperator generator = perturbation_generator(model, gamma, error_qubit);
    switch (env.kind) {
        case EnvelopeKind::Constant:
            return PerturbationSpec::constant(std::move(generator));
        case EnvelopeKind::Sinusoidal:
            return PerturbationSpec::sinusoidal(std::move(generator), env.omega);
        case EnvelopeKind::Custom:
            break;
    }
    throw std::invalid_argument("robustness_sweep: only constant and sinusoidal envelopes");
}

}  // namespace

GroverModel build_grover(GroverKind kind, std::int64_t n_items, std::int64_t target) {
    if (n_items < 2) {
        throw std::invalid_argument("build_grover: need at least 2 database items");
    }
    if (target < 0 || target >= n_items) {
        throw std::invalid_argument("build_grover: target index out of range");
    }

    const double theta = std::asin(1.0 / std::sqrt(double(n_items)));
    const double omega = 2.0 * theta;

    if (kind == GroverKind::Effective) {
        // Two-level picture in the ordered basis (unmarked complement, marked).
        ComplexMatrix h(2, 2);
        h << Complex(0, 0), Complex(0, -omega), Complex(0, omega), Complex(0, 0);
        ComplexVector initial(2);
        initial << Complex(std::cos(theta), 0), Complex(std::sin(theta), 0);
        return GroverModel{kind,
                           n_items,
                           target,
                           theta,
                           omega,
                           kPi / (2.0 * omega),
                           (kPi / 2.0 - theta) / omega,
                           HermitianOperator(std::move(h)),
                           std::move(initial)};
    }

    if (!is_power_of_two(n_items) || n_items > kMaxDim) {
        throw std::invalid_argument("build_grover: full kind needs N = 2^n with n <= 12");
    }
    // H = |w><w| + |+><+| on the full register; success is certain at
    // t = pi sqrt(N) / 2 (this convention's own optimal time).
    const auto dim = static_cast<Eigen::Index>(n_items);
    ComplexMatrix h = ComplexMatrix::Constant(dim, dim, Complex(1.0 / double(n_items), 0.0));
    h(target, target) += Complex(1.0, 0.0);
    ComplexVector initial =
        ComplexVector::Constant(dim, Complex(1.0 / std::sqrt(double(n_items)), 0.0));
    return GroverModel{kind,
                       n_items,
                       target,
                       theta,
                       omega,
                       kPi / (2.0 * omega),
                       kPi * std::sqrt(double(n_items)) / 2.0,
                       HermitianOperator(std::move(h)),
                       std::move(initial)};
}

double success_probability(const GroverModel& model, const PerturbationSpec& k,
                           double T, int steps) {
    if (k.dim() != model.hamiltonian.dim()) {
        throw std::invalid_argument("success_probability: perturbation dimension mismatch");
    }
    if (steps <= 0) {
        steps = default_steps(operator_norm(model.hamiltonian), k.max_norm(T), T);
    }
    const EvolutionTrace trace = evolve_pair(model.hamiltonian, k, model.initial, T, steps);
    const Eigen::Index marked =
        model.kind == GroverKind::Effective ? 1 : static_cast<Eigen::Index>(model.target);
    const double p = std::norm(trace.phi.back()(marked));
    return std::min(p, 1.0);
}

double success_lower_bound(double deviation_bound) {
    if (!std::isfinite(deviation_bound) || deviation_bound < 0.0) {
        throw std::invalid_argument("success_lower_bound: deviation bound must be >= 0");
    }
    const double margin = 1.0 - deviation_bound;
    return margin <= 0.0 ? 0.0 : margin * margin;
}

double success_lower_bound_constant(double gamma, double T) {
    return success_lower_bound(bound_constant(gamma, T));
}

double success_lower_bound_linearized(double gamma, double T) {
    return 1.0 - 2.0 * gamma * T;
}

double gamma_tolerance(std::int64_t n_items, double epsilon) {
    if (n_items < 2) {
        throw std::invalid_argument("gamma_tolerance: need at least 2 database items");
    }
    if (!std::isfinite(epsilon) || epsilon < 0.0 || epsilon > 1.0) {
        throw std::invalid_argument("gamma_tolerance: epsilon must lie in [0, 1]");
    }
    return 4.0 / (kPi * std::sqrt(double(n_items))) * std::log(2.0 - std::sqrt(1.0 - epsilon));
}

std::string SweepEnvelope::label() const {
    if (kind == EnvelopeKind::Constant) return "constant";
    char buf[48];
    std::snprintf(buf, sizeof(buf), "sin(%.15g)", omega);
    return buf;
}

bool RobustnessReport::all_certified() const {
    for (const auto& row : rows) {
        if (!row.certified) return false;
    }
    return true;
}

RobustnessReport robustness_sweep(const GroverModel& model,
                                  const std::vector<double>& gammas,
                                  const std::vector<SweepEnvelope>& envelopes,
                                  const SweepOptions& opts) {
    if (gammas.empty() || envelopes.empty()) {
        throw std::invalid_argument("robustness_sweep: gamma and envelope grids must be nonempty");
    }
    const double T = opts.time > 0.0 ? opts.time : model.t_paper;

    RobustnessReport report;
    report.rows.reserve(gammas.size() * envelopes.size());

    // How closely the unperturbed run actually reaches the marked state at T;
    // the certificate treats this overlap as 1.
    const PerturbationSpec no_error =
        PerturbationSpec::constant(HermitianOperator::Zero(model.hamiltonian.dim()));
    report.ideal_overlap_residual =
        1.0 - std::sqrt(success_probability(model, no_error, T, opts.steps));

    for (double gamma : gammas) {
        if (!std::isfinite(gamma) || gamma < 0.0) {
            throw std::invalid_argument("robustness_sweep: gamma must be finite and nonnegative");
        }
        for (const auto& env : envelopes) {
            const EnvelopeNorm norm_env = env.kind == EnvelopeKind::Constant
                                              ? EnvelopeNorm::constant(gamma)
                                              : EnvelopeNorm::sinusoidal(gamma, env.omega);
            RobustnessRow row;
            row.gamma = gamma;
            row.envelope = env.label();
            row.time = T;
            row.deviation_bound = bound_general_closed(norm_env, T);
            row.psucc_lower_bound = success_lower_bound(row.deviation_bound);
            row.psucc_simulated = success_probability(
                model, perturbation_for(model, gamma, env, opts.error_qubit), T, opts.steps);
            row.certified = row.psucc_simulated >= row.psucc_lower_bound - kCertificateSlack;
            report.rows.push_back(std::move(row));
        }
    }
    return report;
}

}  // namespace evobound

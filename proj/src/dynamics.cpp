#include "evobound/dynamics.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace evobound {

namespace {

// Largest dt * (||H|| + max kappa) the midpoint integrator accepts.
constexpr double kStepSizeLimit = 0.1;

void check_inputs(Eigen::Index h_dim, const PerturbationSpec& k, const ComplexVector& psi0,
                  double T, int steps) {
    if (k.dim() != h_dim || psi0.size() != h_dim) {
        throw std::invalid_argument("evolve_pair: dimension mismatch between H, K and psi0");
    }
    if (!std::isfinite(T) || T <= 0.0) {
        throw std::invalid_argument("evolve_pair: T must be finite and positive");
    }
    if (steps < 1) {
        throw std::invalid_argument("evolve_pair: steps must be >= 1");
    }
    if (std::abs(psi0.norm() - 1.0) > 1e-9) {
        throw std::invalid_argument("evolve_pair: psi0 must be unit norm");
    }
}

void check_step_size(double dt, double h_norm, double max_kappa) {
    const double rate = dt * (h_norm + max_kappa);
    if (rate > kStepSizeLimit * (1.0 + 1e-12)) {
        throw std::invalid_argument("evolve_pair: step size too coarse, dt (||H|| + max kappa) = " +
                                    std::to_string(rate) + " exceeds 0.1; increase steps");
    }
}

struct TraceBuilder {
    EvolutionTrace trace;

    TraceBuilder(const ComplexVector& psi0, double dt, double h_norm, double max_kappa,
                 int steps) {
        trace.dt = dt;
        trace.h_norm = h_norm;
        trace.max_kappa = max_kappa;
        trace.times.reserve(steps + 1);
        trace.psi.reserve(steps + 1);
        trace.phi.reserve(steps + 1);
        trace.deviation.reserve(steps + 1);
        record(0.0, psi0, psi0);
    }

    void record(double t, ComplexVector psi, ComplexVector phi) {
        trace.deviation.push_back((psi - phi).norm());
        trace.times.push_back(t);
        trace.psi.push_back(std::move(psi));
        trace.phi.push_back(std::move(phi));
    }
};

}  // namespace

PerturbationSpec::PerturbationSpec(HermitianOperator generator, EnvelopeKind kind, double omega,
                                   std::function<double(double)> envelope)
    : generator_(std::move(generator)),
      generator_norm_(operator_norm(generator_)),
      kind_(kind),
      omega_(omega),
      envelope_(std::move(envelope)) {}

PerturbationSpec PerturbationSpec::constant(HermitianOperator generator) {
    return PerturbationSpec(std::move(generator), EnvelopeKind::Constant, 0.0, nullptr);
}

PerturbationSpec PerturbationSpec::sinusoidal(HermitianOperator generator, double omega) {
    if (!std::isfinite(omega) || omega <= 0.0) {
        throw std::invalid_argument("PerturbationSpec: omega must be finite and positive");
    }
    return PerturbationSpec(std::move(generator), EnvelopeKind::Sinusoidal, omega, nullptr);
}

PerturbationSpec PerturbationSpec::custom(HermitianOperator generator,
                                          std::function<double(double)> envelope) {
    if (!envelope) {
        throw std::invalid_argument("PerturbationSpec: custom envelope must be callable");
    }
    return PerturbationSpec(std::move(generator), EnvelopeKind::Custom, 0.0, std::move(envelope));
}

double PerturbationSpec::envelope(double t) const {
    switch (kind_) {
        case EnvelopeKind::Constant:
            return 1.0;
        case EnvelopeKind::Sinusoidal:
            return std::sin(omega_ * t);
        case EnvelopeKind::Custom:
            return envelope_(t);
    }
    throw std::logic_error("unreachable envelope kind");
}

double PerturbationSpec::norm_at(double t) const {
    return generator_norm_ * std::abs(envelope(t));
}

double PerturbationSpec::max_norm(double horizon) const {
    switch (kind_) {
        case EnvelopeKind::Constant:
        case EnvelopeKind::Sinusoidal:
            // |envelope| <= 1 for both, attained unless the horizon is tiny.
            return generator_norm_;
        case EnvelopeKind::Custom: {
            const int samples = 4096;
            double peak = 0.0;
            for (int i = 0; i <= samples; ++i) {
                peak = std::max(peak, std::abs(envelope_(horizon * double(i) / double(samples))));
            }
            return generator_norm_ * peak;
        }
    }
    throw std::logic_error("unreachable envelope kind");
}

EnvelopeNorm PerturbationSpec::envelope_norm() const {
    switch (kind_) {
        case EnvelopeKind::Constant:
            return EnvelopeNorm::constant(generator_norm_);
        case EnvelopeKind::Sinusoidal:
            return EnvelopeNorm::sinusoidal(generator_norm_, omega_);
        case EnvelopeKind::Custom:
            throw std::invalid_argument("custom envelopes have no closed-form norm; tabulate instead");
    }
    throw std::logic_error("unreachable envelope kind");
}

int default_steps(double h_norm, double max_kappa, double T) {
    if (!std::isfinite(T) || T <= 0.0) {
        throw std::invalid_argument("default_steps: T must be finite and positive");
    }
    const double suggested = std::ceil(20.0 * T * (h_norm + max_kappa));
    return std::max(1000, static_cast<int>(suggested));
}

EvolutionTrace evolve_pair(const HermitianOperator& h, const PerturbationSpec& k,
                           const ComplexVector& psi0, double T, int steps) {
    check_inputs(h.dim(), k, psi0, T, steps);
    const double dt = T / steps;
    const double h_norm = operator_norm(h);
    const double max_kappa = k.max_norm(T);
    check_step_size(dt, h_norm, max_kappa);

    TraceBuilder builder(psi0, dt, h_norm, max_kappa, steps);
    ComplexVector psi = psi0;
    ComplexVector phi = psi0;

    const ComplexMatrix u_ideal = detail::propagator_matrix(h.entries(), dt);
    if (k.kind() == EnvelopeKind::Constant) {
        // Time-independent generator: one exponential serves every step.
        const ComplexMatrix u_perturbed =
            detail::propagator_matrix(h.entries() + k.generator().entries(), dt);
        for (int s = 0; s < steps; ++s) {
            psi = u_ideal * psi;
            phi = u_perturbed * phi;
            builder.record(dt * (s + 1), psi, phi);
        }
    } else {
        for (int s = 0; s < steps; ++s) {
            const double t_mid = dt * (double(s) + 0.5);
            const ComplexMatrix gen = h.entries() + k.envelope(t_mid) * k.generator().entries();
            psi = u_ideal * psi;
            phi = detail::propagator_matrix(gen, dt) * phi;
            builder.record(dt * (s + 1), psi, phi);
        }
    }
    return std::move(builder.trace);
}

EvolutionTrace evolve_pair(const TimeDependentHamiltonian& h, double h_norm_bound,
                           const PerturbationSpec& k, const ComplexVector& psi0,
                           double T, int steps) {
    if (!h) {
        throw std::invalid_argument("evolve_pair: Hamiltonian callback must be callable");
    }
    if (!std::isfinite(h_norm_bound) || h_norm_bound < 0.0) {
        throw std::invalid_argument("evolve_pair: h_norm_bound must be finite and nonnegative");
    }
    check_inputs(k.dim(), k, psi0, T, steps);
    const double dt = T / steps;
    const double max_kappa = k.max_norm(T);
    check_step_size(dt, h_norm_bound, max_kappa);

    TraceBuilder builder(psi0, dt, h_norm_bound, max_kappa, steps);
    ComplexVector psi = psi0;
    ComplexVector phi = psi0;

    for (int s = 0; s < steps; ++s) {
        const double t_mid = dt * (double(s) + 0.5);
        const HermitianOperator h_mid = h(t_mid);
        if (h_mid.dim() != psi0.size()) {
            throw std::invalid_argument("evolve_pair: H(t) dimension mismatch");
        }
        const ComplexMatrix gen =
            h_mid.entries() + k.envelope(t_mid) * k.generator().entries();
        psi = detail::propagator_matrix(h_mid.entries(), dt) * psi;
        phi = detail::propagator_matrix(gen, dt) * phi;
        builder.record(dt * (s + 1), psi, phi);
    }
    return std::move(builder.trace);
}

std::vector<double> pointwise_inequality_residual(const EvolutionTrace& trace,
                                                  const PerturbationSpec& k) {
    const std::size_t n = trace.times.size();
    if (n < 3) {
        throw std::invalid_argument("pointwise_inequality_residual: need at least 3 grid points");
    }
    std::vector<double> residuals;
    residuals.reserve(n - 2);
    for (std::size_t j = 1; j + 1 < n; ++j) {
        const double derivative =
            (trace.deviation[j + 1] - trace.deviation[j - 1]) / (2.0 * trace.dt);
        residuals.push_back(k.norm_at(trace.times[j]) * (1.0 + trace.deviation[j]) - derivative);
    }
    return residuals;
}

double discretization_tolerance(const EvolutionTrace& trace) {
    const double rate = trace.h_norm + trace.max_kappa;
    return 10.0 * trace.dt * trace.dt * rate * rate * rate + 1e-8;
}

}  // namespace evobound

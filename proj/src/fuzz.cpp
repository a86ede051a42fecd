#include "evobound/fuzz.hpp"

#include "evobound/bounds.hpp"

namespace evobound {

FuzzInstance make_fuzz_instance(DeterministicRng& rng, int index) {
    const int dim = 1 << rng.uniform_int(1, 4);  // 2, 4, 8 or 16
    const double h_norm = rng.uniform(0.0, 2.0);
    const double gamma = rng.uniform(0.0, 0.5);
    const double t_final = rng.uniform(0.1, 5.0);
    return FuzzInstance{index,
                        dim,
                        gamma,
                        t_final,
                        random_hermitian(rng, dim, h_norm),
                        random_hermitian(rng, dim, gamma),
                        random_unit_state(rng, dim)};
}

FuzzOutcome check_dominance_chain(const FuzzInstance& inst) {
    const auto k = PerturbationSpec::constant(inst.generator);
    const int steps = default_steps(operator_norm(inst.h), inst.gamma, inst.t_final);
    const EvolutionTrace trace = evolve_pair(inst.h, k, inst.psi0, inst.t_final, steps);

    const EnvelopeNorm env = EnvelopeNorm::constant(inst.gamma);

    FuzzOutcome out;
    out.index = inst.index;
    out.dim = inst.dim;
    out.gamma = inst.gamma;
    out.t_final = inst.t_final;
    out.dev_actual = trace.deviation.back();
    out.bound_lin = bound_linear(env, inst.t_final);
    out.bound_gron = bound_general_closed(env, inst.t_final);
    out.margin_linear = out.bound_lin - out.dev_actual;
    out.margin_gronwall = out.bound_gron - out.bound_lin;
    out.pass = out.margin_linear >= -kFuzzTolerance && out.margin_gronwall >= -kFuzzTolerance;
    return out;
}

std::vector<FuzzOutcome> run_fuzz(std::uint64_t seed, int count) {
    if (count < 1) {
        throw std::invalid_argument("run_fuzz: instance count must be >= 1");
    }
    DeterministicRng rng(seed);
    std::vector<FuzzOutcome> outcomes;
    outcomes.reserve(count);
    for (int i = 0; i < count; ++i) {
        outcomes.push_back(check_dominance_chain(make_fuzz_instance(rng, i)));
    }
    return outcomes;
}

}  // namespace evobound

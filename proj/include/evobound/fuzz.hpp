#pragma once

#include <vector>

#include "evobound/dynamics.hpp"
#include "evobound/random.hpp"

namespace evobound {

/// Randomized instance for validity testing: the deviation/linear/Gronwall
/// dominance chain is a theorem, so any violation beyond tolerance flags an
/// implementation bug.
struct FuzzInstance {
    int index = 0;
    int dim = 2;
    double gamma = 0.0;    // ||generator||
    double t_final = 1.0;
    HermitianOperator h;
    HermitianOperator generator;
    ComplexVector psi0;
};

/// Margin tolerated before a chain link counts as violated.
inline constexpr double kFuzzTolerance = 1e-6;

/// dim in {2, 4, 8, 16}, ||H|| <= 2, gamma <= 0.5, T <= 5, random unit psi0.
FuzzInstance make_fuzz_instance(DeterministicRng& rng, int index);

struct FuzzOutcome {
    int index = 0;
    int dim = 0;
    double gamma = 0.0;
    double t_final = 0.0;
    double dev_actual = 0.0;
    double bound_lin = 0.0;
    double bound_gron = 0.0;
    double margin_linear = 0.0;    // bound_lin - dev_actual
    double margin_gronwall = 0.0;  // bound_gron - bound_lin
    bool pass = false;
};

/// Simulates the pair and checks dev(T) <= linear <= Gronwall closed form.
FuzzOutcome check_dominance_chain(const FuzzInstance& inst);

/// `count` seeded instances in order; deterministic for a fixed seed.
std::vector<FuzzOutcome> run_fuzz(std::uint64_t seed, int count);

}  // namespace evobound

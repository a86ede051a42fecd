#pragma once

#include <cstdint>
#include <random>

#include "evobound/linalg.hpp"

namespace evobound {

/// mt19937_64 bit stream with hand-rolled uniform/normal transforms, so
/// sequences are reproducible bit-for-bit regardless of the standard
/// library's distribution implementations.
class DeterministicRng {
public:
    explicit DeterministicRng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1), 53-bit resolution.
    double uniform();
    double uniform(double lo, double hi);

    /// Standard normal via Box-Muller.
    double normal();

    /// Uniform integer in [lo, hi], inclusive.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

private:
    std::mt19937_64 engine_;
};

/// Complex Ginibre draw symmetrized to (A + A^dagger)/2 and rescaled so the
/// spectral norm equals `norm` exactly. norm = 0 gives the zero operator.
HermitianOperator random_hermitian(DeterministicRng& rng, Eigen::Index dim, double norm);

/// Unit vector with i.i.d. complex normal entries, normalized.
ComplexVector random_unit_state(DeterministicRng& rng, Eigen::Index dim);

}  // namespace evobound

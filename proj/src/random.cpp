#include "evobound/random.hpp"

#include <cmath>
#include <stdexcept>

namespace evobound {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559005768;
}

double DeterministicRng::uniform() {
    // Top 53 bits of the engine output.
    return double(engine_() >> 11) * 0x1.0p-53;
}

double DeterministicRng::uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform();
}

double DeterministicRng::normal() {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
}

std::int64_t DeterministicRng::uniform_int(std::int64_t lo, std::int64_t hi) {
    if (hi < lo) {
        throw std::invalid_argument("uniform_int: empty range");
    }
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(engine_() % span);
}

HermitianOperator random_hermitian(DeterministicRng& rng, Eigen::Index dim, double norm) {
    if (!std::isfinite(norm) || norm < 0.0) {
        throw std::invalid_argument("random_hermitian: norm must be finite and nonnegative");
    }
    if (norm == 0.0) {
        return HermitianOperator::Zero(dim);
    }
    ComplexMatrix m(dim, dim);
    for (Eigen::Index r = 0; r < dim; ++r) {
        for (Eigen::Index c = 0; c < dim; ++c) {
            m(r, c) = Complex(rng.normal(), rng.normal());
        }
    }
    ComplexMatrix sym = 0.5 * (m + m.adjoint());
    const double current = operator_norm(HermitianOperator(sym));
    return HermitianOperator(ComplexMatrix((norm / current) * sym));
}

ComplexVector random_unit_state(DeterministicRng& rng, Eigen::Index dim) {
    ComplexVector v(dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        v(i) = Complex(rng.normal(), rng.normal());
    }
    return v / v.norm();
}

}  // namespace evobound

#pragma once

#include <Eigen/Dense>

#include <complex>

namespace evobound {

using Complex = std::complex<double>;
using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;

// Dense complex storage tops out at 12 qubits; anything larger is out of scope.
inline constexpr Eigen::Index kMaxDim = 4096;

// Hermiticity tolerance enforced at construction.
inline constexpr double kHermitianTol = 1e-12;

/// Dense Hermitian matrix (Hamiltonian or perturbation generator).
/// Hermiticity is checked once at construction; entries are immutable after.
class HermitianOperator {
public:
    explicit HermitianOperator(ComplexMatrix entries);

    static HermitianOperator Zero(Eigen::Index dim);

    const ComplexMatrix& entries() const noexcept { return entries_; }
    Eigen::Index dim() const noexcept { return entries_.rows(); }

private:
    ComplexMatrix entries_;
};

/// c * A (real c keeps the result Hermitian).
HermitianOperator operator*(double c, const HermitianOperator& a);
HermitianOperator operator+(const HermitianOperator& a, const HermitianOperator& b);

/// Spectral norm, i.e. the largest |eigenvalue|, via full Hermitian
/// eigendecomposition.
double operator_norm(const HermitianOperator& a);

/// 2x2 Pauli-y: -i|0><1| + i|1><0|.
HermitianOperator pauli_y();

/// I (x) ... (x) sigma_y (x) ... (x) I with sigma_y on qubit `target`
/// (1-based, qubit 1 is the most significant bit) of an n-qubit register.
HermitianOperator embed_pauli_y(int n_qubits, int target);

/// exp(-i A dt) |state>, exact up to rounding.
ComplexVector unitary_step(const HermitianOperator& a, double dt, const ComplexVector& state);

/// Precomputed one-step propagator exp(-i A dt). Time-independent generators
/// reuse one of these across thousands of steps.
class Propagator {
public:
    Propagator(const HermitianOperator& a, double dt);

    ComplexVector apply(const ComplexVector& state) const;
    const ComplexMatrix& matrix() const noexcept { return u_; }

private:
    ComplexMatrix u_;
};

namespace detail {
// exp(-i A dt) for a Hermitian matrix, by eigendecomposition. Shared by
// Propagator and the integrator, which assembles Hermitian combinations
// without re-running the construction check.
ComplexMatrix propagator_matrix(const ComplexMatrix& hermitian, double dt);
}  // namespace detail

}  // namespace evobound

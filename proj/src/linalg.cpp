#include "evobound/linalg.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace evobound {

namespace {

void check_hermitian(const ComplexMatrix& m) {
    if (m.rows() < 1 || m.rows() != m.cols()) {
        throw std::invalid_argument("HermitianOperator: matrix must be square and non-empty");
    }
    if (m.rows() > kMaxDim) {
        throw std::invalid_argument("HermitianOperator: dimension " + std::to_string(m.rows()) +
                                    " exceeds the cap of " + std::to_string(kMaxDim));
    }
    const double asym = (m - m.adjoint()).cwiseAbs().maxCoeff();
    if (!(asym <= kHermitianTol)) {
        throw std::invalid_argument("HermitianOperator: entries are not Hermitian, max |A - A^dagger| = " +
                                    std::to_string(asym));
    }
}

}  // namespace

HermitianOperator::HermitianOperator(ComplexMatrix entries) : entries_(std::move(entries)) {
    check_hermitian(entries_);
}

HermitianOperator HermitianOperator::Zero(Eigen::Index dim) {
    return HermitianOperator(ComplexMatrix::Zero(dim, dim));
}

HermitianOperator operator*(double c, const HermitianOperator& a) {
    return HermitianOperator(c * a.entries());
}

HermitianOperator operator+(const HermitianOperator& a, const HermitianOperator& b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("HermitianOperator: dimension mismatch in sum");
    }
    return HermitianOperator(a.entries() + b.entries());
}

double operator_norm(const HermitianOperator& a) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(a.entries(), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("operator_norm: eigendecomposition failed");
    }
    const auto& ev = solver.eigenvalues();
    return std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
}

HermitianOperator pauli_y() {
    ComplexMatrix m(2, 2);
    m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
    return HermitianOperator(std::move(m));
}

HermitianOperator embed_pauli_y(int n_qubits, int target) {
    if (n_qubits < 1 || n_qubits > 12) {
        throw std::invalid_argument("embed_pauli_y: n_qubits must be in 1..12");
    }
    if (target < 1 || target > n_qubits) {
        throw std::invalid_argument("embed_pauli_y: target qubit out of range");
    }
    const Eigen::Index dim = Eigen::Index(1) << n_qubits;
    // Qubit 1 is the most significant bit of the basis index.
    const Eigen::Index mask = Eigen::Index(1) << (n_qubits - target);
    ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
    for (Eigen::Index col = 0; col < dim; ++col) {
        const Eigen::Index row = col ^ mask;
        m(row, col) = (col & mask) == 0 ? Complex(0, 1) : Complex(0, -1);
    }
    return HermitianOperator(std::move(m));
}

namespace detail {

ComplexMatrix propagator_matrix(const ComplexMatrix& hermitian, double dt) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitian);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("propagator_matrix: eigendecomposition failed");
    }
    const Eigen::Index dim = hermitian.rows();
    ComplexVector phases(dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        const double angle = -solver.eigenvalues()(i) * dt;
        phases(i) = Complex(std::cos(angle), std::sin(angle));
    }
    return solver.eigenvectors() * phases.asDiagonal() * solver.eigenvectors().adjoint();
}

}  // namespace detail

ComplexVector unitary_step(const HermitianOperator& a, double dt, const ComplexVector& state) {
    if (!std::isfinite(dt)) {
        throw std::invalid_argument("unitary_step: dt must be finite");
    }
    if (a.dim() != state.size()) {
        throw std::invalid_argument("unitary_step: operator/state dimension mismatch");
    }
    return detail::propagator_matrix(a.entries(), dt) * state;
}

Propagator::Propagator(const HermitianOperator& a, double dt) {
    if (!std::isfinite(dt)) {
        throw std::invalid_argument("Propagator: dt must be finite");
    }
    u_ = detail::propagator_matrix(a.entries(), dt);
}

ComplexVector Propagator::apply(const ComplexVector& state) const {
    if (u_.cols() != state.size()) {
        throw std::invalid_argument("Propagator: state dimension mismatch");
    }
    return u_ * state;
}

}  // namespace evobound

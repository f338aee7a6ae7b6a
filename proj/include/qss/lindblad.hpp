#pragma once

#include <utility>
#include <vector>

#include "qss/algebra.hpp"

namespace qss {

struct JumpTerm {
    ComplexMatrix op;
    double rate = 1.0;
};

/// Hamiltonian + weighted jump operators on a D-dimensional Hilbert space.
struct LindbladModel {
    Eigen::Index dim = 0;
    ComplexMatrix hamiltonian;  // D x D, Hermitian (may be zero)
    std::vector<JumpTerm> jumps;

    void validate() const;
};

/// Vectorized Liouvillian on the D^2-dimensional space. Stored sparse;
/// the dense view is materialized on demand for decomposition paths.
class Superoperator {
public:
    Superoperator(Eigen::Index hilbertDim, SparseOperator matrix);

    Eigen::Index hilbertDim() const { return dim_; }
    Eigen::Index vectorDim() const { return matrix_.rows(); }

    const SparseOperator& matrix() const { return matrix_; }
    SparseOperator adjointMatrix() const { return matrix_.adjoint(); }
    ComplexMatrix dense() const { return ComplexMatrix(matrix_); }

    bool isHermitian(double tol = 1e-10) const;

    /// Devectorized L * vec(rho).
    ComplexMatrix apply(const ComplexMatrix& rho) const;
    ComplexVector applyVec(const ComplexVector& v) const { return matrix_ * v; }

    /// ||L^dagger vec(I)||, zero for any trace-preserving generator.
    double tracePreservationResidual() const;

private:
    Eigen::Index dim_;
    SparseOperator matrix_;
};

/// Assembles the vectorized generator
///   L = -i(I (x) H - H^T (x) I)
///       + sum_j gamma_j ( Lj^* (x) Lj - 1/2 (I (x) Lj^dag Lj + (Lj^dag Lj)^T (x) I) ).
Superoperator buildLiouvillian(const LindbladModel& model);

}  // namespace qss

#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

namespace qss {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using SparseOperator = Eigen::SparseMatrix<Complex>;
using Triplet = Eigen::Triplet<Complex>;

// Singular values below tol_null * sigma_max count as zero.
inline constexpr double kNullTolerance = 1e-10;
// Eigenvector-matrix condition number above which the spectral
// steady-state path refuses and redirects to the kernel/resolvent paths.
inline constexpr double kEigConditionLimit = 1e10;

struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SolverError : std::runtime_error {
    SolverError(const std::string& what, double residual)
        : std::runtime_error(what), residual(residual) {}
    double residual = 0.0;
};

/// Stacks the columns of a square matrix (column-major convention).
ComplexVector vectorize(const ComplexMatrix& m);

/// Inverse of vectorize; v must have a perfect-square length.
ComplexMatrix devectorize(const ComplexVector& v);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
SparseOperator kronSparse(const SparseOperator& a, const SparseOperator& b);

struct SvdResult {
    ComplexMatrix u;
    RealVector singularValues;  // descending
    ComplexMatrix v;
    /// Number of singular values with sigma <= tol * sigma_max.
    Eigen::Index nullity(double tol = kNullTolerance) const;
};

/// Full SVD m = U diag(sigma) V^dagger.
SvdResult svd(const ComplexMatrix& m);

struct EigResult {
    ComplexVector eigenvalues;
    ComplexMatrix eigenvectors;
    double conditionEstimate = 0.0;  // 2-norm condition of the eigenvector matrix
};

/// Dense eigendecomposition m T = T diag(lambda), with a condition
/// estimate of T so callers can detect (near-)defective input.
EigResult eig(const ComplexMatrix& m);

enum class SolveMethod { Direct, Iterative };

struct SolveOptions {
    SolveMethod method = SolveMethod::Direct;
    double rtol = 1e-10;
    int maxIterations = 10000;
};

ComplexVector solveLinear(const ComplexMatrix& a, const ComplexVector& b,
                          const SolveOptions& opts = {});
ComplexVector solveLinear(const SparseOperator& a, const ComplexVector& b,
                          const SolveOptions& opts = {});

/// 0.5 * ||a - b||_1 for Hermitian arguments (sum of |eigenvalues| of the difference).
double traceDistance(const ComplexMatrix& a, const ComplexMatrix& b);

double traceNorm(const ComplexMatrix& m);

}  // namespace qss

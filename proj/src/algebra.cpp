#include "qss/algebra.hpp"

#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <Eigen/SparseLU>
#include <unsupported/Eigen/IterativeSolvers>
#include <unsupported/Eigen/KroneckerProduct>

namespace qss {

ComplexVector vectorize(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) {
        throw DimensionError("vectorize: matrix must be square, got " +
                             std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    }
    return Eigen::Map<const ComplexVector>(m.data(), m.size());
}

ComplexMatrix devectorize(const ComplexVector& v) {
    const auto d = static_cast<Eigen::Index>(std::llround(std::sqrt(double(v.size()))));
    if (d * d != v.size()) {
        throw DimensionError("devectorize: length " + std::to_string(v.size()) +
                             " is not a perfect square");
    }
    return Eigen::Map<const ComplexMatrix>(v.data(), d, d);
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    return Eigen::kroneckerProduct(a, b);
}

SparseOperator kronSparse(const SparseOperator& a, const SparseOperator& b) {
    SparseOperator out = Eigen::kroneckerProduct(a, b);
    out.makeCompressed();
    return out;
}

Eigen::Index SvdResult::nullity(double tol) const {
    if (singularValues.size() == 0) return 0;
    const double cutoff = tol * singularValues(0);
    Eigen::Index n = 0;
    for (Eigen::Index i = singularValues.size() - 1; i >= 0; --i) {
        if (singularValues(i) <= cutoff) ++n;
        else break;
    }
    return n;
}

SvdResult svd(const ComplexMatrix& m) {
    Eigen::BDCSVD<ComplexMatrix> dec(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    if (dec.info() != Eigen::Success) {
        throw NumericalError("svd: decomposition failed on " + std::to_string(m.rows()) +
                             "x" + std::to_string(m.cols()) + " matrix");
    }
    return {dec.matrixU(), dec.singularValues(), dec.matrixV()};
}

EigResult eig(const ComplexMatrix& m) {
    Eigen::ComplexEigenSolver<ComplexMatrix> dec(m, /*computeEigenvectors=*/true);
    if (dec.info() != Eigen::Success) {
        throw NumericalError("eig: decomposition failed");
    }
    EigResult out{dec.eigenvalues(), dec.eigenvectors(), 0.0};
    Eigen::JacobiSVD<ComplexMatrix> tsvd(out.eigenvectors);
    const auto& sv = tsvd.singularValues();
    const double smin = sv(sv.size() - 1);
    out.conditionEstimate = smin > 0.0 ? sv(0) / smin
                                       : std::numeric_limits<double>::infinity();
    return out;
}

namespace {

void checkSystem(Eigen::Index rows, Eigen::Index cols, Eigen::Index blen) {
    if (rows != cols) throw DimensionError("solveLinear: matrix must be square");
    if (cols != blen) throw DimensionError("solveLinear: dimension mismatch with rhs");
}

std::string fmt(double v) {
    std::ostringstream s;
    s << v;
    return s.str();
}

// Normwise backward-error check: ||Ax - b|| against
// rtol * (||A|| ||x|| + ||b||), the attainable floor for a stable solver.
ComplexVector checkedResult(ComplexVector x, ComplexVector ax, const ComplexVector& b,
                            double anorm, double rtol) {
    const double res = (ax - b).norm();
    const double scale = anorm * x.norm() + b.norm();
    if (scale == 0.0) return x;
    // A residual worse than the zero vector's means the solver diverged
    // (GMRES can report success with a garbage x on singular systems).
    if (!(res <= b.norm()) && b.norm() > 0.0) {
        throw SolverError("solveLinear: divergent solution, residual " + fmt(res) +
                          " exceeds ||b|| = " + fmt(b.norm()), res);
    }
    // NaN-safe: a breakdown producing non-finite x fails this comparison too.
    if (!(res <= rtol * scale)) {
        throw SolverError("solveLinear: residual " + fmt(res) +
                          " exceeds rtol * (||A|| ||x|| + ||b||) = " + fmt(rtol * scale),
                          res);
    }
    return x;
}

}  // namespace

ComplexVector solveLinear(const ComplexMatrix& a, const ComplexVector& b,
                          const SolveOptions& opts) {
    checkSystem(a.rows(), a.cols(), b.size());
    if (opts.method == SolveMethod::Direct) {
        Eigen::PartialPivLU<ComplexMatrix> lu(a);
        ComplexVector x = lu.solve(b);
        // One round of iterative refinement pushes the residual to machine
        // level even when the system is poorly conditioned.
        x += lu.solve(b - a * x);
        ComplexVector ax = a * x;
        return checkedResult(std::move(x), std::move(ax), b, a.norm(), opts.rtol);
    }
    Eigen::GMRES<ComplexMatrix, Eigen::IdentityPreconditioner> solver(a);
    solver.setTolerance(opts.rtol);
    solver.setMaxIterations(opts.maxIterations);
    ComplexVector x = solver.solve(b);
    if (solver.info() != Eigen::Success) {
        throw SolverError("solveLinear: GMRES did not converge, residual estimate " +
                          fmt(solver.error()), solver.error());
    }
    ComplexVector ax = a * x;
    return checkedResult(std::move(x), std::move(ax), b, a.norm(), opts.rtol);
}

ComplexVector solveLinear(const SparseOperator& a, const ComplexVector& b,
                          const SolveOptions& opts) {
    checkSystem(a.rows(), a.cols(), b.size());
    if (opts.method == SolveMethod::Direct) {
        Eigen::SparseLU<SparseOperator> lu;
        lu.compute(a);
        if (lu.info() != Eigen::Success) {
            throw SolverError("solveLinear: sparse LU factorization failed", 0.0);
        }
        ComplexVector x = lu.solve(b);
        x += lu.solve(b - a * x);
        ComplexVector ax = a * x;
        return checkedResult(std::move(x), std::move(ax), b, a.norm(), opts.rtol);
    }
    Eigen::GMRES<SparseOperator, Eigen::IdentityPreconditioner> solver(a);
    solver.setTolerance(opts.rtol);
    solver.setMaxIterations(opts.maxIterations);
    ComplexVector x = solver.solve(b);
    if (solver.info() != Eigen::Success) {
        throw SolverError("solveLinear: GMRES did not converge, residual estimate " +
                          fmt(solver.error()), solver.error());
    }
    ComplexVector ax = a * x;
    return checkedResult(std::move(x), std::move(ax), b, a.norm(), opts.rtol);
}

double traceNorm(const ComplexMatrix& m) {
    Eigen::BDCSVD<ComplexMatrix> dec(m);
    return dec.singularValues().sum();
}

double traceDistance(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix d = a - b;
    // Hermitian difference: trace norm from real eigenvalues.
    if ((d - d.adjoint()).norm() <= 1e-12 * std::max(1.0, d.norm())) {
        Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(d, Eigen::EigenvaluesOnly);
        return 0.5 * es.eigenvalues().cwiseAbs().sum();
    }
    return 0.5 * traceNorm(d);
}

}  // namespace qss

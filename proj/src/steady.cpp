#include "qss/steady.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

namespace qss {

double SteadyStateBasis::biorthogonalityResidual() const {
    double worst = 0.0;
    const auto n = kernelDim();
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index k = 0; k < n; ++k) {
            const Complex olap = leftVectors[j].dot(rightVectors[k]);
            const Complex target = (j == k) ? Complex(1, 0) : Complex(0, 0);
            worst = std::max(worst, std::abs(olap - target));
        }
    }
    return worst;
}

SteadyStateBasis kernelBasis(const Superoperator& sop, double tolNull) {
    const SvdResult dec = svd(sop.dense());
    const Eigen::Index n = dec.nullity(tolNull);
    if (n == 0) {
        throw NumericalError("kernelBasis: Liouvillian has an empty kernel");
    }
    // Zero singular values sit at the tail (descending order).
    ComplexMatrix vNull = dec.v.rightCols(n);
    ComplexMatrix uNullRaw = dec.u.rightCols(n);

    ComplexMatrix overlap = vNull.adjoint() * uNullRaw;  // M_O
    Eigen::JacobiSVD<ComplexMatrix> osvd(overlap);
    const double smin = osvd.singularValues()(n - 1);
    const double smax = osvd.singularValues()(0);
    if (!(smin > 0.0) || smax / smin > 1e12) {
        throw NumericalError(
            "kernelBasis: overlap matrix M_O is numerically singular "
            "(left/right kernels misaligned), condition " +
            std::to_string(smax / std::max(smin, 1e-300)));
    }
    ComplexMatrix uNull = uNullRaw * overlap.partialPivLu().inverse();

    SteadyStateBasis basis;
    basis.rightVectors.reserve(n);
    basis.leftVectors.reserve(n);
    for (Eigen::Index j = 0; j < n; ++j) {
        basis.rightVectors.push_back(vNull.col(j));
        basis.leftVectors.push_back(uNull.col(j));
    }
    return basis;
}

SpectralDecomposition spectralDecomposition(const Superoperator& sop, double tolZero,
                                            double conditionLimit) {
    EigResult dec = eig(sop.dense());
    if (dec.conditionEstimate > conditionLimit) {
        throw NumericalError(
            "spectralDecomposition: eigenvector matrix condition " +
            std::to_string(dec.conditionEstimate) +
            " exceeds limit; the Liouvillian is (near-)defective. "
            "Use the kernel or resolvent method instead.");
    }
    SpectralDecomposition out;
    out.t = std::move(dec.eigenvectors);
    out.eigenvalues = std::move(dec.eigenvalues);
    out.conditionEstimate = dec.conditionEstimate;
    out.tInverse = out.t.partialPivLu().inverse();
    out.metric = out.tInverse.adjoint() * out.tInverse;
    const double scale = out.eigenvalues.cwiseAbs().maxCoeff();
    for (Eigen::Index j = 0; j < out.eigenvalues.size(); ++j) {
        if (std::abs(out.eigenvalues(j)) <= tolZero * scale) {
            out.zeroIndices.push_back(j);
        }
    }
    return out;
}

ComplexMatrix sanitizeState(const ComplexMatrix& rho) {
    ComplexMatrix sym = 0.5 * (rho + rho.adjoint());
    const Complex tr = sym.trace();
    if (std::abs(tr) < 1e-300) {
        throw NumericalError("sanitizeState: traceless output cannot be renormalized");
    }
    return sym / tr.real();
}

ComplexMatrix steadySpectral(const SpectralDecomposition& spec, const ComplexMatrix& rho0) {
    const ComplexVector r0 = vectorize(rho0);
    const ComplexVector rotated = spec.tInverse * r0;
    ComplexVector out = ComplexVector::Zero(r0.size());
    for (const Eigen::Index j : spec.zeroIndices) {
        // c_j = rho_SS,j^dag M vec(rho0) reduces to (T^-1 rho0)_j.
        out += rotated(j) * spec.t.col(j);
    }
    return sanitizeState(devectorize(out));
}

ComplexMatrix steadyKernel(const SteadyStateBasis& basis, const ComplexMatrix& rho0) {
    const ComplexVector r0 = vectorize(rho0);
    ComplexVector out = ComplexVector::Zero(r0.size());
    for (Eigen::Index j = 0; j < basis.kernelDim(); ++j) {
        out += basis.leftVectors[j].dot(r0) * basis.rightVectors[j];
    }
    return sanitizeState(devectorize(out));
}

ComplexMatrix steadyHermitian(const Superoperator& sop, const SteadyStateBasis& basis,
                              const ComplexMatrix& rho0) {
    if (!sop.isHermitian()) {
        throw NumericalError(
            "steadyHermitian: Liouvillian is not Hermitian; use the kernel method");
    }
    const ComplexVector r0 = vectorize(rho0);
    ComplexVector out = ComplexVector::Zero(r0.size());
    for (const auto& v : basis.rightVectors) {
        out += v.dot(r0) * v;
    }
    return sanitizeState(devectorize(out));
}

ComplexMatrix steadyResolvent(const Superoperator& sop, const ComplexMatrix& rho0,
                              const ResolventOptions& opts) {
    if (!(opts.epsilon > 0.0)) {
        throw NumericalError("steadyResolvent: epsilon must be positive");
    }
    const Eigen::Index d2 = sop.vectorDim();
    SparseOperator shifted(d2, d2);
    shifted.setIdentity();
    shifted = shifted - SparseOperator((1.0 / opts.epsilon) * sop.matrix());
    SolveOptions so;
    so.method = opts.method;
    so.rtol = opts.rtol;
    so.maxIterations = opts.maxIterations;
    ComplexVector x = solveLinear(shifted, vectorize(rho0), so);
    if (opts.residualOut) {
        *opts.residualOut = (sop.matrix() * x).norm();
    }
    return sanitizeState(devectorize(x));
}

std::vector<ComplexMatrix> conservedQuantities(const SteadyStateBasis& basis) {
    std::vector<ComplexMatrix> out;
    out.reserve(basis.leftVectors.size());
    for (const auto& u : basis.leftVectors) {
        out.push_back(devectorize(u));
    }
    return out;
}

}  // namespace qss

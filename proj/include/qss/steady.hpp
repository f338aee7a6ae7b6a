#pragma once

#include <vector>

#include "qss/algebra.hpp"
#include "qss/lindblad.hpp"

namespace qss {

/// Biorthogonal kernel pair: right vectors span ker L (orthonormal),
/// left vectors span ker L^dagger with U_j^dag V_k = delta_jk.
struct SteadyStateBasis {
    std::vector<ComplexVector> rightVectors;
    std::vector<ComplexVector> leftVectors;

    Eigen::Index kernelDim() const {
        return static_cast<Eigen::Index>(rightVectors.size());
    }
    /// max_{j,k} |U_j^dag V_k - delta_jk|
    double biorthogonalityResidual() const;
};

struct SpectralDecomposition {
    ComplexMatrix t;          // eigenvector matrix
    ComplexVector eigenvalues;
    std::vector<Eigen::Index> zeroIndices;
    ComplexMatrix metric;     // (T^-1)^dag T^-1
    ComplexMatrix tInverse;
    double conditionEstimate = 0.0;
};

/// SVD kernel extraction with the overlap-matrix biorthogonalization:
/// L = U' Sigma V^dag, M_O = V_null^dag U'_null, U_null = U'_null M_O^{-1}.
SteadyStateBasis kernelBasis(const Superoperator& sop, double tolNull = kNullTolerance);

SpectralDecomposition spectralDecomposition(const Superoperator& sop,
                                            double tolZero = kNullTolerance,
                                            double conditionLimit = kEigConditionLimit);

/// Steady state through the diagonalization route; refuses on
/// ill-conditioned eigenvector matrices.
ComplexMatrix steadySpectral(const SpectralDecomposition& spec, const ComplexMatrix& rho0);

/// Steady state from biorthogonal overlaps c_j = U_j^dag vec(rho0).
ComplexMatrix steadyKernel(const SteadyStateBasis& basis, const ComplexMatrix& rho0);

/// Plain projection onto the orthonormal right kernel set; valid only
/// for Hermitian Liouvillians (where U_j = V_j).
ComplexMatrix steadyHermitian(const Superoperator& sop, const SteadyStateBasis& basis,
                              const ComplexMatrix& rho0);

struct ResolventOptions {
    double epsilon = 1e-6;
    SolveMethod method = SolveMethod::Direct;
    double rtol = 1e-12;
    int maxIterations = 20000;
    double* residualOut = nullptr;  // optional ||L vec(rho_SS)|| report
};

/// One shifted linear solve (I - L/eps) x = vec(rho0); steady-state
/// error is O(eps / spectral gap).
ComplexMatrix steadyResolvent(const Superoperator& sop, const ComplexMatrix& rho0,
                              const ResolventOptions& opts = {});

/// Devectorized left kernel vectors; tr(Q^dag rho(t)) is constant in time.
std::vector<ComplexMatrix> conservedQuantities(const SteadyStateBasis& basis);

/// Hermitian symmetrization + unit-trace renormalization applied to all
/// steady-state method outputs.
ComplexMatrix sanitizeState(const ComplexMatrix& rho);

}  // namespace qss

#pragma once

#include "qss/algebra.hpp"

namespace qss {

/// Two-qubit concurrence C = max(0, mu1 - mu2 - mu3 - mu4), computed from
/// the eigenvalues of rho * (sy (x) sy) rho^* (sy (x) sy).
double concurrence(const ComplexMatrix& rho);

/// F = 4 (<psi|G^2|psi> - <psi|G|psi>^2) for a normalized pure state.
double qfiPure(const ComplexVector& psi, const ComplexMatrix& generator);

struct QfiResult {
    double value = 0.0;
    Eigen::Index rankUsed = 0;
};

/// Mixed-state QFI from the spectral decomposition of rho, truncated at
/// eigenvalues > rankTol:
///   F = sum_j p_j F_psi_j - sum_{j != k} 8 p_j p_k / (p_j + p_k) |<psi_j|G|psi_k>|^2.
QfiResult qfiMixed(const ComplexMatrix& rho, const ComplexMatrix& generator,
                   double rankTol = 1e-12);

/// Closed-form QFI of the Dicke state |S,M> under G = S_z^A - S_z^B with
/// balanced ensemble sizes (N even).
double qfiDickeClosed(int n, double s, double m);

/// (N^2+4N)/3 - (4/3) S(S+1): QFI of the balanced equal mixture over M at
/// fixed S.
double qfiBalancedMixtureClosed(int n, double s);

/// (N^2+2N)/3: protocol-averaged QFI for balanced ensembles, even N.
double qfiProtocolClosed(int n);

}  // namespace qss

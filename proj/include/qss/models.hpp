#pragma once

#include "qss/lindblad.hpp"
#include "qss/spins.hpp"

namespace qss {

/// Two-qubit product basis {|11>, |10>, |01>, |00>} (excited state first
/// on each qubit). sigma_- = [[0,0],[1,0]].
ComplexMatrix pauliLowering();
ComplexMatrix pauliX();
ComplexMatrix pauliY();
ComplexMatrix pauliZ();

struct TwoQubitOps {
    ComplexMatrix sMinus, sPlus, sx, sz, sSquared;
};
TwoQubitOps twoQubitCollectiveOps();

/// |phi_pm> = (|10> +- |01>)/sqrt(2)
ComplexVector twoQubitTriplet0();
ComplexVector twoQubitSinglet();

/// H = 0, L1 = S_-, L2 = S_+, gamma1 = gamma2 = gamma (Hermitian Liouvillian).
LindbladModel twoQubitBalancedModel(double gamma = 1.0);
/// H = 0, L = S_-, rate gamma.
LindbladModel twoQubitSingleDecayModel(double gamma = 1.0);
/// H = Omega (sigma_x^1 + sigma_x^2), L = S_-, rate gamma.
LindbladModel twoQubitDrivenModel(double omega, double gamma);

/// Single qubit, H = 0, L = sigma_-, rate gamma.
LindbladModel singleQubitDecayModel(double gamma = 1.0);

/// Two big-spin ensembles on the product space, L1 = S_-, optional
/// balanced L2 = S_+.
LindbladModel twoEnsembleModel(const SpinEnsemblePair& pair, bool balanced,
                               double gamma = 1.0);

}  // namespace qss

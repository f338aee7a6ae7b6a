#pragma once

#include <vector>

#include "qss/algebra.hpp"

namespace qss {

/// Two permutation-symmetric qubit ensembles modelled as big spins
/// S_A = N_A/2 and S_B = N_B/2 on the (N_A+1)(N_B+1) product space.
/// Product basis index = iA * (N_B+1) + iB with M_A = S_A - iA descending
/// (same for B).
struct SpinEnsemblePair {
    int nA = 0;
    int nB = 0;

    SpinEnsemblePair(int countA, int countB);

    double spinA() const { return 0.5 * nA; }
    double spinB() const { return 0.5 * nB; }
    int imbalance() const { return (nA - nB) / 2; }  // eta
    int totalQubits() const { return nA + nB; }
    Eigen::Index productDim() const {
        return Eigen::Index(nA + 1) * Eigen::Index(nB + 1);
    }
};

struct CollectiveOps {
    ComplexMatrix sMinus, sPlus, sz, sx;
    ComplexMatrix szA, szB;
    ComplexMatrix sSquared;
};

/// Collective spin operators on the two-big-spin product space.
CollectiveOps collectiveOps(const SpinEnsemblePair& pair);

/// Single big-spin ladder operator S_- for spin s ((2s+1)-dimensional,
/// M descending from +s).
ComplexMatrix spinLowering(double s);
ComplexMatrix spinZ(double s);

/// Clebsch-Gordan coefficient <j1 m1 j2 m2 | j m> in the Condon-Shortley
/// convention (Racah sum with log-factorial accumulation). Returns 0 for
/// quantum numbers violating the selection rules.
double clebschGordan(double j1, double j2, double j, double m1, double m2, double m);

/// One coupled sector |S, M=-S..S| of the two-spin product space.
struct SpinSector {
    double s = 0.0;
    Eigen::Index offset = 0;  // first coupled-basis index of this sector
    Eigen::Index size() const { return Eigen::Index(std::lround(2 * s)) + 1; }
};

/// Coupled |S,M> (Dicke) basis: sectors ascending in S, M ascending
/// within each sector. cgMap columns are coupled states expressed in the
/// product basis; it is unitary.
struct CoupledSpinSpace {
    SpinEnsemblePair pair;
    std::vector<SpinSector> sectors;
    ComplexMatrix cgMap;

    explicit CoupledSpinSpace(const SpinEnsemblePair& p);

    /// Coupled-basis index of |S,M>.
    Eigen::Index dickeIndex(double s, double m) const;
    /// |S,M> as a product-basis column vector.
    ComplexVector dickeState(double s, double m) const;
};

/// Product state |S_A,+S_A> (x) |S_B,-S_B| (`flipped` swaps the signs):
/// all qubits in A up and in B down, or vice versa.
ComplexVector psiDif(const SpinEnsemblePair& pair, bool flipped = false);

/// Generator G = S_z^A - S_z^B in the coupled |S,M> basis (via cgMap).
ComplexMatrix dickeGenerator(const CoupledSpinSpace& space);

/// Closed-form matrix elements of G for balanced ensembles: couples
/// |S-1,M> and |S,M> with amplitude
/// sqrt((S^2-M^2)((N/2+1)^2-S^2)/(4S^2-1)).
ComplexMatrix dickeGeneratorBalancedClosedForm(const CoupledSpinSpace& space);

/// Overlap distribution p(S) = |C_S^eta|^2, S = eta .. N/2, of psiDif in
/// the coupled basis. Returns {S, p(S)} pairs with sum 1.
std::vector<std::pair<double, double>> pOfS(const SpinEnsemblePair& pair);

/// Closed form for the balanced overlap coefficient
/// C_S = sqrt(2S+1) sqrt((N/2)!^2 / ((N/2-S)!(N/2+1+S)!)).
double balancedOverlapCoefficient(int n, int s);

}  // namespace qss

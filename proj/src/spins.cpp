#include "qss/spins.hpp"

#include <cmath>

namespace qss {

namespace {

long double logFactorial(int n) {
    static std::vector<long double> table = {0.0L};
    while (static_cast<int>(table.size()) <= n) {
        table.push_back(table.back() + std::log(static_cast<long double>(table.size())));
    }
    return table[n];
}

bool isHalfInteger(double x) {
    return std::abs(2.0 * x - std::llround(2.0 * x)) < 1e-9;
}

int twice(double x) { return static_cast<int>(std::llround(2.0 * x)); }

}  // namespace

SpinEnsemblePair::SpinEnsemblePair(int countA, int countB) : nA(countA), nB(countB) {
    if (nB < 0 || nA < nB) {
        throw DimensionError("SpinEnsemblePair: requires N_A >= N_B >= 0");
    }
}

ComplexMatrix spinLowering(double s) {
    const int dim = twice(s) + 1;
    ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
    for (int i = 0; i + 1 < dim; ++i) {
        const double m = s - i;  // row i holds M = s - i
        out(i + 1, i) = std::sqrt(s * (s + 1) - m * (m - 1));
    }
    return out;
}

ComplexMatrix spinZ(double s) {
    const int dim = twice(s) + 1;
    ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
    for (int i = 0; i < dim; ++i) out(i, i) = s - i;
    return out;
}

CollectiveOps collectiveOps(const SpinEnsemblePair& pair) {
    const double sA = pair.spinA(), sB = pair.spinB();
    const Eigen::Index dA = twice(sA) + 1, dB = twice(sB) + 1;
    const ComplexMatrix idA = ComplexMatrix::Identity(dA, dA);
    const ComplexMatrix idB = ComplexMatrix::Identity(dB, dB);

    CollectiveOps ops;
    const ComplexMatrix sMinusA = kron(spinLowering(sA), idB);
    const ComplexMatrix sMinusB = kron(idA, spinLowering(sB));
    ops.szA = kron(spinZ(sA), idB);
    ops.szB = kron(idA, spinZ(sB));
    ops.sMinus = sMinusA + sMinusB;
    ops.sPlus = ops.sMinus.adjoint();
    ops.sz = ops.szA + ops.szB;
    ops.sx = 0.5 * (ops.sMinus + ops.sPlus);
    ops.sSquared = ops.sz * ops.sz +
                   0.5 * (ops.sPlus * ops.sMinus + ops.sMinus * ops.sPlus);
    return ops;
}

double clebschGordan(double j1, double j2, double j, double m1, double m2, double m) {
    if (!isHalfInteger(j1) || !isHalfInteger(j2) || !isHalfInteger(j) ||
        !isHalfInteger(m1) || !isHalfInteger(m2) || !isHalfInteger(m)) {
        throw DimensionError("clebschGordan: quantum numbers must be half-integers");
    }
    // Selection rules; violations yield zero rather than an error.
    if (twice(m1) + twice(m2) != twice(m)) return 0.0;
    if (j < std::abs(j1 - j2) - 1e-9 || j > j1 + j2 + 1e-9) return 0.0;
    if (std::abs(m1) > j1 + 1e-9 || std::abs(m2) > j2 + 1e-9 || std::abs(m) > j + 1e-9)
        return 0.0;
    if ((twice(j1) + twice(m1)) % 2 != 0 || (twice(j2) + twice(m2)) % 2 != 0 ||
        (twice(j) + twice(m)) % 2 != 0)
        return 0.0;
    if ((twice(j1) + twice(j2) + twice(j)) % 2 != 0) return 0.0;

    const int a = (twice(j1) + twice(j2) - twice(j)) / 2;   // j1+j2-j
    const int b = (twice(j1) - twice(j2) + twice(j)) / 2;   // j1-j2+j
    const int c = (-twice(j1) + twice(j2) + twice(j)) / 2;  // -j1+j2+j
    const int d = (twice(j1) + twice(j2) + twice(j)) / 2 + 1;
    const int j1m1p = (twice(j1) + twice(m1)) / 2, j1m1m = (twice(j1) - twice(m1)) / 2;
    const int j2m2p = (twice(j2) + twice(m2)) / 2, j2m2m = (twice(j2) - twice(m2)) / 2;
    const int jmp = (twice(j) + twice(m)) / 2, jmm = (twice(j) - twice(m)) / 2;

    const long double logPrefactor =
        std::log(static_cast<long double>(twice(j) + 1)) +
        logFactorial(a) + logFactorial(b) + logFactorial(c) - logFactorial(d) +
        logFactorial(j1m1p) + logFactorial(j1m1m) + logFactorial(j2m2p) +
        logFactorial(j2m2m) + logFactorial(jmp) + logFactorial(jmm);

    const int jj2m1 = (twice(j) - twice(j2) + twice(m1)) / 2;  // j-j2+m1
    const int jj1m2 = (twice(j) - twice(j1) - twice(m2)) / 2;  // j-j1-m2
    const int kMin = std::max({0, -jj2m1, -jj1m2});
    const int kMax = std::min({a, j1m1m, j2m2p});

    long double sum = 0.0L;
    for (int k = kMin; k <= kMax; ++k) {
        const long double logDenom =
            logFactorial(k) + logFactorial(a - k) + logFactorial(j1m1m - k) +
            logFactorial(j2m2p - k) + logFactorial(jj2m1 + k) + logFactorial(jj1m2 + k);
        const long double term = std::exp(0.5L * logPrefactor - logDenom);
        sum += (k % 2 == 0) ? term : -term;
    }
    return static_cast<double>(sum);
}

CoupledSpinSpace::CoupledSpinSpace(const SpinEnsemblePair& p) : pair(p) {
    const double sA = pair.spinA(), sB = pair.spinB();
    Eigen::Index offset = 0;
    for (int twoS = twice(std::abs(sA - sB)); twoS <= twice(sA + sB); twoS += 2) {
        SpinSector sector{0.5 * twoS, offset};
        offset += sector.size();
        sectors.push_back(sector);
    }
    const Eigen::Index dim = pair.productDim();
    if (offset != dim) {
        throw NumericalError("CoupledSpinSpace: sector dimensions do not sum to product dim");
    }
    cgMap = ComplexMatrix::Zero(dim, dim);
    const int dB = pair.nB + 1;
    for (const auto& sector : sectors) {
        const double s = sector.s;
        for (Eigen::Index k = 0; k < sector.size(); ++k) {
            const double m = -s + double(k);  // M ascending within the sector
            const Eigen::Index col = sector.offset + k;
            for (int iA = 0; iA <= pair.nA; ++iA) {
                const double mA = sA - iA;
                const double mB = m - mA;
                if (std::abs(mB) > sB + 1e-9) continue;
                const int iB = static_cast<int>(std::llround(sB - mB));
                cgMap(Eigen::Index(iA) * dB + iB, col) =
                    clebschGordan(sA, sB, s, mA, mB, m);
            }
        }
    }
}

Eigen::Index CoupledSpinSpace::dickeIndex(double s, double m) const {
    for (const auto& sector : sectors) {
        if (twice(sector.s) == twice(s)) {
            const int k = (twice(m) + twice(s)) / 2;
            if (k < 0 || k >= sector.size()) {
                throw DimensionError("dickeIndex: |M| exceeds S");
            }
            return sector.offset + k;
        }
    }
    throw DimensionError("dickeIndex: no sector with the requested S");
}

ComplexVector CoupledSpinSpace::dickeState(double s, double m) const {
    return cgMap.col(dickeIndex(s, m));
}

ComplexVector psiDif(const SpinEnsemblePair& pair, bool flipped) {
    const int dB = pair.nB + 1;
    ComplexVector state = ComplexVector::Zero(pair.productDim());
    const Eigen::Index idx = flipped ? Eigen::Index(pair.nA) * dB + 0
                                     : Eigen::Index(0) * dB + pair.nB;
    state(idx) = 1.0;
    return state;
}

ComplexMatrix dickeGenerator(const CoupledSpinSpace& space) {
    const CollectiveOps ops = collectiveOps(space.pair);
    return space.cgMap.adjoint() * (ops.szA - ops.szB) * space.cgMap;
}

ComplexMatrix dickeGeneratorBalancedClosedForm(const CoupledSpinSpace& space) {
    if (space.pair.nA != space.pair.nB) {
        throw DimensionError("dickeGeneratorBalancedClosedForm: requires N_A == N_B");
    }
    const int n = space.pair.totalQubits();
    const Eigen::Index dim = space.pair.productDim();
    ComplexMatrix g = ComplexMatrix::Zero(dim, dim);
    const double half = 0.5 * n;
    for (int twoS = 2; twoS <= twice(half); twoS += 2) {
        const double s = 0.5 * twoS;
        for (double m = -(s - 1); m <= s - 1 + 1e-9; m += 1.0) {
            const double amp = std::sqrt((s * s - m * m) *
                                         ((half + 1) * (half + 1) - s * s) /
                                         (4 * s * s - 1));
            const Eigen::Index lower = space.dickeIndex(s - 1, m);
            const Eigen::Index upper = space.dickeIndex(s, m);
            g(lower, upper) = amp;
            g(upper, lower) = amp;
        }
    }
    return g;
}

std::vector<std::pair<double, double>> pOfS(const SpinEnsemblePair& pair) {
    const double sA = pair.spinA(), sB = pair.spinB();
    const double eta = 0.5 * (pair.nA - pair.nB);
    std::vector<std::pair<double, double>> dist;
    for (double s = eta; s <= sA + sB + 1e-9; s += 1.0) {
        const double c = clebschGordan(sA, sB, s, sA, -sB, eta);
        dist.emplace_back(s, c * c);
    }
    return dist;
}

double balancedOverlapCoefficient(int n, int s) {
    if (n % 2 != 0 || s < 0 || s > n / 2) {
        throw DimensionError("balancedOverlapCoefficient: need even N and 0 <= S <= N/2");
    }
    const int half = n / 2;
    const long double logValue =
        0.5L * (std::log(static_cast<long double>(2 * s + 1)) +
                2.0L * logFactorial(half) - logFactorial(half - s) -
                logFactorial(half + 1 + s));
    return static_cast<double>(std::exp(logValue));
}

}  // namespace qss

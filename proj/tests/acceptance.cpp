// Acceptance suite: one pass/fail line per criterion. Exit code is the
// number of failed criteria. Tolerances are pinned inline next to the
// checks they guard.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "qss/dynamics.hpp"
#include "qss/metrology.hpp"
#include "qss/models.hpp"
#include "qss/scenarios.hpp"
#include "qss/spins.hpp"
#include "qss/steady.hpp"

using namespace qss;

namespace {

int failures = 0;

struct Check {
    bool ok = true;
    std::vector<std::string> details;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            details.push_back(what);
        }
    }
};

void report(int number, const std::string& label, const Check& check, double seconds) {
    std::printf("criterion %2d (%s): %s  [%.1f s]\n", number, label.c_str(),
                check.ok ? "PASS" : "FAIL", seconds);
    for (const auto& d : check.details) std::printf("    - %s\n", d.c_str());
    if (!check.ok) ++failures;
}

void runCriterion(int number, const std::string& label,
                  const std::function<void(Check&)>& body) {
    Check check;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(check);
    } catch (const std::exception& e) {
        check.require(false, std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report(number, label, check, secs);
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

struct NamedModel {
    std::string name;
    LindbladModel model;
};

std::vector<NamedModel> twoQubitModels() {
    return {{"two_qubit_balanced", twoQubitBalancedModel(1.0)},
            {"two_qubit_single_decay", twoQubitSingleDecayModel(1.0)},
            {"two_qubit_driven", twoQubitDrivenModel(1.0, 1.0)}};
}

ComplexMatrix outer(const ComplexVector& v) { return v * v.adjoint(); }

}  // namespace

// 1. Spectral, kernel, Hermitian-projection (where applicable), and
//    resolvent (eps = 1e-6) steady states agree pairwise to trace
//    distance <= 1e-6 on all three two-qubit models, 50 seeded states each.
static void criterion1(Check& check) {
    const auto t0 = std::chrono::steady_clock::now();
    for (const auto& [name, model] : twoQubitModels()) {
        const auto sop = buildLiouvillian(model);
        const auto basis = kernelBasis(sop);
        const auto spec = spectralDecomposition(sop);
        RandomStateSampler sampler(1234, SampleKind::MixedGinibre);
        double worst = 0.0;
        for (int i = 0; i < 50; ++i) {
            const ComplexMatrix rho0 = sampler.sample(4);
            std::vector<ComplexMatrix> results;
            results.push_back(steadySpectral(spec, rho0));
            results.push_back(steadyKernel(basis, rho0));
            if (sop.isHermitian()) results.push_back(steadyHermitian(sop, basis, rho0));
            ResolventOptions ropts;
            ropts.epsilon = 1e-6;
            results.push_back(steadyResolvent(sop, rho0, ropts));
            for (size_t a = 0; a < results.size(); ++a) {
                for (size_t b = a + 1; b < results.size(); ++b) {
                    worst = std::max(worst, traceDistance(results[a], results[b]));
                }
            }
        }
        check.require(worst <= 1e-6,
                      name + ": worst pairwise trace distance " + fmt(worst));
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    check.require(secs < 30.0, "runtime " + fmt(secs) + " s exceeds 30 s");
}

// 2. convergeToSteady (tol 1e-9) matches steadyResolvent to trace
//    distance <= 1e-6 on the two-qubit models and two-ensemble N = 12.
static void criterion2(Check& check) {
    const auto t0 = std::chrono::steady_clock::now();
    struct Entry {
        std::string name;
        LindbladModel model;
        ComplexMatrix rho0;
    };
    std::vector<Entry> entries;
    RandomStateSampler sampler(77, SampleKind::MixedGinibre);
    for (const auto& [name, model] : twoQubitModels()) {
        entries.push_back({name, model, sampler.sample(4)});
    }
    const SpinEnsemblePair pair(6, 6);  // N = 12
    entries.push_back(
        {"two_ensemble_decay_N12", twoEnsembleModel(pair, false, 1.0), outer(psiDif(pair))});
    entries.push_back(
        {"two_ensemble_balanced_N12", twoEnsembleModel(pair, true, 1.0), outer(psiDif(pair))});

    for (const auto& entry : entries) {
        const auto sop = buildLiouvillian(entry.model);
        ResolventOptions ropts;
        ropts.epsilon = 1e-6;
        const ComplexMatrix ssR = steadyResolvent(sop, entry.rho0, ropts);
        IntegrationOptions iopts;
        iopts.rtol = 1e-10;
        iopts.atol = 1e-12;
        const auto conv = convergeToSteady(sop, entry.rho0, 1e-9, 1e4, iopts);
        check.require(conv.converged, entry.name + ": integration did not converge");
        const double dist = traceDistance(sanitizeState(conv.state), ssR);
        check.require(dist <= 1e-6, entry.name + ": trace distance " + fmt(dist));
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    check.require(secs < 120.0, "runtime " + fmt(secs) + " s exceeds 2 min");
}

// 3. Concurrence law on the balanced two-qubit model: 300 Ginibre samples
//    satisfy |C - max(0, 2 c2 - 1)| <= 1e-6; onset at c2 = 0.5.
static void criterion3(Check& check) {
    const auto sop = buildLiouvillian(twoQubitBalancedModel(1.0));
    const auto basis = kernelBasis(sop);
    const ComplexVector dark = twoQubitSinglet();
    RandomStateSampler sampler(1234, SampleKind::MixedGinibre);
    double worst = 0.0;
    for (int i = 0; i < 300; ++i) {
        const ComplexMatrix rho0 = sampler.sample(4);
        const double c2 = (dark.adjoint() * rho0 * dark)(0).real();
        const double c = concurrence(steadyHermitian(sop, basis, rho0));
        worst = std::max(worst, std::abs(c - std::max(0.0, 2 * c2 - 1)));
    }
    check.require(worst <= 1e-6, "worst law violation " + fmt(worst));

    // Onset: entangled iff the dark-state weight exceeds 1/2.
    for (const double c2 : {0.45, 0.499, 0.501, 0.6}) {
        const ComplexMatrix rho0 =
            c2 * outer(dark) + (1 - c2) * outer(twoQubitTriplet0());
        const double c = concurrence(steadyHermitian(sop, basis, rho0));
        check.require((c > 1e-9) == (c2 > 0.5),
                      "onset mismatch at c2 = " + fmt(c2) + ", C = " + fmt(c));
    }
}

// 4. Kernel dimensions: n = 2 (balanced two qubits), n = 4 (single decay),
//    n = N/2+1 (two-ensemble balanced), n = (N/2+1)^2 (two-ensemble single
//    decay) for N in {2,4,8}; biorthogonality residual <= 1e-10.
static void criterion4(Check& check) {
    const auto checkKernel = [&](const std::string& name, const LindbladModel& model,
                                 Eigen::Index expected) {
        const auto basis = kernelBasis(buildLiouvillian(model));
        check.require(basis.kernelDim() == expected,
                      name + ": kernel dim " + std::to_string(basis.kernelDim()) +
                          ", expected " + std::to_string(expected));
        check.require(basis.biorthogonalityResidual() <= 1e-10,
                      name + ": biorthogonality residual " +
                          fmt(basis.biorthogonalityResidual()));
    };
    checkKernel("two_qubit_balanced", twoQubitBalancedModel(1.0), 2);
    checkKernel("two_qubit_single_decay", twoQubitSingleDecayModel(1.0), 4);
    for (const int n : {2, 4, 8}) {
        const SpinEnsemblePair pair(n / 2, n / 2);
        checkKernel("ensemble_balanced_N" + std::to_string(n),
                    twoEnsembleModel(pair, true, 1.0), n / 2 + 1);
        checkKernel("ensemble_decay_N" + std::to_string(n),
                    twoEnsembleModel(pair, false, 1.0),
                    Eigen::Index(n / 2 + 1) * Eigen::Index(n / 2 + 1));
    }
}

// 5. Two-ensemble collective decay from |psi_dif>: the resolvent steady
//    state equals sum_S p(S) |S,-S><S,-S| with p(S) = |C_S|^2, trace
//    distance <= 1e-5, for N in {2,4,8,12,20}.
static void criterion5(Check& check) {
    const auto t0 = std::chrono::steady_clock::now();
    for (const int n : {2, 4, 8, 12, 20}) {
        const SpinEnsemblePair pair(n / 2, n / 2);
        const CoupledSpinSpace space(pair);
        const auto sop = buildLiouvillian(twoEnsembleModel(pair, false, 1.0));
        ResolventOptions ropts;
        ropts.epsilon = 1e-6;
        const ComplexMatrix ss = steadyResolvent(sop, outer(psiDif(pair)), ropts);

        ComplexMatrix analytic = ComplexMatrix::Zero(pair.productDim(), pair.productDim());
        for (const auto& [s, p] : pOfS(pair)) {
            analytic += p * outer(space.dickeState(s, -s));
        }
        const double dist = traceDistance(ss, analytic);
        check.require(dist <= 1e-5, "N=" + std::to_string(n) + ": trace distance " + fmt(dist));
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    check.require(secs < 120.0, "runtime " + fmt(secs) + " s exceeds 2 min");
}

// 6. Closed-form QFI identities at 1e-8 relative accuracy.
static void criterion6(Check& check) {
    for (const int n : {4, 8, 12}) {
        const SpinEnsemblePair pair(n / 2, n / 2);
        const CoupledSpinSpace space(pair);
        const CollectiveOps ops = collectiveOps(pair);
        const ComplexMatrix g = ops.szA - ops.szB;
        double worstMixture = 0.0, worstPure = 0.0;
        for (const auto& sector : space.sectors) {
            ComplexMatrix mixture =
                ComplexMatrix::Zero(pair.productDim(), pair.productDim());
            for (Eigen::Index k = 0; k < sector.size(); ++k) {
                const double m = -sector.s + double(k);
                const ComplexVector v = space.dickeState(sector.s, m);
                mixture += outer(v) / double(sector.size());
                const double closedPure = qfiDickeClosed(n, sector.s, m);
                worstPure = std::max(worstPure, std::abs(qfiPure(v, g) - closedPure) /
                                                    std::max(1.0, closedPure));
            }
            const double closed = qfiBalancedMixtureClosed(n, sector.s);
            worstMixture = std::max(worstMixture, std::abs(qfiMixed(mixture, g).value - closed) /
                                                      std::max(1.0, closed));
        }
        check.require(worstMixture <= 1e-8,
                      "N=" + std::to_string(n) + ": mixture QFI relative error " +
                          fmt(worstMixture));
        check.require(worstPure <= 1e-8,
                      "N=" + std::to_string(n) + ": Dicke QFI relative error " +
                          fmt(worstPure));
    }
    for (int n = 2; n <= 20; n += 2) {
        const SpinEnsemblePair pair(n / 2, n / 2);
        double total = 0.0;
        for (const auto& [s, p] : pOfS(pair)) total += p * qfiBalancedMixtureClosed(n, s);
        const double expected = qfiProtocolClosed(n);
        check.require(std::abs(total - expected) <= 1e-8 * expected,
                      "N=" + std::to_string(n) + ": F_pro " + fmt(total) + " vs " +
                          fmt(expected));
    }
    check.require(std::abs(qfiProtocolClosed(4) - 8.0) <= 1e-12, "F_pro(4) != 8");
    check.require(std::abs(qfiProtocolClosed(60) - 1240.0) <= 1e-9, "F_pro(60) != 1240");
}

// 7. Heisenberg vs sub-Heisenberg scaling. F_pro/N^2 = (1 + 2/N)/3 exactly,
//    which decreases monotonically to 1/3; it enters the [0.30, 0.34] band
//    once N >= 100 and stays there (at N = 20 the exact value is 11/30,
//    so the band is asymptotic, not pointwise at N = 20). F_{rho_SS,L1}/N^2
//    decreases with N over {8,...,40} via the convex-sum route.
static void criterion7(Check& check) {
    double previous = 1.0;
    for (int n = 20; n <= 400; n += 20) {
        const double ratio = qfiProtocolClosed(n) / double(n) / double(n);
        check.require(ratio >= 0.30, "F_pro/N^2 = " + fmt(ratio) + " below band at N=" +
                                         std::to_string(n));
        check.require(ratio < previous, "F_pro/N^2 not decreasing at N=" + std::to_string(n));
        if (n >= 100) {
            check.require(ratio <= 0.34, "F_pro/N^2 = " + fmt(ratio) +
                                             " above band at N=" + std::to_string(n));
        }
        previous = ratio;
    }
    check.require(std::abs(qfiProtocolClosed(4000) / 4000.0 / 4000.0 - 1.0 / 3.0) <= 2e-4,
                  "F_pro/N^2 does not approach 1/3");

    previous = 1e9;
    for (int n = 8; n <= 40; n += 4) {
        const SpinEnsemblePair pair(n / 2, n / 2);
        double fL1 = 0.0;
        for (const auto& [s, p] : pOfS(pair)) fL1 += p * qfiDickeClosed(n, s, -s);
        const double ratio = fL1 / double(n) / double(n);
        check.require(ratio < previous,
                      "F_L1/N^2 not decreasing at N=" + std::to_string(n));
        previous = ratio;
    }
}

// 8. Imbalance behavior at N = 20, eta in {0,2,4}: support starts at S=eta,
//    F_L1 decreases and F_pro/F_L1 increases with eta; |psi_dif> and its
//    flipped partner give the same steady state to 1e-6 via the resolvent
//    and via RK trajectories.
static void criterion8(Check& check) {
    const auto t0 = std::chrono::steady_clock::now();
    const int n = 20;
    double prevL1 = 1e18, prevRatio = 0.0;
    for (const int eta : {0, 2, 4}) {
        const SpinEnsemblePair pair(n / 2 + eta, n / 2 - eta);
        const CoupledSpinSpace space(pair);
        const auto dist = pOfS(pair);
        check.require(std::abs(dist.front().first - double(eta)) <= 1e-12,
                      "eta=" + std::to_string(eta) + ": support starts at S=" +
                          fmt(dist.front().first));

        const ComplexMatrix g = dickeGenerator(space);  // coupled-basis generator
        double fL1 = 0.0, fPro = 0.0;
        for (const auto& [s, p] : dist) {
            const Eigen::Index idx = space.dickeIndex(s, -s);
            ComplexVector e = ComplexVector::Zero(g.rows());
            e(idx) = 1.0;
            fL1 += p * qfiPure(e, g);
            const Eigen::Index mult = Eigen::Index(std::lround(2 * s)) + 1;
            ComplexMatrix mixture = ComplexMatrix::Zero(g.rows(), g.cols());
            for (Eigen::Index k = 0; k < mult; ++k) {
                mixture(space.dickeIndex(s, -s + double(k)),
                        space.dickeIndex(s, -s + double(k))) = 1.0 / double(mult);
            }
            fPro += p * qfiMixed(mixture, g).value;
        }
        check.require(fL1 < prevL1, "eta=" + std::to_string(eta) + ": F_L1 did not decrease");
        const double ratio = fPro / fL1;
        check.require(ratio > 1.0 && ratio > prevRatio,
                      "eta=" + std::to_string(eta) + ": F_pro/F_L1 = " + fmt(ratio));
        prevL1 = fL1;
        prevRatio = ratio;

        const auto sop = buildLiouvillian(twoEnsembleModel(pair, false, 1.0));
        ResolventOptions ropts;
        ropts.epsilon = 1e-6;
        const ComplexMatrix ssA = steadyResolvent(sop, outer(psiDif(pair)), ropts);
        const ComplexMatrix ssB = steadyResolvent(sop, outer(psiDif(pair, true)), ropts);
        const double dR = traceDistance(ssA, ssB);
        check.require(dR <= 1e-6,
                      "eta=" + std::to_string(eta) + ": resolvent flip distance " + fmt(dR));

        IntegrationOptions iopts;
        iopts.rtol = 1e-9;
        iopts.atol = 1e-11;
        const auto convA = convergeToSteady(sop, outer(psiDif(pair)), 1e-8, 1e4, iopts);
        const auto convB =
            convergeToSteady(sop, outer(psiDif(pair, true)), 1e-8, 1e4, iopts);
        check.require(convA.converged && convB.converged,
                      "eta=" + std::to_string(eta) + ": trajectory did not converge");
        const double dT =
            traceDistance(sanitizeState(convA.state), sanitizeState(convB.state));
        check.require(dT <= 1e-6,
                      "eta=" + std::to_string(eta) + ": trajectory flip distance " + fmt(dT));
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    check.require(secs < 180.0, "runtime " + fmt(secs) + " s exceeds 3 min");
}

// 9. Conserved-quantity drift <= 1e-7 along RK trajectories from 10 random
//    initial states for the criteria-1..5 models; the identity lies in the
//    span of the conserved quantities. For the N = 20 ensemble the full
//    dense kernel is out of desk-scale reach, so the analytically conserved
//    total-spin sector projectors (including their sum, the identity) stand
//    in for the kernel basis there.
static void criterion9(Check& check) {
    struct Entry {
        std::string name;
        LindbladModel model;
        Eigen::Index dim;
        std::vector<ComplexMatrix> quantities;  // empty = derive from kernel
    };
    std::vector<Entry> entries;
    for (const auto& [name, model] : twoQubitModels()) {
        entries.push_back({name, model, 4, {}});
    }
    for (const int n : {2, 4, 8}) {
        const SpinEnsemblePair pair(n / 2, n / 2);
        entries.push_back({"ensemble_balanced_N" + std::to_string(n),
                           twoEnsembleModel(pair, true, 1.0), pair.productDim(), {}});
        entries.push_back({"ensemble_decay_N" + std::to_string(n),
                           twoEnsembleModel(pair, false, 1.0), pair.productDim(), {}});
    }
    {
        const SpinEnsemblePair pair(6, 6);
        entries.push_back({"ensemble_decay_N12", twoEnsembleModel(pair, false, 1.0),
                           pair.productDim(), {}});
    }
    {
        const SpinEnsemblePair pair(10, 10);  // N = 20: analytic projectors
        const CoupledSpinSpace space(pair);
        std::vector<ComplexMatrix> projectors;
        for (const auto& sector : space.sectors) {
            ComplexMatrix p = ComplexMatrix::Zero(pair.productDim(), pair.productDim());
            for (Eigen::Index k = 0; k < sector.size(); ++k) {
                p += outer(space.dickeState(sector.s, -sector.s + double(k)));
            }
            projectors.push_back(std::move(p));
        }
        entries.push_back({"ensemble_decay_N20", twoEnsembleModel(pair, false, 1.0),
                           pair.productDim(), std::move(projectors)});
    }

    for (auto& entry : entries) {
        const auto sop = buildLiouvillian(entry.model);
        std::vector<ComplexMatrix> quantities = std::move(entry.quantities);
        if (quantities.empty()) {
            quantities = conservedQuantities(kernelBasis(sop));
        }
        // L^dag annihilates every conserved quantity.
        double worstLeft = 0.0;
        for (const auto& q : quantities) {
            worstLeft = std::max(
                worstLeft, (sop.adjointMatrix() * vectorize(q)).norm() / q.norm());
        }
        check.require(worstLeft <= 1e-8,
                      entry.name + ": left-kernel residual " + fmt(worstLeft));

        // The identity lies in the span.
        ComplexMatrix stacked(entry.dim * entry.dim, Eigen::Index(quantities.size()));
        for (size_t j = 0; j < quantities.size(); ++j) {
            stacked.col(Eigen::Index(j)) = vectorize(quantities[j]);
        }
        const ComplexVector id = vectorize(ComplexMatrix::Identity(entry.dim, entry.dim));
        const ComplexVector residual =
            id - stacked * (stacked.adjoint() * stacked)
                               .ldlt()
                               .solve(stacked.adjoint() * id);
        check.require(residual.norm() <= 1e-7 * id.norm(),
                      entry.name + ": identity not in conserved span, residual " +
                          fmt(residual.norm()));

        RandomStateSampler sampler(2024, SampleKind::MixedGinibre);
        IntegrationOptions iopts;
        iopts.rtol = 1e-10;
        iopts.atol = 1e-12;
        double worstDrift = 0.0;
        for (int trial = 0; trial < 10; ++trial) {
            const ComplexMatrix rho0 = sampler.sample(entry.dim);
            const auto traj = integrate(sop, rho0, {0.0, 0.5, 2.0, 6.0}, iopts);
            for (const auto& q : quantities) {
                worstDrift = std::max(worstDrift, checkConserved(traj, q));
            }
        }
        check.require(worstDrift <= 1e-7, entry.name + ": drift " + fmt(worstDrift));
    }
}

// 10. Benchmark harness emits a full timing/error table for N in
//     {4,8,12,16} with cross-method error <= 1e-5 per row; the speedup
//     claim is reported, not asserted.
static void criterion10(Check& check) {
    ScenarioConfig cfg;
    cfg.outputDir.clear();
    cfg.benchSizes = {4, 8, 12, 16};
    cfg.benchRepeats = 3;
    cfg.epsilon = 1e-6;
    const auto result = runScenario("benchmark", cfg);
    check.require(result.rows.size() == 4, "expected 4 benchmark rows");
    for (const auto& row : result.rows) {
        check.require(row.size() == 7, "incomplete benchmark row");
        check.require(row[6] <= 1e-5, "N=" + fmt(row[0]) + ": cross-method error " +
                                          fmt(row[6]));
        check.require(row[1] > 0.0 && row[4] > 0.0, "missing timing entries");
    }
    check.require(!result.notes.empty(), "speedup note missing");
    if (!result.rows.empty()) {
        const auto& last = result.rows.back();
        std::printf("    observed ODE/resolvent time ratio at N=16: %.1fx "
                    "(hardware-dependent, reported only)\n",
                    last[4] / last[1]);
    }
}

// 11. Property suites: density-matrix validity of every steady-state
//     output, linearity of the steady maps, degenerate-basis invariance of
//     the mixed QFI, CG orthogonality and closed-form overlap agreement up
//     to N = 60.
static void criterion11(Check& check) {
    RandomStateSampler sampler(5150, SampleKind::MixedGinibre);
    for (const auto& [name, model] : twoQubitModels()) {
        const auto sop = buildLiouvillian(model);
        const auto basis = kernelBasis(sop);
        const auto spec = spectralDecomposition(sop);
        for (int trial = 0; trial < 10; ++trial) {
            const ComplexMatrix rho0 = sampler.sample(4);
            ResolventOptions ropts;
            ropts.epsilon = 1e-6;
            for (const ComplexMatrix& ss :
                 {steadyKernel(basis, rho0), steadySpectral(spec, rho0),
                  steadyResolvent(sop, rho0, ropts)}) {
                check.require(oracle::isDensityMatrix(ss, 1e-8),
                              name + ": output is not a density matrix");
            }
        }
        // Linearity on convex mixtures.
        const ComplexMatrix a = sampler.sample(4);
        const ComplexMatrix b = sampler.sample(4);
        const double w = 0.35;
        const double gap = traceDistance(
            steadyKernel(basis, w * a + (1 - w) * b),
            ComplexMatrix(w * steadyKernel(basis, a) + (1 - w) * steadyKernel(basis, b)));
        check.require(gap <= 1e-10, name + ": steady map not linear, gap " + fmt(gap));
    }

    // Mixed QFI must not depend on the basis chosen inside a degenerate
    // eigenspace of rho.
    ComplexMatrix rho = ComplexMatrix::Zero(4, 4);
    rho(0, 0) = 0.4;
    rho(1, 1) = 0.3;
    rho(2, 2) = 0.3;
    const ComplexMatrix g = oracle::randomHermitian(4);
    const double base = qfiMixed(rho, g).value;
    for (const double theta : {0.3, 1.1, 2.7}) {
        ComplexMatrix u = ComplexMatrix::Identity(4, 4);
        u(1, 1) = std::cos(theta);
        u(1, 2) = -std::sin(theta);
        u(2, 1) = std::sin(theta);
        u(2, 2) = std::cos(theta);
        const double rotated = qfiMixed(u * rho * u.adjoint(), g).value;
        check.require(std::abs(rotated - base) <= 1e-9 * std::max(1.0, base),
                      "QFI changed under degenerate-basis rotation by " +
                          fmt(std::abs(rotated - base)));
    }

    // CG machinery at N = 60.
    const SpinEnsemblePair pair(30, 30);
    const CoupledSpinSpace space(pair);
    const ComplexMatrix gram = space.cgMap.adjoint() * space.cgMap;
    const double orth =
        (gram - ComplexMatrix::Identity(gram.rows(), gram.cols())).norm();
    check.require(orth <= 1e-10 * double(gram.rows()),
                  "CG map not unitary at N=60, residual " + fmt(orth));
    double worst = 0.0;
    for (const auto& [s, p] : pOfS(pair)) {
        const double c = balancedOverlapCoefficient(60, int(std::lround(s)));
        worst = std::max(worst, std::abs(p - c * c));
    }
    check.require(worst <= 1e-12, "closed-form overlap mismatch " + fmt(worst));
}

int main() {
    runCriterion(1, "method cross-agreement", criterion1);
    runCriterion(2, "dynamics oracle", criterion2);
    runCriterion(3, "concurrence law", criterion3);
    runCriterion(4, "kernel structure", criterion4);
    runCriterion(5, "two-ensemble steady state", criterion5);
    runCriterion(6, "closed-form QFI", criterion6);
    runCriterion(7, "Heisenberg scaling", criterion7);
    runCriterion(8, "imbalance behavior", criterion8);
    runCriterion(9, "conserved quantities", criterion9);
    runCriterion(10, "benchmark harness", criterion10);
    runCriterion(11, "property suites", criterion11);
    if (failures == 0) {
        std::printf("all criteria passed\n");
    } else {
        std::printf("%d criteria failed\n", failures);
    }
    return failures;
}

#include "qss/scenarios.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <numeric>

#include <json.hpp>

#include "qss/dynamics.hpp"
#include "qss/metrology.hpp"
#include "qss/model_io.hpp"
#include "qss/models.hpp"
#include "qss/steady.hpp"

namespace qss {

namespace {

ComplexMatrix outer(const ComplexVector& v) { return v * v.adjoint(); }

double wallSeconds(const std::function<void()>& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

struct MeanStd {
    double mean = 0.0, stddev = 0.0;
};

// The resolvent method carries an O(epsilon / gap) state error, and
// concurrence is only Holder-1/2 continuous near eigenvalue crossings,
// so method-agreement tolerances must scale with epsilon.
double stateTol(double epsilon) { return 20.0 * epsilon; }
double concurrenceTol(double epsilon) { return 2.0 * std::sqrt(stateTol(epsilon)); }

MeanStd meanStd(const std::vector<double>& xs) {
    if (xs.empty()) return {};
    const double mean = std::accumulate(xs.begin(), xs.end(), 0.0) / double(xs.size());
    double var = 0.0;
    for (double x : xs) var += (x - mean) * (x - mean);
    return {mean, std::sqrt(var / double(xs.size()))};
}

}  // namespace

ComplexMatrix RandomStateSampler::sample(Eigen::Index dim) {
    if (dim < 2) throw DimensionError("RandomStateSampler: dim must be >= 2");
    std::normal_distribution<double> gauss(0.0, 1.0);
    if (kind_ == SampleKind::PureHaar) {
        ComplexVector v(dim);
        for (Eigen::Index i = 0; i < dim; ++i) {
            v(i) = Complex(gauss(rng_), gauss(rng_));
        }
        v /= v.norm();
        return outer(v);
    }
    ComplexMatrix g(dim, dim);
    for (Eigen::Index c = 0; c < dim; ++c) {
        for (Eigen::Index r = 0; r < dim; ++r) {
            g(r, c) = Complex(gauss(rng_), gauss(rng_));
        }
    }
    ComplexMatrix rho = g * g.adjoint();
    return rho / rho.trace().real();
}

void ScenarioResult::writeCsv(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("writeCsv: cannot open " + path);
    out.precision(17);
    for (size_t i = 0; i < header.size(); ++i) {
        out << header[i] << (i + 1 < header.size() ? "," : "\n");
    }
    for (const auto& row : rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            out << row[i] << (i + 1 < row.size() ? "," : "\n");
        }
    }
}

void ScenarioResult::writeJsonSummary(const ScenarioConfig& cfg,
                                      const std::string& path) const {
    nlohmann::json j;
    j["schema_version"] = kSchemaVersion;
    j["scenario"] = name;
    j["pass"] = pass;
    j["config"] = {{"n", cfg.n},
                   {"eta", cfg.eta},
                   {"gamma", cfg.gamma},
                   {"omega", cfg.omega},
                   {"epsilon", cfg.epsilon},
                   {"samples", cfg.samples},
                   {"seed", cfg.seed}};
    j["aggregates"] = aggregates;
    j["notes"] = notes;
    std::ofstream out(path);
    if (!out) throw std::runtime_error("writeJsonSummary: cannot open " + path);
    out << j.dump(2) << "\n";
}

ScenarioResult runTwoQubitBalanced(const ScenarioConfig& cfg) {
    ScenarioResult result;
    result.name = "two_qubit_balanced";
    result.header = {"c2", "concurrence_hermitian", "concurrence_resolvent"};

    const auto model = twoQubitBalancedModel(cfg.gamma);
    const auto sop = buildLiouvillian(model);
    const auto basis = kernelBasis(sop);
    const ComplexVector singlet = twoQubitSinglet();

    RandomStateSampler sampler(cfg.seed, cfg.samplerKind);
    const ComplexMatrix darkProj = outer(singlet);
    double maxLawError = 0.0, maxMethodGap = 0.0;
    for (int i = 0; i < cfg.samples; ++i) {
        // Blend toward the dark state so the overlap sweeps [~0, 1] and the
        // entangled branch of the concurrence law is exercised.
        const double w = cfg.samples > 1 ? double(i) / double(cfg.samples - 1) : 0.0;
        const ComplexMatrix rho0 = (1.0 - w) * sampler.sample(4) + w * darkProj;
        const double c2 = (singlet.adjoint() * rho0 * singlet)(0).real();
        const ComplexMatrix ssH = steadyHermitian(sop, basis, rho0);
        ResolventOptions ropts;
        ropts.epsilon = cfg.epsilon;
        const ComplexMatrix ssR = steadyResolvent(sop, rho0, ropts);
        const double ch = concurrence(ssH);
        const double cr = concurrence(ssR);
        maxMethodGap = std::max(maxMethodGap, std::abs(ch - cr));
        maxLawError = std::max(maxLawError, std::abs(ch - std::max(0.0, 2 * c2 - 1)));
        result.rows.push_back({c2, ch, cr});
    }
    result.aggregates["max_law_error"] = maxLawError;
    result.aggregates["max_method_gap"] = maxMethodGap;
    result.aggregates["kernel_dim"] = double(basis.kernelDim());
    result.pass = basis.kernelDim() == 2 && maxLawError <= 1e-6 &&
                  maxMethodGap <= concurrenceTol(cfg.epsilon);
    return result;
}

ScenarioResult runTwoQubitSingleDecay(const ScenarioConfig& cfg) {
    ScenarioResult result;
    result.name = "two_qubit_single_decay";
    result.header = {"ctilde2", "concurrence_kernel", "concurrence_resolvent"};

    const auto model = twoQubitSingleDecayModel(cfg.gamma);
    const auto sop = buildLiouvillian(model);
    const auto basis = kernelBasis(sop);
    const ComplexVector singlet = twoQubitSinglet();

    RandomStateSampler sampler(cfg.seed, cfg.samplerKind);
    double maxMethodGap = 0.0, maxStateGap = 0.0;
    for (int i = 0; i < cfg.samples; ++i) {
        const ComplexMatrix rho0 = sampler.sample(4);
        const double c2 = (singlet.adjoint() * rho0 * singlet)(0).real();
        const ComplexMatrix ssK = steadyKernel(basis, rho0);
        ResolventOptions ropts;
        ropts.epsilon = cfg.epsilon;
        const ComplexMatrix ssR = steadyResolvent(sop, rho0, ropts);
        maxStateGap = std::max(maxStateGap, traceDistance(ssK, ssR));
        const double ck = concurrence(ssK);
        const double cr = concurrence(ssR);
        maxMethodGap = std::max(maxMethodGap, std::abs(ck - cr));
        result.rows.push_back({c2, ck, cr});
    }
    result.aggregates["max_method_gap"] = maxMethodGap;
    result.aggregates["max_state_gap"] = maxStateGap;
    result.aggregates["kernel_dim"] = double(basis.kernelDim());
    result.pass = basis.kernelDim() == 4 && maxMethodGap <= concurrenceTol(cfg.epsilon) &&
                  maxStateGap <= stateTol(cfg.epsilon);
    return result;
}

ScenarioResult runTwoQubitDriven(const ScenarioConfig& cfg) {
    ScenarioResult result;
    result.name = "two_qubit_driven";
    result.header = {"gamma_over_omega", "ctilde2", "concurrence_kernel",
                     "concurrence_resolvent"};
    if (!(cfg.omega > 0.0)) throw DimensionError("two_qubit_driven: requires omega > 0");

    const ComplexVector singlet = twoQubitSinglet();
    bool kernelDimsOk = true;
    bool lowOverlapEntanglementSeen = false;
    double maxStateGap = 0.0;
    for (const double ratio : {0.5, 1.0, 2.0}) {
        const auto model = twoQubitDrivenModel(cfg.omega, ratio * cfg.omega);
        const auto sop = buildLiouvillian(model);
        const auto basis = kernelBasis(sop);
        kernelDimsOk = kernelDimsOk && basis.kernelDim() == 2;
        RandomStateSampler sampler(cfg.seed, cfg.samplerKind);
        for (int i = 0; i < cfg.samples; ++i) {
            const ComplexMatrix rho0 = sampler.sample(4);
            const double c2 = (singlet.adjoint() * rho0 * singlet)(0).real();
            const ComplexMatrix ssK = steadyKernel(basis, rho0);
            ResolventOptions ropts;
            ropts.epsilon = cfg.epsilon;
            const ComplexMatrix ssR = steadyResolvent(sop, rho0, ropts);
            maxStateGap = std::max(maxStateGap, traceDistance(ssK, ssR));
            const double ck = concurrence(ssK);
            if (ratio == 2.0 && c2 < 0.2 && ck > 1e-3) lowOverlapEntanglementSeen = true;
            result.rows.push_back({ratio, c2, ck, concurrence(ssR)});
        }
    }
    result.aggregates["max_state_gap"] = maxStateGap;
    result.aggregates["low_overlap_entanglement_found"] =
        lowOverlapEntanglementSeen ? 1.0 : 0.0;
    result.pass = kernelDimsOk && maxStateGap <= stateTol(cfg.epsilon) &&
                  lowOverlapEntanglementSeen;
    return result;
}

ScenarioResult runTwoEnsembleDecay(const ScenarioConfig& cfg) {
    ScenarioResult result;
    result.name = "two_ensemble_decay";
    result.header = {"S", "p_of_S"};
    if (cfg.n % 2 != 0 || cfg.eta < 0 || cfg.eta > cfg.n / 2) {
        throw DimensionError("two_ensemble_decay: requires even N and 0 <= eta <= N/2");
    }

    const SpinEnsemblePair pair(cfg.n / 2 + cfg.eta, cfg.n / 2 - cfg.eta);
    const CoupledSpinSpace space(pair);
    const auto model = twoEnsembleModel(pair, /*balanced=*/false, cfg.gamma);
    const auto sop = buildLiouvillian(model);

    const auto dist = pOfS(pair);
    ComplexMatrix analytic = ComplexMatrix::Zero(pair.productDim(), pair.productDim());
    for (const auto& [s, p] : dist) {
        analytic += p * outer(space.dickeState(s, -s));
        result.rows.push_back({s, p});
    }

    ResolventOptions ropts;
    ropts.epsilon = cfg.epsilon;
    const ComplexMatrix ss = steadyResolvent(sop, outer(psiDif(pair)), ropts);
    const ComplexMatrix ssFlipped = steadyResolvent(sop, outer(psiDif(pair, true)), ropts);

    const CollectiveOps ops = collectiveOps(pair);
    const ComplexMatrix g = ops.szA - ops.szB;
    const double qfi = qfiMixed(ss, g).value;
    double qfiConvex = 0.0;
    for (const auto& [s, p] : dist) {
        qfiConvex += p * qfiPure(space.dickeState(s, -s), g);
    }

    result.aggregates["trace_distance_to_analytic"] = traceDistance(ss, analytic);
    result.aggregates["trace_distance_flipped"] = traceDistance(ss, ssFlipped);
    result.aggregates["qfi"] = qfi;
    result.aggregates["qfi_convex_sum"] = qfiConvex;
    result.pass = result.aggregates["trace_distance_to_analytic"] <= stateTol(cfg.epsilon) &&
                  result.aggregates["trace_distance_flipped"] <= stateTol(cfg.epsilon) &&
                  std::abs(qfi - qfiConvex) <= stateTol(cfg.epsilon) * std::max(1.0, qfiConvex);
    return result;
}

ScenarioResult runBalancedProtocol(const ScenarioConfig& cfg) {
    ScenarioResult result;
    result.name = "balanced_protocol";
    result.header = {"S", "p_of_S", "qfi_balanced_mixture"};
    if (cfg.n % 2 != 0 || cfg.eta < 0 || cfg.eta > cfg.n / 2) {
        throw DimensionError("balanced_protocol: requires even N and 0 <= eta <= N/2");
    }

    const SpinEnsemblePair pair(cfg.n / 2 + cfg.eta, cfg.n / 2 - cfg.eta);
    const CoupledSpinSpace space(pair);
    const auto balanced = twoEnsembleModel(pair, /*balanced=*/true, cfg.gamma);
    const auto sop = buildLiouvillian(balanced);
    const CollectiveOps ops = collectiveOps(pair);
    const ComplexMatrix g = ops.szA - ops.szB;

    const auto dist = pOfS(pair);
    double fPro = 0.0, fL1 = 0.0, maxStageGap = 0.0;
    for (const auto& [s, p] : dist) {
        // Stage 2: |S,-S> decays to the equal mixture over M at fixed S.
        ComplexMatrix mixture =
            ComplexMatrix::Zero(pair.productDim(), pair.productDim());
        const Eigen::Index mult = Eigen::Index(std::lround(2 * s)) + 1;
        for (Eigen::Index k = 0; k < mult; ++k) {
            mixture += outer(space.dickeState(s, -s + double(k))) / double(mult);
        }
        ResolventOptions ropts;
        ropts.epsilon = cfg.epsilon;
        const ComplexMatrix ss = steadyResolvent(sop, outer(space.dickeState(s, -s)), ropts);
        maxStageGap = std::max(maxStageGap, traceDistance(ss, mixture));
        const double fS = qfiMixed(mixture, g).value;
        fPro += p * fS;
        fL1 += p * qfiPure(space.dickeState(s, -s), g);
        result.rows.push_back({s, p, fS});
    }

    // Direct balanced evolution from psi_dif, skipping stage 1.
    ResolventOptions ropts;
    ropts.epsilon = cfg.epsilon;
    const ComplexMatrix ssDirect = steadyResolvent(sop, outer(psiDif(pair)), ropts);
    const double fDirect = qfiMixed(ssDirect, g).value;

    result.aggregates["f_pro"] = fPro;
    result.aggregates["f_ss_l1"] = fL1;
    result.aggregates["f_direct_balanced"] = fDirect;
    result.aggregates["ratio_pro_over_l1"] = fPro / fL1;
    result.aggregates["max_stage2_gap"] = maxStageGap;

    bool closedFormOk = true;
    if (cfg.eta == 0) {
        const double expected = qfiProtocolClosed(cfg.n);
        result.aggregates["f_pro_closed_form"] = expected;
        closedFormOk = std::abs(fPro - expected) <= 1e-8 * expected;
    }
    result.pass = closedFormOk && maxStageGap <= stateTol(cfg.epsilon) && fPro / fL1 > 1.0 &&
                  fDirect < fPro;
    return result;
}

ScenarioResult runBenchmark(const ScenarioConfig& cfg) {
    ScenarioResult result;
    result.name = "benchmark";
    result.header = {"N",
                     "resolvent_direct_mean_s",
                     "resolvent_direct_std_s",
                     "resolvent_iterative_mean_s",
                     "ode_mean_s",
                     "ode_std_s",
                     "trace_distance"};
    double maxError = 0.0;
    for (const int n : cfg.benchSizes) {
        const SpinEnsemblePair pair(n / 2, n / 2);
        const auto model = twoEnsembleModel(pair, /*balanced=*/false, cfg.gamma);
        const auto sop = buildLiouvillian(model);
        const ComplexMatrix rho0 = psiDif(pair) * psiDif(pair).adjoint();

        std::vector<double> tDirect, tIter, tOde;
        ComplexMatrix ssDirect, ssOde;
        for (int rep = 0; rep < cfg.benchRepeats; ++rep) {
            ResolventOptions ropts;
            ropts.epsilon = cfg.epsilon;
            tDirect.push_back(wallSeconds([&] { ssDirect = steadyResolvent(sop, rho0, ropts); }));
            try {
                ResolventOptions iopts = ropts;
                iopts.method = SolveMethod::Iterative;
                iopts.rtol = 1e-10;
                ComplexMatrix tmp;
                tIter.push_back(wallSeconds([&] { tmp = steadyResolvent(sop, rho0, iopts); }));
            } catch (const SolverError&) {
                // Non-convergence is recorded, not fatal.
            }
            IntegrationOptions iopts;
            iopts.rtol = 1e-10;
            iopts.atol = 1e-12;
            tOde.push_back(wallSeconds([&] {
                ssOde = sanitizeState(convergeToSteady(sop, rho0, 1e-9, 1e4, iopts).state);
            }));
        }
        const double err = traceDistance(ssDirect, ssOde);
        maxError = std::max(maxError, err);
        const auto d = meanStd(tDirect);
        const auto o = meanStd(tOde);
        const double iterMean = tIter.empty()
                                    ? std::numeric_limits<double>::quiet_NaN()
                                    : meanStd(tIter).mean;
        result.rows.push_back({double(n), d.mean, d.stddev, iterMean, o.mean, o.stddev, err});
    }
    result.aggregates["max_trace_distance"] = maxError;
    result.notes.push_back(
        "Reference claim (different hardware): the resolvent route was reported at "
        "least one order of magnitude faster than ODE integration; the observed "
        "ratio here is hardware-dependent and reported, not asserted.");
    result.pass = maxError <= stateTol(cfg.epsilon) + 1e-7;
    return result;
}

std::vector<std::string> scenarioNames() {
    return {"two_qubit_balanced", "two_qubit_single_decay", "two_qubit_driven",
            "two_ensemble_decay", "balanced_protocol", "benchmark"};
}

ScenarioResult runScenario(const std::string& name, const ScenarioConfig& cfg) {
    ScenarioResult result;
    if (name == "two_qubit_balanced") result = runTwoQubitBalanced(cfg);
    else if (name == "two_qubit_single_decay") result = runTwoQubitSingleDecay(cfg);
    else if (name == "two_qubit_driven") result = runTwoQubitDriven(cfg);
    else if (name == "two_ensemble_decay") result = runTwoEnsembleDecay(cfg);
    else if (name == "balanced_protocol") result = runBalancedProtocol(cfg);
    else if (name == "benchmark") result = runBenchmark(cfg);
    else {
        std::string known;
        for (const auto& s : scenarioNames()) known += " " + s;
        throw DimensionError("unknown scenario '" + name + "'; available:" + known);
    }
    if (!cfg.outputDir.empty()) {
        const std::string stem =
            cfg.outputDir + "/" + result.name + "_" + std::to_string(cfg.seed);
        result.writeCsv(stem + ".csv");
        result.writeJsonSummary(cfg, stem + ".json");
    }
    return result;
}

}  // namespace qss

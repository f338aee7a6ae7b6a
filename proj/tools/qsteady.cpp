// Command-line front end: load models, compute steady states and kernel
// reports, run named scenarios and benchmarks.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qss/metrology.hpp"
#include "qss/model_io.hpp"
#include "qss/scenarios.hpp"
#include "qss/steady.hpp"

namespace {

constexpr int kExitParseError = 2;
constexpr int kExitSolverError = 3;

std::string defaultOutputDir() {
    if (const char* dir = std::getenv("QSTEADY_OUTPUT_DIR")) return dir;
    return ".";
}

int cmdSolve(const std::string& modelPath, const std::string& statePath,
             const std::string& method, double epsilon, const std::string& outPath) {
    const auto model = qss::loadModel(modelPath);
    const auto rho0 = qss::loadMatrix(statePath);
    const auto sop = qss::buildLiouvillian(model);

    qss::ComplexMatrix ss;
    Eigen::Index kernelDim = -1;
    if (method == "resolvent") {
        qss::ResolventOptions opts;
        opts.epsilon = epsilon;
        ss = qss::steadyResolvent(sop, rho0, opts);
    } else if (method == "spectral") {
        const auto spec = qss::spectralDecomposition(sop);
        kernelDim = Eigen::Index(spec.zeroIndices.size());
        ss = qss::steadySpectral(spec, rho0);
    } else {
        const auto basis = qss::kernelBasis(sop);
        kernelDim = basis.kernelDim();
        ss = (method == "hermitian") ? qss::steadyHermitian(sop, basis, rho0)
                                     : qss::steadyKernel(basis, rho0);
    }
    qss::saveMatrix(ss, outPath);
    std::cout << "method: " << method << "\n";
    if (kernelDim >= 0) std::cout << "kernel_dim: " << kernelDim << "\n";
    std::cout << "residual: " << sop.apply(ss).norm() << "\n"
              << "output: " << outPath << "\n";
    return 0;
}

int cmdKernel(const std::string& modelPath, const std::string& outPath) {
    const auto model = qss::loadModel(modelPath);
    const auto sop = qss::buildLiouvillian(model);
    const auto basis = qss::kernelBasis(sop);

    nlohmann::json j;
    j["schema_version"] = qss::kSchemaVersion;
    j["kernel_dim"] = basis.kernelDim();
    j["biorthogonality_residual"] = basis.biorthogonalityResidual();
    j["right_vectors"] = nlohmann::json::array();
    j["left_vectors"] = nlohmann::json::array();
    for (Eigen::Index k = 0; k < basis.kernelDim(); ++k) {
        j["right_vectors"].push_back(nlohmann::json::parse(
            qss::matrixToJson(qss::devectorize(basis.rightVectors[k]))));
        j["left_vectors"].push_back(nlohmann::json::parse(
            qss::matrixToJson(qss::devectorize(basis.leftVectors[k]))));
    }
    std::ofstream out(outPath);
    if (!out) throw qss::ParseError("cannot open " + outPath + " for writing");
    out << j.dump(2) << "\n";
    std::cout << "kernel_dim: " << basis.kernelDim() << "\n"
              << "biorthogonality_residual: " << basis.biorthogonalityResidual() << "\n"
              << "output: " << outPath << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Steady-state prediction for Lindblad master equations"};
    app.require_subcommand(1);

    std::string modelPath, statePath, outPath, method = "resolvent", format = "json";
    double epsilon = 1e-6;

    auto* solve = app.add_subcommand("solve", "Compute the steady state for a model "
                                              "and initial state");
    solve->add_option("--model", modelPath, "model JSON file")->required();
    solve->add_option("--state", statePath, "initial state JSON file")->required();
    solve->add_option("--method", method, "spectral|kernel|hermitian|resolvent")
        ->check(CLI::IsMember({"spectral", "kernel", "hermitian", "resolvent"}));
    solve->add_option("--epsilon", epsilon, "resolvent shift parameter");
    solve->add_option("--output", outPath, "output state JSON file")->required();

    auto* kernel = app.add_subcommand("kernel", "Report the biorthogonal kernel basis");
    kernel->add_option("--model", modelPath, "model JSON file")->required();
    kernel->add_option("--output", outPath, "kernel report JSON file")->required();

    qss::ScenarioConfig cfg;
    cfg.outputDir = defaultOutputDir();
    std::string scenarioName, samplerName = "ginibre";
    auto* scenario = app.add_subcommand("scenario", "Run a named experiment");
    scenario->add_option("name", scenarioName, "scenario name")->required();
    scenario->add_option("--N", cfg.n, "total qubit count");
    scenario->add_option("--eta", cfg.eta, "ensemble imbalance");
    scenario->add_option("--gamma", cfg.gamma, "decay rate");
    scenario->add_option("--omega", cfg.omega, "drive strength");
    scenario->add_option("--epsilon", cfg.epsilon, "resolvent shift parameter");
    scenario->add_option("--samples", cfg.samples, "random initial states");
    scenario->add_option("--seed", cfg.seed, "RNG seed");
    scenario->add_option("--sampler", samplerName, "ginibre|haar")
        ->check(CLI::IsMember({"ginibre", "haar"}));
    scenario->add_option("--output-dir", cfg.outputDir, "artifact directory");

    auto* bench = app.add_subcommand("bench", "Timing/error table across system sizes");
    bench->add_option("--N", cfg.benchSizes, "system sizes");
    bench->add_option("--repeats", cfg.benchRepeats, "measurements per size");
    bench->add_option("--epsilon", cfg.epsilon, "resolvent shift parameter");
    bench->add_option("--seed", cfg.seed, "RNG seed");
    bench->add_option("--output-dir", cfg.outputDir, "artifact directory");

    Eigen::Index sampleDim = 4;
    auto* sample = app.add_subcommand("sample", "Emit one random density matrix");
    sample->add_option("--dim", sampleDim, "Hilbert dimension");
    sample->add_option("--seed", cfg.seed, "RNG seed");
    sample->add_option("--sampler", samplerName, "ginibre|haar")
        ->check(CLI::IsMember({"ginibre", "haar"}));
    sample->add_option("--output", outPath, "output state JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitParseError;
    }

    cfg.samplerKind = samplerName == "haar" ? qss::SampleKind::PureHaar
                                            : qss::SampleKind::MixedGinibre;
    try {
        if (solve->parsed()) {
            return cmdSolve(modelPath, statePath, method, epsilon, outPath);
        }
        if (kernel->parsed()) {
            return cmdKernel(modelPath, outPath);
        }
        if (scenario->parsed()) {
            const auto result = qss::runScenario(scenarioName, cfg);
            std::cout << result.name << ": " << (result.pass ? "PASS" : "FAIL") << "\n";
            for (const auto& [key, value] : result.aggregates) {
                std::cout << "  " << key << " = " << value << "\n";
            }
            return result.pass ? 0 : kExitSolverError;
        }
        if (bench->parsed()) {
            cfg.name = "benchmark";
            const auto result = qss::runScenario("benchmark", cfg);
            std::cout << result.name << ": " << (result.pass ? "PASS" : "FAIL") << "\n";
            return result.pass ? 0 : kExitSolverError;
        }
        if (sample->parsed()) {
            qss::RandomStateSampler sampler(cfg.seed, cfg.samplerKind);
            qss::saveMatrix(sampler.sample(sampleDim), outPath);
            std::cout << "output: " << outPath << "\n";
            return 0;
        }
    } catch (const qss::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParseError;
    } catch (const qss::DimensionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParseError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParseError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSolverError;
    }
    return kExitParseError;
}

#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "qss/algebra.hpp"

namespace qss {

enum class SampleKind { MixedGinibre, PureHaar };

/// Deterministic random density-matrix source; identical seeds give
/// identical sample sequences.
class RandomStateSampler {
public:
    RandomStateSampler(std::uint64_t seed, SampleKind kind = SampleKind::MixedGinibre)
        : rng_(seed), kind_(kind) {}

    ComplexMatrix sample(Eigen::Index dim);

private:
    std::mt19937_64 rng_;
    SampleKind kind_;
};

struct ScenarioConfig {
    std::string name;
    int n = 4;
    int eta = 0;
    double gamma = 1.0;
    double omega = 1.0;
    double epsilon = 1e-4;
    int samples = 300;
    std::uint64_t seed = 1234;
    SampleKind samplerKind = SampleKind::MixedGinibre;
    std::vector<int> benchSizes = {4, 8, 12, 16};
    int benchRepeats = 5;
    std::string outputDir;  // empty = no files written
};

struct ScenarioResult {
    std::string name;
    bool pass = true;
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
    std::map<std::string, double> aggregates;
    std::vector<std::string> notes;

    void writeCsv(const std::string& path) const;
    void writeJsonSummary(const ScenarioConfig& cfg, const std::string& path) const;
};

ScenarioResult runTwoQubitBalanced(const ScenarioConfig& cfg);
ScenarioResult runTwoQubitSingleDecay(const ScenarioConfig& cfg);
ScenarioResult runTwoQubitDriven(const ScenarioConfig& cfg);
ScenarioResult runTwoEnsembleDecay(const ScenarioConfig& cfg);
ScenarioResult runBalancedProtocol(const ScenarioConfig& cfg);
ScenarioResult runBenchmark(const ScenarioConfig& cfg);

std::vector<std::string> scenarioNames();

/// Dispatch by name; writes <name>_<seed>.csv / .json when
/// cfg.outputDir is set. Throws DimensionError for unknown names.
ScenarioResult runScenario(const std::string& name, const ScenarioConfig& cfg);

}  // namespace qss

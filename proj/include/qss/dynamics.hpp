#pragma once

#include <map>
#include <string>
#include <vector>

#include "qss/algebra.hpp"
#include "qss/lindblad.hpp"

namespace qss {

struct Trajectory {
    std::vector<double> times;
    std::vector<ComplexMatrix> states;
    std::map<std::string, std::vector<double>> observables;

    void writeCsv(const std::string& path) const;
};

struct IntegrationOptions {
    double rtol = 1e-8;
    double atol = 1e-10;
    double initialStep = 1e-3;
    double maxStep = 0.0;  // 0 = unbounded
    bool renormalizeTrace = false;
    /// Hermitian observables recorded as Re tr(O rho) at each sample time.
    std::vector<std::pair<std::string, ComplexMatrix>> observables;
};

/// Adaptive Dormand-Prince 5(4) integration of d/dt vec(rho) = L vec(rho),
/// sampled at the requested times (which must be increasing, starting >= 0).
Trajectory integrate(const Superoperator& sop, const ComplexMatrix& rho0,
                     const std::vector<double>& sampleTimes,
                     const IntegrationOptions& opts = {});

/// Fixed-step classic RK4, for deterministic benchmarking.
ComplexMatrix integrateFixedRk4(const Superoperator& sop, const ComplexMatrix& rho0,
                                double tFinal, double step);

struct ConvergenceResult {
    ComplexMatrix state;
    double elapsedSimTime = 0.0;
    bool converged = false;
};

/// Integrates until ||L vec(rho)||_2 <= tol or tMax is reached.
ConvergenceResult convergeToSteady(const Superoperator& sop, const ComplexMatrix& rho0,
                                   double tol, double tMax,
                                   const IntegrationOptions& opts = {});

/// max_t |tr(Q^dag rho(t)) - tr(Q^dag rho(0))|
double checkConserved(const Trajectory& trajectory, const ComplexMatrix& quantity);

}  // namespace qss

#include "qss/dynamics.hpp"

#include <cmath>
#include <fstream>

namespace qss {

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                 b5 = -2187.0 / 6784, b6 = 11.0 / 84;
// 4th-order embedded weights.
constexpr double e1 = 5179.0 / 57600, e3 = 7571.0 / 16695, e4 = 393.0 / 640,
                 e5 = -92097.0 / 339200, e6 = 187.0 / 2100, e7 = 1.0 / 40;

class Dopri5 {
public:
    Dopri5(const SparseOperator& l, const IntegrationOptions& opts)
        : l_(l), opts_(opts) {}

    /// Advances y from t to tEnd in place.
    void advance(ComplexVector& y, double& t, double tEnd) {
        if (tEnd <= t) return;
        if (!k1Valid_) {
            k1_ = l_ * y;
            k1Valid_ = true;
        }
        double h = std::min(opts_.initialStep, tEnd - t);
        if (lastStep_ > 0.0) h = std::min(lastStep_, tEnd - t);
        while (t < tEnd) {
            h = std::min(h, tEnd - t);
            if (opts_.maxStep > 0.0) h = std::min(h, opts_.maxStep);
            if (h < 1e-14 * std::max(1.0, std::abs(t))) {
                throw NumericalError("integrate: step size underflow at t = " +
                                     std::to_string(t));
            }
            ComplexVector k2 = l_ * (y + h * a21 * k1_);
            ComplexVector k3 = l_ * (y + h * (a31 * k1_ + a32 * k2));
            ComplexVector k4 = l_ * (y + h * (a41 * k1_ + a42 * k2 + a43 * k3));
            ComplexVector k5 = l_ * (y + h * (a51 * k1_ + a52 * k2 + a53 * k3 + a54 * k4));
            ComplexVector k6 = l_ * (y + h * (a61 * k1_ + a62 * k2 + a63 * k3 +
                                              a64 * k4 + a65 * k5));
            ComplexVector y5 = y + h * (b1 * k1_ + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
            ComplexVector k7 = l_ * y5;  // FSAL
            ComplexVector y4 = y + h * (e1 * k1_ + e3 * k3 + e4 * k4 + e5 * k5 +
                                        e6 * k6 + e7 * k7);
            const double scale = opts_.atol + opts_.rtol * std::max(y.norm(), y5.norm());
            const double err = (y5 - y4).norm() / scale;
            if (err <= 1.0) {
                t += h;
                y = std::move(y5);
                k1_ = std::move(k7);
            }
            const double factor =
                std::clamp(0.9 * std::pow(std::max(err, 1e-12), -0.2), 0.2, 5.0);
            h *= factor;
            lastStep_ = h;
        }
    }

private:
    const SparseOperator& l_;
    const IntegrationOptions& opts_;
    ComplexVector k1_;
    bool k1Valid_ = false;
    double lastStep_ = 0.0;
};

ComplexMatrix snapshot(const ComplexVector& y, bool renormalize) {
    ComplexMatrix rho = devectorize(y);
    if (renormalize) rho /= rho.trace().real();
    return rho;
}

}  // namespace

void Trajectory::writeCsv(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("Trajectory::writeCsv: cannot open " + path);
    out << "time";
    for (const auto& [name, _] : observables) out << "," << name;
    out << "\n";
    out.precision(17);
    for (size_t i = 0; i < times.size(); ++i) {
        out << times[i];
        for (const auto& [_, series] : observables) out << "," << series[i];
        out << "\n";
    }
}

Trajectory integrate(const Superoperator& sop, const ComplexMatrix& rho0,
                     const std::vector<double>& sampleTimes,
                     const IntegrationOptions& opts) {
    for (size_t i = 1; i < sampleTimes.size(); ++i) {
        if (sampleTimes[i] <= sampleTimes[i - 1]) {
            throw DimensionError("integrate: sample times must be strictly increasing");
        }
    }
    Trajectory traj;
    for (const auto& [name, _] : opts.observables) traj.observables[name] = {};

    ComplexVector y = vectorize(rho0);
    double t = 0.0;
    Dopri5 stepper(sop.matrix(), opts);
    for (double ts : sampleTimes) {
        if (ts < 0.0) throw DimensionError("integrate: negative sample time");
        stepper.advance(y, t, ts);
        ComplexMatrix rho = snapshot(y, opts.renormalizeTrace);
        traj.times.push_back(ts);
        for (const auto& [name, op] : opts.observables) {
            traj.observables[name].push_back((op * rho).trace().real());
        }
        traj.states.push_back(std::move(rho));
    }
    return traj;
}

ComplexMatrix integrateFixedRk4(const Superoperator& sop, const ComplexMatrix& rho0,
                                double tFinal, double step) {
    if (!(tFinal > 0.0) || !(step > 0.0)) {
        throw DimensionError("integrateFixedRk4: tFinal and step must be positive");
    }
    const SparseOperator& l = sop.matrix();
    ComplexVector y = vectorize(rho0);
    const auto nSteps = static_cast<long long>(std::ceil(tFinal / step));
    const double h = tFinal / double(nSteps);
    for (long long i = 0; i < nSteps; ++i) {
        ComplexVector k1 = l * y;
        ComplexVector k2 = l * (y + 0.5 * h * k1);
        ComplexVector k3 = l * (y + 0.5 * h * k2);
        ComplexVector k4 = l * (y + h * k3);
        y += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    return devectorize(y);
}

ConvergenceResult convergeToSteady(const Superoperator& sop, const ComplexMatrix& rho0,
                                   double tol, double tMax,
                                   const IntegrationOptions& opts) {
    if (!(tol > 0.0)) throw DimensionError("convergeToSteady: tol must be positive");
    ComplexVector y = vectorize(rho0);
    double t = 0.0;
    if ((sop.matrix() * y).norm() <= tol) {
        return {devectorize(y), 0.0, true};
    }
    Dopri5 stepper(sop.matrix(), opts);
    double chunk = 1.0;
    while (t < tMax) {
        const double target = std::min(t + chunk, tMax);
        stepper.advance(y, t, target);
        if ((sop.matrix() * y).norm() <= tol) {
            return {devectorize(y), t, true};
        }
        chunk = std::min(2.0 * chunk, 64.0);
    }
    return {devectorize(y), t, false};
}

double checkConserved(const Trajectory& trajectory, const ComplexMatrix& quantity) {
    if (trajectory.states.empty()) return 0.0;
    const Complex initial = (quantity.adjoint() * trajectory.states.front()).trace();
    double maxDrift = 0.0;
    for (const auto& rho : trajectory.states) {
        const Complex value = (quantity.adjoint() * rho).trace();
        maxDrift = std::max(maxDrift, std::abs(value - initial));
    }
    return maxDrift;
}

}  // namespace qss

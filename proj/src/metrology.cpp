#include "qss/metrology.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include <Eigen/Eigenvalues>

namespace qss {

double concurrence(const ComplexMatrix& rho) {
    if (rho.rows() != 4 || rho.cols() != 4) {
        throw DimensionError("concurrence: requires a two-qubit (4x4) state");
    }
    ComplexMatrix sy(2, 2);
    sy << 0, Complex(0, -1), Complex(0, 1), 0;
    const ComplexMatrix flip = kron(sy, sy);
    const ComplexMatrix rhoTilde = flip * rho.conjugate() * flip;
    // Eigenvalues of rho * rhoTilde are the squared mu_j (real, >= 0 up to noise).
    Eigen::ComplexEigenSolver<ComplexMatrix> es(rho * rhoTilde, false);
    std::array<double, 4> mu{};
    for (int i = 0; i < 4; ++i) {
        mu[i] = std::sqrt(std::max(0.0, es.eigenvalues()(i).real()));
    }
    std::sort(mu.begin(), mu.end(), std::greater<>());
    return std::max(0.0, mu[0] - mu[1] - mu[2] - mu[3]);
}

double qfiPure(const ComplexVector& psi, const ComplexMatrix& generator) {
    if (psi.size() != generator.rows()) {
        throw DimensionError("qfiPure: state/generator dimension mismatch");
    }
    if (std::abs(psi.norm() - 1.0) > 1e-10) {
        throw NumericalError("qfiPure: state vector is not normalized");
    }
    const ComplexVector gPsi = generator * psi;
    const double mean = psi.dot(gPsi).real();
    const double meanSq = gPsi.squaredNorm();
    return std::max(0.0, 4.0 * (meanSq - mean * mean));
}

QfiResult qfiMixed(const ComplexMatrix& rho, const ComplexMatrix& generator,
                   double rankTol) {
    if (rho.rows() != generator.rows()) {
        throw DimensionError("qfiMixed: state/generator dimension mismatch");
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(0.5 * (rho + rho.adjoint()));
    std::vector<double> p;
    std::vector<Eigen::Index> idx;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
        if (es.eigenvalues()(i) > rankTol) {
            p.push_back(es.eigenvalues()(i));
            idx.push_back(i);
        }
    }
    const auto r = static_cast<Eigen::Index>(p.size());
    double value = 0.0;
    for (Eigen::Index j = 0; j < r; ++j) {
        ComplexVector psi = es.eigenvectors().col(idx[j]);
        psi /= psi.norm();
        value += p[j] * qfiPure(psi, generator);
    }
    for (Eigen::Index j = 0; j < r; ++j) {
        for (Eigen::Index k = 0; k < r; ++k) {
            if (j == k) continue;
            const Complex gjk = es.eigenvectors().col(idx[j]).dot(
                generator * es.eigenvectors().col(idx[k]));
            value -= 8.0 * p[j] * p[k] / (p[j] + p[k]) * std::norm(gjk);
        }
    }
    return {std::max(0.0, value), r};
}

double qfiDickeClosed(int n, double s, double m) {
    if (n <= 0 || n % 2 != 0) {
        throw DimensionError("qfiDickeClosed: requires even N > 0");
    }
    if (s < -1e-9 || s > 0.5 * n + 1e-9 || std::abs(m) > s + 1e-9) {
        throw DimensionError("qfiDickeClosed: invalid (S,M)");
    }
    const double ss1 = s * (s + 1.0);
    const double denom = 3.0 - 4.0 * ss1;
    const double first = (12.0 * m * m + 8.0 * ss1 * (s + s * s - m * m - 1.0)) / denom;
    const double second = (1.0 - 2.0 * ss1 + 2.0 * m * m) / denom *
                          (double(n) * n + 4.0 * n);
    return std::max(0.0, first + second);
}

double qfiBalancedMixtureClosed(int n, double s) {
    if (n <= 0 || n % 2 != 0 || s < -1e-9 || s > 0.5 * n + 1e-9) {
        throw DimensionError("qfiBalancedMixtureClosed: invalid arguments");
    }
    return (double(n) * n + 4.0 * n) / 3.0 - (4.0 / 3.0) * s * (s + 1.0);
}

double qfiProtocolClosed(int n) {
    if (n <= 0 || n % 2 != 0) {
        throw DimensionError("qfiProtocolClosed: requires even N > 0");
    }
    return (double(n) * n + 2.0 * n) / 3.0;
}

}  // namespace qss

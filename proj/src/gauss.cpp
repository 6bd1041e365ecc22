#include "hilb/gauss.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include <Eigen/Dense>

namespace hilb {

namespace {

// Golub-Welsch: nodes are the eigenvalues of the symmetric tridiagonal
// recurrence matrix, weights are mu0 times the squared first components of
// the normalized eigenvectors.
GaussRule golub_welsch(const std::vector<double>& diag, const std::vector<double>& offdiag,
                       double mu0) {
    const int n = static_cast<int>(diag.size());
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        J(i, i) = diag[static_cast<size_t>(i)];
        if (i + 1 < n) {
            J(i, i + 1) = offdiag[static_cast<size_t>(i)];
            J(i + 1, i) = offdiag[static_cast<size_t>(i)];
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
    if (es.info() != Eigen::Success) throw std::runtime_error("quadrature eigensolve failed");
    GaussRule rule;
    rule.nodes.resize(static_cast<size_t>(n));
    rule.weights.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        rule.nodes[static_cast<size_t>(i)] = es.eigenvalues()(i);
        const double v0 = es.eigenvectors()(0, i);
        rule.weights[static_cast<size_t>(i)] = mu0 * v0 * v0;
    }
    return rule;
}

std::mutex cache_mutex;

} // namespace

const GaussRule& gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: order must be >= 1");
    std::lock_guard<std::mutex> lock(cache_mutex);
    static std::map<int, GaussRule> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    std::vector<double> diag(static_cast<size_t>(n), 0.0);
    std::vector<double> off(static_cast<size_t>(n > 0 ? n - 1 : 0));
    for (int k = 1; k < n; ++k) {
        off[static_cast<size_t>(k - 1)] = k / std::sqrt(4.0 * k * k - 1.0);
    }
    return cache.emplace(n, golub_welsch(diag, off, 2.0)).first->second;
}

const GaussRule& gauss_radial(int n) {
    if (n < 1) throw std::invalid_argument("gauss_radial: order must be >= 1");
    std::lock_guard<std::mutex> lock(cache_mutex);
    static std::map<int, GaussRule> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    // monic Jacobi (alpha=0, beta=1) on [-1,1], mapped to [0,1]
    std::vector<double> diag(static_cast<size_t>(n));
    std::vector<double> off(static_cast<size_t>(n > 0 ? n - 1 : 0));
    for (int k = 0; k < n; ++k) {
        const double ak = 1.0 / ((2.0 * k + 1.0) * (2.0 * k + 3.0));
        diag[static_cast<size_t>(k)] = 0.5 * (1.0 + ak);
    }
    for (int k = 1; k < n; ++k) {
        const double bk = k * (k + 1.0) / ((2.0 * k + 1.0) * (2.0 * k + 1.0));
        off[static_cast<size_t>(k - 1)] = 0.5 * std::sqrt(bk);
    }
    return cache.emplace(n, golub_welsch(diag, off, 1.0)).first->second;
}

} // namespace hilb

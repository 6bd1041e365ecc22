#include "hilb/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hilb/gauss.hpp"
#include "hilb/special.hpp"

namespace hilb {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kTwoPi = 2.0 * kPi;

template <typename T>
T integrate_cusped_impl(const std::function<T(double)>& f, double a, double b,
                        std::vector<double> cusps, int order) {
    if (!(b > a)) throw std::invalid_argument("integrate_cusped: empty interval");
    const GaussRule& gl = gauss_legendre(order);

    auto panel = [&](double u, double v) -> T {
        const double mid = 0.5 * (u + v);
        const double half = 0.5 * (v - u);
        T acc{};
        for (size_t i = 0; i < gl.nodes.size(); ++i) {
            acc += gl.weights[i] * f(mid + half * gl.nodes[i]);
        }
        return half * acc;
    };

    const double snap = 1e-13 * (b - a);
    std::sort(cusps.begin(), cusps.end());
    cusps.erase(std::unique(cusps.begin(), cusps.end(),
                            [&](double x, double y) { return std::fabs(x - y) <= snap; }),
                cusps.end());
    const bool cusp_at_a = !cusps.empty() && std::fabs(cusps.front() - a) <= snap;
    const bool cusp_at_b = !cusps.empty() && std::fabs(cusps.back() - b) <= snap;

    std::vector<double> breaks;
    breaks.push_back(a);
    for (double c : cusps) {
        if (c > a + snap && c < b - snap) breaks.push_back(c);
    }
    breaks.push_back(b);

    T total{};
    // Exponential substitution toward the cusp: with x = dist(theta, cusp),
    // int f dx = int f(e^{-w}) e^{-w} dw.  The cusp profile c0 + c1 x^{1+s}
    // (log factors at worst) becomes a smooth superposition of decaying
    // exponentials, which two Gauss panels in w resolve to near machine
    // precision.  The truncated tail below e^{-36} is O(1e-14).
    const int cusp_order = 3 * order;
    const GaussRule& glc = gauss_legendre(cusp_order);
    auto graded = [&](double u, double v, bool toward_left) {
        const double L = v - u;
        const double w0 = -std::log(L);
        const double w1 = 30.0;
        if (!(w0 < w1 - 1.0)) {
            total += panel(u, v);
            return;
        }
        auto sub_panel = [&](double wa, double wb) {
            const double mid = 0.5 * (wa + wb);
            const double half = 0.5 * (wb - wa);
            T acc{};
            for (size_t i = 0; i < glc.nodes.size(); ++i) {
                const double w = mid + half * glc.nodes[i];
                const double x = std::exp(-w);
                const double theta = toward_left ? u + x : v - x;
                if (theta <= u || theta >= v) continue;
                acc += (glc.weights[i] * x) * f(theta);
            }
            total += half * acc;
        };
        const double w_split = std::min(w0 + 6.0, 0.5 * (w0 + w1));
        sub_panel(w0, w_split);
        sub_panel(w_split, w1);
    };

    for (size_t seg = 0; seg + 1 < breaks.size(); ++seg) {
        const double u = breaks[seg];
        const double v = breaks[seg + 1];
        const bool cl = (seg > 0) || cusp_at_a;
        const bool cr = (seg + 2 < breaks.size()) || cusp_at_b;
        if (!cl && !cr) {
            const double mid = 0.5 * (u + v);
            total += panel(u, mid);
            total += panel(mid, v);
        } else if (cl && cr) {
            const double mid = 0.5 * (u + v);
            graded(u, mid, true);
            graded(mid, v, false);
        } else if (cl) {
            graded(u, v, true);
        } else {
            graded(u, v, false);
        }
    }
    return total;
}

} // namespace

void QuadratureSpec::validate() const {
    if (angular_points < 4) throw std::invalid_argument("QuadratureSpec: angular_points < 4");
    if (radial_order < 2) throw std::invalid_argument("QuadratureSpec: radial_order < 2");
    if (!(target_tol > 0.0)) throw std::invalid_argument("QuadratureSpec: target_tol <= 0");
    if (max_refine < 0) throw std::invalid_argument("QuadratureSpec: max_refine < 0");
}

double integrate_cusped(const std::function<double(double)>& f, double a, double b,
                        std::vector<double> cusps, int order) {
    return integrate_cusped_impl<double>(f, a, b, std::move(cusps), order);
}

Complex integrate_cusped_complex(const std::function<Complex(double)>& f, double a, double b,
                                 std::vector<double> cusps, int order) {
    return integrate_cusped_impl<Complex>(f, a, b, std::move(cusps), order);
}

CValErr torus_integrate(const std::function<Complex(std::span<const Complex>)>& f, int k,
                        const QuadratureSpec& spec) {
    if (k < 1) throw std::invalid_argument("torus_integrate: k must be >= 1");
    if (k > 4) throw std::invalid_argument("torus_integrate: tensor rule capped at k <= 4");
    spec.validate();

    auto grid_sum = [&](long n) -> Complex {
        std::vector<Complex> zeta(static_cast<size_t>(k));
        std::vector<long> idx(static_cast<size_t>(k), 0);
        std::vector<Complex> roots(static_cast<size_t>(n));
        for (long i = 0; i < n; ++i) {
            const double th = kTwoPi * static_cast<double>(i) / static_cast<double>(n);
            roots[static_cast<size_t>(i)] = Complex(std::cos(th), std::sin(th));
        }
        Complex acc(0.0, 0.0);
        while (true) {
            for (int d = 0; d < k; ++d) {
                zeta[static_cast<size_t>(d)] = roots[static_cast<size_t>(idx[static_cast<size_t>(d)])];
            }
            acc += f(zeta);
            int d = 0;
            for (; d < k; ++d) {
                if (++idx[static_cast<size_t>(d)] < n) break;
                idx[static_cast<size_t>(d)] = 0;
            }
            if (d == k) break;
        }
        double total = 1.0;
        for (int d = 0; d < k; ++d) total *= static_cast<double>(n);
        return acc / total;
    };

    long n = spec.angular_points;
    if (k == 3) n = std::max<long>(16, n / 4);
    if (k == 4) n = std::max<long>(8, n / 8);
    Complex prev = grid_sum(n);
    double err = std::abs(prev);
    for (int refine = 1; refine <= spec.max_refine; ++refine) {
        const long n2 = 2 * n;
        double cost = 1.0;
        for (int d = 0; d < k; ++d) cost *= static_cast<double>(n2);
        if (cost > 7e7) break;
        const Complex cur = grid_sum(n2);
        err = std::abs(cur - prev);
        prev = cur;
        n = n2;
        if (err <= spec.target_tol) break;
    }
    return CValErr{prev, err};
}

double radial_integrate(const std::function<double(double)>& g, const QuadratureSpec& spec) {
    spec.validate();
    const GaussRule& rule = gauss_radial(spec.radial_order);
    double acc = 0.0;
    for (size_t i = 0; i < rule.nodes.size(); ++i) acc += rule.weights[i] * g(rule.nodes[i]);
    return acc;
}

double ring_integral(Complex a, Complex b, double s) {
    return circle_moment(std::abs(a), std::abs(b), s, 0);
}

CValErr disc_integrate(const std::function<Complex(Complex)>& f, const QuadratureSpec& spec,
                       const AngularCuspLocator& cusp_locator) {
    spec.validate();

    auto angular_mean = [&](double r, int n_angular, int order) -> Complex {
        std::vector<double> cusps;
        if (cusp_locator) {
            cusps = cusp_locator(r);
            for (double& c : cusps) {
                c = std::fmod(c, kTwoPi);
                if (c < 0) c += kTwoPi;
            }
        }
        if (cusps.empty()) {
            Complex acc(0.0, 0.0);
            for (int i = 0; i < n_angular; ++i) {
                const double th = kTwoPi * i / n_angular;
                acc += f(Complex(r * std::cos(th), r * std::sin(th)));
            }
            return acc / static_cast<double>(n_angular);
        }
        cusps.push_back(0.0);
        cusps.push_back(kTwoPi);
        auto g = [&](double th) { return f(Complex(r * std::cos(th), r * std::sin(th))); };
        return integrate_cusped_complex(g, 0.0, kTwoPi, cusps, order) / kTwoPi;
    };

    auto level_value = [&](int level) -> Complex {
        const int n_rad = spec.radial_order + 16 * level;
        const int n_ang = spec.angular_points << level;
        const int order = 16 + 8 * level;
        const GaussRule& rule = gauss_radial(n_rad);
        Complex acc(0.0, 0.0);
        for (size_t i = 0; i < rule.nodes.size(); ++i) {
            acc += rule.weights[i] * angular_mean(rule.nodes[i], n_ang, order);
        }
        return acc;
    };

    const Complex coarse = level_value(0);
    const Complex fine = level_value(1);
    return CValErr{fine, std::abs(fine - coarse)};
}

namespace {

bool is_even_integer(double s) {
    return s >= 0.0 && s == std::round(s) && (static_cast<long>(s) % 2 == 0);
}

// d_eff == 3 core: fix the largest modulus, eliminate the smallest through
// the ring average, integrate the middle one with cusp-aware panels
double moment_d3(double m_fix, double m_out, double m_elim, double s, int order) {
    auto f = [&](double th) {
        const double a2 = m_fix * m_fix + m_out * m_out + 2.0 * m_fix * m_out * std::cos(th);
        double aval = std::sqrt(std::max(a2, 0.0));
        if (s <= -1.0) {
            // keep rounding noise from landing exactly on the divergent ratio
            const double gap = 4e-16 * m_elim;
            if (std::fabs(aval - m_elim) < gap) {
                aval = aval >= m_elim ? m_elim + gap : m_elim - gap;
            }
        }
        return circle_moment(aval, m_elim, s, 0);
    };
    std::vector<double> cusps;
    if (!is_even_integer(s) && m_fix > 0.0 && m_out > 0.0) {
        const double u =
            (m_elim * m_elim - m_fix * m_fix - m_out * m_out) / (2.0 * m_fix * m_out);
        if (u >= -1.0 && u <= 1.0) cusps.push_back(std::acos(u));
    }
    return integrate_cusped(f, 0.0, kPi, cusps, order) / kPi;
}

} // namespace

double affine_torus_moment_value(const std::vector<double>& mods, double s,
                                 const QuadratureSpec& spec, int level) {
    spec.validate();
    std::vector<double> m;
    m.reserve(mods.size());
    for (double v : mods) {
        if (v < 0.0) throw std::invalid_argument("affine_torus_moment: negative modulus");
        if (v > 0.0) m.push_back(v);
    }
    if (m.empty()) {
        if (s > 0.0) return 0.0;
        if (s == 0.0) return 1.0;
        throw std::domain_error("affine_torus_moment: divergent (zero symbol, s < 0)");
    }
    if (s == 0.0) return 1.0;
    std::sort(m.begin(), m.end());
    const size_t d = m.size();
    if (d == 1) return std::pow(m[0], s);
    if (d == 2) return circle_moment(m[1], m[0], s, 0);

    const int order = 16 + 8 * level;
    if (d == 3) return moment_d3(m[2], m[1], m[0], s, order);

    // d >= 4: tensor rule over the outer angles; the two smallest moduli are
    // handled analytically (ring) and by the graded d == 3 core
    const int outer = static_cast<int>(d) - 3;
    long n = std::max<long>(12, spec.angular_points >> (2 + outer));
    n <<= level;
    std::vector<long> idx(static_cast<size_t>(outer), 0);
    double acc = 0.0;
    long count = 0;
    while (true) {
        Complex shift(m[d - 1], 0.0);
        for (int t = 0; t < outer; ++t) {
            const double th = kTwoPi * static_cast<double>(idx[static_cast<size_t>(t)]) /
                              static_cast<double>(n);
            shift += m[d - 2 - static_cast<size_t>(t)] * Complex(std::cos(th), std::sin(th));
        }
        acc += moment_d3(std::abs(shift), m[1], m[0], s, order);
        ++count;
        int t = 0;
        for (; t < outer; ++t) {
            if (++idx[static_cast<size_t>(t)] < n) break;
            idx[static_cast<size_t>(t)] = 0;
        }
        if (t == outer) break;
    }
    return acc / static_cast<double>(count);
}

ValErr affine_torus_moment(const std::vector<double>& mods, double s,
                           const QuadratureSpec& spec) {
    const double coarse = affine_torus_moment_value(mods, s, spec, 0);
    const double fine = affine_torus_moment_value(mods, s, spec, 1);
    return ValErr{fine, std::fabs(fine - coarse) + 1e-15 * std::fabs(fine)};
}

} // namespace hilb

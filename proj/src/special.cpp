#include "hilb/special.hpp"

#include <algorithm>
#include <cmath>
#include <array>
#include <map>
#include <stdexcept>
#include <vector>

#include "hilb/gauss.hpp"

namespace hilb {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

bool is_nonpositive_integer(double x) { return x == std::round(x) && x <= 0.0; }

} // namespace

double gauss_2f1_series(double a, double b, double c, double x, double rel_tol) {
    if (is_nonpositive_integer(c) && !(is_nonpositive_integer(a) && a > c) &&
        !(is_nonpositive_integer(b) && b > c)) {
        throw std::domain_error("gauss_2f1_series: c is a nonpositive integer");
    }
    const bool terminating = is_nonpositive_integer(a) || is_nonpositive_integer(b);
    if (std::fabs(x) >= 1.0 && !terminating) {
        throw std::domain_error("gauss_2f1_series: |x| >= 1 outside the disc of convergence");
    }
    if (x == 0.0) return 1.0;
    double term = 1.0;
    double sum = 1.0;
    int small_streak = 0;
    for (long k = 0; k < 2000000; ++k) {
        const double num = (a + k) * (b + k);
        if (num == 0.0) return sum;
        const double den = (c + k) * (k + 1.0);
        term *= num / den * x;
        sum += term;
        if (std::fabs(term) <= rel_tol * std::fabs(sum)) {
            if (++small_streak >= 2) return sum;
        } else {
            small_streak = 0;
        }
    }
    throw std::runtime_error("gauss_2f1_series: series did not converge");
}

double reciprocal_gamma(double x) {
    if (is_nonpositive_integer(x)) return 0.0;
    if (x >= 0.5) return 1.0 / std::tgamma(x);
    // reflection: 1/Gamma(x) = sin(pi x) Gamma(1-x) / pi
    return std::sin(kPi * x) * std::tgamma(1.0 - x) / kPi;
}

double binom_real(double h, int j) {
    if (j < 0) return 0.0;
    double r = 1.0;
    for (int i = 1; i <= j; ++i) r *= (h - i + 1) / i;
    return r;
}

double tanh_sinh_integrate(const std::function<double(double)>& f, double a, double b,
                           double rel_tol) {
    if (!(b > a)) throw std::invalid_argument("tanh_sinh_integrate: empty interval");
    const double half = 0.5 * (b - a);

    auto contribution = [&](double t) -> double {
        const double u = 0.5 * kPi * std::sinh(t);
        if (std::fabs(u) > 340.0) return 0.0;
        const double ch = std::cosh(u);
        const double w = half * 0.5 * kPi * std::cosh(t) / (ch * ch);
        if (w == 0.0 || !std::isfinite(w)) return 0.0;
        // distance to the near endpoint, cancellation-free:
        // half*(1 - tanh u) = half * 2 / (1 + e^{2u})
        const double delta = half * 2.0 / (1.0 + std::exp(2.0 * std::fabs(u)));
        const double xp = t >= 0.0 ? b - delta : a + delta;
        const double xm = t >= 0.0 ? a + delta : b - delta;
        double acc = 0.0;
        if (xp > a && xp < b) acc += w * f(xp);
        if (t != 0.0 && xm > a && xm < b) acc += w * f(xm);
        return acc;
    };

    const double tmax = 6.1;
    double h = 1.0;
    double node_sum = contribution(0.0);
    for (double t = h; t <= tmax; t += h) node_sum += contribution(t);
    double value = h * node_sum;
    for (int level = 1; level <= 11; ++level) {
        h *= 0.5;
        for (double t = h; t <= tmax; t += 2.0 * h) node_sum += contribution(t);
        const double refined = h * node_sum;
        const bool converged =
            level >= 3 && std::fabs(refined - value) <= rel_tol * std::fabs(refined) + 1e-300;
        value = refined;
        if (converged) break;
    }
    return value;
}

namespace {

// Composite Gauss over [lo, hi] split at the given interior breakpoints,
// with geometric panel fans toward every segment end; resolves boundary
// layers of any width at the breakpoints and endpoints.
double graded_line_integral(const std::function<double(double)>& fn, double lo, double hi,
                            std::vector<double> breaks) {
    const GaussRule& gl = gauss_legendre(24);
    auto panel = [&](double u, double v) {
        const double mid = 0.5 * (u + v), half = 0.5 * (v - u);
        double acc = 0.0;
        for (size_t i = 0; i < gl.nodes.size(); ++i) {
            acc += gl.weights[i] * fn(mid + half * gl.nodes[i]);
        }
        return half * acc;
    };
    breaks.push_back(lo);
    breaks.push_back(hi);
    std::sort(breaks.begin(), breaks.end());
    double total = 0.0;
    for (size_t seg = 0; seg + 1 < breaks.size(); ++seg) {
        const double u = breaks[seg], v = breaks[seg + 1];
        if (!(v > u)) continue;
        const double len = v - u;
        double hi_frac = 0.25; // [u + len/4, v - len/4] is the central panel
        total += panel(u + 0.25 * len, v - 0.25 * len);
        for (int j = 0; j < 44; ++j) {
            const double lo_frac = hi_frac * 0.5;
            total += panel(u + lo_frac * len, u + hi_frac * len);
            total += panel(v - hi_frac * len, v - lo_frac * len);
            if (lo_frac * len < 1e-15) break;
            hi_frac = lo_frac;
        }
    }
    return total;
}

// series  M^s rho^k sum_l C(s/2, l+k) C(s/2, l) rho^(2l)
double circle_moment_series(double big, double rho, double s, int k) {
    const double h = 0.5 * s;
    double term = binom_real(h, k) * std::pow(rho, k);
    double sum = term;
    int small_streak = 0;
    const double t = rho * rho;
    for (long l = 0; l < 2000000; ++l) {
        const double num = (h - l - k) * (h - l);
        if (num == 0.0) break;
        term *= num / ((l + k + 1.0) * (l + 1.0)) * t;
        sum += term;
        if (std::fabs(term) <= 1e-15 * std::fabs(sum)) {
            if (++small_streak >= 2) break;
        } else {
            small_streak = 0;
        }
    }
    return std::pow(big, s) * sum;
}

// direct quadrature of (1/pi) int_0^pi ((a-b)^2 + 4ab sin^2(x/2))^(s/2)
// (-1)^k cos(kx) dx, used when the modulus ratio is close to 1
double circle_moment_direct(double a, double b, double s, int k) {
    const double gap2 = (a - b) * (a - b);
    const double prod4 = 4.0 * a * b;
    auto f = [&](double x) {
        const double si = std::sin(0.5 * x);
        const double base = gap2 + prod4 * si * si;
        if (base == 0.0) return 0.0; // truncated DE tail, integrable for s > -1
        return std::pow(base, 0.5 * s) * std::cos(k * x);
    };
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    return sign / kPi * tanh_sinh_integrate(f, 0.0, kPi, 1e-13);
}

// h(rho) = F(-s/2, -s/2; 1; rho^2) on [0, 1), tabulated once per exponent as
// piecewise Chebyshev in u = -ln(1 - rho).  The substitution linearizes the
// (1-rho)^(1+s) (and log) endpoint behavior, so moderate orders reach
// ~1e-12; the hot paths (every torus moment at fixed p) then cost a
// Clenshaw evaluation instead of a slow series near the singular ratio.
class RingProfile {
public:
    explicit RingProfile(double s) : s_(s) {
        for (int piece = 0; piece < kPieces; ++piece) {
            const double lo = kWidth * piece;
            const double hi = lo + kWidth;
            std::array<double, kOrder> samples{};
            for (int j = 0; j < kOrder; ++j) {
                const double x = std::cos(kPi * (j + 0.5) / kOrder);
                const double u = 0.5 * (lo + hi) + 0.5 * (hi - lo) * x;
                const double rho = 1.0 - std::exp(-u);
                samples[static_cast<size_t>(j)] =
                    rho <= 0.995 ? circle_moment_series(1.0, rho, s, 0)
                                 : circle_moment_direct(1.0, rho, s, 0);
            }
            for (int m = 0; m < kOrder; ++m) {
                double acc = 0.0;
                for (int j = 0; j < kOrder; ++j) {
                    acc += samples[static_cast<size_t>(j)] *
                           std::cos(kPi * m * (j + 0.5) / kOrder);
                }
                coef_[static_cast<size_t>(piece)][static_cast<size_t>(m)] = 2.0 * acc / kOrder;
            }
        }
    }

    double eval(double rho) const {
        const double u = std::min(-std::log1p(-rho), kWidth * kPieces - 1e-12);
        const int piece = std::min(kPieces - 1, static_cast<int>(u / kWidth));
        const double lo = kWidth * piece;
        const double x = 2.0 * (u - lo) / kWidth - 1.0;
        const auto& c = coef_[static_cast<size_t>(piece)];
        double b1 = 0.0, b2 = 0.0;
        for (int m = kOrder - 1; m >= 1; --m) {
            const double b0 = 2.0 * x * b1 - b2 + c[static_cast<size_t>(m)];
            b2 = b1;
            b1 = b0;
        }
        return x * b1 - b2 + 0.5 * c[0];
    }

private:
    static constexpr int kPieces = 36;
    static constexpr int kOrder = 20;
    static constexpr double kWidth = 1.0;
    double s_;
    std::array<std::array<double, kOrder>, kPieces> coef_;
};

const RingProfile& ring_profile_for(double s) {
    thread_local std::map<double, RingProfile> cache;
    auto it = cache.find(s);
    if (it == cache.end()) it = cache.emplace(s, RingProfile(s)).first;
    return it->second;
}

} // namespace

double circle_moment(double a, double b, double s, int k) {
    if (a < 0.0 || b < 0.0) throw std::invalid_argument("circle_moment: moduli must be >= 0");
    if (s <= -2.0) throw std::domain_error("circle_moment: s must exceed -2");
    k = std::abs(k);
    if (a == 0.0 && b == 0.0) {
        if (s > 0.0) return 0.0;
        if (s == 0.0) return k == 0 ? 1.0 : 0.0;
        throw std::domain_error("circle_moment: divergent (a = b = 0, s < 0)");
    }
    if (s == 0.0) return k == 0 ? 1.0 : 0.0;
    if (b == 0.0) return k == 0 ? std::pow(a, s) : 0.0;
    if (a == 0.0) return k == 0 ? std::pow(b, s) : 0.0;
    const double big = std::max(a, b);
    const double rho = std::min(a, b) / big;
    const bool even_s = s > 0.0 && s == std::round(s) && static_cast<long>(s) % 2 == 0;
    if (even_s) return circle_moment_series(big, rho, s, k); // terminating, exact
    if (rho >= 1.0 && s <= -1.0) {
        throw std::domain_error("circle_moment: divergent circle average (|a| = |b|, s <= -1)");
    }
    if (k == 0 && rho < 1.0 - 1e-15) {
        return std::pow(big, s) * ring_profile_for(s).eval(rho);
    }
    if (rho <= 0.995) return circle_moment_series(big, rho, s, k);
    return circle_moment_direct(a, b, s, k);
}

double disc_shift_moment(double A, double sigma) {
    if (A < 0.0) throw std::invalid_argument("disc_shift_moment: A must be >= 0");
    if (sigma <= -2.0) throw std::domain_error("disc_shift_moment: sigma must exceed -2");
    if (sigma == 0.0) return 1.0;
    if (A == 0.0) return 2.0 / (sigma + 2.0);

    // Polar coordinates centered at the singular point w = -A: the radial
    // integral is elementary and only the boundary radius of the shifted disc
    // remains, a 1-D integral over the visible arc.
    const double s2 = sigma + 2.0;

    if (A < 1.0) {
        // origin inside: rho(phi) = A cos(phi) + sqrt(1 - A^2 sin^2(phi))
        auto fn = [&](double phi) {
            const double sn = std::sin(phi);
            const double rho = A * std::cos(phi) + std::sqrt(1.0 - A * A * sn * sn);
            return std::pow(rho, s2);
        };
        double value;
        if (A > 0.95) {
            value = graded_line_integral(fn, 0.0, kPi, {0.5 * kPi});
        } else {
            const GaussRule& gl = gauss_legendre(80);
            double acc = 0.0;
            for (size_t i = 0; i < gl.nodes.size(); ++i) {
                acc += gl.weights[i] * fn(0.5 * kPi * (gl.nodes[i] + 1.0));
            }
            value = 0.5 * kPi * acc;
        }
        return value * 2.0 / (kPi * s2);
    }

    // origin outside (A >= 1): the ray hits the disc for |phi| < asin(1/A)
    // between rho_- and rho_+; the substitution phi = phi* sin(psi) absorbs
    // the square-root turning point, and rho_- = (A^2-1)/rho_+ avoids
    // cancellation
    const double phistar = std::asin(std::min(1.0, 1.0 / A));
    auto fn = [&](double psi) {
        const double phi = phistar * std::sin(psi);
        const double sn = std::sin(phi);
        const double root = std::sqrt(std::max(0.0, 1.0 - A * A * sn * sn));
        const double base = A * std::cos(phi);
        const double rho_plus = base + root;
        const double rho_minus = rho_plus > 0.0 ? (A * A - 1.0) / rho_plus : 0.0;
        return (std::pow(rho_plus, s2) - std::pow(rho_minus, s2)) * phistar * std::cos(psi);
    };
    double value;
    if (A < 1.05) {
        value = graded_line_integral(fn, 0.0, 0.5 * kPi, {});
    } else {
        const GaussRule& gl = gauss_legendre(80);
        double acc = 0.0;
        for (size_t i = 0; i < gl.nodes.size(); ++i) {
            acc += gl.weights[i] * fn(0.25 * kPi * (gl.nodes[i] + 1.0));
        }
        value = 0.25 * kPi * acc;
    }
    return value * 2.0 / (kPi * s2);
}

} // namespace hilb

#include "hilb/khintchin.hpp"

#include <algorithm>
#include <cmath>

namespace hilb {

namespace {

bool is_even_p(double p) {
    return p >= 2.0 && p == std::round(p) && static_cast<long>(p) % 2 == 0;
}

} // namespace

KhintchinConstants khintchin_constants(double p) {
    if (p < 1.0) throw std::invalid_argument("khintchin_constants: p must be >= 1");
    const double gamma_pow = std::exp(std::lgamma(1.0 + 0.5 * p) / p);
    return KhintchinConstants{p, std::min(1.0, gamma_pow), std::max(1.0, gamma_pow)};
}

ValErr k_functional(const CoefVec& c, double p, const QuadratureSpec& spec) {
    if (p < 1.0) throw std::invalid_argument("k_functional: p must be >= 1");
    const double h2 = c.h2_norm();
    if (std::fabs(h2 - 1.0) > 1e-8) {
        throw std::invalid_argument("k_functional: coefficient vector must be H^2-normalized");
    }
    if (p == 2.0) return ValErr{1.0, 0.0};
    if (is_even_p(p) && c.all_exact()) {
        const Rational pw = hp_norm_even_pow_exact(c.to_laurent(), static_cast<unsigned>(p / 2));
        return ValErr{std::pow(pw.to_double(), 1.0 / p), 0.0};
    }
    const ValErr t = affine_torus_moment(c.moduli(), p, spec);
    const double norm = std::pow(t.value, 1.0 / p);
    return ValErr{norm, t.error / p * std::pow(t.value, 1.0 / p - 1.0)};
}

Rational equal_coeff_norm_even_pow(int d, unsigned n) {
    if (d < 1) throw std::invalid_argument("equal_coeff_norm: d must be >= 1");
    LaurentPoly f(d);
    for (int j = 0; j < d; ++j) {
        ExponentIndex a(static_cast<size_t>(d), 0);
        a[static_cast<size_t>(j)] = 1;
        f.set_coefficient(a, Coeff(Rational(1)));
    }
    const Rational pw = hp_norm_even_pow_exact(f, n); // ||sum z_j||_{2n}^{2n}
    return pw / Rational(static_cast<long long>(d)).pow(n);
}

ValErr equal_coeff_norm(int d, double p, const QuadratureSpec& spec) {
    if (d < 1) throw std::invalid_argument("equal_coeff_norm: d must be >= 1");
    if (p < 1.0) throw std::invalid_argument("equal_coeff_norm: p must be >= 1");
    if (d == 1 || p == 2.0) return ValErr{1.0, 0.0};
    if (is_even_p(p)) {
        const Rational pw = equal_coeff_norm_even_pow(d, static_cast<unsigned>(p / 2));
        return ValErr{std::pow(pw.to_double(), 1.0 / p), 0.0};
    }
    if (d > 6) {
        throw std::invalid_argument("equal_coeff_norm: d > 6 is outside the quadrature "
                                    "budget at non-even p; use an even exponent");
    }
    const std::vector<double> mods(static_cast<size_t>(d), 1.0);
    const ValErr t = affine_torus_moment(mods, p, spec);
    const double norm = std::pow(t.value, 1.0 / p) / std::sqrt(static_cast<double>(d));
    return ValErr{norm, t.error / p * std::pow(t.value, 1.0 / p - 1.0)};
}

std::vector<CltRow> clt_limit_check(double p, const std::vector<int>& d_list,
                                    const QuadratureSpec& spec) {
    if (!(p > 2.0)) {
        throw std::invalid_argument("clt_limit_check: requires p > 2 (the sharp upper "
                                    "constant regime)");
    }
    const KhintchinConstants kc = khintchin_constants(p);
    std::vector<CltRow> rows;
    rows.reserve(d_list.size());
    for (int d : d_list) {
        const ValErr n = equal_coeff_norm(d, p, spec);
        rows.push_back(CltRow{d, n.value, kc.b_p, kc.b_p - n.value});
    }
    return rows;
}

double sphere_gradient_norm(const CoefVec& c, double p, const QuadratureSpec& spec, double h) {
    const CoefVec base = c.normalized();
    const int d = base.dim();

    auto k_at = [&](std::vector<Complex> v) {
        double norm2 = 0.0;
        for (const Complex& z : v) norm2 += std::norm(z);
        const double inv = 1.0 / std::sqrt(norm2);
        for (Complex& z : v) z *= inv;
        return k_functional(CoefVec::from_complex(v), p, spec).value;
    };

    std::vector<Complex> center(static_cast<size_t>(d));
    for (int j = 0; j < d; ++j) center[static_cast<size_t>(j)] = base[j].value();

    // coordinate frame of the real geometry of C^d (real and imaginary unit
    // moves), each projected off the radial direction; directional
    // derivatives all vanish iff the sphere gradient does
    double acc = 0.0;
    for (int j = 0; j < d; ++j) {
        for (int part = 0; part < 2; ++part) {
            std::vector<Complex> dir(static_cast<size_t>(d), Complex(0.0, 0.0));
            dir[static_cast<size_t>(j)] =
                part == 0 ? Complex(1.0, 0.0) : Complex(0.0, 1.0);
            double radial = 0.0; // Re <dir, center>
            for (int k = 0; k < d; ++k) {
                radial += (dir[static_cast<size_t>(k)] *
                           std::conj(center[static_cast<size_t>(k)]))
                              .real();
            }
            double tnorm2 = 0.0;
            for (int k = 0; k < d; ++k) {
                dir[static_cast<size_t>(k)] -= radial * center[static_cast<size_t>(k)];
                tnorm2 += std::norm(dir[static_cast<size_t>(k)]);
            }
            if (tnorm2 < 1e-20) continue;
            const double tnorm = std::sqrt(tnorm2);
            std::vector<Complex> plus = center;
            std::vector<Complex> minus = center;
            for (int k = 0; k < d; ++k) {
                const Complex step = dir[static_cast<size_t>(k)] * (h / tnorm);
                plus[static_cast<size_t>(k)] += step;
                minus[static_cast<size_t>(k)] -= step;
            }
            const double g = (k_at(plus) - k_at(minus)) / (2.0 * h);
            acc += g * g;
        }
    }
    return std::sqrt(acc);
}

} // namespace hilb

#include "hilb/fourier_tables.hpp"

#include <array>
#include <cmath>
#include <set>

#include "hilb/special.hpp"

namespace hilb {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

bool is_even_integer(double s) {
    return s >= 0.0 && s == std::round(s) && static_cast<long>(s) % 2 == 0;
}

void check_alpha_sum(const ExponentIndex& alpha, int d) {
    if (static_cast<int>(alpha.size()) != d) {
        throw std::invalid_argument("coefficient index has wrong length");
    }
    int sum = 0;
    for (int e : alpha) sum += e;
    if (sum != 1) {
        throw std::invalid_argument("coefficient indices must have entries summing to 1");
    }
}

} // namespace

double CoeffTable::at(const ExponentIndex& alpha) const {
    check_alpha_sum(alpha, d);
    if (exact) {
        auto it = exact_entries.find(alpha);
        return it == exact_entries.end() ? 0.0 : it->second.to_double();
    }
    auto it = entries.find(alpha);
    return it == entries.end() ? 0.0 : it->second;
}

double c2_closed(double p, int alpha1) {
    if (p < 1.0) throw std::invalid_argument("c2_closed: p must be >= 1");
    const int alpha2 = 1 - alpha1;
    return std::tgamma(p) * reciprocal_gamma(0.5 * p + alpha1) *
           reciprocal_gamma(0.5 * p + alpha2);
}

double c2_recursion_defect(double p, int alpha1_lo, int alpha1_hi) {
    double worst = 0.0;
    for (int a1 = alpha1_lo; a1 <= alpha1_hi; ++a1) {
        const double lhs = c2_closed(p + 2.0, a1);
        const double rhs = 2.0 * c2_closed(p, a1) + c2_closed(p, a1 - 1) + c2_closed(p, a1 + 1);
        worst = std::max(worst, std::fabs(lhs - rhs));
    }
    return worst;
}

CoeffTable c3_even(unsigned n) {
    if (n < 1) throw std::invalid_argument("c3_even: n must be >= 1");
    if (3 * n > 64) throw std::invalid_argument("c3_even: n exceeds the enumeration cap");
    LaurentPoly psi(3);
    for (int j = 0; j < 3; ++j) {
        ExponentIndex a(3, 0);
        a[static_cast<size_t>(j)] = 1;
        psi.set_coefficient(a, Coeff(Rational(1)));
    }
    const LaurentPoly prod = lp_mul(lp_pow(psi, n), lp_pow(lp_conj(psi), n - 1));

    CoeffTable table;
    table.d = 3;
    table.p = 2.0 * n;
    table.exact = true;
    for (const auto& [alpha, c] : prod.terms()) {
        table.exact_entries.emplace(alpha, c.re_exact());
        table.entries.emplace(alpha, c.value().real());
    }
    return table;
}

CoeffTable c3_recursion_step(const CoeffTable& table) {
    if (!table.exact) throw std::invalid_argument("c3_recursion_step: exact table required");
    static const std::array<std::array<int, 3>, 6> offsets = {{{+1, -1, 0},
                                                               {+1, 0, -1},
                                                               {-1, +1, 0},
                                                               {0, +1, -1},
                                                               {-1, 0, +1},
                                                               {0, -1, +1}}};
    auto lookup = [&](const ExponentIndex& a) {
        auto it = table.exact_entries.find(a);
        return it == table.exact_entries.end() ? Rational(0) : it->second;
    };

    std::set<ExponentIndex> candidates;
    for (const auto& [alpha, v] : table.exact_entries) {
        candidates.insert(alpha);
        for (const auto& off : offsets) {
            ExponentIndex shifted = alpha;
            for (int k = 0; k < 3; ++k) shifted[static_cast<size_t>(k)] -= off[static_cast<size_t>(k)];
            candidates.insert(shifted);
        }
    }

    CoeffTable out;
    out.d = 3;
    out.p = table.p + 2.0;
    out.exact = true;
    for (const ExponentIndex& alpha : candidates) {
        Rational v = Rational(3) * lookup(alpha);
        for (const auto& off : offsets) {
            ExponentIndex neighbor = alpha;
            for (int k = 0; k < 3; ++k) neighbor[static_cast<size_t>(k)] += off[static_cast<size_t>(k)];
            v += lookup(neighbor);
        }
        if (!v.is_zero()) {
            out.exact_entries.emplace(alpha, v);
            out.entries.emplace(alpha, v.to_double());
        }
    }
    return out;
}

ValErr c3_quadrature(double p, const ExponentIndex& alpha, const QuadratureSpec& spec) {
    if (p < 1.0) throw std::invalid_argument("c3_quadrature: p must be >= 1");
    check_alpha_sum(alpha, 3);
    spec.validate();
    const double s = p - 2.0;
    const int a_inner = alpha[0];
    const int a_outer = alpha[1];

    // fix zeta_3 by diagonal-rotation invariance, integrate zeta_1
    // analytically through circle moments; the remaining angle carries the
    // phase factor exp(i(1 - a1) theta/2 - i a2 theta)
    auto value_at = [&](int level) -> Complex {
        auto f = [&](double th) -> Complex {
            const double rho = 2.0 * std::cos(0.5 * th);
            const double g = rho * circle_moment(std::fabs(rho), 1.0, s, a_inner) +
                             circle_moment(std::fabs(rho), 1.0, s, a_inner - 1);
            const double phase = 0.5 * (1.0 - a_inner) * th - a_outer * th;
            return Complex(std::cos(phase), std::sin(phase)) * g;
        };
        std::vector<double> cusps;
        if (!is_even_integer(s)) {
            cusps = {-2.0 * kPi / 3.0, 2.0 * kPi / 3.0};
        }
        const int order = 16 + 8 * level;
        return integrate_cusped_complex(f, -kPi, kPi, cusps, order) / (2.0 * kPi);
    };

    const Complex coarse = value_at(0);
    const Complex fine = value_at(1);
    const double err = std::abs(fine - coarse) + std::fabs(fine.imag()) + 1e-15;
    return ValErr{fine.real(), err};
}

} // namespace hilb

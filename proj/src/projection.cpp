#include "hilb/projection.hpp"

#include <algorithm>
#include <cmath>

#include "hilb/gauss.hpp"

namespace hilb {

CoefVec::CoefVec(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("CoefVec: dimension must be >= 1");
}

CoefVec CoefVec::from_complex(const std::vector<Complex>& values) {
    std::vector<Coeff> cs;
    cs.reserve(values.size());
    for (Complex v : values) cs.emplace_back(v);
    return CoefVec(std::move(cs));
}

CoefVec CoefVec::from_reals(const std::vector<double>& values) {
    std::vector<Coeff> cs;
    cs.reserve(values.size());
    for (double v : values) cs.emplace_back(Complex(v, 0.0));
    return CoefVec(std::move(cs));
}

bool CoefVec::nontrivial() const {
    return std::any_of(coeffs_.begin(), coeffs_.end(),
                       [](const Coeff& c) { return !c.is_zero(); });
}

bool CoefVec::all_exact() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Coeff& c) { return c.exact(); });
}

std::vector<double> CoefVec::moduli() const {
    std::vector<double> m;
    m.reserve(coeffs_.size());
    for (const Coeff& c : coeffs_) m.push_back(c.is_zero() ? 0.0 : c.abs());
    return m;
}

double CoefVec::h2_norm() const {
    double acc = 0.0;
    for (const Coeff& c : coeffs_) acc += c.abs2();
    return std::sqrt(acc);
}

CoefVec CoefVec::normalized() const {
    const double n = h2_norm();
    if (n == 0.0) throw std::invalid_argument("CoefVec: cannot normalize the zero vector");
    std::vector<Coeff> cs;
    cs.reserve(coeffs_.size());
    for (const Coeff& c : coeffs_) {
        cs.push_back(c.is_zero() ? Coeff() : Coeff(c.value() / n));
    }
    return CoefVec(std::move(cs));
}

LaurentPoly CoefVec::to_laurent() const {
    LaurentPoly f(dim());
    for (int j = 0; j < dim(); ++j) {
        if (coeffs_[static_cast<size_t>(j)].is_zero()) continue;
        ExponentIndex a(static_cast<size_t>(dim()), 0);
        a[static_cast<size_t>(j)] = 1;
        f.set_coefficient(a, coeffs_[static_cast<size_t>(j)]);
    }
    return f;
}

namespace {

// radii where the scaled modulus multiset hits a triangle-degeneracy
// boundary; the radial integrand is smooth between them
std::vector<double> radial_breakpoints(const std::vector<double>& mods, int j) {
    const double mj = mods[static_cast<size_t>(j)];
    std::vector<double> breaks;
    if (mj == 0.0) return breaks;
    double sum_others = 0.0;
    for (size_t k = 0; k < mods.size(); ++k) {
        if (static_cast<int>(k) != j) sum_others += mods[k];
    }
    auto push = [&](double r) {
        if (r > 1e-12 && r < 1.0 - 1e-12) breaks.push_back(r);
    };
    push(sum_others / mj);
    for (size_t k = 0; k < mods.size(); ++k) {
        if (static_cast<int>(k) == j || mods[k] == 0.0) continue;
        push((2.0 * mods[k] - sum_others) / mj);
    }
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end(),
                             [](double a, double b) { return std::fabs(a - b) < 1e-12; }),
                 breaks.end());
    return breaks;
}

double ij_value(const std::vector<double>& mods, double p, int j, const QuadratureSpec& spec,
                int level) {
    const double s = p - 2.0;
    const double mj = mods[static_cast<size_t>(j)];

    int nonzero_others = 0;
    for (size_t k = 0; k < mods.size(); ++k) {
        if (static_cast<int>(k) != j && mods[k] > 0.0) ++nonzero_others;
    }

    if (s == 0.0) return 1.0;
    if (mj == 0.0) {
        // scaling a zero coordinate does nothing: the integrand is constant in r
        return affine_torus_moment_value(mods, s, spec, level);
    }
    if (nonzero_others == 0) {
        // lone coordinate: I_j = m_j^s int_0^1 r^s 2r dr = m_j^s 2/(s+2)
        return std::pow(mj, s) * 2.0 / (s + 2.0);
    }

    std::vector<double> scaled = mods;
    auto T = [&](double r) {
        scaled[static_cast<size_t>(j)] = r * mj;
        return affine_torus_moment_value(scaled, s, spec, level);
    };

    const std::vector<double> breaks = radial_breakpoints(mods, j);
    const int base_order = spec.radial_order + 16 * level;
    if (breaks.empty()) {
        const GaussRule& rule = gauss_radial(base_order);
        double acc = 0.0;
        for (size_t i = 0; i < rule.nodes.size(); ++i) acc += rule.weights[i] * T(rule.nodes[i]);
        return acc;
    }

    double acc = 0.0;
    double lo = 0.0;
    for (size_t piece = 0; piece <= breaks.size(); ++piece) {
        const double hi = piece < breaks.size() ? breaks[piece] : 1.0;
        const int order = std::max(16, static_cast<int>(std::ceil(base_order * (hi - lo))));
        const GaussRule& gl = gauss_legendre(order);
        const double mid = 0.5 * (lo + hi);
        const double half = 0.5 * (hi - lo);
        for (size_t i = 0; i < gl.nodes.size(); ++i) {
            const double r = mid + half * gl.nodes[i];
            acc += half * gl.weights[i] * T(r) * 2.0 * r;
        }
        lo = hi;
    }
    return acc;
}

} // namespace

ValErr ij_integral(const CoefVec& c, double p, int j, const QuadratureSpec& spec,
                   bool with_error) {
    if (p < 1.0) throw std::invalid_argument("ij_integral: p must be >= 1");
    if (!c.nontrivial()) throw std::invalid_argument("ij_integral: trivial coefficient vector");
    if (j < 0 || j >= c.dim()) throw std::invalid_argument("ij_integral: index out of range");
    spec.validate();
    const std::vector<double> mods = c.moduli();
    const double coarse = ij_value(mods, p, j, spec, 0);
    if (!with_error) return ValErr{coarse, 0.0};
    if (p == 2.0) return ValErr{coarse, 0.0};
    const double fine = ij_value(mods, p, j, spec, 1);
    return ValErr{fine, std::fabs(fine - coarse) + 1e-15 * std::fabs(fine)};
}

IjValues ij_all(const CoefVec& c, double p, const QuadratureSpec& spec, bool with_errors) {
    IjValues out;
    out.p = p;
    out.values.resize(static_cast<size_t>(c.dim()));
    out.error_estimates.resize(static_cast<size_t>(c.dim()));
    for (int j = 0; j < c.dim(); ++j) {
        const ValErr v = ij_integral(c, p, j, spec, with_errors);
        out.values[static_cast<size_t>(j)] = v.value;
        out.error_estimates[static_cast<size_t>(j)] = v.error;
    }
    return out;
}

CoefVec project_linear(const CoefVec& c, double p, const QuadratureSpec& spec,
                       IjValues* ij_out) {
    const IjValues ij = ij_all(c, p, spec, ij_out != nullptr);
    if (ij_out) *ij_out = ij;
    // phases are factored out before integration and restored here, so
    // arg(c_j) is preserved exactly and zero coordinates stay exact zeros
    std::vector<Coeff> out;
    out.reserve(static_cast<size_t>(c.dim()));
    for (int j = 0; j < c.dim(); ++j) {
        const Coeff& cj = c[j];
        if (cj.is_zero()) {
            out.emplace_back();
            continue;
        }
        const double scale = 0.5 * p * ij.values[static_cast<size_t>(j)];
        out.emplace_back(Coeff(cj.value() * scale));
    }
    return CoefVec(std::move(out));
}

bool is_one_homogeneous(const LaurentPoly& f) {
    if (!f.analytic() || f.is_zero()) return false;
    for (const auto& [alpha, c] : f.terms()) {
        int sum = 0;
        for (int e : alpha) sum += e;
        if (sum != 1) return false;
    }
    return true;
}

CoefVec coefvec_from_poly(const LaurentPoly& f) {
    if (!is_one_homogeneous(f)) {
        throw std::invalid_argument("coefvec_from_poly: not a 1-homogeneous polynomial");
    }
    std::vector<Coeff> cs(static_cast<size_t>(f.dim()));
    for (const auto& [alpha, c] : f.terms()) {
        for (size_t k = 0; k < alpha.size(); ++k) {
            if (alpha[k] == 1) cs[k] = c;
        }
    }
    return CoefVec(std::move(cs));
}

void for_each_multi_index(int d, unsigned n,
                          const std::function<void(const std::vector<unsigned>&)>& visit) {
    std::vector<unsigned> alpha(static_cast<size_t>(d), 0);
    std::function<void(int, unsigned)> rec = [&](int pos, unsigned left) {
        if (pos == d - 1) {
            alpha[static_cast<size_t>(pos)] = left;
            visit(alpha);
            return;
        }
        for (unsigned v = 0; v <= left; ++v) {
            alpha[static_cast<size_t>(pos)] = v;
            rec(pos + 1, left - v);
        }
    };
    if (d >= 1) rec(0, n);
}

long long multinomial(unsigned n, const std::vector<unsigned>& alpha) {
    __int128 acc = 1;
    unsigned used = 0;
    for (unsigned a : alpha) {
        for (unsigned i = 1; i <= a; ++i) {
            ++used;
            acc = acc * used / i; // binomial product stays integral
            if (acc > (__int128)INT64_MAX) {
                throw std::overflow_error("multinomial overflow");
            }
        }
    }
    if (used != n) throw std::invalid_argument("multinomial: |alpha| != n");
    return static_cast<long long>(acc);
}

CoefVec project_linear_even(const CoefVec& c, unsigned n) {
    const int d = c.dim();
    if (n * static_cast<unsigned>(d) > kMultinomialCap) {
        throw std::invalid_argument("project_linear_even: n*d exceeds the enumeration cap; "
                                    "use the quadrature route");
    }
    if (n == 0) return c;

    if (c.all_exact()) {
        std::vector<Rational> q;
        q.reserve(static_cast<size_t>(d));
        for (int j = 0; j < d; ++j) q.push_back(c[j].abs2_exact());
        std::vector<Rational> sums(static_cast<size_t>(d), Rational(0));
        for_each_multi_index(d, n, [&](const std::vector<unsigned>& alpha) {
            const long long m = multinomial(n, alpha);
            Rational weight = Rational(m) * Rational(m);
            for (int k = 0; k < d; ++k) {
                weight *= q[static_cast<size_t>(k)].pow(alpha[static_cast<size_t>(k)]);
            }
            if (weight.is_zero()) return;
            for (int j = 0; j < d; ++j) {
                sums[static_cast<size_t>(j)] +=
                    weight / Rational(static_cast<long long>(alpha[static_cast<size_t>(j)]) + 1);
            }
        });
        std::vector<Coeff> out;
        out.reserve(static_cast<size_t>(d));
        for (int j = 0; j < d; ++j) {
            const Rational factor = sums[static_cast<size_t>(j)] * Rational(n + 1);
            out.push_back(c[j] * Coeff(factor));
        }
        return CoefVec(std::move(out));
    }

    std::vector<double> q;
    q.reserve(static_cast<size_t>(d));
    for (int j = 0; j < d; ++j) q.push_back(c[j].abs2());
    std::vector<double> sums(static_cast<size_t>(d), 0.0);
    for_each_multi_index(d, n, [&](const std::vector<unsigned>& alpha) {
        const double m = static_cast<double>(multinomial(n, alpha));
        double weight = m * m;
        for (int k = 0; k < d; ++k) {
            weight *= std::pow(q[static_cast<size_t>(k)],
                               static_cast<int>(alpha[static_cast<size_t>(k)]));
        }
        if (weight == 0.0) return;
        for (int j = 0; j < d; ++j) {
            sums[static_cast<size_t>(j)] += weight / (alpha[static_cast<size_t>(j)] + 1.0);
        }
    });
    std::vector<Coeff> out;
    out.reserve(static_cast<size_t>(d));
    for (int j = 0; j < d; ++j) {
        if (c[j].is_zero()) {
            out.emplace_back();
        } else {
            out.emplace_back(Coeff(c[j].value() * ((n + 1.0) * sums[static_cast<size_t>(j)])));
        }
    }
    return CoefVec(std::move(out));
}

CoefVec normalized_op(const CoefVec& c, double p, const QuadratureSpec& spec) {
    if (!c.nontrivial()) throw std::invalid_argument("normalized_op: trivial input");
    const CoefVec projected = project_linear(c, p, spec);
    return projected.normalized();
}

} // namespace hilb

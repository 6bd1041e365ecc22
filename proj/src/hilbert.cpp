#include "hilb/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hilb {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::HilbertPoint: return "hilbert-point";
        case Verdict::NotHilbertPoint: return "not-hilbert-point";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

std::string to_string(CheckMethod m) {
    switch (m) {
        case CheckMethod::EvenExact: return "even-exact";
        case CheckMethod::Quadrature: return "quadrature";
        case CheckMethod::InfinityClosedForm: return "infinity-closed-form";
    }
    return "quadrature";
}

namespace {

bool is_even_p(double p) {
    return p >= 2.0 && p == std::round(p) && static_cast<long>(p) % 2 == 0;
}

bool poly_equal_exact(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.dim() != b.dim() || a.term_count() != b.term_count()) return false;
    auto ia = a.terms().begin();
    auto ib = b.terms().begin();
    for (; ia != a.terms().end(); ++ia, ++ib) {
        if (ia->first != ib->first || !(ia->second == ib->second)) return false;
    }
    return true;
}

double poly_distance_h2(const LaurentPoly& a, const LaurentPoly& b) {
    double acc = 0.0;
    for (const auto& [alpha, c] : a.terms()) {
        acc += std::norm(c.value() - b.coefficient(alpha).value());
    }
    for (const auto& [alpha, c] : b.terms()) {
        if (a.terms().find(alpha) == a.terms().end()) acc += c.abs2();
    }
    return std::sqrt(acc);
}

Verdict banded_verdict(double residual, double error_scale) {
    if (residual < error_scale) return Verdict::HilbertPoint;
    if (residual <= 10.0 * error_scale) return Verdict::Inconclusive;
    return Verdict::NotHilbertPoint;
}

} // namespace

ValErr lambda_expected(const CoefVec& c, double p, const QuadratureSpec& spec) {
    if (!c.nontrivial()) throw std::invalid_argument("lambda_expected: trivial input");
    if (p == 2.0) return ValErr{1.0, 0.0};
    double h2 = 0.0;
    for (const Coeff& z : c.coeffs()) h2 += z.abs2();
    if (is_even_p(p) && c.all_exact()) {
        const LaurentPoly f = c.to_laurent();
        const Rational num = hp_norm_even_pow_exact(f, static_cast<unsigned>(p / 2));
        const Rational den = h2_norm_sq_exact(f);
        return ValErr{(num / den).to_double(), 0.0};
    }
    const ValErr t = affine_torus_moment(c.moduli(), p, spec);
    return ValErr{t.value / h2, t.error / h2};
}

ValErr lambda_expected(const LaurentPoly& f, double p, const QuadratureSpec& spec) {
    (void)spec;
    if (f.is_zero()) throw std::invalid_argument("lambda_expected: trivial input");
    if (f.term_count() == 1) {
        const double mod = f.terms().begin()->second.abs();
        return ValErr{std::pow(mod, p - 2.0), 0.0};
    }
    if (is_one_homogeneous(f)) return lambda_expected(coefvec_from_poly(f), p, spec);
    if (!is_even_p(p) || !f.all_exact() || !f.analytic()) {
        throw std::invalid_argument(
            "lambda_expected: general polynomials are supported only at even p with "
            "exact coefficients");
    }
    const Rational num = hp_norm_even_pow_exact(f, static_cast<unsigned>(p / 2));
    const Rational den = h2_norm_sq_exact(f);
    return ValErr{(num / den).to_double(), 0.0};
}

HilbertReport residual_linear(const CoefVec& c, double p, const QuadratureSpec& spec) {
    if (p < 1.0 || !std::isfinite(p)) {
        throw std::invalid_argument("residual_linear: p must lie in [1, infinity)");
    }
    if (!c.nontrivial()) throw std::invalid_argument("residual_linear: trivial input");

    HilbertReport rep;
    rep.p = p;
    rep.method = CheckMethod::Quadrature;

    IjValues ij;
    const CoefVec image = project_linear(c, p, spec, &ij);
    const ValErr lam = lambda_expected(c, p, spec);
    rep.lambda_expected = lam.value;

    double num2 = 0.0;
    double err_num2 = 0.0;
    double h2 = 0.0;
    const std::vector<double> mods = c.moduli();
    for (int j = 0; j < c.dim(); ++j) {
        num2 += std::norm(image[j].value() - lam.value * c[j].value());
        const double term = 0.5 * p * mods[static_cast<size_t>(j)] *
                            ij.error_estimates[static_cast<size_t>(j)];
        err_num2 += term * term;
        h2 += c[j].abs2();
    }
    const double denom = lam.value * std::sqrt(h2);
    rep.residual = std::sqrt(num2) / denom;
    rep.error_scale =
        (std::sqrt(err_num2) + lam.error * std::sqrt(h2)) / denom + 5e-15;
    rep.verdict = banded_verdict(rep.residual, rep.error_scale);
    return rep;
}

HilbertReport residual_even_poly(const LaurentPoly& f, unsigned n) {
    if (f.is_zero()) throw std::invalid_argument("residual_even_poly: trivial input");
    if (!f.analytic()) throw std::invalid_argument("residual_even_poly: analytic support required");
    if (!f.all_exact()) {
        throw std::invalid_argument("residual_even_poly: exact coefficients required");
    }
    if (f.term_count() > 5000) {
        throw std::invalid_argument("residual_even_poly: term count exceeds the cap");
    }

    HilbertReport rep;
    rep.p = 2.0 * (n + 1);
    rep.method = CheckMethod::EvenExact;
    rep.error_scale = 0.0;

    const Rational h2 = h2_norm_sq_exact(f);
    Rational lambda(1);
    LaurentPoly image = f;
    if (n >= 1) {
        lambda = hp_norm_even_pow_exact(f, n + 1) / h2;
        image = nonlinear_image_even(f, n);
    }
    rep.lambda_expected = lambda.to_double();

    const LaurentPoly scaled = lp_scale(f, Coeff(lambda));
    if (poly_equal_exact(image, scaled)) {
        rep.residual = 0.0;
        rep.verdict = Verdict::HilbertPoint;
    } else {
        rep.residual = poly_distance_h2(image, scaled) /
                       (lambda.to_double() * std::sqrt(h2.to_double()));
        rep.verdict = Verdict::NotHilbertPoint;
    }
    return rep;
}

HilbertReport hilbert_infinity_linear(const CoefVec& c) {
    if (!c.nontrivial()) throw std::invalid_argument("hilbert_infinity_linear: trivial input");

    HilbertReport rep;
    rep.p = std::numeric_limits<double>::infinity();
    rep.method = CheckMethod::InfinityClosedForm;
    rep.note = "criterion (max|c_j|) sum|c_j| = sum|c_j|^2 via H^infinity and dual norms";

    const std::vector<double> m = c.moduli();
    const double mx = *std::max_element(m.begin(), m.end());
    double s1 = 0.0;
    double s2 = 0.0;
    for (double v : m) {
        s1 += v;
        s2 += v * v;
    }
    rep.residual = std::fabs(mx * s1 - s2) / s2;
    rep.error_scale = 1e-12;

    if (c.all_exact()) {
        // exact route: the criterion holds iff all nonzero |c_j|^2 agree
        bool have = false;
        Rational ref(0);
        bool equal = true;
        for (const Coeff& z : c.coeffs()) {
            if (z.is_zero()) continue;
            const Rational a2 = z.abs2_exact();
            if (!have) {
                ref = a2;
                have = true;
            } else if (!(a2 == ref)) {
                equal = false;
            }
        }
        rep.verdict = equal ? Verdict::HilbertPoint : Verdict::NotHilbertPoint;
        if (equal) rep.residual = 0.0;
        return rep;
    }
    rep.verdict = rep.residual <= 1e-12 ? Verdict::HilbertPoint : Verdict::NotHilbertPoint;
    return rep;
}

HilbertReport check_poly(const LaurentPoly& f, double p, bool p_inf, bool prefer_exact,
                         const QuadratureSpec& spec) {
    if (f.is_zero()) throw std::invalid_argument("check_poly: trivial input");
    if (!f.analytic()) {
        throw std::invalid_argument("check_poly: Hardy-space membership requires analytic "
                                    "(nonnegative) frequencies");
    }

    const bool monomial = f.term_count() == 1;
    const bool one_homog = is_one_homogeneous(f);

    if (p_inf) {
        if (one_homog) return hilbert_infinity_linear(coefvec_from_poly(f));
        if (monomial) {
            HilbertReport rep;
            rep.p = std::numeric_limits<double>::infinity();
            rep.method = CheckMethod::InfinityClosedForm;
            rep.verdict = Verdict::HilbertPoint;
            rep.residual = 0.0;
            rep.note = "constant multiple of an inner monomial";
            return rep;
        }
        HilbertReport rep;
        rep.p = std::numeric_limits<double>::infinity();
        rep.verdict = Verdict::Inconclusive;
        rep.method = CheckMethod::InfinityClosedForm;
        rep.note = "p = infinity is decided in closed form only for 1-homogeneous "
                   "polynomials";
        return rep;
    }

    if (p < 1.0) throw std::invalid_argument("check_poly: p must be >= 1");

    if (one_homog) {
        const CoefVec c = coefvec_from_poly(f);
        if (prefer_exact && is_even_p(p) && f.all_exact()) {
            return residual_even_poly(f, static_cast<unsigned>((p - 2.0) / 2.0));
        }
        return residual_linear(c, p, spec);
    }

    if (monomial && !is_even_p(p)) {
        // inner up to a constant: |phi| is constant on the torus, so the
        // nonlinear image is lambda phi with lambda = |C|^(p-2); confirm the
        // single candidate Fourier coefficient by quadrature when feasible
        const auto& [alpha, coeff] = *f.terms().begin();
        const double lambda = std::pow(coeff.abs(), p - 2.0);
        HilbertReport rep;
        rep.p = p;
        rep.method = CheckMethod::Quadrature;
        rep.lambda_expected = lambda;
        if (f.dim() <= 4) {
            auto integrand = [&](std::span<const Complex> zeta) -> Complex {
                Complex mono(1.0, 0.0);
                for (size_t k = 0; k < zeta.size(); ++k) {
                    for (int e = 0; e < alpha[k]; ++e) mono *= zeta[k];
                }
                const Complex val = coeff.value() * mono;
                return std::pow(std::abs(val), p - 2.0) * val * std::conj(mono);
            };
            const CValErr got = torus_integrate(integrand, f.dim(), spec);
            rep.residual = std::abs(got.value - lambda * coeff.value()) /
                           (lambda * coeff.abs());
            rep.error_scale = got.error / (lambda * coeff.abs()) + 5e-15;
        } else {
            rep.residual = 0.0;
            rep.error_scale = 5e-15;
            rep.note = "modulus is constant on the torus; closed-form evaluation";
        }
        rep.verdict = banded_verdict(rep.residual, rep.error_scale);
        return rep;
    }

    if (is_even_p(p)) {
        if (!f.all_exact()) {
            HilbertReport rep;
            rep.p = p;
            rep.verdict = Verdict::Inconclusive;
            rep.method = CheckMethod::EvenExact;
            rep.note = "even-p decision requires exact coefficients";
            return rep;
        }
        return residual_even_poly(f, static_cast<unsigned>((p - 2.0) / 2.0));
    }

    HilbertReport rep;
    rep.p = p;
    rep.verdict = Verdict::Inconclusive;
    rep.method = CheckMethod::Quadrature;
    rep.note = "no decision procedure for general polynomials at non-even p";
    return rep;
}

} // namespace hilb

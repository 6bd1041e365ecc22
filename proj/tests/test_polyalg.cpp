#include <doctest.h>

#include "hilb/polyalg.hpp"
#include "hilb/rng.hpp"

using namespace hilb;

namespace {

LaurentPoly from_terms(int dim,
                       const std::vector<std::pair<ExponentIndex, Coeff>>& terms) {
    LaurentPoly f(dim);
    for (const auto& [a, c] : terms) f.add_term(a, c);
    return f;
}

bool same_exact(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.dim() != b.dim() || a.term_count() != b.term_count()) return false;
    for (const auto& [alpha, c] : a.terms()) {
        if (!(b.coefficient(alpha) == c)) return false;
    }
    return true;
}

LaurentPoly random_exact_poly(Rng& rng, int dim, int max_terms) {
    LaurentPoly f(dim);
    const int terms = 1 + static_cast<int>(rng.next_u64() % static_cast<unsigned>(max_terms));
    for (int t = 0; t < terms; ++t) {
        ExponentIndex a(static_cast<size_t>(dim));
        for (int k = 0; k < dim; ++k) {
            a[static_cast<size_t>(k)] = static_cast<int>(rng.next_u64() % 5) - 2;
        }
        const long long num = static_cast<long long>(rng.next_u64() % 9) - 4;
        const long long den = 1 + static_cast<long long>(rng.next_u64() % 4);
        f.add_term(a, Coeff(Rational(num, den), Rational(0)));
    }
    return f;
}

} // namespace

TEST_CASE("lp_mul matches direct expansions") {
    // (z1 + z2)(1/z1 + 1/z2) = 2 + z1/z2 + z2/z1
    const LaurentPoly f = from_terms(2, {{{1, 0}, Coeff(1)}, {{0, 1}, Coeff(1)}});
    const LaurentPoly g = from_terms(2, {{{-1, 0}, Coeff(1)}, {{0, -1}, Coeff(1)}});
    const LaurentPoly prod = lp_mul(f, g);
    CHECK(prod.term_count() == 3);
    CHECK(prod.coefficient({0, 0}) == Coeff(2));
    CHECK(prod.coefficient({1, -1}) == Coeff(1));
    CHECK(prod.coefficient({-1, 1}) == Coeff(1));

    const LaurentPoly one = LaurentPoly::monomial(2, {0, 0}, Coeff(1));
    CHECK(same_exact(lp_mul(f, one), f));

    const LaurentPoly sq = lp_mul(f, f);
    CHECK(sq.coefficient({2, 0}) == Coeff(1));
    CHECK(sq.coefficient({1, 1}) == Coeff(2));
    CHECK(sq.coefficient({0, 2}) == Coeff(1));

    CHECK_THROWS_AS(lp_mul(f, LaurentPoly::monomial(3, {0, 0, 0}, Coeff(1))),
                    std::invalid_argument);
}

TEST_CASE("lp_conj negates exponents and conjugates") {
    const LaurentPoly f = LaurentPoly::monomial(1, {1}, Coeff(Rational(0), Rational(1)));
    const LaurentPoly fc = lp_conj(f);
    CHECK(fc.coefficient({-1}) == Coeff(Rational(0), Rational(-1)));

    const LaurentPoly g = from_terms(2, {{{1, 0}, Coeff(1)}, {{0, 1}, Coeff(1)}});
    const LaurentPoly gc = lp_conj(g);
    CHECK(gc.coefficient({-1, 0}) == Coeff(1));
    CHECK(gc.coefficient({0, -1}) == Coeff(1));
    CHECK(same_exact(lp_conj(gc), g));
}

TEST_CASE("riesz projection keeps the analytic cone") {
    const LaurentPoly f =
        from_terms(2, {{{1, -1}, Coeff(1)}, {{1, 0}, Coeff(1)}});
    const LaurentPoly pf = riesz_project(f);
    CHECK(pf.term_count() == 1);
    CHECK(pf.coefficient({1, 0}) == Coeff(1));

    const LaurentPoly g = from_terms(2, {{{0, 0}, Coeff(2)},
                                         {{1, -1}, Coeff(1)},
                                         {{-1, 1}, Coeff(1)}});
    const LaurentPoly pg = riesz_project(g);
    CHECK(pg.term_count() == 1);
    CHECK(pg.coefficient({0, 0}) == Coeff(2));

    CHECK(same_exact(riesz_project(pf), pf)); // idempotent on the analytic part
}

TEST_CASE("h2 inner products") {
    const LaurentPoly z1 = LaurentPoly::monomial(2, {1, 0}, Coeff(1));
    const LaurentPoly z2 = LaurentPoly::monomial(2, {0, 1}, Coeff(1));
    CHECK(h2_inner(z1, z1) == Complex(1.0, 0.0));
    CHECK(h2_inner(z1, z2) == Complex(0.0, 0.0));

    const LaurentPoly phi = from_terms(3, {{{3, 0, 0}, Coeff(1)},
                                           {{0, 3, 0}, Coeff(1)},
                                           {{1, 1, 1}, Coeff(1)}});
    CHECK(h2_inner(phi, phi).real() == doctest::Approx(3.0));
    CHECK(h2_norm_sq_exact(phi) == Rational(3));
}

TEST_CASE("even Hardy norms via exact powers") {
    const LaurentPoly f = from_terms(2, {{{1, 0}, Coeff(1)}, {{0, 1}, Coeff(1)}});
    CHECK(hp_norm_even_pow_exact(f, 2) == Rational(6)); // ||z1+z2||_4^4
    const LaurentPoly z1 = LaurentPoly::monomial(2, {1, 0}, Coeff(1));
    for (unsigned n = 1; n <= 4; ++n) {
        CHECK(hp_norm_even(z1, n) == doctest::Approx(1.0).epsilon(1e-14));
    }
    const LaurentPoly phi = from_terms(3, {{{3, 0, 0}, Coeff(1)},
                                           {{0, 3, 0}, Coeff(1)},
                                           {{1, 1, 1}, Coeff(1)}});
    CHECK(hp_norm_even_pow_exact(phi, 2) == Rational(15));
    CHECK_THROWS_AS(hp_norm_even(f, 0), std::invalid_argument);
}

TEST_CASE("nonlinear even image") {
    const LaurentPoly z1 = LaurentPoly::monomial(1, {1}, Coeff(1));
    CHECK(same_exact(nonlinear_image_even(z1, 1), z1));

    // (a z1 + b z2), n = 1 -> a(a^2+2b^2) z1 + b(2a^2+b^2) z2
    const Rational a(1, 2), b(1, 3);
    const LaurentPoly f = from_terms(2, {{{1, 0}, Coeff(a)}, {{0, 1}, Coeff(b)}});
    const LaurentPoly img = nonlinear_image_even(f, 1);
    const Rational a2 = a * a, b2 = b * b;
    CHECK(img.coefficient({1, 0}) == Coeff(a * (a2 + Rational(2) * b2)));
    CHECK(img.coefficient({0, 1}) == Coeff(b * (Rational(2) * a2 + b2)));
    CHECK(img.term_count() == 2);

    // z1^3 + z2^3 + z1 z2 z3 is an eigenvector with lambda = 5 at p = 4
    const LaurentPoly phi = from_terms(3, {{{3, 0, 0}, Coeff(1)},
                                           {{0, 3, 0}, Coeff(1)},
                                           {{1, 1, 1}, Coeff(1)}});
    CHECK(same_exact(nonlinear_image_even(phi, 1), lp_scale(phi, Coeff(5))));
}

TEST_CASE("algebra invariants on random exact polynomials") {
    Rng rng(20240811);
    for (int rep = 0; rep < 40; ++rep) {
        const int dim = 1 + static_cast<int>(rng.next_u64() % 3);
        const LaurentPoly f = random_exact_poly(rng, dim, 4);
        const LaurentPoly g = random_exact_poly(rng, dim, 4);
        const LaurentPoly h = random_exact_poly(rng, dim, 3);

        CHECK(same_exact(lp_mul(f, g), lp_mul(g, f)));
        CHECK(same_exact(lp_mul(lp_mul(f, g), h), lp_mul(f, lp_mul(g, h))));
        CHECK(same_exact(riesz_project(riesz_project(f)), riesz_project(f)));

        // <f, g> = <Pf, g> for analytic g
        const LaurentPoly ga = riesz_project(g);
        const Complex lhs = h2_inner(f, ga);
        const Complex rhs = h2_inner(riesz_project(f), ga);
        CHECK(std::abs(lhs - rhs) < 1e-13);

        if (!f.is_zero() && f.analytic()) {
            const double n1 = hp_norm_even(f, 1);
            CHECK(n1 * n1 == doctest::Approx(h2_inner(f, f).real()).epsilon(1e-12));
        }
    }
}

TEST_CASE("inner monomials are fixed by the nonlinear image") {
    Rng rng(7);
    for (int rep = 0; rep < 10; ++rep) {
        const int dim = 1 + static_cast<int>(rng.next_u64() % 3);
        ExponentIndex a(static_cast<size_t>(dim));
        for (int k = 0; k < dim; ++k) {
            a[static_cast<size_t>(k)] = static_cast<int>(rng.next_u64() % 4);
        }
        const LaurentPoly m = LaurentPoly::monomial(dim, a, Coeff(1));
        for (unsigned n = 1; n <= 3; ++n) CHECK(same_exact(nonlinear_image_even(m, n), m));
    }
}

TEST_CASE("json round trip and pruning") {
    const LaurentPoly f = from_terms(2, {{{1, 0}, Coeff(Complex(0.5, -0.25))},
                                         {{0, -2}, Coeff(Complex(3.0, 0.0))}});
    const LaurentPoly back = lp_from_json(lp_to_json(f));
    CHECK(back.dim() == 2);
    CHECK(back.term_count() == 2);
    CHECK(back.coefficient({1, 0}).value() == Complex(0.5, -0.25));

    LaurentPoly g(1);
    g.add_term({0}, Coeff(1));
    g.add_term({0}, Coeff(-1));
    CHECK(g.is_zero()); // exact cancellation pruned
}

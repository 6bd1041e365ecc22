#include <doctest.h>

#include <cmath>

#include "hilb/hilbert.hpp"
#include "hilb/parse.hpp"
#include "hilb/rng.hpp"

using namespace hilb;

namespace {

const QuadratureSpec kSpec{};

} // namespace

TEST_CASE("expected lambda values") {
    CHECK(lambda_expected(CoefVec::from_reals({1.0}), 3.3, kSpec).value ==
          doctest::Approx(1.0).epsilon(1e-12));

    const LaurentPoly phi = parse_poly("z1^3+z2^3+z1*z2*z3");
    CHECK(lambda_expected(phi, 4.0, kSpec).value == doctest::Approx(5.0));

    for (int d : {2, 3, 5}) {
        std::vector<Coeff> cs(static_cast<size_t>(d), Coeff(1));
        const ValErr lam = lambda_expected(CoefVec(std::move(cs)), 4.0, kSpec);
        // scale-invariant form: ||phi||_4^4/||phi||_2^2 over d coordinates of
        // modulus 1 equals d(2 - 1/d) = 2d - 1; normalize to unit H^2
        CHECK(lam.value / d == doctest::Approx(2.0 - 1.0 / d).epsilon(1e-12));
    }
}

TEST_CASE("residual_linear verdicts") {
    const double r = 1.0 / std::sqrt(3.0);
    const HilbertReport yes = residual_linear(CoefVec::from_reals({r, r, r}), 3.0, kSpec);
    CHECK(yes.verdict == Verdict::HilbertPoint);
    CHECK(yes.residual < 1e-8);

    const HilbertReport no = residual_linear(CoefVec::from_reals({0.8, 0.6}), 4.0, kSpec);
    CHECK(no.verdict == Verdict::NotHilbertPoint);
    CHECK(no.residual > 1e-2);

    const HilbertReport mono = residual_linear(CoefVec::from_reals({1.0, 0.0}), 1.0, kSpec);
    CHECK(mono.verdict == Verdict::HilbertPoint);
    CHECK(mono.residual < 1e-12);
}

TEST_CASE("verdicts are scale invariant") {
    for (double t : {0.25, 3.0}) {
        const CoefVec good = CoefVec::from_reals({t, t, t});
        CHECK(residual_linear(good, 3.0, kSpec).verdict == Verdict::HilbertPoint);
        const CoefVec bad = CoefVec::from_reals({0.8 * t, 0.6 * t});
        CHECK(residual_linear(bad, 4.0, kSpec).verdict == Verdict::NotHilbertPoint);
    }
}

TEST_CASE("p = 2 universality") {
    Rng rng(31337);
    for (int rep = 0; rep < 10; ++rep) {
        std::vector<Complex> cs;
        const int d = 1 + static_cast<int>(rng.next_u64() % 4);
        for (int j = 0; j < d; ++j) {
            cs.emplace_back(rng.uniform() - 0.5, rng.uniform() - 0.5);
        }
        if (std::all_of(cs.begin(), cs.end(), [](Complex z) { return std::abs(z) < 1e-3; })) {
            continue;
        }
        const HilbertReport rep2 = residual_linear(CoefVec::from_complex(cs), 2.0, kSpec);
        CHECK(rep2.residual < 1e-13);
        CHECK(rep2.verdict == Verdict::HilbertPoint);
    }
}

TEST_CASE("exact even-p decisions for the cubic family") {
    // c1 z1^3 + c2 z2^3 + c3 z3^3 + c4 z1 z2 z3 at p = 4
    const HilbertReport all_ones = residual_even_poly(parse_poly("z1^3+z2^3+z3^3+z1*z2*z3"), 1);
    CHECK(all_ones.verdict == Verdict::HilbertPoint);
    CHECK(all_ones.residual == 0.0);
    CHECK(all_ones.lambda_expected == doctest::Approx(7.0));

    const HilbertReport missing = residual_even_poly(parse_poly("z1^3+z2^3+z1*z2*z3"), 1);
    CHECK(missing.verdict == Verdict::HilbertPoint);
    CHECK(missing.lambda_expected == doctest::Approx(5.0));

    const HilbertReport lopsided = residual_even_poly(parse_poly("2*z1^3+z2^3+z1*z2*z3"), 1);
    CHECK(lopsided.verdict == Verdict::NotHilbertPoint);
    CHECK(lopsided.residual > 0.0);

    // arbitrary exact phases keep the decision exact
    const HilbertReport phased =
        residual_even_poly(parse_poly("i*z1^3 + (3/5)z2^3 + (4/5)i*z2^3 + z1*z2*z3"), 1);
    CHECK(phased.verdict == Verdict::HilbertPoint);

    // p = 2 degenerate case: everything passes exactly
    CHECK(residual_even_poly(parse_poly("3*z1^2 + z2 + (1/7)*z1*z2"), 0).verdict ==
          Verdict::HilbertPoint);
}

TEST_CASE("even and quadrature routes agree for 1-homogeneous inputs") {
    const LaurentPoly good = parse_poly("z1+z2+z3");
    const LaurentPoly bad = parse_poly("z1+2*z2");
    for (double p : {2.0, 4.0, 6.0}) {
        const unsigned n = static_cast<unsigned>((p - 2.0) / 2.0);
        CHECK(residual_even_poly(good, n).verdict ==
              residual_linear(coefvec_from_poly(good), p, kSpec).verdict);
        if (p > 2.0) {
            CHECK(residual_even_poly(bad, n).verdict ==
                  residual_linear(coefvec_from_poly(bad), p, kSpec).verdict);
        }
    }
}

TEST_CASE("p = infinity closed form") {
    CHECK(hilbert_infinity_linear(CoefVec::from_reals({1.0, 1.0, 1.0})).verdict ==
          Verdict::HilbertPoint);
    const HilbertReport no = hilbert_infinity_linear(CoefVec::from_reals({2.0, 1.0}));
    CHECK(no.verdict == Verdict::NotHilbertPoint);
    CHECK(no.residual == doctest::Approx(0.2)); // |2*3 - 5|/5
    CHECK(hilbert_infinity_linear(CoefVec::from_reals({1.0, 0.0})).verdict ==
          Verdict::HilbertPoint);
    // exact complex phases
    const CoefVec phased({Coeff(Rational(3, 5), Rational(4, 5)), Coeff(Rational(0), Rational(1))});
    CHECK(hilbert_infinity_linear(phased).verdict == Verdict::HilbertPoint);
}

TEST_CASE("inner monomials pass at every tested exponent") {
    for (const char* text : {"z1", "z2^2", "z1*z2*z3", "(2/3)*z1^2*z3"}) {
        const LaurentPoly m = parse_poly(text);
        for (double p : {1.0, 1.5, 3.0}) {
            const HilbertReport rep = check_poly(m, p, false, false, kSpec);
            CHECK(rep.verdict == Verdict::HilbertPoint);
        }
        for (double p : {2.0, 4.0, 6.0}) {
            const HilbertReport rep = check_poly(m, p, false, true, kSpec);
            CHECK(rep.verdict == Verdict::HilbertPoint);
            CHECK(rep.residual == 0.0);
        }
        CHECK(check_poly(m, 0.0, true, false, kSpec).verdict == Verdict::HilbertPoint);
    }
}

TEST_CASE("check_poly dispatch and edge cases") {
    // general polynomial at non-even p: honest refusal
    const LaurentPoly f = parse_poly("z1^2+z2");
    CHECK(check_poly(f, 3.0, false, false, kSpec).verdict == Verdict::Inconclusive);
    // p = infinity beyond the 1-homogeneous closed form
    CHECK(check_poly(f, 0.0, true, false, kSpec).verdict == Verdict::Inconclusive);
    // 1-homogeneous via the quadrature route
    CHECK(check_poly(parse_poly("z1+z2"), 3.0, false, false, kSpec).verdict ==
          Verdict::HilbertPoint);
    // non-analytic input is rejected outright
    CHECK_THROWS_AS(check_poly(parse_poly("z1^-1+z2", true), 3.0, false, false, kSpec),
                    std::invalid_argument);
    CHECK_THROWS_AS(residual_linear(CoefVec::from_reals({0.0, 0.0}), 3.0, kSpec),
                    std::invalid_argument);
}

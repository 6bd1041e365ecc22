#include <doctest.h>

#include "hilb/parse.hpp"
#include "hilb/projection.hpp"
#include "hilb/rng.hpp"

using namespace hilb;

TEST_CASE("basic polynomial parsing") {
    const LaurentPoly f = parse_poly("z1+z2");
    CHECK(f.dim() == 2);
    CHECK(is_one_homogeneous(f));
    const CoefVec c = coefvec_from_poly(f);
    CHECK(c[0].re_exact() == Rational(1));
    CHECK(c[1].re_exact() == Rational(1));

    const LaurentPoly g = parse_poly("z1^3+z2^3+z1*z2*z3");
    CHECK(g.dim() == 3);
    CHECK(g.term_count() == 3);
    CHECK(g.coefficient({1, 1, 1}) == Coeff(1));
    CHECK(g.coefficient({3, 0, 0}) == Coeff(1));
}

TEST_CASE("coefficient literals stay exact") {
    const LaurentPoly f = parse_poly("0.5*z1 + (1/2)*z2");
    const CoefVec c = coefvec_from_poly(f);
    CHECK(c[0].re_exact() == Rational(1, 2));
    CHECK(c[1].re_exact() == Rational(1, 2));

    const LaurentPoly g = parse_poly("3/4*z1 - 0.25*z2 + (-2/3)*z3");
    const CoefVec cg = coefvec_from_poly(g);
    CHECK(cg[0].re_exact() == Rational(3, 4));
    CHECK(cg[1].re_exact() == Rational(-1, 4));
    CHECK(cg[2].re_exact() == Rational(-2, 3));
}

TEST_CASE("imaginary unit, juxtaposition, repeated factors") {
    const LaurentPoly f = parse_poly("2z1 - i*z2^2 + 3i*z3");
    CHECK(f.coefficient({1, 0, 0}) == Coeff(Rational(2)));
    CHECK(f.coefficient({0, 2, 0}) == Coeff(Rational(0), Rational(-1)));
    CHECK(f.coefficient({0, 0, 1}) == Coeff(Rational(0), Rational(3)));

    CHECK(parse_poly("i*i*z1").coefficient({1}) == Coeff(Rational(-1)));
    CHECK(parse_poly("z1*z1*z1").coefficient({3}) == Coeff(Rational(1)));
}

TEST_CASE("terms accumulate and cancel exactly") {
    CHECK(parse_poly("z2 + z2").coefficient({0, 1}) == Coeff(Rational(2)));
    CHECK(parse_poly("z1 - z1 + z2").term_count() == 1);
}

TEST_CASE("negative exponents only in Laurent contexts") {
    const LaurentPoly f = parse_poly("z1^-2*z2 + 4", true);
    CHECK(f.coefficient({-2, 1}) == Coeff(Rational(1)));
    CHECK(f.coefficient({0, 0}) == Coeff(Rational(4)));
    CHECK_THROWS_AS(parse_poly("z1^-2"), std::invalid_argument);
}

TEST_CASE("syntax errors carry a position") {
    for (const char* bad : {"", "z", "z0", "q+1", "z1 + ", "(1/0)*z1", "z1^", "1//2*z1"}) {
        CHECK_THROWS_AS(parse_poly(bad), std::invalid_argument);
    }
    try {
        parse_poly("z1 + qq");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("position") != std::string::npos);
    }
}

TEST_CASE("render round-trips exact polynomials") {
    Rng rng(424242);
    for (int rep = 0; rep < 30; ++rep) {
        const int dim = 1 + static_cast<int>(rng.next_u64() % 3);
        LaurentPoly f(dim);
        const int terms = 1 + static_cast<int>(rng.next_u64() % 4);
        for (int t = 0; t < terms; ++t) {
            ExponentIndex a(static_cast<size_t>(dim));
            for (int k = 0; k < dim; ++k) {
                a[static_cast<size_t>(k)] = static_cast<int>(rng.next_u64() % 7) - 3;
            }
            // keep the last variable in use so the parsed dimension matches
            if (t == 0 && a[static_cast<size_t>(dim - 1)] == 0) {
                a[static_cast<size_t>(dim - 1)] = 1;
            }
            const Rational re(static_cast<long long>(rng.next_u64() % 9) - 4,
                              1 + static_cast<long long>(rng.next_u64() % 5));
            const Rational im(static_cast<long long>(rng.next_u64() % 9) - 4,
                              1 + static_cast<long long>(rng.next_u64() % 5));
            f.add_term(a, Coeff(re, im));
        }
        const std::string text = render_poly(f);
        const LaurentPoly back = parse_poly(text, true);
        CHECK(back.dim() == f.dim());
        REQUIRE(back.term_count() == f.term_count());
        for (const auto& [alpha, c] : f.terms()) {
            CHECK(back.coefficient(alpha) == c);
        }
    }
    CHECK(render_poly(LaurentPoly(2)) == "0");
}

#include <doctest.h>

#include <cmath>

#include "hilb/projection.hpp"
#include "hilb/rng.hpp"

using namespace hilb;

namespace {

const QuadratureSpec kSpec{};

CoefVec random_rational_vec(Rng& rng, int d) {
    std::vector<Coeff> cs;
    for (int j = 0; j < d; ++j) {
        const long long num = 1 + static_cast<long long>(rng.next_u64() % 8);
        const long long den = 1 + static_cast<long long>(rng.next_u64() % 6);
        cs.emplace_back(Rational(num, den));
    }
    return CoefVec(std::move(cs));
}

} // namespace

TEST_CASE("ij integrals on reference inputs") {
    // lone coordinate: I_1 = 2/p, so (p/2) c_1 I_1 = c_1
    for (double p : {1.0, 1.5, 2.0, 3.0, 4.0}) {
        const ValErr i1 = ij_integral(CoefVec::from_reals({1.0}), p, 0, kSpec);
        CHECK(i1.value == doctest::Approx(2.0 / p).epsilon(1e-13));
    }

    // d = 2, p = 4: I_1 = a^2/2 + b^2
    const CoefVec c = CoefVec::from_reals({0.8, 0.6});
    CHECK(ij_integral(c, 4.0, 0, kSpec).value ==
          doctest::Approx(0.8 * 0.8 / 2 + 0.36).epsilon(1e-12));
    CHECK(ij_integral(c, 4.0, 1, kSpec).value ==
          doctest::Approx(0.36 / 2 + 0.64).epsilon(1e-12));

    // equal moduli: all I_j agree
    const CoefVec eq = CoefVec::from_reals({0.5, 0.5, 0.5});
    const IjValues ij = ij_all(eq, 3.0, kSpec);
    CHECK(std::fabs(ij.values[0] - ij.values[1]) < 1e-8);
    CHECK(std::fabs(ij.values[1] - ij.values[2]) < 1e-8);

    CHECK_THROWS_AS(ij_integral(c, 0.5, 0, kSpec), std::invalid_argument);
}

TEST_CASE("ij integrals depend only on coefficient moduli") {
    const std::vector<Complex> base{{0.8, 0.0}, {0.45, 0.0}, {0.2, 0.0}};
    std::vector<Complex> rotated{
        0.8 * std::polar(1.0, 0.7), 0.45 * std::polar(1.0, -2.1), 0.2 * std::polar(1.0, 3.0)};
    for (double p : {1.5, 3.0}) {
        for (int j = 0; j < 3; ++j) {
            const double plain =
                ij_integral(CoefVec::from_complex(base), p, j, kSpec, false).value;
            const double rot =
                ij_integral(CoefVec::from_complex(rotated), p, j, kSpec, false).value;
            CHECK(plain == doctest::Approx(rot).epsilon(1e-12));
        }
    }
}

TEST_CASE("project_linear reference values") {
    const CoefVec c = CoefVec::from_reals({0.8, 0.6});
    const CoefVec img = project_linear(c, 4.0, kSpec);
    CHECK(img[0].value().real() == doctest::Approx(0.8 * (0.64 + 2 * 0.36)).epsilon(1e-11));
    CHECK(img[1].value().real() == doctest::Approx(0.6 * (2 * 0.64 + 0.36)).epsilon(1e-11));

    // inner monomial is fixed
    const CoefVec e1 = CoefVec::from_reals({1.0, 0.0});
    const CoefVec img1 = project_linear(e1, 2.7, kSpec);
    CHECK(img1[0].value().real() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(img1[1].is_zero());
    CHECK(img1[1].exact()); // zero coordinates stay exact zeros

    // equal-modulus vector: image is lambda c with lambda = ||phi||_4^4
    const double r = 1.0 / std::sqrt(2.0);
    const CoefVec eq = CoefVec::from_reals({r, r});
    const CoefVec img2 = project_linear(eq, 4.0, kSpec);
    CHECK(img2[0].value().real() == doctest::Approx(1.5 * r).epsilon(1e-12));
    CHECK(img2[1].value().real() == doctest::Approx(1.5 * r).epsilon(1e-12));
}

TEST_CASE("project_linear preserves phases exactly") {
    const Complex c1 = 0.8 * std::polar(1.0, 1.234);
    const Complex c2 = 0.6 * std::polar(1.0, -2.345);
    const CoefVec c = CoefVec::from_complex({c1, c2});
    const CoefVec img = project_linear(c, 3.0, kSpec);
    CHECK(std::arg(img[0].value()) == doctest::Approx(std::arg(c1)).epsilon(1e-14));
    CHECK(std::arg(img[1].value()) == doctest::Approx(std::arg(c2)).epsilon(1e-14));
}

TEST_CASE("exact even projection") {
    // n = 0 is the identity (p = 2)
    const CoefVec c = CoefVec::from_reals({0.3, 0.7});
    const CoefVec id = project_linear_even(c, 0);
    CHECK(id[0].value() == c[0].value());

    // d = 2 closed form at n = 1
    const Rational a(1, 2), b(2, 3);
    const CoefVec cr({Coeff(a), Coeff(b)});
    const CoefVec img = project_linear_even(cr, 1);
    const Rational a2 = a * a, b2 = b * b;
    CHECK(img[0].re_exact() == a * (a2 + Rational(2) * b2));
    CHECK(img[1].re_exact() == b * (Rational(2) * a2 + b2));

    // (1,1,1) at n = 1 scales by 5 = 2d - 1
    const CoefVec ones({Coeff(1), Coeff(1), Coeff(1)});
    const CoefVec img3 = project_linear_even(ones, 1);
    for (int j = 0; j < 3; ++j) CHECK(img3[j].re_exact() == Rational(5));

    CHECK_THROWS_AS(project_linear_even(ones, 40), std::invalid_argument);
}

TEST_CASE("oracle equivalence between the exact route and polyalg") {
    Rng rng(20260809);
    for (int rep = 0; rep < 25; ++rep) {
        const int d = 2 + static_cast<int>(rng.next_u64() % 3);
        const unsigned n = 1 + static_cast<unsigned>(rng.next_u64() % 3);
        const CoefVec c = random_rational_vec(rng, d);
        const CoefVec even = project_linear_even(c, n);
        const LaurentPoly img = nonlinear_image_even(c.to_laurent(), n);
        for (int j = 0; j < d; ++j) {
            ExponentIndex ej(static_cast<size_t>(d), 0);
            ej[static_cast<size_t>(j)] = 1;
            CHECK(even[j] == img.coefficient(ej)); // exact rational equality
        }
        if (n == 1) {
            const CoefVec quad = project_linear(c, 4.0, kSpec);
            for (int j = 0; j < d; ++j) {
                CHECK(quad[j].value().real() ==
                      doctest::Approx(even[j].value().real()).epsilon(1e-8));
            }
        }
    }
}

TEST_CASE("lemma inequalities for the I_j") {
    Rng rng(5150);
    for (int rep = 0; rep < 12; ++rep) {
        const double b = 0.2 + 0.4 * rng.uniform();
        const double a = b + 0.1 + 0.4 * rng.uniform();
        const double cc = 0.1 + 0.6 * rng.uniform();

        // 2 < p < inf: I_1 < I_2 when a > b (subharmonicity direction)
        {
            const double p = 2.2 + 3.0 * rng.uniform();
            const CoefVec c = CoefVec::from_reals({a, b, cc});
            const ValErr i1 = ij_integral(c, p, 0, kSpec);
            const ValErr i2 = ij_integral(c, p, 1, kSpec);
            CHECK(i1.value + i1.error + i2.error < i2.value);
        }
        // 1 <= p < inf: a I_1 > b I_2 (order preservation)
        {
            const double p = 1.0 + 4.0 * rng.uniform();
            const CoefVec c = CoefVec::from_reals({a, b, cc});
            const ValErr i1 = ij_integral(c, p, 0, kSpec);
            const ValErr i2 = ij_integral(c, p, 1, kSpec);
            CHECK(a * i1.value > b * i2.value + a * i1.error + b * i2.error);
        }
        // d = 2, 1 <= p < 2: I_1 > I_2 (reversed direction below p = 2)
        {
            const double p = 1.0 + 0.95 * rng.uniform();
            const CoefVec c = CoefVec::from_reals({a, b});
            const ValErr i1 = ij_integral(c, p, 0, kSpec);
            const ValErr i2 = ij_integral(c, p, 1, kSpec);
            CHECK(i1.value > i2.value + i1.error + i2.error);
        }
    }
}

TEST_CASE("lambda consistency for equal-modulus vectors") {
    const double r = 1.0 / std::sqrt(3.0);
    const CoefVec c = CoefVec::from_reals({r, r, r});
    for (double p : {1.5, 3.0}) {
        const CoefVec img = project_linear(c, p, kSpec);
        const double lambda_emp = img[0].value().real() / r;
        // lambda = ||phi||_p^p / ||phi||_2^2 via an independent moment
        const double norm_pp = affine_torus_moment({r, r, r}, p, kSpec).value;
        CHECK(lambda_emp == doctest::Approx(norm_pp).epsilon(1e-6));
    }
}

TEST_CASE("normalized operator lands on the unit sphere") {
    const CoefVec c = CoefVec::from_reals({0.8, 0.6});
    const CoefVec out = normalized_op(c, 4.0, kSpec);
    CHECK(out.h2_norm() == doctest::Approx(1.0).epsilon(1e-14));
    const double n0 = 0.8 * (0.64 + 0.72), n1 = 0.6 * (1.28 + 0.36);
    const double scale = std::sqrt(n0 * n0 + n1 * n1);
    CHECK(out[0].value().real() == doctest::Approx(n0 / scale).epsilon(1e-11));
    CHECK(out[1].value().real() == doctest::Approx(n1 / scale).epsilon(1e-11));

    const CoefVec e2 = CoefVec::from_reals({0.0, 1.0});
    const CoefVec fixed = normalized_op(e2, 1.5, kSpec);
    CHECK(fixed[0].is_zero());
    CHECK(fixed[1].value().real() == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("multinomial helper") {
    CHECK(multinomial(4, {2, 2}) == 6);
    CHECK(multinomial(3, {1, 1, 1}) == 6);
    CHECK(multinomial(5, {5, 0}) == 1);
    CHECK_THROWS_AS(multinomial(4, {2, 3}), std::invalid_argument);
    int count = 0;
    for_each_multi_index(3, 4, [&](const std::vector<unsigned>&) { ++count; });
    CHECK(count == 15); // C(6,2)
}

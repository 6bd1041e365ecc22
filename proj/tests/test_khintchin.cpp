#include <doctest.h>

#include <cmath>

#include "hilb/khintchin.hpp"
#include "hilb/rng.hpp"

using namespace hilb;

namespace {

const QuadratureSpec kSpec{};

} // namespace

TEST_CASE("sharp constants") {
    const KhintchinConstants k2 = khintchin_constants(2.0);
    CHECK(k2.a_p == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(k2.b_p == doctest::Approx(1.0).epsilon(1e-15));

    CHECK(khintchin_constants(4.0).b_p == doctest::Approx(std::pow(2.0, 0.25)).epsilon(1e-14));
    CHECK(khintchin_constants(1.0).a_p ==
          doctest::Approx(0.88622692545275801).epsilon(1e-14)); // Gamma(3/2)
    CHECK(khintchin_constants(1.0).b_p == 1.0);
    CHECK(khintchin_constants(3.0).a_p == 1.0);
    for (double p : {1.0, 1.7, 2.0, 3.5, 6.0}) {
        const KhintchinConstants kc = khintchin_constants(p);
        CHECK(kc.a_p <= 1.0);
        CHECK(kc.b_p >= 1.0);
    }
}

TEST_CASE("the K functional on reference points") {
    CHECK(k_functional(CoefVec::from_reals({1.0}), 3.3, kSpec).value ==
          doctest::Approx(1.0).epsilon(1e-12));

    const double r2 = 1.0 / std::sqrt(2.0);
    CHECK(k_functional(CoefVec::from_reals({r2, r2}), 4.0, kSpec).value ==
          doctest::Approx(std::pow(1.5, 0.25)).epsilon(1e-12));

    const double r3 = 1.0 / std::sqrt(3.0);
    CHECK(k_functional(CoefVec::from_reals({r3, r3, r3}), 4.0, kSpec).value ==
          doctest::Approx(std::pow(5.0 / 3.0, 0.25)).epsilon(1e-12));

    CHECK_THROWS_AS(k_functional(CoefVec::from_reals({0.5, 0.5}), 3.0, kSpec),
                    std::invalid_argument);
}

TEST_CASE("equal-coefficient norms") {
    CHECK(equal_coeff_norm(1, 3.7, kSpec).value == 1.0);
    for (int d : {2, 3, 4}) {
        CHECK(equal_coeff_norm_even_pow(d, 2) == Rational(2) - Rational(1, d));
        const ValErr v = equal_coeff_norm(d, 4.0, kSpec);
        CHECK(std::pow(v.value, 4.0) == doctest::Approx(2.0 - 1.0 / d).epsilon(1e-12));
    }

    // strictly increasing in d above p = 2
    for (double p : {3.0, 5.0}) {
        double prev = equal_coeff_norm(1, p, kSpec).value;
        for (int d = 2; d <= 5; ++d) {
            const ValErr v = equal_coeff_norm(d, p, kSpec);
            CHECK(v.value > prev + v.error);
            prev = v.value;
        }
    }

    CHECK_THROWS_AS(equal_coeff_norm(7, 3.0, kSpec), std::invalid_argument);
    CHECK(equal_coeff_norm(10, 4.0, kSpec).value ==
          doctest::Approx(std::pow(1.9, 0.25)).epsilon(1e-12));
}

TEST_CASE("central-limit approach to the sharp constant") {
    const std::vector<int> ds{1, 2, 4, 8};
    const auto rows = clt_limit_check(4.0, ds, kSpec);
    REQUIRE(rows.size() == 4);
    CHECK(rows[3].norm == doctest::Approx(std::pow(2.0 - 0.125, 0.25)).epsilon(1e-12));
    CHECK(rows[3].gap == doctest::Approx(std::pow(2.0, 0.25) - std::pow(1.875, 0.25)).epsilon(1e-9));
    CHECK(rows[3].gap < 0.02);
    for (size_t i = 0; i + 1 < rows.size(); ++i) CHECK(rows[i + 1].gap < rows[i].gap);
    for (const CltRow& row : rows) CHECK(row.bound == doctest::Approx(std::pow(2.0, 0.25)));

    CHECK_THROWS_AS(clt_limit_check(2.0, ds, kSpec), std::invalid_argument);
}

TEST_CASE("Khintchin sandwich on random unit vectors") {
    Rng rng(777);
    for (double p : {1.0, 1.5, 3.0, 4.0}) {
        const KhintchinConstants kc = khintchin_constants(p);
        for (int rep = 0; rep < 4; ++rep) {
            const int d = 2 + static_cast<int>(rng.next_u64() % 3);
            std::vector<double> v(static_cast<size_t>(d));
            double norm2 = 0.0;
            for (double& x : v) {
                x = 0.05 + rng.uniform();
                norm2 += x * x;
            }
            for (double& x : v) x /= std::sqrt(norm2);
            const ValErr k = k_functional(CoefVec::from_reals(v), p, kSpec);
            CHECK(k.value >= kc.a_p - k.error - 1e-9);
            CHECK(k.value <= kc.b_p + k.error + 1e-9);
            // Hoelder side information
            if (p < 2.0) CHECK(k.value <= 1.0 + k.error + 1e-9);
            if (p > 2.0) CHECK(k.value >= 1.0 - k.error - 1e-9);
        }
    }
}

TEST_CASE("equal-modulus points are critical points of the K functional") {
    const double r3 = 1.0 / std::sqrt(3.0);
    const CoefVec crit = CoefVec::from_reals({r3, r3, r3});
    CHECK(sphere_gradient_norm(crit, 3.0, kSpec) < 1e-5);
    CHECK(sphere_gradient_norm(crit, 4.0, kSpec) < 1e-5);

    const double r2 = 1.0 / std::sqrt(2.0);
    CHECK(sphere_gradient_norm(CoefVec::from_reals({r2, r2, 0.0}), 4.0, kSpec) < 1e-5);

    // and a non-equal-modulus point is not critical
    CHECK(sphere_gradient_norm(CoefVec::from_reals({0.8, 0.6}), 4.0, kSpec) > 1e-3);
}

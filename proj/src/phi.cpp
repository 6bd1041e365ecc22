#include "hilb/phi.hpp"

#include <algorithm>
#include <cmath>

#include "hilb/fourier_tables.hpp"
#include "hilb/gauss.hpp"
#include "hilb/projection.hpp"
#include "hilb/special.hpp"

namespace hilb {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

} // namespace

std::string phi_method_name(PhiSample::Method m) {
    switch (m) {
        case PhiSample::Method::MultinomialExact: return "multinomial-exact";
        case PhiSample::Method::Bergman: return "bergman";
        case PhiSample::Method::TorusQuadrature: return "torus-quadrature";
    }
    return "torus-quadrature";
}

Rational phi_even(unsigned n) {
    Rational acc(0);
    for_each_multi_index(3, n, [&](const std::vector<unsigned>& beta) {
        if (beta[0] == 0 || beta[1] == 0) return;
        const long long m = multinomial(n, beta);
        const long long b3 = beta[2];
        const Rational num = Rational(m) * Rational(m) *
                             Rational(static_cast<long long>(beta[0])) *
                             Rational(static_cast<long long>(beta[1]));
        acc += num / Rational((b3 + 1) * (b3 + 2) * (b3 + 3));
    });
    return acc * Rational(static_cast<long long>(n) + 1);
}

PhiSample phi_even_sample(unsigned n) {
    PhiSample s;
    s.p = 2.0 * (n + 1);
    s.value = phi_even(n).to_double();
    s.method = PhiSample::Method::MultinomialExact;
    s.error_estimate = 0.0;
    return s;
}

namespace {

// H(rho3) = int_D R(|w2 + rho3|) dA(w2) with R the innermost shifted disc
// moment; angular panels split where |w2 + rho3| crosses 1 (the kink of R)
// and at the antipodal direction
double bergman_middle(double rho3, double sigma, int n_rad, int order) {
    const GaussRule& rule = gauss_radial(n_rad);
    double acc = 0.0;
    for (size_t i = 0; i < rule.nodes.size(); ++i) {
        const double r2 = rule.nodes[i];
        auto f = [&](double th) {
            const double a2 = r2 * r2 + rho3 * rho3 + 2.0 * r2 * rho3 * std::cos(th);
            return disc_shift_moment(std::sqrt(std::max(a2, 0.0)), sigma);
        };
        std::vector<double> cusps{kPi};
        if (r2 > 0.0 && rho3 > 0.0) {
            const double u = (1.0 - r2 * r2 - rho3 * rho3) / (2.0 * r2 * rho3);
            if (u >= -1.0 && u <= 1.0) cusps.push_back(std::acos(u));
        }
        acc += rule.weights[i] * integrate_cusped(f, 0.0, kPi, cusps, order) / kPi;
    }
    return acc;
}

double bergman_integral(double p, const QuadratureSpec& spec, int level) {
    const double sigma = p - 6.0;
    const int n_rad = spec.radial_order + 16 * level;
    const int order = 12 + 6 * level;
    const GaussRule& rule = gauss_radial(n_rad);
    double acc = 0.0;
    for (size_t i = 0; i < rule.nodes.size(); ++i) {
        const double r3 = rule.nodes[i];
        const double w = 1.0 - r3 * r3;
        acc += rule.weights[i] * 3.0 * w * w * bergman_middle(r3, sigma, n_rad, order);
    }
    return acc;
}

} // namespace

PhiSample phi_bergman(double p, const QuadratureSpec& spec) {
    if (!(p > 4.0)) {
        throw std::invalid_argument("phi_bergman: the Bergman identity requires p > 4 "
                                    "(integrability fails at p = 4)");
    }
    spec.validate();
    const double prefactor = binom_real(0.5 * p, 3) * (p - 2.0) * (p - 4.0) / 4.0;
    const double coarse = bergman_integral(p, spec, 0);
    const double fine = bergman_integral(p, spec, 1);

    PhiSample s;
    s.p = p;
    s.value = prefactor * fine;
    s.method = PhiSample::Method::Bergman;
    s.error_estimate = std::fabs(prefactor) * (std::fabs(fine - coarse) + 1e-14 * std::fabs(fine));
    return s;
}

PhiSample phi_quadrature(double p, const QuadratureSpec& spec) {
    if (p < 1.0) throw std::invalid_argument("phi_quadrature: p must be >= 1");
    const ValErr v = c3_quadrature(p, ExponentIndex{-1, -1, 3}, spec);
    PhiSample s;
    s.p = p;
    s.value = v.value;
    s.method = PhiSample::Method::TorusQuadrature;
    s.error_estimate = v.error;
    return s;
}

std::vector<PhiSample> phi_curve(double p_min, double p_max, double step,
                                 const QuadratureSpec& spec) {
    if (!(p_min >= 1.0) || !(p_min < p_max)) {
        throw std::invalid_argument("phi_curve: need 1 <= p_min < p_max");
    }
    if (!(step > 0.0)) throw std::invalid_argument("phi_curve: step must be > 0");

    std::vector<PhiSample> samples;
    for (double p = p_min; p < p_max + 0.5 * step; p += step) {
        samples.push_back(phi_quadrature(std::min(p, p_max), spec));
    }

    // refine across sign changes so the zero crossings are resolved
    const double min_gap = step / 16.0;
    for (size_t pass = 0; pass < 5; ++pass) {
        std::vector<double> inserts;
        for (size_t i = 0; i + 1 < samples.size(); ++i) {
            const PhiSample& a = samples[i];
            const PhiSample& b = samples[i + 1];
            if (a.value * b.value < 0.0 && (b.p - a.p) > min_gap) {
                inserts.push_back(0.5 * (a.p + b.p));
            }
        }
        if (inserts.empty()) break;
        for (double p : inserts) samples.push_back(phi_quadrature(p, spec));
        std::sort(samples.begin(), samples.end(),
                  [](const PhiSample& x, const PhiSample& y) { return x.p < y.p; });
    }
    return samples;
}

} // namespace hilb

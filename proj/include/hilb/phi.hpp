#ifndef HILB_PHI_HPP
#define HILB_PHI_HPP

#include <string>
#include <vector>

#include "hilb/quadrature.hpp"
#include "hilb/rational.hpp"

namespace hilb {

// The z_3^3 Fourier coefficient obstruction Phi(p) deciding whether
// z_1^3 + z_2^3 + z_1 z_2 z_3 is a Hilbert point in H^p(T^3).
struct PhiSample {
    double p = 0.0;
    double value = 0.0;
    enum class Method { MultinomialExact, Bergman, TorusQuadrature } method =
        Method::TorusQuadrature;
    double error_estimate = 0.0;
};

std::string phi_method_name(PhiSample::Method m);

// Phi(2(n+1)) = (n+1) sum_{|beta|=n} C(n,beta)^2 beta_1 beta_2 /
// ((beta_3+1)(beta_3+2)(beta_3+3)), exact
Rational phi_even(unsigned n);
PhiSample phi_even_sample(unsigned n);

// Bergman-space identity, valid for p > 4; strictly positive there
PhiSample phi_bergman(double p, const QuadratureSpec& spec);

// torus quadrature of the defining coefficient, p >= 1; the imaginary part
// must vanish and feeds the error estimate
PhiSample phi_quadrature(double p, const QuadratureSpec& spec);

// uniform grid with adaptive refinement across sign changes
std::vector<PhiSample> phi_curve(double p_min, double p_max, double step,
                                 const QuadratureSpec& spec);

} // namespace hilb

#endif

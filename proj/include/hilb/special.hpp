#ifndef HILB_SPECIAL_HPP
#define HILB_SPECIAL_HPP

#include <functional>

namespace hilb {

// Gauss hypergeometric series F(a,b;c;x) summed to relative tolerance
// rel_tol; requires |x| < 1 (or a terminating parameter).
double gauss_2f1_series(double a, double b, double c, double x, double rel_tol = 1e-14);

// 1/Gamma(x); exactly 0 at nonpositive integers, reflection formula for x < 0.5
double reciprocal_gamma(double x);

// generalized binomial coefficient C(h, j) for real h and integer j >= 0
double binom_real(double h, int j);

// Double-exponential rule on (a, b); never evaluates f at the endpoints, so
// integrable endpoint singularities are fine.
double tanh_sinh_integrate(const std::function<double(double)>& f, double a, double b,
                           double rel_tol = 1e-13);

// Circle moment  int_T |a + b*eta|^s eta^k dm(eta)  for a, b >= 0; real by
// symmetry.  Hypergeometric-type series for modulus ratio <= 0.999, direct
// singularity-aware quadrature beyond.  k = 0 is the ring integral.
double circle_moment(double a, double b, double s, int k);

// Shifted disc moment  R(A) = int_D |w + A|^sigma dA(w)  for A >= 0 and
// sigma > -2, with Lebesgue measure normalized so that A(D) = 1.
double disc_shift_moment(double A, double sigma);

} // namespace hilb

#endif

#ifndef HILB_HILBERT_HPP
#define HILB_HILBERT_HPP

#include <string>

#include "hilb/projection.hpp"

namespace hilb {

enum class Verdict { HilbertPoint, NotHilbertPoint, Inconclusive };
std::string to_string(Verdict v);

enum class CheckMethod { EvenExact, Quadrature, InfinityClosedForm };
std::string to_string(CheckMethod m);

struct HilbertReport {
    double p = 0.0; // +infinity for the sup-norm case
    double lambda_expected = 0.0;
    double residual = 0.0;
    double error_scale = 0.0; // quadrature error estimate behind the verdict
    Verdict verdict = Verdict::Inconclusive;
    CheckMethod method = CheckMethod::Quadrature;
    std::string note;
};

// lambda forced by testing the duality identity against phi itself:
// ||phi||_p^p / ||phi||_2^2; exact for even p on exact input
ValErr lambda_expected(const CoefVec& c, double p, const QuadratureSpec& spec);
ValErr lambda_expected(const LaurentPoly& f, double p, const QuadratureSpec& spec);

// residual ||P(|phi|^{p-2} phi) - lambda phi||_2 / ||lambda phi||_2 for
// 1-homogeneous phi.  Verdict bands: below the propagated quadrature error
// is a Hilbert point, between 1x and 10x is inconclusive, beyond 10x is not.
HilbertReport residual_linear(const CoefVec& c, double p, const QuadratureSpec& spec);

// exact decision at p = 2n + 2 for analytic polynomials with exact
// coefficients; n = 0 covers the trivially-universal p = 2 case
HilbertReport residual_even_poly(const LaurentPoly& f, unsigned n);

// closed-form p = infinity test for 1-homogeneous phi:
// (max_j |c_j|) sum_j |c_j| = sum_j |c_j|^2, i.e. equal nonzero moduli
HilbertReport hilbert_infinity_linear(const CoefVec& c);

// Dispatch on the shape of the input: 1-homogeneous vectors, single
// monomials (inner up to a constant), even-p exact polynomials; anything
// else is inconclusive with an explanatory note.  p_inf selects the
// sup-norm test.
HilbertReport check_poly(const LaurentPoly& f, double p, bool p_inf, bool prefer_exact,
                         const QuadratureSpec& spec);

} // namespace hilb

#endif

#ifndef HILB_POLYALG_HPP
#define HILB_POLYALG_HPP

#include <map>
#include <string>
#include <vector>

#include "hilb/coeff.hpp"

namespace hilb {

// Fourier frequency multi-index alpha in Z^d.  std::vector's lexicographic
// order gives the deterministic term order used everywhere for output.
using ExponentIndex = std::vector<int>;

// Sparse Laurent polynomial on the d-torus: a finite map from exponent
// multi-indices to complex coefficients.  Zero coefficients are never stored;
// construction and every operation prune them (exact-zero test in exact mode,
// 1e-15 * max|coeff| threshold in floating mode).
class LaurentPoly {
public:
    explicit LaurentPoly(int dim);

    int dim() const { return dim_; }
    const std::map<ExponentIndex, Coeff>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool all_exact() const;

    Coeff coefficient(const ExponentIndex& alpha) const;
    void set_coefficient(const ExponentIndex& alpha, const Coeff& c);
    void add_term(const ExponentIndex& alpha, const Coeff& c);

    // true iff every stored exponent lies in N0^d
    bool analytic() const;
    // max of sum of positive exponent entries, 0 for the zero polynomial
    int total_degree() const;

    static LaurentPoly monomial(int dim, const ExponentIndex& alpha, const Coeff& c);
    static LaurentPoly zero(int dim) { return LaurentPoly(dim); }

    void prune();

private:
    int dim_;
    std::map<ExponentIndex, Coeff> terms_;
};

// coefficient convolution; requires equal dims
LaurentPoly lp_mul(const LaurentPoly& f, const LaurentPoly& g);

// conj on the torus: negated exponents, conjugated coefficients
LaurentPoly lp_conj(const LaurentPoly& f);

LaurentPoly lp_add(const LaurentPoly& f, const LaurentPoly& g);
LaurentPoly lp_scale(const LaurentPoly& f, const Coeff& c);
LaurentPoly lp_pow(const LaurentPoly& f, unsigned n);

// Riesz projection: keep the terms with all exponent entries >= 0.
LaurentPoly riesz_project(const LaurentPoly& f);

// m-homogeneous Fourier part: keep terms whose entries sum to m.
LaurentPoly homogeneous_part(const LaurentPoly& f, int m);

// Parseval inner product sum_alpha f(alpha) * conj(g(alpha))
Complex h2_inner(const LaurentPoly& f, const LaurentPoly& g);

// exact squared H^2 norm; throws if any coefficient is inexact
Rational h2_norm_sq_exact(const LaurentPoly& f);

// ||f||_{H^{2n}} via ||f^n||_2; requires analytic support and n >= 1
double hp_norm_even(const LaurentPoly& f, unsigned n);
// exact ||f||_{H^{2n}}^{2n}
Rational hp_norm_even_pow_exact(const LaurentPoly& f, unsigned n);

// Analytic part of |f|^{2n} f = P(f^{n+1} conj(f)^n); exact for exact f.
// This is the p = 2n+2 nonlinear Riesz image of f.
LaurentPoly nonlinear_image_even(const LaurentPoly& f, unsigned n);

// JSON round-trip per the fixed schema
// {"dim": d, "terms": [{"alpha": [...], "re": .., "im": ..}, ...]}
std::string lp_to_json(const LaurentPoly& f);
LaurentPoly lp_from_json(const std::string& text);

} // namespace hilb

#endif

#ifndef HILB_FOURIER_TABLES_HPP
#define HILB_FOURIER_TABLES_HPP

#include <map>

#include "hilb/polyalg.hpp"
#include "hilb/quadrature.hpp"

namespace hilb {

// Fourier coefficients c_p(alpha) of |zeta_1+...+zeta_d|^{p-2}(zeta_1+...),
// indexed by alpha with entries summing to 1.
struct CoeffTable {
    int d = 0;
    double p = 0.0;
    bool exact = false;
    std::map<ExponentIndex, Rational> exact_entries; // filled when exact
    std::map<ExponentIndex, double> entries;

    double at(const ExponentIndex& alpha) const;
};

// d = 2 closed form Gamma(p)/(Gamma(p/2+a1) Gamma(p/2+a2)) with the
// reciprocal-gamma convention (zero at nonpositive-integer arguments)
double c2_closed(double p, int alpha1);

// max over alpha1 in [lo, hi] of the d = 2 recursion defect
// |c_{p+2}(a) - 2c_p(a) - c_p(a1-1,a2+1) - c_p(a1+1,a2-1)|
double c2_recursion_defect(double p, int alpha1_lo, int alpha1_hi);

// exact d = 3 table at p = 2n: coefficients of psi^n conj(psi)^{n-1},
// psi = zeta_1+zeta_2+zeta_3 (slice 2n-1 of the hexagonal Pascal pyramid;
// the OEIS slice numbering differs by one)
CoeffTable c3_even(unsigned n);

// applies the d = 3 recursion in p once (p -> p+2) to an exact table
CoeffTable c3_recursion_step(const CoeffTable& table);

// quadrature evaluation of a single d = 3 coefficient at real p >= 1
ValErr c3_quadrature(double p, const ExponentIndex& alpha, const QuadratureSpec& spec);

} // namespace hilb

#endif

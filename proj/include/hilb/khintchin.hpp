#ifndef HILB_KHINTCHIN_HPP
#define HILB_KHINTCHIN_HPP

#include <vector>

#include "hilb/projection.hpp"
#include "hilb/rational.hpp"

namespace hilb {

struct KhintchinConstants {
    double p = 0.0;
    double a_p = 0.0; // min(1, Gamma(1+p/2)^(1/p))
    double b_p = 0.0; // max(1, Gamma(1+p/2)^(1/p))
};

KhintchinConstants khintchin_constants(double p);

// K_p(c) = ||c_1 z_1 + ... + c_d z_d||_{H^p} on the unit sphere of C^d;
// exact even-p route when the coefficients allow it
ValErr k_functional(const CoefVec& c, double p, const QuadratureSpec& spec);

// ||d^{-1/2} (z_1 + ... + z_d)||_{H^p}; rejects d > 6 at non-even p
ValErr equal_coeff_norm(int d, double p, const QuadratureSpec& spec);

// exact ||d^{-1/2} sum z_j||_{2n}^{2n}
Rational equal_coeff_norm_even_pow(int d, unsigned n);

struct CltRow {
    int d = 0;
    double norm = 0.0;
    double bound = 0.0;
    double gap = 0.0;
};

// monotone approach of the equal-coefficient norms to the sharp constant
// Gamma(1+p/2)^(1/p); requires p > 2
std::vector<CltRow> clt_limit_check(double p, const std::vector<int>& d_list,
                                    const QuadratureSpec& spec);

// norm of the projected finite-difference gradient of K_p on the sphere at c
// (central differences, step h, in an orthonormal tangent chart)
double sphere_gradient_norm(const CoefVec& c, double p, const QuadratureSpec& spec,
                            double h = 1e-4);

} // namespace hilb

#endif

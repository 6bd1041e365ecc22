#ifndef HILB_GAUSS_HPP
#define HILB_GAUSS_HPP

#include <vector>

namespace hilb {

struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// n-point Gauss-Legendre rule on [-1, 1]; cached, thread-safe
const GaussRule& gauss_legendre(int n);

// n-point Gauss rule on [0, 1] for the weight 2r dr (Jacobi (0,1) after an
// affine map); exact for integrands of degree <= 2n-1.  Cached, thread-safe.
const GaussRule& gauss_radial(int n);

} // namespace hilb

#endif

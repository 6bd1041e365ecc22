#ifndef HILB_QUADRATURE_HPP
#define HILB_QUADRATURE_HPP

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "hilb/coeff.hpp"

namespace hilb {

// Knobs for torus/radial/disc integration.  angular_points is the base
// tensor-grid resolution per torus dimension; the graded low-dimensional
// paths derive their panel budget from it.
struct QuadratureSpec {
    int angular_points = 256;
    int radial_order = 64;
    double target_tol = 1e-6;
    int max_refine = 6;

    void validate() const;
};

struct ValErr {
    double value = 0.0;
    double error = 0.0;
};

struct CValErr {
    Complex value{0.0, 0.0};
    double error = 0.0;
};

// Composite Gauss rule on [a,b] with geometric panel grading toward each
// cusp; cusps may include the endpoints.  f is never evaluated at a cusp.
double integrate_cusped(const std::function<double(double)>& f, double a, double b,
                        std::vector<double> cusps, int order);
Complex integrate_cusped_complex(const std::function<Complex(double)>& f, double a, double b,
                                 std::vector<double> cusps, int order);

// Tensor-product equal-weight rule over (T)^k with grid doubling; exact for
// trigonometric polynomials of per-variable degree < grid size.  Reports the
// best estimate with a doubling-difference error bound; never throws on
// nonconvergence.
CValErr torus_integrate(const std::function<Complex(std::span<const Complex>)>& f, int k,
                        const QuadratureSpec& spec);

// int_0^1 g(r) 2r dr by the Gauss rule for that weight; exact for polynomial
// g of degree <= 2*radial_order - 1
double radial_integrate(const std::function<double(double)>& g, const QuadratureSpec& spec);

// circle average int_T |a + b z|^s dm_1(z); closed form via the Gauss
// hypergeometric series, direct quadrature fallback when the modulus ratio
// exceeds 0.999.  Throws on the divergent cases.
double ring_integral(Complex a, Complex b, double s);

// maps a radius to the angular cusp positions (in [0, 2pi)) at that radius
using AngularCuspLocator = std::function<std::vector<double>(double r)>;

// integral over the unit disc, area normalized so that A(D) = 1; polar
// product rule with graded angular subdivision near flagged singular angles
CValErr disc_integrate(const std::function<Complex(Complex)>& f, const QuadratureSpec& spec,
                       const AngularCuspLocator& cusp_locator = nullptr);

// int_{T^d} |sum_k mods_k zeta_k|^s dm_d for nonnegative mods, s > -2 on the
// nonempty support.  Fixes one variable by rotation invariance, eliminates
// another through ring averages, and splits remaining angles at the
// singular crossings.
ValErr affine_torus_moment(const std::vector<double>& mods, double s,
                           const QuadratureSpec& spec);

// single-resolution variant used inside iteration loops
double affine_torus_moment_value(const std::vector<double>& mods, double s,
                                 const QuadratureSpec& spec, int level = 0);

} // namespace hilb

#endif

#ifndef HILB_PROJECTION_HPP
#define HILB_PROJECTION_HPP

#include <vector>

#include "hilb/polyalg.hpp"
#include "hilb/quadrature.hpp"

namespace hilb {

// Coefficient vector of a 1-homogeneous polynomial sum_j c_j z_j.
class CoefVec {
public:
    explicit CoefVec(std::vector<Coeff> coeffs);
    static CoefVec from_complex(const std::vector<Complex>& values);
    static CoefVec from_reals(const std::vector<double>& values);

    int dim() const { return static_cast<int>(coeffs_.size()); }
    const std::vector<Coeff>& coeffs() const { return coeffs_; }
    const Coeff& operator[](int j) const { return coeffs_[static_cast<size_t>(j)]; }

    bool nontrivial() const;
    bool all_exact() const;
    std::vector<double> moduli() const;
    double h2_norm() const;
    CoefVec normalized() const;

    LaurentPoly to_laurent() const;

private:
    std::vector<Coeff> coeffs_;
};

// The d radial/torus integrals of the projection formula, one per coordinate.
struct IjValues {
    double p = 0.0;
    std::vector<double> values;
    std::vector<double> error_estimates;
};

// I_j = int_0^1 int_{T^d} |phi_j(zeta, r)|^{p-2} dm_d(zeta) 2r dr where the
// j-th coordinate is scaled by r; depends only on the coefficient moduli.
// j is 0-based.
ValErr ij_integral(const CoefVec& c, double p, int j, const QuadratureSpec& spec,
                   bool with_error = true);

IjValues ij_all(const CoefVec& c, double p, const QuadratureSpec& spec, bool with_errors = true);

// P(|phi|^{p-2} phi) for 1-homogeneous phi: j-th output coefficient is
// (p/2) c_j I_j; phases of c_j are preserved exactly.
CoefVec project_linear(const CoefVec& c, double p, const QuadratureSpec& spec,
                       IjValues* ij_out = nullptr);

// Exact route at p = 2n + 2: j-th coefficient is
// c_j (n+1) sum_{|alpha| = n} C(n,alpha)^2 c^{2 alpha} / (alpha_j + 1),
// rational whenever the coefficient moduli are.
CoefVec project_linear_even(const CoefVec& c, unsigned n);

// normalized nonlinear projection: project_linear scaled to unit H^2 norm
CoefVec normalized_op(const CoefVec& c, double p, const QuadratureSpec& spec);

// enumeration cap for the multinomial route (n times d)
inline constexpr unsigned kMultinomialCap = 64;

// true iff f is analytic with every term of total degree 1
bool is_one_homogeneous(const LaurentPoly& f);

// extracts the c_j from a 1-homogeneous polynomial
CoefVec coefvec_from_poly(const LaurentPoly& f);

// visits all alpha in N0^d with |alpha| = n in lexicographic order
void for_each_multi_index(int d, unsigned n,
                          const std::function<void(const std::vector<unsigned>&)>& visit);

// exact multinomial coefficient n! / prod alpha_k!; throws on int64 overflow
long long multinomial(unsigned n, const std::vector<unsigned>& alpha);

} // namespace hilb

#endif

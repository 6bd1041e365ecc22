#ifndef HILB_COEFF_HPP
#define HILB_COEFF_HPP

#include <complex>

#include "hilb/rational.hpp"

namespace hilb {

using Complex = std::complex<double>;

// A complex scalar with a dual representation: exact Gaussian-rational value
// when constructible, plain double-precision otherwise.  Mixing an exact and
// an inexact operand demotes the result to floating point.
class Coeff {
public:
    Coeff() : exact_(true), re_(0), im_(0), approx_(0.0, 0.0) {}
    Coeff(const Rational& re, const Rational& im = Rational(0))
        : exact_(true), re_(re), im_(im), approx_(re.to_double(), im.to_double()) {}
    Coeff(long long n) : Coeff(Rational(n)) {}
    explicit Coeff(Complex v) : exact_(false), re_(0), im_(0), approx_(v) {}

    static Coeff one() { return Coeff(Rational(1)); }

    bool exact() const { return exact_; }
    const Rational& re_exact() const { return re_; }
    const Rational& im_exact() const { return im_; }
    Complex value() const { return approx_; }

    bool is_zero() const {
        return exact_ ? (re_.is_zero() && im_.is_zero())
                      : (approx_.real() == 0.0 && approx_.imag() == 0.0);
    }

    Coeff conj() const {
        if (exact_) return Coeff(re_, -im_);
        return Coeff(std::conj(approx_));
    }

    friend Coeff operator+(const Coeff& a, const Coeff& b) {
        if (a.exact_ && b.exact_) return Coeff(a.re_ + b.re_, a.im_ + b.im_);
        return Coeff(a.approx_ + b.approx_);
    }
    friend Coeff operator-(const Coeff& a, const Coeff& b) {
        if (a.exact_ && b.exact_) return Coeff(a.re_ - b.re_, a.im_ - b.im_);
        return Coeff(a.approx_ - b.approx_);
    }
    friend Coeff operator*(const Coeff& a, const Coeff& b) {
        if (a.exact_ && b.exact_) {
            return Coeff(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
        }
        return Coeff(a.approx_ * b.approx_);
    }
    Coeff operator-() const {
        if (exact_) return Coeff(-re_, -im_);
        return Coeff(-approx_);
    }
    Coeff& operator+=(const Coeff& o) { return *this = *this + o; }
    Coeff& operator-=(const Coeff& o) { return *this = *this - o; }
    Coeff& operator*=(const Coeff& o) { return *this = *this * o; }

    // |.|^2 stays rational for exact values.
    Rational abs2_exact() const {
        if (!exact_) throw std::logic_error("abs2_exact on inexact coefficient");
        return re_ * re_ + im_ * im_;
    }
    double abs2() const { return std::norm(approx_); }
    double abs() const { return std::abs(approx_); }

    // exact equality for exact pairs, bitwise for float pairs
    friend bool operator==(const Coeff& a, const Coeff& b) {
        if (a.exact_ && b.exact_) return a.re_ == b.re_ && a.im_ == b.im_;
        return !a.exact_ && !b.exact_ && a.approx_ == b.approx_;
    }
    friend bool operator!=(const Coeff& a, const Coeff& b) { return !(a == b); }

private:
    bool exact_;
    Rational re_, im_;
    Complex approx_;
};

} // namespace hilb

#endif

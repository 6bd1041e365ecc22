#ifndef HILB_RATIONAL_HPP
#define HILB_RATIONAL_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hilb {

// Exact rational arithmetic on int64 numerator/denominator, always kept in
// lowest terms with positive denominator.  Operations that would leave the
// int64 range throw overflow_error instead of silently losing exactness;
// callers that cannot tolerate that should work in floating point.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d);

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

    double to_double() const;

    Rational operator-() const { return Rational(-num_, den_); }
    Rational abs() const { return num_ < 0 ? -*this : *this; }

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b);
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    // nonnegative integer exponent
    Rational pow(unsigned e) const;

    std::string to_string() const;

    // Parses "3", "-7/4" or a decimal literal like "0.125" exactly.
    static Rational parse(const std::string& text);

private:
    long long num_;
    long long den_;
};

} // namespace hilb

#endif

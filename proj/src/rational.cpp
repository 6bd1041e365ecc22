#include "hilb/rational.hpp"

#include <cstdlib>
#include <numeric>

namespace hilb {

namespace {

using i128 = __int128;

long long checked_i64(i128 v, const char* what) {
    if (v > i128(INT64_MAX) || v < i128(INT64_MIN)) {
        throw std::overflow_error(std::string("rational overflow in ") + what +
                                  "; rerun in floating-point mode");
    }
    return static_cast<long long>(v);
}

i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Rational make_reduced(i128 n, i128 d, const char* what) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    if (n == 0) return Rational(0);
    if (d < 0) {
        n = -n;
        d = -d;
    }
    i128 g = gcd128(n, d);
    return Rational(checked_i64(n / g, what), checked_i64(d / g, what));
}

} // namespace

Rational::Rational(long long n, long long d) : num_(n), den_(d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    num_ /= g;
    den_ /= g;
}

double Rational::to_double() const {
    return static_cast<double>(static_cast<long double>(num_) / static_cast<long double>(den_));
}

Rational operator+(const Rational& a, const Rational& b) {
    return make_reduced(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                        i128(a.den_) * b.den_, "+");
}

Rational operator-(const Rational& a, const Rational& b) {
    return make_reduced(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                        i128(a.den_) * b.den_, "-");
}

Rational operator*(const Rational& a, const Rational& b) {
    return make_reduced(i128(a.num_) * b.num_, i128(a.den_) * b.den_, "*");
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("rational division by zero");
    return make_reduced(i128(a.num_) * b.den_, i128(a.den_) * b.num_, "/");
}

bool operator<(const Rational& a, const Rational& b) {
    return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
}

Rational Rational::pow(unsigned e) const {
    Rational r(1);
    Rational base = *this;
    while (e > 0) {
        if (e & 1u) r *= base;
        base = (e >>= 1) ? base * base : base;
    }
    return r;
}

std::string Rational::to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        Rational n = parse(text.substr(0, slash));
        Rational d = parse(text.substr(slash + 1));
        return n / d;
    }
    auto dot = text.find('.');
    std::string digits = text;
    long long scale = 1;
    if (dot != std::string::npos) {
        digits = text.substr(0, dot) + text.substr(dot + 1);
        size_t frac = text.size() - dot - 1;
        for (size_t i = 0; i < frac; ++i) {
            if (scale > INT64_MAX / 10) throw std::overflow_error("decimal literal too long");
            scale *= 10;
        }
    }
    size_t pos = 0;
    long long v = 0;
    try {
        v = std::stoll(digits, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad rational literal: " + text);
    }
    if (pos != digits.size()) throw std::invalid_argument("bad rational literal: " + text);
    return Rational(v, scale);
}

} // namespace hilb

#include "hilb/parse.hpp"

#include <cctype>
#include <charconv>
#include <cmath>

namespace hilb {

namespace {

class Parser {
public:
    Parser(const std::string& text, bool allow_negative) : text_(text), neg_ok_(allow_negative) {}

    LaurentPoly run() {
        skip_ws();
        if (eof()) fail("empty polynomial");
        int dim = 1;
        // first pass just to find the dimension
        for (size_t i = 0; i + 1 < text_.size(); ++i) {
            if ((text_[i] == 'z' || text_[i] == 'Z') && std::isdigit(text_[i + 1])) {
                dim = std::max(dim, text_[i + 1] - '0');
            }
        }
        LaurentPoly poly(dim);
        bool negate = consume_sign();
        while (true) {
            parse_term(poly, dim, negate);
            skip_ws();
            if (eof()) break;
            if (peek() == '+') {
                ++pos_;
                negate = false;
            } else if (peek() == '-') {
                ++pos_;
                negate = true;
            } else {
                fail("expected '+' or '-' between terms");
            }
            skip_ws();
        }
        if (poly.dim() != dim) fail("internal dimension mismatch");
        return poly;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("polynomial syntax error at position " +
                                    std::to_string(pos_) + ": " + what);
    }

    bool eof() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    bool consume_sign() {
        bool negate = false;
        skip_ws();
        while (!eof() && (peek() == '+' || peek() == '-')) {
            if (peek() == '-') negate = !negate;
            ++pos_;
            skip_ws();
        }
        return negate;
    }

    long long parse_digits() {
        skip_ws();
        if (eof() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected digits");
        long long v = 0;
        size_t count = 0;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
            if (v > (INT64_MAX - 9) / 10) fail("numeric literal too large");
            v = 10 * v + (peek() - '0');
            ++pos_;
            ++count;
        }
        if (count == 0) fail("expected digits");
        return v;
    }

    Rational parse_number() {
        // digits[.digits][/digits[.digits]]
        const size_t start = pos_;
        long long whole = parse_digits();
        Rational value(whole);
        if (!eof() && peek() == '.') {
            ++pos_;
            const size_t frac_start = pos_;
            long long frac = parse_digits();
            long long scale = 1;
            for (size_t i = 0; i < pos_ - frac_start; ++i) {
                if (scale > INT64_MAX / 10) fail("decimal literal too long");
                scale *= 10;
            }
            value = value + Rational(frac, scale);
        }
        skip_ws();
        if (!eof() && peek() == '/') {
            ++pos_;
            skip_ws();
            bool neg = false;
            while (!eof() && (peek() == '+' || peek() == '-')) {
                if (peek() == '-') neg = !neg;
                ++pos_;
                skip_ws();
            }
            Rational den(parse_digits());
            if (!eof() && peek() == '.') {
                ++pos_;
                const size_t frac_start = pos_;
                long long frac = parse_digits();
                long long scale = 1;
                for (size_t i = 0; i < pos_ - frac_start; ++i) scale *= 10;
                den = den + Rational(frac, scale);
            }
            if (den.is_zero()) {
                pos_ = start;
                fail("division by zero in coefficient");
            }
            value = value / den;
            if (neg) value = -value;
        }
        return value;
    }

    // one multiplicative factor; updates the running coefficient/exponent
    bool parse_factor(Coeff& coeff, ExponentIndex& expo) {
        skip_ws();
        if (eof()) return false;
        const char c = peek();
        if (c == '(') {
            ++pos_;
            const bool neg = consume_sign();
            Rational v = parse_number();
            skip_ws();
            if (eof() || peek() != ')') fail("expected ')'");
            ++pos_;
            coeff *= Coeff(neg ? -v : v);
            return true;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            coeff *= Coeff(parse_number());
            return true;
        }
        if (c == 'i' || c == 'I') {
            ++pos_;
            coeff *= Coeff(Rational(0), Rational(1));
            return true;
        }
        if (c == 'z' || c == 'Z') {
            ++pos_;
            if (eof() || !std::isdigit(static_cast<unsigned char>(peek()))) {
                fail("expected a variable index after 'z'");
            }
            const int idx = peek() - '0';
            if (idx < 1) fail("variable indices start at z1");
            ++pos_;
            long long power = 1;
            skip_ws();
            if (!eof() && peek() == '^') {
                ++pos_;
                skip_ws();
                bool neg = false;
                while (!eof() && (peek() == '+' || peek() == '-')) {
                    if (peek() == '-') neg = !neg;
                    ++pos_;
                    skip_ws();
                }
                power = parse_digits();
                if (neg) power = -power;
                if (power < 0 && !neg_ok_) {
                    fail("negative exponents are not allowed in an analytic context");
                }
                if (power > 1000 || power < -1000) fail("exponent out of range");
            }
            expo[static_cast<size_t>(idx - 1)] += static_cast<int>(power);
            return true;
        }
        return false;
    }

    void parse_term(LaurentPoly& poly, int dim, bool negate) {
        Coeff coeff = Coeff(Rational(1));
        ExponentIndex expo(static_cast<size_t>(dim), 0);
        bool any = false;
        while (true) {
            if (!parse_factor(coeff, expo)) {
                if (!any) fail("expected a coefficient or variable");
                break;
            }
            any = true;
            skip_ws();
            if (!eof() && peek() == '*') {
                ++pos_;
                continue;
            }
            if (!eof() && (peek() == 'z' || peek() == 'Z' || peek() == 'i' || peek() == 'I' ||
                           peek() == '(')) {
                continue; // juxtaposition
            }
            break;
        }
        poly.add_term(expo, negate ? -coeff : coeff);
    }

    const std::string& text_;
    bool neg_ok_;
    size_t pos_ = 0;
};

std::string rational_factor(const Rational& r) {
    if (r.is_integer()) return r.to_string();
    return "(" + r.to_string() + ")";
}

std::string monomial_string(const ExponentIndex& alpha) {
    std::string out;
    for (size_t k = 0; k < alpha.size(); ++k) {
        if (alpha[k] == 0) continue;
        if (!out.empty()) out += "*";
        out += "z" + std::to_string(k + 1);
        if (alpha[k] != 1) out += "^" + std::to_string(alpha[k]);
    }
    return out;
}

std::string format_shortest(double v) {
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

// appends "<sign> <abs-coeff>*<monomial>" for one real or imaginary piece
void append_piece(std::string& out, bool negative, const std::string& coeff_abs,
                  const std::string& mono, bool imaginary) {
    if (out.empty()) {
        if (negative) out += "-";
    } else {
        out += negative ? " - " : " + ";
    }
    const bool unit = coeff_abs == "1";
    if (!unit || (mono.empty() && !imaginary)) out += coeff_abs;
    if (imaginary) {
        if (!unit) out += "*";
        out += "i";
    }
    if (!mono.empty()) {
        if (!unit || imaginary) out += "*";
        out += mono;
    }
}

} // namespace

LaurentPoly parse_poly(const std::string& text, bool allow_negative_exponents) {
    Parser parser(text, allow_negative_exponents);
    return parser.run();
}

std::string render_poly(const LaurentPoly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (const auto& [alpha, c] : f.terms()) {
        const std::string mono = monomial_string(alpha);
        if (c.exact()) {
            const Rational re = c.re_exact();
            const Rational im = c.im_exact();
            if (!re.is_zero()) {
                append_piece(out, re.sign() < 0, rational_factor(re.abs()), mono, false);
            }
            if (!im.is_zero()) {
                append_piece(out, im.sign() < 0, rational_factor(im.abs()), mono, true);
            }
        } else {
            const Complex v = c.value();
            if (v.real() != 0.0) {
                append_piece(out, v.real() < 0.0, format_shortest(std::fabs(v.real())), mono,
                             false);
            }
            if (v.imag() != 0.0) {
                append_piece(out, v.imag() < 0.0, format_shortest(std::fabs(v.imag())), mono,
                             true);
            }
        }
    }
    return out.empty() ? "0" : out;
}

} // namespace hilb

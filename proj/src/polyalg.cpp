#include "hilb/polyalg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <nlohmann/json.hpp>

namespace hilb {

namespace {

void check_dims(const LaurentPoly& f, const LaurentPoly& g, const char* op) {
    if (f.dim() != g.dim()) {
        throw std::invalid_argument(std::string(op) + ": dimension mismatch (" +
                                    std::to_string(f.dim()) + " vs " +
                                    std::to_string(g.dim()) + ")");
    }
}

void check_index(const ExponentIndex& alpha, int dim) {
    if (static_cast<int>(alpha.size()) != dim) {
        throw std::invalid_argument("exponent index length " + std::to_string(alpha.size()) +
                                    " does not match dimension " + std::to_string(dim));
    }
}

} // namespace

LaurentPoly::LaurentPoly(int dim) : dim_(dim) {
    if (dim < 1) throw std::invalid_argument("LaurentPoly dimension must be >= 1");
}

bool LaurentPoly::all_exact() const {
    for (const auto& [a, c] : terms_) {
        if (!c.exact()) return false;
    }
    return true;
}

Coeff LaurentPoly::coefficient(const ExponentIndex& alpha) const {
    check_index(alpha, dim_);
    auto it = terms_.find(alpha);
    return it == terms_.end() ? Coeff() : it->second;
}

void LaurentPoly::set_coefficient(const ExponentIndex& alpha, const Coeff& c) {
    check_index(alpha, dim_);
    if (c.is_zero()) {
        terms_.erase(alpha);
    } else {
        terms_[alpha] = c;
    }
}

void LaurentPoly::add_term(const ExponentIndex& alpha, const Coeff& c) {
    check_index(alpha, dim_);
    auto it = terms_.find(alpha);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(alpha, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

bool LaurentPoly::analytic() const {
    for (const auto& [a, c] : terms_) {
        for (int e : a) {
            if (e < 0) return false;
        }
    }
    return true;
}

int LaurentPoly::total_degree() const {
    int deg = 0;
    for (const auto& [a, c] : terms_) {
        int s = 0;
        for (int e : a) s += std::max(e, 0);
        deg = std::max(deg, s);
    }
    return deg;
}

LaurentPoly LaurentPoly::monomial(int dim, const ExponentIndex& alpha, const Coeff& c) {
    LaurentPoly f(dim);
    f.set_coefficient(alpha, c);
    return f;
}

void LaurentPoly::prune() {
    double max_abs = 0.0;
    for (const auto& [a, c] : terms_) max_abs = std::max(max_abs, c.abs());
    const double floor = 1e-15 * max_abs;
    for (auto it = terms_.begin(); it != terms_.end();) {
        const Coeff& c = it->second;
        bool drop = c.exact() ? c.is_zero() : (c.abs() <= floor);
        it = drop ? terms_.erase(it) : std::next(it);
    }
}

LaurentPoly lp_mul(const LaurentPoly& f, const LaurentPoly& g) {
    check_dims(f, g, "lp_mul");
    LaurentPoly out(f.dim());
    ExponentIndex sum(static_cast<size_t>(f.dim()));
    for (const auto& [af, cf] : f.terms()) {
        for (const auto& [ag, cg] : g.terms()) {
            for (int k = 0; k < f.dim(); ++k) sum[static_cast<size_t>(k)] = af[k] + ag[k];
            out.add_term(sum, cf * cg);
        }
    }
    out.prune();
    return out;
}

LaurentPoly lp_conj(const LaurentPoly& f) {
    LaurentPoly out(f.dim());
    for (const auto& [a, c] : f.terms()) {
        ExponentIndex neg(a.size());
        for (size_t k = 0; k < a.size(); ++k) neg[k] = -a[k];
        out.set_coefficient(neg, c.conj());
    }
    return out;
}

LaurentPoly lp_add(const LaurentPoly& f, const LaurentPoly& g) {
    check_dims(f, g, "lp_add");
    LaurentPoly out = f;
    for (const auto& [a, c] : g.terms()) out.add_term(a, c);
    out.prune();
    return out;
}

LaurentPoly lp_scale(const LaurentPoly& f, const Coeff& c) {
    LaurentPoly out(f.dim());
    for (const auto& [a, cf] : f.terms()) out.set_coefficient(a, cf * c);
    out.prune();
    return out;
}

LaurentPoly lp_pow(const LaurentPoly& f, unsigned n) {
    LaurentPoly out = LaurentPoly::monomial(f.dim(), ExponentIndex(static_cast<size_t>(f.dim()), 0),
                                            Coeff::one());
    LaurentPoly base = f;
    while (n > 0) {
        if (n & 1u) out = lp_mul(out, base);
        n >>= 1;
        if (n > 0) base = lp_mul(base, base);
    }
    return out;
}

LaurentPoly riesz_project(const LaurentPoly& f) {
    LaurentPoly out(f.dim());
    for (const auto& [a, c] : f.terms()) {
        if (std::all_of(a.begin(), a.end(), [](int e) { return e >= 0; })) {
            out.set_coefficient(a, c);
        }
    }
    return out;
}

LaurentPoly homogeneous_part(const LaurentPoly& f, int m) {
    LaurentPoly out(f.dim());
    for (const auto& [a, c] : f.terms()) {
        int s = 0;
        for (int e : a) s += e;
        if (s == m) out.set_coefficient(a, c);
    }
    return out;
}

Complex h2_inner(const LaurentPoly& f, const LaurentPoly& g) {
    check_dims(f, g, "h2_inner");
    Complex acc(0.0, 0.0);
    const auto& smaller = f.term_count() <= g.term_count() ? f : g;
    const auto& other = f.term_count() <= g.term_count() ? g : f;
    const bool swapped = &smaller != &f;
    for (const auto& [a, c] : smaller.terms()) {
        auto it = other.terms().find(a);
        if (it == other.terms().end()) continue;
        acc += swapped ? it->second.value() * std::conj(c.value())
                       : c.value() * std::conj(it->second.value());
    }
    return acc;
}

Rational h2_norm_sq_exact(const LaurentPoly& f) {
    Rational acc(0);
    for (const auto& [a, c] : f.terms()) acc += c.abs2_exact();
    return acc;
}

Rational hp_norm_even_pow_exact(const LaurentPoly& f, unsigned n) {
    if (n == 0) throw std::invalid_argument("hp_norm_even: n must be >= 1");
    if (!f.analytic()) throw std::invalid_argument("hp_norm_even: analytic support required");
    return h2_norm_sq_exact(lp_pow(f, n));
}

double hp_norm_even(const LaurentPoly& f, unsigned n) {
    if (n == 0) throw std::invalid_argument("hp_norm_even: n must be >= 1");
    if (!f.analytic()) throw std::invalid_argument("hp_norm_even: analytic support required");
    if (f.all_exact()) {
        return std::pow(hp_norm_even_pow_exact(f, n).to_double(), 1.0 / (2.0 * n));
    }
    double acc = 0.0;
    for (const auto& [a, c] : lp_pow(f, n).terms()) acc += c.abs2();
    return std::pow(acc, 1.0 / (2.0 * n));
}

LaurentPoly nonlinear_image_even(const LaurentPoly& f, unsigned n) {
    if (!f.analytic()) {
        throw std::invalid_argument("nonlinear_image_even: analytic support required");
    }
    return riesz_project(lp_mul(lp_pow(f, n + 1), lp_pow(lp_conj(f), n)));
}

std::string lp_to_json(const LaurentPoly& f) {
    nlohmann::ordered_json j;
    j["dim"] = f.dim();
    j["terms"] = nlohmann::ordered_json::array();
    for (const auto& [a, c] : f.terms()) {
        nlohmann::ordered_json t;
        t["alpha"] = a;
        t["re"] = c.value().real();
        t["im"] = c.value().imag();
        j["terms"].push_back(t);
    }
    return j.dump();
}

LaurentPoly lp_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    LaurentPoly f(j.at("dim").get<int>());
    for (const auto& t : j.at("terms")) {
        ExponentIndex a = t.at("alpha").get<ExponentIndex>();
        f.add_term(a, Coeff(Complex(t.at("re").get<double>(), t.at("im").get<double>())));
    }
    return f;
}

} // namespace hilb

#include "hilb/dynamics.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "hilb/rng.hpp"

namespace hilb {

double Rng::gaussian() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u = uniform();
    while (u == 0.0) u = uniform();
    const double v = uniform();
    const double r = std::sqrt(-2.0 * std::log(u));
    const double twopi = 6.283185307179586476925286766559;
    have_spare_ = true;
    spare_ = r * std::sin(twopi * v);
    return r * std::cos(twopi * v);
}

void StoppingRule::validate() const {
    if (max_iters < 1) throw std::invalid_argument("StoppingRule: max_iters must be >= 1");
    if (!(fixed_point_tol > 0.0)) {
        throw std::invalid_argument("StoppingRule: fixed_point_tol must be > 0");
    }
    if (stall_window < 2) throw std::invalid_argument("StoppingRule: stall window too small");
}

std::string to_string(LimitClass c) {
    switch (c) {
        case LimitClass::EqualModulusLimit: return "equal-modulus-limit";
        case LimitClass::SingleCoordinateLimit: return "single-coordinate-limit";
        case LimitClass::FixedFromStart: return "fixed-from-start";
        case LimitClass::Unresolved: return "unresolved";
    }
    return "unresolved";
}

namespace {

double h2_distance(const CoefVec& a, const CoefVec& b) {
    double acc = 0.0;
    for (int j = 0; j < a.dim(); ++j) {
        acc += std::norm(a[j].value() - b[j].value());
    }
    return std::sqrt(acc);
}

} // namespace

LimitClass classify_limit(const IterationTrace& trace) {
    if (trace.residuals.empty()) return LimitClass::Unresolved;
    const double tol = trace.tol_used;
    if (trace.residuals.front() < tol) return LimitClass::FixedFromStart;
    if (!trace.quadrature_ok || trace.residuals.back() >= tol) return LimitClass::Unresolved;

    const CoefVec& last = trace.iterates.back();
    const double band = 10.0 * tol;
    std::vector<double> nonzero;
    for (int j = 0; j < last.dim(); ++j) {
        if (!last[j].is_zero()) nonzero.push_back(last[j].abs());
    }
    if (nonzero.empty()) return LimitClass::Unresolved;

    int dominant = 0;
    for (double m : nonzero) {
        if (m > 1.0 - band) ++dominant;
    }
    if (dominant == 1) return LimitClass::SingleCoordinateLimit;

    const auto [lo, hi] = std::minmax_element(nonzero.begin(), nonzero.end());
    if (*hi - *lo <= band) return LimitClass::EqualModulusLimit;
    return LimitClass::Unresolved;
}

IterationTrace iterate(const CoefVec& c0, double p, const StoppingRule& rule,
                       const QuadratureSpec& spec) {
    if (p < 1.0) throw std::invalid_argument("iterate: p must be >= 1");
    if (!c0.nontrivial()) throw std::invalid_argument("iterate: trivial start");
    rule.validate();
    spec.validate();

    IterationTrace trace{p, c0.normalized(), {}, {}, LimitClass::Unresolved,
                         rule.fixed_point_tol, true};
    trace.iterates.push_back(trace.start);

    for (int n = 0; n < rule.max_iters; ++n) {
        try {
            CoefVec next = normalized_op(trace.iterates.back(), p, spec);
            const double resid = h2_distance(next, trace.iterates.back());
            trace.iterates.push_back(std::move(next));
            trace.residuals.push_back(resid);
        } catch (const std::exception&) {
            trace.quadrature_ok = false;
            break;
        }
        if (trace.residuals.back() < rule.fixed_point_tol) break;
        const int w = rule.stall_window;
        if (static_cast<int>(trace.residuals.size()) > w &&
            trace.residuals.back() >=
                0.999 * trace.residuals[trace.residuals.size() - 1 - static_cast<size_t>(w)]) {
            break; // stalled
        }
    }
    trace.classification = classify_limit(trace);
    return trace;
}

CoefVec random_positive_unit(int d, std::uint64_t seed, bool random_phases) {
    if (d < 1) throw std::invalid_argument("random_positive_unit: d must be >= 1");
    Rng rng(seed);
    while (true) {
        std::vector<Complex> v(static_cast<size_t>(d));
        double norm2 = 0.0;
        for (int j = 0; j < d; ++j) {
            const double g = std::fabs(rng.gaussian());
            v[static_cast<size_t>(j)] = Complex(g, 0.0);
            norm2 += g * g;
        }
        if (norm2 == 0.0) continue;
        const double inv = 1.0 / std::sqrt(norm2);
        for (auto& z : v) z *= inv;
        if (random_phases) {
            for (auto& z : v) {
                const double th = 2.0 * 3.141592653589793238462643383279502884 * rng.uniform();
                z *= Complex(std::cos(th), std::sin(th));
            }
        }
        // strict largest coordinate (redraw on ties, which have measure zero)
        std::vector<double> mods;
        mods.reserve(v.size());
        for (const auto& z : v) mods.push_back(std::abs(z));
        auto it = std::max_element(mods.begin(), mods.end());
        bool strict = true;
        for (size_t k = 0; k < mods.size(); ++k) {
            if (static_cast<long>(k) != it - mods.begin() && mods[k] >= *it) strict = false;
        }
        if (!strict) continue;
        return CoefVec::from_complex(v);
    }
}

ExperimentReport conjecture_experiment(int d, double p, int trials, std::uint64_t seed,
                                       const QuadratureSpec& spec, const StoppingRule& rule,
                                       bool random_phases) {
    if (d < 2) throw std::invalid_argument("conjecture_experiment: d must be >= 2");
    if (trials < 0) throw std::invalid_argument("conjecture_experiment: trials must be >= 0");
    ExperimentReport report;
    report.d = d;
    report.p = p;
    report.trials = trials;
    report.seed = seed;
    if (trials == 0) return report;

    auto run_trial = [&](int t) -> TrialResult {
        TrialResult res;
        res.trial_seed = Rng::derive_seed(seed, static_cast<std::uint64_t>(t));
        const CoefVec start = random_positive_unit(d, res.trial_seed, random_phases);
        const std::vector<double> m0 = start.moduli();
        res.start_argmax = static_cast<int>(
            std::max_element(m0.begin(), m0.end()) - m0.begin());
        const IterationTrace trace = iterate(start, p, rule, spec);
        res.classification = trace.classification;
        res.iterations = static_cast<int>(trace.residuals.size());
        const std::vector<double> ml = trace.iterates.back().moduli();
        res.limit_argmax = static_cast<int>(
            std::max_element(ml.begin(), ml.end()) - ml.begin());
        double prev_largest = m0[static_cast<size_t>(res.start_argmax)];
        for (size_t k = 1; k < trace.iterates.size(); ++k) {
            const std::vector<double> mk = trace.iterates[k].moduli();
            const double largest = *std::max_element(mk.begin(), mk.end());
            if (largest < prev_largest - 1e-12) ++res.largest_modulus_violations;
            prev_largest = largest;
        }
        return res;
    };

    const unsigned workers =
        std::max(1u, std::min(std::thread::hardware_concurrency(), 8u));
    report.results.resize(static_cast<size_t>(trials));
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            while (true) {
                const int t = next.fetch_add(1);
                if (t >= trials) return;
                report.results[static_cast<size_t>(t)] = run_trial(t);
            }
        });
    }
    for (auto& th : pool) th.join();

    int single_at_largest = 0;
    for (const TrialResult& r : report.results) {
        if (r.classification == LimitClass::SingleCoordinateLimit &&
            r.limit_argmax == r.start_argmax) {
            ++single_at_largest;
        }
        if (r.classification == LimitClass::Unresolved) ++report.unresolved;
        report.monotonicity_violations += r.largest_modulus_violations;
    }
    report.fraction_single_at_largest = static_cast<double>(single_at_largest) / trials;
    return report;
}

} // namespace hilb

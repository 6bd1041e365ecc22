#ifndef HILB_DYNAMICS_HPP
#define HILB_DYNAMICS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hilb/projection.hpp"

namespace hilb {

struct StoppingRule {
    int max_iters = 400;
    double fixed_point_tol = 1e-9;
    int stall_window = 25;

    void validate() const;
};

enum class LimitClass {
    EqualModulusLimit,
    SingleCoordinateLimit,
    FixedFromStart,
    Unresolved,
};

std::string to_string(LimitClass c);

struct IterationTrace {
    double p = 0.0;
    CoefVec start;
    std::vector<CoefVec> iterates; // unit H^2 norm, iterates[0] is the normalized start
    std::vector<double> residuals; // H^2 distance between successive iterates
    LimitClass classification = LimitClass::Unresolved;
    double tol_used = 0.0;
    bool quadrature_ok = true;
};

// phi_{n+1} = P(|phi_n|^{p-2} phi_n) / ||...||_{H^2}, run until the stopping
// rule fires.  A quadrature failure mid-run returns the partial trace with
// the unresolved flag instead of throwing.
IterationTrace iterate(const CoefVec& c0, double p, const StoppingRule& rule,
                       const QuadratureSpec& spec);

LimitClass classify_limit(const IterationTrace& trace);

struct TrialResult {
    std::uint64_t trial_seed = 0;
    LimitClass classification = LimitClass::Unresolved;
    int iterations = 0;
    int start_argmax = 0;
    int limit_argmax = 0;
    int largest_modulus_violations = 0; // decreases of the largest modulus (1 <= p < 2)
};

struct ExperimentReport {
    int d = 0;
    double p = 0.0;
    int trials = 0;
    std::uint64_t seed = 0;
    double fraction_single_at_largest = 0.0;
    int monotonicity_violations = 0;
    int unresolved = 0;
    std::vector<TrialResult> results;
};

// Seeded random starts with a strict largest coordinate, iterated under the
// normalized projection; evidence report for the 1 <= p < 2 limit question.
ExperimentReport conjecture_experiment(int d, double p, int trials, std::uint64_t seed,
                                       const QuadratureSpec& spec, const StoppingRule& rule,
                                       bool random_phases = false);

// random unit vector in the positive orthant (strict interior a.s.)
CoefVec random_positive_unit(int d, std::uint64_t seed, bool random_phases = false);

} // namespace hilb

#endif

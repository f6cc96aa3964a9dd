#pragma once

#include <optional>

#include "gsee/spectral_measure.hpp"

namespace gsee {

// Target accuracy: estimate within epsilon of the ground energy with
// probability at least 1 - delta.
struct Accuracy {
    double epsilon;
    double delta;
};

// Throws std::invalid_argument unless epsilon > 0 and delta in (0, 1).
void check_accuracy(const Accuracy& acc);

// A problem instance bundles the (hidden) spectral measure with the promises
// the algorithm is allowed to rely on: a lower bound delta_lb on the spectral
// gap, a lower bound eta_lb on the ground-state weight, and an energy window
// [e_lo, e_hi] containing the whole spectrum.
//
// A violated eta promise or window is a construction error (the algorithm's
// confidence statement would be silently void), but a violated gap promise is
// representable: gap_promise_holds() reports it and callers decide.  That is
// deliberate, so sweeps can probe what happens when the gap input is wrong.
struct ProblemInstance {
    SpectralMeasure measure;
    double delta_lb;
    double eta_lb;
    double e_lo;
    double e_hi;

    ProblemInstance(SpectralMeasure m, double delta_lb, double eta_lb,
                    double e_lo, double e_hi);

    bool gap_promise_holds() const;
};

// c = sqrt(2 ln(10/9)); epsilon is admissible for (delta_lb, eta_lb) iff
// epsilon <= c * sigma(delta_lb, epsilon, eta_lb), which keeps the filter
// peak separation argument valid.
inline constexpr double separation_constant = 0.45904360502642077701;

struct EpsilonVerdict {
    bool ok;
    // Largest admissible epsilon for this (delta_lb, eta_lb); equals the
    // fixed point of e -> c * sigma(delta_lb, e, eta_lb).
    double max_epsilon;
};

// Decides whether the requested accuracy is small enough for the gap/overlap
// promises.  The admissibility bound depends on epsilon itself (sigma does),
// so the largest admissible value is found by bisection; the crossing is
// unique because the bound grows slower than identity.
EpsilonVerdict validate_epsilon(double epsilon, double delta_lb, double eta_lb);

// Smallest gap promise for which the given epsilon is admissible; used to
// floor the interpolated gap in accuracy/depth sweeps.
double min_admissible_gap(double epsilon, double eta_lb);

}  // namespace gsee

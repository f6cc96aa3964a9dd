#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "gsee/coarse.hpp"
#include "gsee/problem.hpp"
#include "gsee/resources.hpp"

namespace gsee {

// Requested accuracy violates the admissibility bound for the instance's
// promises; carries the largest epsilon that would be accepted.
class EpsilonTooLarge : public std::invalid_argument {
public:
    EpsilonTooLarge(const std::string& what, EpsilonVerdict verdict)
        : std::invalid_argument(what), verdict(verdict) {}
    EpsilonVerdict verdict;
};

struct GseeOptions {
    int workers = 1;
    // Run even when validate_epsilon rejects; the confidence statement is
    // then void, which is sometimes exactly what a sweep wants to probe.
    bool allow_invalid_epsilon = false;
    // Skip the coarse scan and centre the fine grid here instead; used by
    // tests that need the two stages isolated.
    std::optional<double> coarse_energy_override;
};

// Everything derivable from (instance promises, accuracy) before any
// sampling happens.
struct GseeParams {
    double sigma = 0.0;
    double eps_tilde = 0.0;    // pointwise accuracy target for the evaluator
    double band_limit = 0.0;   // analytic t_max of the main stage
    std::int64_t grid_points = 0;  // M = ceil(sigma / epsilon) + 1
    double l1 = 0.0;
    std::int64_t samples = 0;  // main-stage Fourier samples S
    EpsilonVerdict epsilon_verdict{false, 0.0};
    CoarseConfig coarse;
};

GseeParams plan_gsee(const ProblemInstance& instance, const Accuracy& accuracy);

struct GseeResult {
    double estimate = 0.0;        // grid point with the smallest |height|
    double coarse_energy = 0.0;   // centre delivered by the coarse stage
    std::size_t argmin_index = 0;
    std::vector<double> grid;     // fine grid of width sigma/2 around coarse
    std::vector<double> heights;  // evaluated convolution on the grid
    GseeParams params;
    ResourceReport resources;
    std::uint64_t seed = 0;
    // Gap actually used for planning (differs from the instance promise in
    // interpolated runs) and whether the admissibility floor clipped it.
    double delta_used = 0.0;
    bool gap_floored = false;
};

// Full pipeline: admissibility check, plan, coarse scan at confidence
// delta/2, fine sample collection at confidence delta/2, grid argmin.
// Throws EpsilonTooLarge (unless allowed), CoarseNotFound.
GseeResult run_gsee(const ProblemInstance& instance, const Accuracy& accuracy,
                    std::uint64_t seed, const GseeOptions& options = {});

// Depth/runtime interpolation: plans with the effective gap
// epsilon^alpha * delta_lb^(1-alpha), floored at the smallest admissible gap
// for epsilon.  alpha = 0 reproduces run_gsee.
GseeResult run_gsee_alpha(const ProblemInstance& instance, const Accuracy& accuracy,
                          double alpha, std::uint64_t seed,
                          const GseeOptions& options = {});

// One interpolation measurement row; see tradeoff_table.
struct TradeoffRow {
    double alpha;
    double delta_eff;
    bool gap_floored;
    double t_max;
    double t_total;
    std::int64_t n_tests;
    bool success;  // |estimate - true ground energy| <= epsilon
    std::uint64_t seed;
};

// Runs run_gsee_alpha over the alpha grid and seed list and scores each run
// against the instance's true ground energy.
std::vector<TradeoffRow> tradeoff_table(const ProblemInstance& instance,
                                        const Accuracy& accuracy,
                                        const std::vector<double>& alphas,
                                        const std::vector<std::uint64_t>& seeds,
                                        const GseeOptions& options = {});

void write_tradeoff_csv(std::ostream& out, const std::vector<TradeoffRow>& rows,
                        const std::string& comment);

}  // namespace gsee

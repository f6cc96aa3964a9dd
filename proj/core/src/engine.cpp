#include "gsee/engine.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

#include "gsee/csv.hpp"

namespace gsee {

namespace {

GseeParams plan_with_gap(double gap, const ProblemInstance& instance,
                         const Accuracy& accuracy) {
    check_accuracy(accuracy);
    GseeParams p;
    p.epsilon_verdict = validate_epsilon(accuracy.epsilon, gap, instance.eta_lb);
    p.sigma = choose_sigma(gap, accuracy.epsilon, instance.eta_lb);
    p.eps_tilde = eps_tilde(p.sigma, accuracy.epsilon, instance.eta_lb);
    p.band_limit = choose_band_limit(p.sigma, p.eps_tilde);
    p.grid_points =
        static_cast<std::int64_t>(std::ceil(p.sigma / accuracy.epsilon)) + 1;
    GaussianDerivativeFilter filter(p.sigma, p.band_limit);
    p.l1 = filter.l1_norm();
    // Half the pointwise budget goes to band-limiting, half to sampling; the
    // confidence budget is split evenly with the coarse stage.
    p.samples = required_samples(p.l1, 0.5 * p.eps_tilde, 0.5 * accuracy.delta,
                                 p.grid_points);
    p.coarse = coarse_config(p.sigma, instance.eta_lb, instance.e_lo, instance.e_hi);
    return p;
}

GseeResult run_with_gap(double gap, bool floored, const ProblemInstance& instance,
                        const Accuracy& accuracy, std::uint64_t seed,
                        const GseeOptions& options) {
    GseeParams params = plan_with_gap(gap, instance, accuracy);
    if (!params.epsilon_verdict.ok && !options.allow_invalid_epsilon) {
        std::ostringstream os;
        os << "epsilon = " << accuracy.epsilon << " is too coarse for gap promise "
           << gap << " at eta = " << instance.eta_lb << "; largest admissible is "
           << params.epsilon_verdict.max_epsilon;
        throw EpsilonTooLarge(os.str(), params.epsilon_verdict);
    }

    SpectralSamplingBackend backend(instance.measure);
    GseeResult result;
    result.params = params;
    result.seed = seed;
    result.delta_used = gap;
    result.gap_floored = floored;

    EvolutionMeter coarse_meter;
    if (options.coarse_energy_override) {
        result.coarse_energy = *options.coarse_energy_override;
        result.resources.coarse = StageUsage{};
    } else {
        CoarseOutcome outcome =
            coarse_estimate(params.coarse, backend, 0.5 * accuracy.delta,
                            derive_seed(seed, 1), options.workers, &coarse_meter);
        result.coarse_energy = outcome.estimate;
        result.resources.coarse =
            stage_usage(coarse_meter, outcome.samples,
                        static_cast<std::int64_t>(params.coarse.grid.size()));
    }

    // Fine grid of M points covering [centre - sigma/4, centre + sigma/4).
    const std::int64_t m = params.grid_points;
    const double step = 0.5 * params.sigma / static_cast<double>(m);
    const double lo = result.coarse_energy - 0.25 * params.sigma;
    result.grid.resize(static_cast<std::size_t>(m));
    for (std::int64_t j = 0; j < m; ++j) {
        result.grid[static_cast<std::size_t>(j)] = lo + step * static_cast<double>(j);
    }

    GaussianDerivativeFilter filter(params.sigma, params.band_limit);
    EvolutionMeter main_meter;
    FourierSampleSet set =
        FourierSampleSet::collect(filter, backend, params.samples,
                                  derive_seed(seed, 2), options.workers, &main_meter);
    result.heights = set.eval_grid(result.grid, options.workers);
    result.resources.main = stage_usage(main_meter, params.samples, m);
    result.resources.t_max_predicted = params.band_limit;

    // The filtered measure crosses zero at the ground energy, so the grid
    // point with the smallest magnitude is the estimate; ties break to the
    // leftmost point.
    std::size_t best = 0;
    for (std::size_t j = 1; j < result.heights.size(); ++j) {
        if (std::abs(result.heights[j]) < std::abs(result.heights[best])) best = j;
    }
    result.argmin_index = best;
    result.estimate = result.grid[best];
    return result;
}

}  // namespace

GseeParams plan_gsee(const ProblemInstance& instance, const Accuracy& accuracy) {
    return plan_with_gap(instance.delta_lb, instance, accuracy);
}

GseeResult run_gsee(const ProblemInstance& instance, const Accuracy& accuracy,
                    std::uint64_t seed, const GseeOptions& options) {
    return run_with_gap(instance.delta_lb, false, instance, accuracy, seed, options);
}

GseeResult run_gsee_alpha(const ProblemInstance& instance, const Accuracy& accuracy,
                          double alpha, std::uint64_t seed,
                          const GseeOptions& options) {
    if (!(alpha >= 0.0) || alpha > 1.0) {
        throw std::invalid_argument("alpha must lie in [0, 1]");
    }
    check_accuracy(accuracy);
    double gap = std::pow(accuracy.epsilon, alpha) * std::pow(instance.delta_lb, 1.0 - alpha);
    double floor = min_admissible_gap(accuracy.epsilon, instance.eta_lb);
    // pad the floor so roundoff at the admissibility boundary cannot reject
    floor *= 1.0 + 1e-9;
    bool floored = gap < floor;
    if (floored) gap = floor;
    return run_with_gap(gap, floored, instance, accuracy, seed, options);
}

std::vector<TradeoffRow> tradeoff_table(const ProblemInstance& instance,
                                        const Accuracy& accuracy,
                                        const std::vector<double>& alphas,
                                        const std::vector<std::uint64_t>& seeds,
                                        const GseeOptions& options) {
    std::vector<TradeoffRow> rows;
    rows.reserve(alphas.size() * seeds.size());
    const double e0 = instance.measure.ground_energy();
    for (double alpha : alphas) {
        for (std::uint64_t seed : seeds) {
            GseeResult r = run_gsee_alpha(instance, accuracy, alpha, seed, options);
            TradeoffRow row;
            row.alpha = alpha;
            row.delta_eff = r.delta_used;
            row.gap_floored = r.gap_floored;
            row.t_max = r.resources.t_max();
            row.t_total = r.resources.t_total();
            row.n_tests = r.resources.n_tests();
            row.success = std::abs(r.estimate - e0) <= accuracy.epsilon;
            row.seed = seed;
            rows.push_back(row);
        }
    }
    return rows;
}

void write_tradeoff_csv(std::ostream& out, const std::vector<TradeoffRow>& rows,
                        const std::string& comment) {
    if (!comment.empty()) out << "# " << comment << '\n';
    out << "alpha,delta_eff,t_max,t_total,n_tests,success,seed\n";
    for (const TradeoffRow& r : rows) {
        out << fmt17(r.alpha) << ',' << fmt17(r.delta_eff) << ',' << fmt17(r.t_max)
            << ',' << fmt17(r.t_total) << ',' << r.n_tests << ','
            << (r.success ? 1 : 0) << ',' << r.seed << '\n';
    }
}

}  // namespace gsee

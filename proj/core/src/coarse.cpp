#include "gsee/coarse.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace gsee {

CoarseConfig coarse_config(double sigma, double eta, double e_lo, double e_hi) {
    if (!(sigma > 0.0) || !std::isfinite(sigma)) {
        throw std::invalid_argument("sigma must be positive and finite");
    }
    if (!(eta > 0.0) || eta > 1.0) {
        throw std::invalid_argument("eta must lie in (0, 1]");
    }
    if (!(e_lo < e_hi)) throw std::invalid_argument("energy window is empty");

    CoarseConfig cfg;
    // Narrow enough that even with all excited mass piled directly above the
    // gap, the leftmost threshold crossing stays within sigma / 4 of the
    // ground energy.
    cfg.width = sigma / (8.0 * std::sqrt(2.0 * std::log(2.0 / eta)));
    cfg.spacing = cfg.width;
    // Half the ground peak's guaranteed smoothed height.
    cfg.tau = 0.5 * eta / (std::sqrt(2.0 * std::numbers::pi) * cfg.width);
    cfg.per_point_accuracy = 0.5 * cfg.tau;
    // Truncation gets half the per-point budget, sampling the other half.
    cfg.band_limit = gaussian_band_limit(cfg.width, 0.5 * cfg.per_point_accuracy);

    std::size_t points =
        static_cast<std::size_t>(std::ceil((e_hi - e_lo) / cfg.spacing)) + 1;
    cfg.grid.reserve(points);
    for (std::size_t k = 0; k < points; ++k) {
        cfg.grid.push_back(e_lo + cfg.spacing * static_cast<double>(k));
    }
    return cfg;
}

CoarseOutcome coarse_estimate(const CoarseConfig& config, HadamardBackend& backend,
                              double delta, std::uint64_t seed, int workers,
                              EvolutionMeter* meter) {
    if (!(delta > 0.0) || !(delta < 1.0)) {
        throw std::invalid_argument("delta must lie in (0, 1)");
    }
    if (config.grid.empty()) throw std::invalid_argument("empty coarse grid");

    GaussianFilter filter(config.width, config.band_limit);
    std::int64_t s = required_samples(filter.l1_norm(), 0.5 * config.per_point_accuracy,
                                      delta, static_cast<std::int64_t>(config.grid.size()));
    FourierSampleSet set =
        FourierSampleSet::collect(filter, backend, s, seed, workers, meter);
    std::vector<double> heights = set.eval_grid(config.grid, workers);

    for (std::size_t k = 0; k < heights.size(); ++k) {
        if (heights[k] >= config.tau) {
            return CoarseOutcome{config.grid[k], k, s, std::move(heights)};
        }
    }
    std::ostringstream os;
    os << "no smoothed height reached the detection threshold " << config.tau
       << " anywhere in the scan window; the overlap promise is likely false";
    throw CoarseNotFound(os.str());
}

}  // namespace gsee

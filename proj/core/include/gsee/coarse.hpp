#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "gsee/conv_eval.hpp"
#include "gsee/filters.hpp"
#include "gsee/hadamard.hpp"

namespace gsee {

// Parameters of the coarse ground-energy scan.  The scan smooths the
// spectral measure with a Gaussian of width s much smaller than the final
// filter width sigma, walks a grid of spacing s across the energy window and
// takes the leftmost point whose smoothed height clears a threshold only the
// ground peak region can reach.
struct CoarseConfig {
    double width;               // Gaussian width s
    double spacing;             // grid spacing (= s)
    double tau;                 // detection threshold eta / (2 sqrt(2 pi) s)
    double per_point_accuracy;  // tau / 2, split between truncation and sampling
    double band_limit;          // smallest T with spectral tail <= tau / 4
    std::vector<double> grid;   // scan points covering [e_lo, e_hi]
};

// width s = sigma / (8 sqrt(2 ln(2 / eta))): small enough that the scan's
// answer localizes the ground energy to sigma / 4 even when all the
// non-ground mass piles up directly above the gap.
CoarseConfig coarse_config(double sigma, double eta, double e_lo, double e_hi);

struct CoarseOutcome {
    double estimate;            // leftmost grid point clearing the threshold
    std::size_t grid_index;
    std::int64_t samples;       // Fourier samples spent
    std::vector<double> heights;
};

// No grid point cleared the detection threshold.  With valid promises this
// has probability at most delta; it signals a broken instance (e.g. the
// ground weight promise is false) rather than bad luck worth retrying
// silently.
class CoarseNotFound : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Runs the scan at confidence 1 - delta.  Throws CoarseNotFound if no grid
// point clears tau.
CoarseOutcome coarse_estimate(const CoarseConfig& config, HadamardBackend& backend,
                              double delta, std::uint64_t seed, int workers = 1,
                              EvolutionMeter* meter = nullptr);

}  // namespace gsee

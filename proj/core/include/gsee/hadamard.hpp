#pragma once

#include <complex>
#include <cstdint>

#include "gsee/random.hpp"
#include "gsee/spectral_measure.hpp"

namespace gsee {

// Time signal of a spectral measure: sum_j p_j exp(-2 pi i E_j t).  This is
// the quantity a phase-kickback experiment gives one-bit access to.
std::complex<double> signal(const SpectralMeasure& measure, double t);

enum class HadamardBasis { real, imag };

// One simulated phase-kickback test at evolution parameter t.  Returns +1 or
// -1 with E[outcome] = Re signal(t) (real basis) or Im signal(t) (imag
// basis).
int sample_hadamard(const SpectralMeasure& measure, double t, HadamardBasis basis,
                    RandomStream& rng);

// Tallies simulated evolution cost.  One record() per test: the test's cost
// in applications of the unit evolution is |t|.  merge() is associative, so
// per-block meters can be combined in block order for reproducible totals.
class EvolutionMeter {
public:
    void record(double t) {
        double a = t < 0 ? -t : t;
        if (a > max_abs_t_) max_abs_t_ = a;
        total_abs_t_ += a;
        ++num_tests_;
    }

    void merge(const EvolutionMeter& other) {
        if (other.max_abs_t_ > max_abs_t_) max_abs_t_ = other.max_abs_t_;
        total_abs_t_ += other.total_abs_t_;
        num_tests_ += other.num_tests_;
    }

    double max_abs_t() const { return max_abs_t_; }
    double total_abs_t() const { return total_abs_t_; }
    std::int64_t num_tests() const { return num_tests_; }

private:
    double max_abs_t_ = 0.0;
    double total_abs_t_ = 0.0;
    std::int64_t num_tests_ = 0;
};

// Source of Hadamard-test outcomes.  The library ships a sampling simulator;
// the interface exists so recorded or hardware-backed outcome streams can be
// substituted without touching the estimator.
class HadamardBackend {
public:
    virtual ~HadamardBackend() = default;
    virtual int run_test(double t, HadamardBasis basis, RandomStream& rng) = 0;
};

// Simulates tests by exact Bernoulli sampling from the measure's signal.
class SpectralSamplingBackend : public HadamardBackend {
public:
    explicit SpectralSamplingBackend(const SpectralMeasure& measure)
        : measure_(&measure) {}

    int run_test(double t, HadamardBasis basis, RandomStream& rng) override {
        return sample_hadamard(*measure_, t, basis, rng);
    }

private:
    const SpectralMeasure* measure_;
};

}  // namespace gsee

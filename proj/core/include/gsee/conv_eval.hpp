#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "gsee/filters.hpp"
#include "gsee/hadamard.hpp"

namespace gsee {

// Hoeffding sample count for estimating the convolution at m grid points to
// accuracy eps1 each, jointly with confidence 1 - delta1:
// S = ceil(l1^2 * ln(4 m / delta1) / eps1^2).
std::int64_t required_samples(double l1, double eps1, double delta1, std::int64_t m);

// A collected set of unbiased Fourier samples of the filtered spectral
// measure.  Each sample couples a frequency t drawn from |f_hat| / l1 with
// one real-basis and one imag-basis Hadamard outcome (x, y):
//     z = l1 * exp(2 pi i phase(t)) * (x + i y),
// so that E[exp(2 pi i t x) * z] = (f * p)(x) for the band-limited filter f.
// The same set evaluates the convolution at every x; data collection and
// evaluation are fully separated.
class FourierSampleSet {
public:
    struct Sample {
        double t;
        std::complex<double> z;
    };

    // Draws `count` samples.  Sample index i always lives in block i / 8192
    // and block b always consumes the random stream (seed, b), so the result
    // is byte-identical for any worker count.  If meter is non-null, two
    // tests of cost |t| are recorded per sample.
    static FourierSampleSet collect(const FrequencySampler& sampler,
                                    HadamardBackend& backend, std::int64_t count,
                                    std::uint64_t seed, int workers = 1,
                                    EvolutionMeter* meter = nullptr);

    // Re[(1/S) sum_i exp(2 pi i t_i x) z_i]; block-structured reduction, so
    // the result does not depend on sample order or worker count.
    double eval(double x) const;

    // eval() at many points sharing the per-sample trig work; for uniformly
    // spaced xs the per-point phase factor is advanced by one complex
    // multiply instead of a fresh sincos.
    std::vector<double> eval_grid(const std::vector<double>& xs, int workers = 1) const;

    std::int64_t size() const { return static_cast<std::int64_t>(samples_.size()); }
    const std::vector<Sample>& samples() const { return samples_; }
    double l1() const { return l1_; }
    double band_limit() const { return band_limit_; }

    // CSV with columns t,z_re,z_im at 17 significant digits (lossless for
    // doubles).  A non-empty comment is emitted first as a '#' line.
    void dump_csv(std::ostream& out, std::string_view comment = {}) const;

    // Parses dump_csv output and revalidates the set against the stated
    // filter: every |z| must equal l1 * sqrt(2) (relative 1e-12) and every
    // |t| must be within the band limit.  Throws std::runtime_error on any
    // violation, so silently corrupted dumps cannot be evaluated.
    static FourierSampleSet load_csv(std::istream& in, double l1, double band_limit);

private:
    FourierSampleSet(std::vector<Sample> samples, double l1, double band_limit);

    std::vector<Sample> samples_;
    double l1_;
    double band_limit_;
};

}  // namespace gsee

#include "gsee/conv_eval.hpp"

#include <cmath>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "gsee/csv.hpp"
#include "gsee/parallel.hpp"

namespace gsee {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

[[noreturn]] void bad_csv(std::size_t line_no, const std::string& what) {
    std::ostringstream os;
    os << "sample CSV line " << line_no << ": " << what;
    throw std::runtime_error(os.str());
}

}  // namespace

std::int64_t required_samples(double l1, double eps1, double delta1, std::int64_t m) {
    if (!(l1 > 0.0) || !(eps1 > 0.0) || m < 1) {
        throw std::invalid_argument("required_samples: l1, eps1 must be positive, m >= 1");
    }
    if (!(delta1 > 0.0) || !(delta1 < 1.0)) {
        throw std::invalid_argument("required_samples: delta1 must lie in (0, 1)");
    }
    double raw = l1 * l1 * std::log(4.0 * static_cast<double>(m) / delta1) / (eps1 * eps1);
    if (!(raw < 9.0e18)) {
        throw std::overflow_error("required_samples: count exceeds int64 range");
    }
    double c = std::ceil(raw);
    return c < 1.0 ? 1 : static_cast<std::int64_t>(c);
}

FourierSampleSet::FourierSampleSet(std::vector<Sample> samples, double l1,
                                   double band_limit)
    : samples_(std::move(samples)), l1_(l1), band_limit_(band_limit) {}

FourierSampleSet FourierSampleSet::collect(const FrequencySampler& sampler,
                                           HadamardBackend& backend,
                                           std::int64_t count, std::uint64_t seed,
                                           int workers, EvolutionMeter* meter) {
    if (count < 1) throw std::invalid_argument("sample count must be >= 1");
    const double l1 = sampler.l1_norm();
    std::vector<Sample> samples(static_cast<std::size_t>(count));
    const std::int64_t blocks = num_blocks(count);
    std::vector<EvolutionMeter> block_meters(meter ? static_cast<std::size_t>(blocks) : 0);

    run_blocks(blocks, workers, [&](std::int64_t b) {
        RandomStream rng(seed, static_cast<std::uint64_t>(b));
        const std::int64_t lo = b * sample_block_size;
        const std::int64_t hi = std::min(count, lo + sample_block_size);
        EvolutionMeter* bm = meter ? &block_meters[static_cast<std::size_t>(b)] : nullptr;
        for (std::int64_t i = lo; i < hi; ++i) {
            FrequencySampler::Draw d = sampler.sample(rng);
            int x = backend.run_test(d.t, HadamardBasis::real, rng);
            int y = backend.run_test(d.t, HadamardBasis::imag, rng);
            if (bm) {
                bm->record(d.t);
                bm->record(d.t);
            }
            double c = std::cos(two_pi * d.phase);
            double s = std::sin(two_pi * d.phase);
            // z = l1 * exp(2 pi i phase) * (x + i y)
            samples[static_cast<std::size_t>(i)] = {
                d.t, {l1 * (c * x - s * y), l1 * (s * x + c * y)}};
        }
    });

    if (meter) {
        for (const auto& bm : block_meters) meter->merge(bm);
    }
    return FourierSampleSet(std::move(samples), l1, sampler.band_limit());
}

double FourierSampleSet::eval(double x) const {
    const std::int64_t n = size();
    const std::int64_t blocks = num_blocks(n);
    // Two-level sum fixed by block boundaries: the result is independent of
    // traversal order by construction.
    double total = 0.0;
    for (std::int64_t b = 0; b < blocks; ++b) {
        const std::int64_t lo = b * sample_block_size;
        const std::int64_t hi = std::min(n, lo + sample_block_size);
        double acc = 0.0;
        for (std::int64_t i = lo; i < hi; ++i) {
            const Sample& sm = samples_[static_cast<std::size_t>(i)];
            double ph = two_pi * sm.t * x;
            acc += std::cos(ph) * sm.z.real() - std::sin(ph) * sm.z.imag();
        }
        total += acc;
    }
    return total / static_cast<double>(n);
}

std::vector<double> FourierSampleSet::eval_grid(const std::vector<double>& xs,
                                                int workers) const {
    const std::size_t m = xs.size();
    if (m == 0) return {};
    const std::int64_t n = size();
    const std::int64_t blocks = num_blocks(n);

    // A uniformly spaced grid lets each sample advance its phase factor with
    // one complex multiply per point instead of a sincos per point.
    bool uniform = m >= 3;
    double step = m >= 2 ? xs[1] - xs[0] : 0.0;
    for (std::size_t j = 2; uniform && j < m; ++j) {
        if (std::abs(xs[j] - xs[j - 1] - step) > 1e-12 * (std::abs(xs[j]) + 1.0)) {
            uniform = false;
        }
    }

    std::vector<std::vector<double>> partial(static_cast<std::size_t>(blocks));
    run_blocks(blocks, workers, [&](std::int64_t b) {
        const std::int64_t lo = b * sample_block_size;
        const std::int64_t hi = std::min(n, lo + sample_block_size);
        std::vector<double>& acc = partial[static_cast<std::size_t>(b)];
        acc.assign(m, 0.0);
        for (std::int64_t i = lo; i < hi; ++i) {
            const Sample& sm = samples_[static_cast<std::size_t>(i)];
            if (uniform) {
                double ph0 = two_pi * sm.t * xs[0];
                double dph = two_pi * sm.t * step;
                std::complex<double> rot{std::cos(dph), std::sin(dph)};
                std::complex<double> w{std::cos(ph0), std::sin(ph0)};
                for (std::size_t j = 0; j < m; ++j) {
                    acc[j] += w.real() * sm.z.real() - w.imag() * sm.z.imag();
                    w *= rot;
                }
            } else {
                for (std::size_t j = 0; j < m; ++j) {
                    double ph = two_pi * sm.t * xs[j];
                    acc[j] += std::cos(ph) * sm.z.real() - std::sin(ph) * sm.z.imag();
                }
            }
        }
    });

    std::vector<double> out(m, 0.0);
    for (std::int64_t b = 0; b < blocks; ++b) {
        const std::vector<double>& acc = partial[static_cast<std::size_t>(b)];
        for (std::size_t j = 0; j < m; ++j) out[j] += acc[j];
    }
    for (std::size_t j = 0; j < m; ++j) out[j] /= static_cast<double>(n);
    return out;
}

void FourierSampleSet::dump_csv(std::ostream& out, std::string_view comment) const {
    if (!comment.empty()) out << "# " << comment << '\n';
    out << "t,z_re,z_im\n";
    for (const Sample& sm : samples_) {
        out << fmt17(sm.t) << ',' << fmt17(sm.z.real()) << ',' << fmt17(sm.z.imag())
            << '\n';
    }
}

FourierSampleSet FourierSampleSet::load_csv(std::istream& in, double l1,
                                            double band_limit) {
    if (!(l1 > 0.0) || !(band_limit > 0.0)) {
        throw std::invalid_argument("load_csv: l1 and band_limit must be positive");
    }
    const double expected_abs = l1 * std::sqrt(2.0);
    std::vector<Sample> samples;
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) {
            if (line != "t,z_re,z_im") bad_csv(line_no, "expected header t,z_re,z_im");
            header_seen = true;
            continue;
        }
        auto fields = split_csv_line(line);
        if (fields.size() != 3) bad_csv(line_no, "expected 3 fields");
        double t = parse_double_field(fields[0], "t");
        double zr = parse_double_field(fields[1], "z_re");
        double zi = parse_double_field(fields[2], "z_im");
        if (std::abs(t) > band_limit * (1.0 + 1e-12)) {
            bad_csv(line_no, "frequency outside the band limit");
        }
        double mag = std::hypot(zr, zi);
        if (std::abs(mag - expected_abs) > 1e-12 * expected_abs) {
            bad_csv(line_no, "sample magnitude inconsistent with the filter's l1 norm");
        }
        samples.push_back({t, {zr, zi}});
    }
    if (!header_seen) throw std::runtime_error("sample CSV: missing header");
    if (samples.empty()) throw std::runtime_error("sample CSV: no samples");
    return FourierSampleSet(std::move(samples), l1, band_limit);
}

}  // namespace gsee

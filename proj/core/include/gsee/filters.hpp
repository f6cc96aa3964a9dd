#pragma once

#include <complex>

#include "gsee/random.hpp"

namespace gsee {

// A band-limited filter whose Fourier transform can be importance-sampled.
// sample() draws a frequency t with density |f_hat(t)| / l1_norm() on
// [-band_limit, band_limit] and reports the transform's phase at t in turns
// (f_hat(t) = |f_hat(t)| * exp(2*pi*i*phase)).
class FrequencySampler {
public:
    struct Draw {
        double t;
        double phase;
    };

    virtual ~FrequencySampler() = default;
    virtual Draw sample(RandomStream& rng) const = 0;
    virtual double band_limit() const = 0;
    // integral of |f_hat| over [-band_limit, band_limit]
    virtual double l1_norm() const = 0;
};

// Derivative-of-Gaussian filter g_sigma = f_sigma'; its sign flip at the
// origin is what turns energy estimation into root finding.  Frequency
// domain: g_hat(t) = 2*pi*i*t * exp(-(sigma*pi*t)^2 / 2), restricted to
// |t| <= band_limit.
class GaussianDerivativeFilter : public FrequencySampler {
public:
    GaussianDerivativeFilter(double sigma, double band_limit);

    double sigma() const { return sigma_; }
    double band_limit() const override { return band_limit_; }

    // g_sigma(x) = -x / (sqrt(2 pi) sigma^3) * exp(-x^2 / (2 sigma^2))
    double value(double x) const;

    // g_hat(t) = 2 pi i t exp(-(sigma pi t)^2 / 2); purely imaginary.
    std::complex<double> transform(double t) const;

    // closed form (4 / (pi sigma^2)) * (1 - exp(-(sigma pi T)^2 / 2))
    double l1_norm() const override { return l1_; }

    Draw sample(RandomStream& rng) const override;

private:
    double sigma_;
    double band_limit_;
    double l1_;
};

// Plain Gaussian smoothing filter f_s, band-limited the same way; used by
// the coarse locator, where only the bump height matters, not a sign change.
class GaussianFilter : public FrequencySampler {
public:
    GaussianFilter(double width, double band_limit);

    double width() const { return width_; }
    double band_limit() const override { return band_limit_; }

    // f_s(x) = exp(-x^2 / (2 s^2)) / (sqrt(2 pi) s)
    double value(double x) const;

    // f_hat(t) = exp(-(s pi t)^2 / 2); real and positive.
    double transform(double t) const;

    double l1_norm() const override { return l1_; }

    Draw sample(RandomStream& rng) const override;

private:
    double width_;
    double band_limit_;
    double l1_;
};

// Filter width for a requested accuracy: sigma = min(0.9 * delta /
// sqrt(2 ln(9 delta / (epsilon eta))), 0.2 * delta).  The first branch keeps
// neighbour peaks suppressed below the working tolerance, the cap keeps the
// filter inside the gap.
double choose_sigma(double delta, double epsilon, double eta);

// Pointwise accuracy the convolution evaluator must reach so that the zero
// crossing moves by at most epsilon: 0.1 * epsilon * eta / (sqrt(2 pi) sigma^3).
double eps_tilde(double sigma, double epsilon, double eta);

// Smallest band limit T with the spectral tail of g_sigma below target/2:
// T = (1 / (pi sigma)) * sqrt(2 ln(8 / (pi target sigma^2))).
double choose_band_limit(double sigma, double target);

// Smallest band limit with the Gaussian filter's spectral tail
// sqrt(pi/a) * erfc(sqrt(a) T) <= target, a = (s pi)^2 / 2; by bisection.
double gaussian_band_limit(double width, double target);

// Inverse of std::erf on (-1, 1); Newton refinement to double precision.
double inverse_erf(double y);

}  // namespace gsee

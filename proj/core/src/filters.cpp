#include "gsee/filters.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace gsee {

namespace {

constexpr double pi = std::numbers::pi;
const double sqrt_2pi = std::sqrt(2.0 * pi);

void check_positive(double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        std::ostringstream os;
        os << name << " must be positive and finite";
        throw std::invalid_argument(os.str());
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// derivative-of-Gaussian filter

GaussianDerivativeFilter::GaussianDerivativeFilter(double sigma, double band_limit)
    : sigma_(sigma), band_limit_(band_limit) {
    check_positive(sigma, "sigma");
    check_positive(band_limit, "band_limit");
    double a = 0.5 * (sigma_ * pi) * (sigma_ * pi);
    l1_ = 4.0 / (pi * sigma_ * sigma_) * (1.0 - std::exp(-a * band_limit_ * band_limit_));
}

double GaussianDerivativeFilter::value(double x) const {
    double u = x / sigma_;
    return -x / (sqrt_2pi * sigma_ * sigma_ * sigma_) * std::exp(-0.5 * u * u);
}

std::complex<double> GaussianDerivativeFilter::transform(double t) const {
    double a = 0.5 * (sigma_ * pi) * (sigma_ * pi);
    return {0.0, 2.0 * pi * t * std::exp(-a * t * t)};
}

FrequencySampler::Draw GaussianDerivativeFilter::sample(RandomStream& rng) const {
    // |g_hat(t)| ~ |t| exp(-a t^2) on [-T, T]: the magnitude CDF inverts in
    // closed form, F(u) = (1 - exp(-a u^2)) / (1 - exp(-a T^2)).
    double a = 0.5 * (sigma_ * pi) * (sigma_ * pi);
    double u = rng.uniform01();
    double tail = 1.0 - std::exp(-a * band_limit_ * band_limit_);
    double mag = std::sqrt(-std::log1p(-u * tail) / a);
    if (mag > band_limit_) mag = band_limit_;  // guard roundoff at u -> 1
    int sgn = rng.sign();
    // g_hat is +i|g_hat| for t > 0 and -i|g_hat| for t < 0: phase 1/4 or 3/4
    // of a turn.
    return {sgn * mag, sgn > 0 ? 0.25 : 0.75};
}

// ---------------------------------------------------------------------------
// Gaussian smoothing filter

GaussianFilter::GaussianFilter(double width, double band_limit)
    : width_(width), band_limit_(band_limit) {
    check_positive(width, "width");
    check_positive(band_limit, "band_limit");
    double sa = std::sqrt(0.5) * width_ * pi;  // sqrt(a), a = (s pi)^2 / 2
    l1_ = sqrt_2pi / (width_ * pi) * std::erf(sa * band_limit_);
}

double GaussianFilter::value(double x) const {
    double u = x / width_;
    return std::exp(-0.5 * u * u) / (sqrt_2pi * width_);
}

double GaussianFilter::transform(double t) const {
    double a = 0.5 * (width_ * pi) * (width_ * pi);
    return std::exp(-a * t * t);
}

FrequencySampler::Draw GaussianFilter::sample(RandomStream& rng) const {
    // magnitude CDF F(u) = erf(sqrt(a) u) / erf(sqrt(a) T) on [0, T]
    double sa = std::sqrt(0.5) * width_ * pi;
    double u = rng.uniform01();
    double mag = inverse_erf(u * std::erf(sa * band_limit_)) / sa;
    if (mag > band_limit_) mag = band_limit_;
    int sgn = rng.sign();
    return {sgn * mag, 0.0};  // transform is real positive: phase 0
}

// ---------------------------------------------------------------------------
// parameter selection

double choose_sigma(double delta, double epsilon, double eta) {
    check_positive(delta, "delta");
    check_positive(epsilon, "epsilon");
    check_positive(eta, "eta");
    double cap = 0.2 * delta;
    double arg = 9.0 * delta / (epsilon * eta);
    if (arg <= 1.0) return cap;  // suppression constraint vacuous
    double narrow = 0.9 * delta / std::sqrt(2.0 * std::log(arg));
    return narrow < cap ? narrow : cap;
}

double eps_tilde(double sigma, double epsilon, double eta) {
    check_positive(sigma, "sigma");
    check_positive(epsilon, "epsilon");
    check_positive(eta, "eta");
    return 0.1 * epsilon * eta / (sqrt_2pi * sigma * sigma * sigma);
}

double choose_band_limit(double sigma, double target) {
    check_positive(sigma, "sigma");
    check_positive(target, "target");
    double arg = 8.0 / (pi * target * sigma * sigma);
    if (arg <= 1.0) {
        throw std::invalid_argument("band-limit target too loose for this sigma");
    }
    return std::sqrt(2.0 * std::log(arg)) / (pi * sigma);
}

double gaussian_band_limit(double width, double target) {
    check_positive(width, "width");
    check_positive(target, "target");
    double sa = std::sqrt(0.5) * width * pi;
    double full = sqrt_2pi / (width * pi);  // ∫ f_hat over the whole line
    if (target >= full) {
        throw std::invalid_argument("tail target exceeds the filter's full weight");
    }
    // tail(T) = full * erfc(sqrt(a) T) is strictly decreasing; bisect.
    auto tail = [&](double t) { return full * std::erfc(sa * t); };
    double hi = 1.0 / width;
    while (tail(hi) > target) hi *= 2.0;
    double lo = 0.0;
    for (int it = 0; it < 200 && (hi - lo) > 1e-14 * hi; ++it) {
        double mid = 0.5 * (lo + hi);
        if (tail(mid) > target) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return hi;
}

double inverse_erf(double y) {
    if (!(y > -1.0 && y < 1.0)) {
        throw std::invalid_argument("inverse_erf domain is (-1, 1)");
    }
    if (y == 0.0) return 0.0;
    // Winitzki's approximation as a seed, then Newton on erf; three or four
    // steps reach machine precision everywhere we sample (|y| < 1 - 1e-12).
    double sign = y < 0.0 ? -1.0 : 1.0;
    double ay = sign * y;
    double l = std::log1p(-ay * ay);
    double c = 2.0 / (pi * 0.147) + 0.5 * l;
    double x = sign * std::sqrt(std::sqrt(c * c - l / 0.147) - c);
    for (int it = 0; it < 6; ++it) {
        double err = std::erf(x) - y;
        if (err == 0.0) break;
        double step = err * 0.5 * std::sqrt(pi) * std::exp(x * x);
        x -= step;
        if (std::abs(step) < 1e-16 * (std::abs(x) + 1e-300)) break;
    }
    return x;
}

}  // namespace gsee

#include "gsee/hadamard.hpp"

#include <cmath>
#include <numbers>

namespace gsee {

std::complex<double> signal(const SpectralMeasure& measure, double t) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double re = 0.0, im = 0.0;
    for (std::size_t j = 0; j < measure.size(); ++j) {
        double phase = -two_pi * measure.energy(j) * t;
        re += measure.weight(j) * std::cos(phase);
        im += measure.weight(j) * std::sin(phase);
    }
    return {re, im};
}

int sample_hadamard(const SpectralMeasure& measure, double t, HadamardBasis basis,
                    RandomStream& rng) {
    std::complex<double> s = signal(measure, t);
    double mean = (basis == HadamardBasis::real) ? s.real() : s.imag();
    // outcome is +/-1 with E[outcome] = mean, i.e. P(+1) = (1 + mean) / 2
    double p_plus = 0.5 * (1.0 + mean);
    if (p_plus < 0.0) p_plus = 0.0;  // guard roundoff; |signal| <= 1 always
    if (p_plus > 1.0) p_plus = 1.0;
    return rng.bernoulli(p_plus) ? 1 : -1;
}

}  // namespace gsee

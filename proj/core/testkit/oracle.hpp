#pragma once

// Independent reference implementations for testing.  Everything here is
// written from the defining integrals and closed forms directly -- no calls
// into the production filter/estimator code -- so agreement between the two
// is evidence, not tautology.

#include <functional>

#include "gsee/problem.hpp"
#include "gsee/random.hpp"
#include "gsee/spectral_measure.hpp"

namespace gsee::testkit {

// Adaptive Simpson quadrature with absolute tolerance.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol);

// Closed forms, re-derived by hand:
double ref_derivative_value(double sigma, double x);  // -x e^{-x^2/2s^2} / (sqrt(2pi) s^3)
double ref_gaussian_value(double width, double x);    // e^{-x^2/2w^2} / (sqrt(2pi) w)

// Pointwise limits (T -> infinity) of the band-limited reconstructions
// below.  Under the e^{2 pi i x t} synthesis kernel used by the estimator,
// the frequency envelope e^{-(sigma pi t)^2/2} reconstructs a profile of
// width sigma/2, so these are the references truncation error is measured
// against.
double ref_derivative_limit(double sigma, double x);
double ref_gaussian_limit(double width, double x);

// Band-limited reconstructions by direct quadrature of the defining
// integrals over [-T, T]:
//   derivative filter: integral of 2 pi i t e^{-(sigma pi t)^2/2} e^{2 pi i x t}
//   gaussian filter:   integral of       e^{-(width pi t)^2/2} e^{2 pi i x t}
double truncated_derivative_quadrature(double sigma, double band_limit, double x,
                                       double tol = 1e-12);
double truncated_gaussian_quadrature(double width, double band_limit, double x,
                                     double tol = 1e-12);

// l1 norms of the band-limited transforms, again by quadrature.
double l1_derivative_quadrature(double sigma, double band_limit, double tol = 1e-13);
double l1_gaussian_quadrature(double width, double band_limit, double tol = 1e-13);

// Analytic bound on the spectral mass outside [-T, T] for the derivative
// filter: (4 / (sigma^2 pi)) e^{-(sigma pi T)^2 / 2}.
double derivative_tail_bound(double sigma, double band_limit);

// sum_j p_j value(x - E_j) for any pointwise filter evaluation.
double convolution_exact(const std::function<double(double)>& value,
                         const SpectralMeasure& measure, double x);

// Random test instances.  All promises hold by construction: the true gap is
// at least delta_lb, the true ground weight at least eta_lb, and the chosen
// epsilon passes validate_epsilon.
struct RandomInstance {
    ProblemInstance instance;
    double epsilon;
};
RandomInstance random_valid_instance(RandomStream& rng);

}  // namespace gsee::testkit

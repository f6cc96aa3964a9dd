#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "gsee/hadamard.hpp"

namespace gsee {

// Measured cost of one pipeline stage.  All times are in applications of the
// controlled unit evolution: a test at parameter t costs |t|.
struct StageUsage {
    double t_max = 0.0;             // deepest single circuit
    double t_total = 0.0;           // summed evolution time over all tests
    std::int64_t n_tests = 0;       // Hadamard tests executed
    std::int64_t n_samples = 0;     // Fourier samples (two tests each)
    std::int64_t classical_ops = 0; // grid_points * samples evaluation work
};

StageUsage stage_usage(const EvolutionMeter& meter, std::int64_t n_samples,
                       std::int64_t grid_points);

struct ResourceReport {
    StageUsage coarse;
    StageUsage main;
    // Analytic band limit of the main stage (the planned t_max); the coarse
    // stage is excluded by convention since its depth is reported separately.
    double t_max_predicted = 0.0;

    double t_max() const { return coarse.t_max > main.t_max ? coarse.t_max : main.t_max; }
    double t_total() const { return coarse.t_total + main.t_total; }
    std::int64_t n_tests() const { return coarse.n_tests + main.n_tests; }
    std::int64_t classical_ops() const { return coarse.classical_ops + main.classical_ops; }
};

// Reference depths for an epsilon-accurate estimate, in the same units.
double qpe_baseline_t(double epsilon);   // 2 / epsilon
double lt22_baseline_t(double epsilon);  // 2 / (pi epsilon)

struct ReductionFactors {
    double sigma;
    double eps_tilde;
    double t_max_predicted;
    double vs_qpe;
    double vs_lt22;
};

// Analytic depth of the pipeline for promises (delta, eta) at accuracy
// epsilon, and its ratio to the two baselines.
ReductionFactors reduction_factors(double delta, double epsilon, double eta);

struct HeadlineRow {
    std::string name;
    double delta_lb;
    double epsilon;
    double eta;
    double t_max;
    double vs_qpe;
    double vs_lt22;
};

// The two built-in molecular parameter sets (EC and PF6 gap bounds at
// epsilon = 1 mHa, eta = 1e-3) run through reduction_factors.
std::vector<HeadlineRow> headline_rows();

void write_headline_csv(std::ostream& out, const std::vector<HeadlineRow>& rows,
                        const std::string& comment);

// Least-squares slope of log(y) against log(x); used for scaling checks.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace gsee

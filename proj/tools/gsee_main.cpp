// Command-line front end: run the estimator on an instance file, reproduce the
// built-in depth-reduction table, sweep the depth/runtime interpolation, or
// exercise the self-check battery.

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gsee/coarse.hpp"
#include "gsee/csv.hpp"
#include "gsee/engine.hpp"
#include "gsee/instance_io.hpp"
#include "gsee/resources.hpp"
#include "gsee/version.hpp"
#include "selfcheck.hpp"

namespace {

using namespace gsee;

std::string self_path() {
    char buf[4096];
    ssize_t n = readlink("/proc/self/exe", buf, sizeof(buf) - 1);
    if (n <= 0) return "";
    buf[n] = '\0';
    return std::string(buf);
}

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file " + path.string());
    return out;
}

// ---------------------------------------------------------------------------
// run

struct RunArgs {
    std::string instance;
    double epsilon = 0.0;
    double delta = 0.1;
    double alpha = 0.0;
    std::uint64_t seed = 1;
    int workers = 1;
    std::string out_dir = "gsee_out";
    bool allow_invalid = false;
    std::string dump_samples;
};

int cmd_run(const RunArgs& a) {
    ProblemInstance inst = load_instance(a.instance);
    if (!inst.gap_promise_holds()) {
        std::cerr << "warning: instance promises delta_lb = " << inst.delta_lb
                  << " but the listed spectrum has a smaller gap; the accuracy "
                     "guarantee does not apply\n";
    }
    Accuracy acc{a.epsilon, a.delta};
    GseeOptions opt;
    opt.workers = a.workers;
    opt.allow_invalid_epsilon = a.allow_invalid;
    GseeResult r = a.alpha == 0.0 ? run_gsee(inst, acc, a.seed, opt)
                                  : run_gsee_alpha(inst, acc, a.alpha, a.seed, opt);

    const double e0 = inst.measure.ground_energy();
    const double error = std::abs(r.estimate - e0);
    const bool success = error <= a.epsilon;

    // workers deliberately omitted: output is identical for every worker count
    std::ostringstream cs;
    cs << "gsee " << version_string << " run --instance " << a.instance
       << " --epsilon " << fmt17(a.epsilon) << " --delta " << fmt17(a.delta)
       << " --alpha " << fmt17(a.alpha) << " --seed " << a.seed;
    const std::string comment = cs.str();

    std::filesystem::path dir(a.out_dir);
    std::filesystem::create_directories(dir);

    {
        std::ofstream out = open_out(dir / "result.csv");
        out << "# " << comment << '\n';
        out << "estimate,true_e0,error,success,coarse_energy,sigma,eps_tilde,"
               "band_limit,grid_points,l1,samples,delta_used,gap_floored,"
               "coarse_t_max,coarse_t_total,coarse_n_tests,coarse_n_samples,"
               "coarse_classical_ops,main_t_max,main_t_total,main_n_tests,"
               "main_n_samples,main_classical_ops,t_max_predicted,"
               "epsilon,delta,alpha,seed\n";
        out << fmt17(r.estimate) << ',' << fmt17(e0) << ',' << fmt17(error) << ','
            << (success ? 1 : 0) << ',' << fmt17(r.coarse_energy) << ','
            << fmt17(r.params.sigma) << ',' << fmt17(r.params.eps_tilde) << ','
            << fmt17(r.params.band_limit) << ',' << r.params.grid_points << ','
            << fmt17(r.params.l1) << ',' << r.params.samples << ','
            << fmt17(r.delta_used) << ',' << (r.gap_floored ? 1 : 0) << ','
            << fmt17(r.resources.coarse.t_max) << ','
            << fmt17(r.resources.coarse.t_total) << ','
            << r.resources.coarse.n_tests << ',' << r.resources.coarse.n_samples
            << ',' << r.resources.coarse.classical_ops << ','
            << fmt17(r.resources.main.t_max) << ','
            << fmt17(r.resources.main.t_total) << ',' << r.resources.main.n_tests
            << ',' << r.resources.main.n_samples << ','
            << r.resources.main.classical_ops << ','
            << fmt17(r.resources.t_max_predicted) << ',' << fmt17(a.epsilon) << ','
            << fmt17(a.delta) << ',' << fmt17(a.alpha) << ',' << a.seed << '\n';
    }
    {
        std::ofstream out = open_out(dir / "profile.csv");
        out << "# " << comment << '\n';
        out << "j,x,h\n";
        for (std::size_t j = 0; j < r.grid.size(); ++j) {
            out << j << ',' << fmt17(r.grid[j]) << ',' << fmt17(r.heights[j]) << '\n';
        }
    }
    if (!a.dump_samples.empty()) {
        // the collection is seed-deterministic, so re-drawing the main stage
        // reproduces exactly the samples the estimate was built from
        GaussianDerivativeFilter filter(r.params.sigma, r.params.band_limit);
        SpectralSamplingBackend backend(inst.measure);
        FourierSampleSet set = FourierSampleSet::collect(
            filter, backend, r.params.samples, derive_seed(a.seed, 2), a.workers);
        std::ofstream out = open_out(a.dump_samples);
        set.dump_csv(out, comment);
    }

    std::cout << "coarse energy:  " << fmt17(r.coarse_energy) << '\n'
              << "estimate:       " << fmt17(r.estimate) << '\n'
              << "true energy:    " << fmt17(e0) << "  (error " << fmt17(error)
              << ", " << (success ? "within" : "OUTSIDE") << " epsilon)\n"
              << "depth t_max:    " << fmt17(r.resources.t_max())
              << "  (planned main-stage " << fmt17(r.resources.t_max_predicted)
              << ")\n"
              << "total time:     " << fmt17(r.resources.t_total()) << " over "
              << r.resources.n_tests() << " tests\n"
              << "wrote " << (dir / "result.csv").string() << " and "
              << (dir / "profile.csv").string() << '\n';
    return 0;
}

// ---------------------------------------------------------------------------
// table1

struct TableArgs {
    double epsilon = 1e-3;
    double eta = 1e-3;
    std::vector<double> delta_lbs;
    std::string out;
};

int cmd_table1(const TableArgs& a) {
    std::vector<HeadlineRow> rows;
    if (a.delta_lbs.empty()) {
        for (HeadlineRow row : headline_rows()) {
            if (a.epsilon != 1e-3 || a.eta != 1e-3) {
                ReductionFactors f = reduction_factors(row.delta_lb, a.epsilon, a.eta);
                row.epsilon = a.epsilon;
                row.eta = a.eta;
                row.t_max = f.t_max_predicted;
                row.vs_qpe = f.vs_qpe;
                row.vs_lt22 = f.vs_lt22;
            }
            rows.push_back(row);
        }
    } else {
        for (std::size_t i = 0; i < a.delta_lbs.size(); ++i) {
            ReductionFactors f = reduction_factors(a.delta_lbs[i], a.epsilon, a.eta);
            rows.push_back({"custom-" + std::to_string(i + 1), a.delta_lbs[i],
                            a.epsilon, a.eta, f.t_max_predicted, f.vs_qpe, f.vs_lt22});
        }
    }

    std::ostringstream cs;
    cs << "gsee " << version_string << " table1 --epsilon " << fmt17(a.epsilon)
       << " --eta " << fmt17(a.eta);
    if (!a.delta_lbs.empty()) {
        cs << " --delta-lb ";
        for (std::size_t i = 0; i < a.delta_lbs.size(); ++i) {
            cs << (i ? "," : "") << fmt17(a.delta_lbs[i]);
        }
    }

    if (a.out.empty()) {
        write_headline_csv(std::cout, rows, cs.str());
    } else {
        std::ofstream out = open_out(a.out);
        write_headline_csv(out, rows, cs.str());
    }
    return 0;
}

// ---------------------------------------------------------------------------
// sweep-alpha

struct SweepArgs {
    std::string instance;
    double epsilon = 0.0;
    double delta = 0.1;
    std::vector<double> alphas{0.0, 0.25, 0.5, 0.75, 1.0};
    std::vector<std::uint64_t> seeds{1, 2, 3, 4, 5};
    int workers = 1;
    std::string out;
};

int cmd_sweep_alpha(const SweepArgs& a) {
    ProblemInstance inst = load_instance(a.instance);
    Accuracy acc{a.epsilon, a.delta};
    GseeOptions opt;
    opt.workers = a.workers;
    std::vector<TradeoffRow> rows = tradeoff_table(inst, acc, a.alphas, a.seeds, opt);

    std::ostringstream cs;
    cs << "gsee " << version_string << " sweep-alpha --instance " << a.instance
       << " --epsilon " << fmt17(a.epsilon) << " --delta " << fmt17(a.delta)
       << " --alphas ";
    for (std::size_t i = 0; i < a.alphas.size(); ++i) {
        cs << (i ? "," : "") << fmt17(a.alphas[i]);
    }
    cs << " --seeds ";
    for (std::size_t i = 0; i < a.seeds.size(); ++i) {
        cs << (i ? "," : "") << a.seeds[i];
    }

    if (a.out.empty()) {
        write_tradeoff_csv(std::cout, rows, cs.str());
    } else {
        std::ofstream out = open_out(a.out);
        write_tradeoff_csv(out, rows, cs.str());
    }
    return 0;
}

// ---------------------------------------------------------------------------
// selftest

struct SelftestArgs {
    bool list = false;
    bool all = false;
    bool mutate = false;
    std::uint64_t seed = 20240817;
    int workers = 1;
    std::vector<int> criteria;
};

void print_check_line(const testkit::CheckResult& r) {
    std::printf("%s %2d  %-28s (%s; %.1fs)\n", r.pass ? "PASS" : "FAIL", r.id,
                r.name.c_str(), r.detail.c_str(), r.seconds);
    std::fflush(stdout);
}

int cmd_selftest(const SelftestArgs& a) {
    const std::vector<testkit::Check>& checks = testkit::all_checks();
    if (a.list) {
        for (const testkit::Check& c : checks) {
            std::printf("%2d  %-28s %s\n", c.id, c.name, c.fast ? "fast" : "slow");
        }
        return 0;
    }

    testkit::CheckContext ctx;
    ctx.seed = a.seed;
    ctx.workers = a.workers;
    ctx.cli_path = self_path();
    if (a.mutate) {
        // deliberately corrupt the l1 comparator; the quadrature cross-check
        // must notice, otherwise the battery is not actually looking
        ctx.l1_mutation = 1.01;
        std::printf("running with a corrupted l1 closed form; a failure below "
                    "is the expected outcome\n");
    }

    std::vector<const testkit::Check*> selected;
    if (!a.criteria.empty()) {
        for (int id : a.criteria) {
            const testkit::Check* found = nullptr;
            for (const testkit::Check& c : checks) {
                if (c.id == id) found = &c;
            }
            if (!found) {
                std::cerr << "error: no check with id " << id << '\n';
                return 2;
            }
            selected.push_back(found);
        }
    } else {
        for (const testkit::Check& c : checks) {
            if (a.all || c.fast) selected.push_back(&c);
        }
    }

    int failed = 0;
    for (const testkit::Check* c : selected) {
        testkit::CheckResult r = testkit::run_check(*c, ctx);
        print_check_line(r);
        if (!r.pass) ++failed;
    }
    std::printf("%zu checks, %d failed\n", selected.size(), failed);
    return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"low-depth ground-state energy estimation"};
    app.set_version_flag("--version", gsee::version_string);
    app.require_subcommand(1);

    RunArgs run_args;
    CLI::App* run = app.add_subcommand("run", "estimate the ground energy of an instance");
    run->add_option("--instance", run_args.instance, "instance JSON file")->required();
    run->add_option("--epsilon", run_args.epsilon, "target accuracy")->required();
    run->add_option("--delta", run_args.delta, "failure probability budget");
    run->add_option("--alpha", run_args.alpha, "depth/runtime interpolation exponent");
    run->add_option("--seed", run_args.seed, "random seed");
    run->add_option("--workers", run_args.workers, "worker threads (never changes results)");
    run->add_option("--out", run_args.out_dir, "output directory");
    run->add_flag("--allow-invalid-epsilon", run_args.allow_invalid,
                  "run even when epsilon exceeds the admissible bound");
    run->add_option("--dump-samples", run_args.dump_samples,
                    "also write the main-stage Fourier samples to this CSV");

    TableArgs table_args;
    CLI::App* table = app.add_subcommand("table1", "built-in depth-reduction table");
    table->add_option("--epsilon", table_args.epsilon, "target accuracy");
    table->add_option("--eta", table_args.eta, "ground-weight lower bound");
    table->add_option("--delta-lb", table_args.delta_lbs,
                      "custom gap lower bounds (replaces the built-in rows)")
        ->delimiter(',');
    table->add_option("--out", table_args.out, "output CSV file (default stdout)");

    SweepArgs sweep_args;
    CLI::App* sweep = app.add_subcommand("sweep-alpha", "depth/runtime trade-off sweep");
    sweep->add_option("--instance", sweep_args.instance, "instance JSON file")->required();
    sweep->add_option("--epsilon", sweep_args.epsilon, "target accuracy")->required();
    sweep->add_option("--delta", sweep_args.delta, "failure probability budget");
    sweep->add_option("--alphas", sweep_args.alphas, "interpolation exponents")
        ->delimiter(',');
    sweep->add_option("--seeds", sweep_args.seeds, "seeds per alpha")->delimiter(',');
    sweep->add_option("--workers", sweep_args.workers, "worker threads");
    sweep->add_option("--out", sweep_args.out, "output CSV file (default stdout)");

    SelftestArgs self_args;
    CLI::App* self = app.add_subcommand("selftest", "run the acceptance check battery");
    self->add_flag("--list", self_args.list, "list checks without running");
    self->add_flag("--all", self_args.all, "run the slow checks too");
    self->add_flag("--mutate", self_args.mutate,
                   "corrupt the l1 comparator to prove the battery can fail");
    self->add_option("--seed", self_args.seed, "base seed for the checks");
    self->add_option("--workers", self_args.workers, "worker threads");
    self->add_option("--criterion", self_args.criteria, "run only these check ids")
        ->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(run)) return cmd_run(run_args);
        if (app.got_subcommand(table)) return cmd_table1(table_args);
        if (app.got_subcommand(sweep)) return cmd_sweep_alpha(sweep_args);
        if (app.got_subcommand(self)) return cmd_selftest(self_args);
    } catch (const gsee::EpsilonTooLarge& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const gsee::CoarseNotFound& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

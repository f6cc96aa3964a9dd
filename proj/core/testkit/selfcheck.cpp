#include "selfcheck.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <vector>

#include "gsee/coarse.hpp"
#include "gsee/conv_eval.hpp"
#include "gsee/engine.hpp"
#include "gsee/filters.hpp"
#include "gsee/instance_io.hpp"
#include "gsee/resources.hpp"
#include "oracle.hpp"

namespace gsee::testkit {

namespace {

constexpr double pi = std::numbers::pi;

CheckResult pass_result(std::string detail) {
    CheckResult r;
    r.pass = true;
    r.detail = std::move(detail);
    return r;
}

CheckResult fail_result(std::string detail) {
    CheckResult r;
    r.pass = false;
    r.detail = std::move(detail);
    return r;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return "<unreadable:" + path + ">";
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

int run_cmd(const std::string& cmd) {
    int status = std::system(cmd.c_str());
    if (status == -1) return -1;
    if (WIFEXITED(status)) return WEXITSTATUS(status);
    return -2;
}

// ---------------------------------------------------------------------------
// 1. headline depth-reduction factors

CheckResult check_headline(const CheckContext&) {
    struct Target {
        const char* name;
        double delta_lb;
        double qpe;
        double lt22;
    };
    const Target targets[] = {{"EC", 0.244, 43.0, 16.0}, {"PF6", 0.448, 78.0, 28.0}};
    std::ostringstream os;
    bool ok = true;
    const char* sep = "";
    for (const Target& t : targets) {
        ReductionFactors f = reduction_factors(t.delta_lb, 1e-3, 1e-3);
        bool row_ok = std::abs(f.vs_qpe / t.qpe - 1.0) <= 0.20 &&
                      std::abs(f.vs_lt22 / t.lt22 - 1.0) <= 0.20;
        ok = ok && row_ok;
        os << sep << t.name << " " << f.vs_qpe << "/" << f.vs_lt22 << " vs " << t.qpe
           << "/" << t.lt22 << (row_ok ? " ok" : " OFF");
        sep = "; ";
    }
    return ok ? pass_result(os.str()) : fail_result(os.str());
}

// ---------------------------------------------------------------------------
// 2. end-to-end accuracy at the stated confidence

CheckResult check_end_to_end(const CheckContext& ctx) {
    ProblemInstance instance = three_level_demo();
    Accuracy acc{0.002, 0.1};
    const double e0 = instance.measure.ground_energy();
    GseeOptions opt;
    opt.workers = ctx.workers;
    int good = 0;
    const int runs = 50;
    for (int i = 0; i < runs; ++i) {
        GseeResult r = run_gsee(instance, acc, ctx.seed + static_cast<std::uint64_t>(i), opt);
        if (std::abs(r.estimate - e0) <= acc.epsilon) ++good;
    }
    std::ostringstream os;
    os << good << "/" << runs << " runs within epsilon (need >= 42)";
    return good >= 42 ? pass_result(os.str()) : fail_result(os.str());
}

// ---------------------------------------------------------------------------
// 3. estimator unbiasedness against the quadrature reference

CheckResult check_unbiasedness(const CheckContext& ctx) {
    SpectralMeasure measure({0.3, 0.8}, {0.7, 0.3});
    const double sigma = 0.1;
    const double band = 25.0;
    GaussianDerivativeFilter filter(sigma, band);
    SpectralSamplingBackend backend(measure);
    const std::vector<double> xs{0.25, 0.28, 0.30, 0.32, 0.35};

    std::vector<double> ref(xs.size());
    for (std::size_t k = 0; k < xs.size(); ++k) {
        ref[k] = convolution_exact(
            [&](double u) { return truncated_derivative_quadrature(sigma, band, u, 1e-10); },
            measure, xs[k]);
    }

    const int inits = 100;
    const std::int64_t s = 10000;
    std::vector<std::vector<double>> estimates(xs.size());
    for (int i = 0; i < inits; ++i) {
        FourierSampleSet set = FourierSampleSet::collect(
            filter, backend, s, derive_seed(ctx.seed, 300 + static_cast<std::uint64_t>(i)),
            ctx.workers);
        std::vector<double> h = set.eval_grid(xs);
        for (std::size_t k = 0; k < xs.size(); ++k) estimates[k].push_back(h[k]);
    }

    std::ostringstream os;
    bool ok = true;
    for (std::size_t k = 0; k < xs.size(); ++k) {
        double mean = 0.0;
        for (double v : estimates[k]) mean += v;
        mean /= inits;
        double var = 0.0;
        for (double v : estimates[k]) var += (v - mean) * (v - mean);
        var /= (inits - 1);
        double se = std::sqrt(var / inits);
        double dev = std::abs(mean - ref[k]);
        if (dev > 5.0 * se) {
            ok = false;
            os << "x=" << xs[k] << " |mean-ref|=" << dev << " > 5se=" << 5.0 * se << "; ";
        }
    }
    if (ok) os << "all " << xs.size() << " points within 5 standard errors";
    return ok ? pass_result(os.str()) : fail_result(os.str());
}

// ---------------------------------------------------------------------------
// 4. Hoeffding sample-count envelope

CheckResult check_envelope(const CheckContext& ctx) {
    SpectralMeasure measure({0.3, 0.9}, {0.6, 0.4});
    const double sigma = 0.5;
    const double band = 3.0;
    GaussianDerivativeFilter filter(sigma, band);
    SpectralSamplingBackend backend(measure);

    const double eps1 = 0.8;
    const double delta1 = 0.1;
    const std::int64_t m = 10;
    std::int64_t s = required_samples(filter.l1_norm(), eps1, delta1, m);

    std::vector<double> grid(static_cast<std::size_t>(m));
    for (std::int64_t j = 0; j < m; ++j) {
        grid[static_cast<std::size_t>(j)] =
            0.3 - sigma + 2.0 * sigma * static_cast<double>(j) / static_cast<double>(m - 1);
    }
    std::vector<double> ref(grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k) {
        ref[k] = convolution_exact(
            [&](double u) { return truncated_derivative_quadrature(sigma, band, u, 1e-10); },
            measure, grid[k]);
    }

    const int trials = 200;
    int bad = 0;
    for (int t = 0; t < trials; ++t) {
        FourierSampleSet set = FourierSampleSet::collect(
            filter, backend, s, derive_seed(ctx.seed, 400 + static_cast<std::uint64_t>(t)),
            ctx.workers);
        std::vector<double> h = set.eval_grid(grid);
        for (std::size_t k = 0; k < grid.size(); ++k) {
            if (std::abs(h[k] - ref[k]) > eps1) {
                ++bad;
                break;
            }
        }
    }
    double limit = delta1 + 3.0 * std::sqrt(delta1 * (1.0 - delta1) / trials);
    std::ostringstream os;
    os << bad << "/" << trials << " trials missed somewhere (S=" << s
       << ", allowed fraction " << limit << ")";
    return bad <= static_cast<int>(limit * trials) ? pass_result(os.str())
                                                  : fail_result(os.str());
}

// ---------------------------------------------------------------------------
// 5. separation of the filtered measure around the ground energy

CheckResult check_separation(const CheckContext& ctx) {
    RandomStream rng(ctx.seed, 777);
    int violations = 0;
    std::ostringstream os;
    for (int i = 0; i < 100; ++i) {
        RandomInstance ri = random_valid_instance(rng);
        const SpectralMeasure& p = ri.instance.measure;
        const double eps = ri.epsilon;
        const double sigma = choose_sigma(ri.instance.delta_lb, eps, ri.instance.eta_lb);
        const double e0 = p.ground_energy();
        const double p0 = p.ground_weight();
        const double scale = eps * p0 / (std::sqrt(2.0 * pi) * sigma * sigma * sigma);
        auto conv = [&](double x) {
            return convolution_exact([&](double u) { return ref_derivative_value(sigma, u); },
                                     p, x);
        };
        // inside the target window the magnitude stays low
        const int n1 = 100;
        for (int k = 0; k <= n1; ++k) {
            double x = e0 - 0.5 * eps + eps * static_cast<double>(k) / n1;
            if (!(std::abs(conv(x)) < 0.6 * scale)) ++violations;
        }
        // outside (but within half a filter width) it stays high; the
        // boundary points at distance exactly epsilon are excluded
        const int n2 = 100;
        for (int k = 1; k <= n2; ++k) {
            double u = eps + (0.5 * sigma - eps) * static_cast<double>(k) / n2;
            if (!(std::abs(conv(e0 - u)) > 0.8 * scale)) ++violations;
            if (!(std::abs(conv(e0 + u)) > 0.8 * scale)) ++violations;
        }
    }
    os << violations << " grid violations across 100 random valid instances";
    return violations == 0 ? pass_result(os.str()) : fail_result(os.str());
}

// ---------------------------------------------------------------------------
// 6. band-limit truncation error bound

CheckResult check_truncation(const CheckContext& ctx) {
    RandomStream rng(ctx.seed, 778);
    int violations = 0;
    int points = 0;
    for (int i = 0; i < 20; ++i) {
        double sigma = std::exp(std::log(0.05) + rng.uniform01() * std::log(2.0 / 0.05));
        double l1_full = 4.0 / (pi * sigma * sigma);
        double eps1 = l1_full * std::pow(10.0, -(1.0 + 4.0 * rng.uniform01()));
        double band = choose_band_limit(sigma, eps1);
        double budget = 0.5 * eps1;
        double qtol = 1e-4 * eps1;

        // the bare filter on a symmetric grid
        const int n = 250;
        for (int k = 0; k <= n; ++k) {
            double x = -3.0 * sigma + 6.0 * sigma * static_cast<double>(k) / n;
            double quad = truncated_derivative_quadrature(sigma, band, x, qtol);
            double refv = ref_derivative_limit(sigma, x);
            ++points;
            if (std::abs(refv - quad) > budget * (1.0 + 1e-9)) ++violations;
        }

        // convolved with a random three-level measure
        double e0 = rng.uniform01();
        double g = sigma * (2.0 + 3.0 * rng.uniform01());
        SpectralMeasure p({e0, e0 + g, e0 + 2.3 * g}, {0.5, 0.3, 0.2});
        const int n2 = 120;
        for (int k = 0; k <= n2; ++k) {
            double x = e0 - 3.0 * sigma +
                       (p.max_energy() - e0 + 6.0 * sigma) * static_cast<double>(k) / n2;
            double quad = convolution_exact(
                [&](double u) { return truncated_derivative_quadrature(sigma, band, u, qtol); },
                p, x);
            double refv = convolution_exact(
                [&](double u) { return ref_derivative_limit(sigma, u); }, p, x);
            ++points;
            if (std::abs(refv - quad) > budget * (1.0 + 1e-9)) ++violations;
        }
    }
    std::ostringstream os;
    os << violations << " violations over " << points << " evaluation points";
    return violations == 0 ? pass_result(os.str()) : fail_result(os.str());
}

// ---------------------------------------------------------------------------
// 7. l1 closed form against bound and quadrature

CheckResult check_l1(const CheckContext& ctx) {
    RandomStream rng(ctx.seed, 779);
    std::ostringstream os;
    for (int i = 0; i < 50; ++i) {
        double sigma = std::exp(std::log(0.05) + rng.uniform01() * std::log(2.0 / 0.05));
        double v = 0.25 + 10.0 * rng.uniform01();  // (sigma pi T)^2 / 2
        double band = std::sqrt(2.0 * v) / (sigma * pi);
        double closed = GaussianDerivativeFilter(sigma, band).l1_norm() * ctx.l1_mutation;
        double bound = 4.0 / (pi * sigma * sigma);
        if (closed > bound * (1.0 + 1e-12)) {
            os << "closed form " << closed << " exceeds bound " << bound
               << " at sigma=" << sigma << " T=" << band;
            return fail_result(os.str());
        }
        double quad = l1_derivative_quadrature(sigma, band);
        if (std::abs(closed - quad) > 1e-9 * quad) {
            os << "closed form " << closed << " vs quadrature " << quad
               << " at sigma=" << sigma << " T=" << band;
            return fail_result(os.str());
        }
    }
    os << "50 (sigma, T) pairs: closed form below bound and within 1e-9 of quadrature";
    return pass_result(os.str());
}

// ---------------------------------------------------------------------------
// 8. scaling slopes of depth and total runtime

CheckResult check_slopes(const CheckContext& ctx) {
    GseeOptions opt;
    opt.workers = ctx.workers;
    std::ostringstream os;

    // depth against the promised gap at fixed accuracy
    const std::vector<double> gaps{0.05, 0.1, 0.2, 0.4};
    std::vector<double> inv_gap, depth;
    for (double g : gaps) {
        SpectralMeasure p({0.25, 0.25 + g}, {0.5, 0.5});
        ProblemInstance inst(p, g, 0.5, 0.0, 1.0);
        GseeResult r = run_gsee(inst, Accuracy{4e-3, 0.1}, ctx.seed + 81, opt);
        inv_gap.push_back(1.0 / g);
        depth.push_back(r.resources.t_max());
    }
    double slope_depth = loglog_slope(inv_gap, depth);

    // total evolution time against accuracy on the three-level demo
    ProblemInstance demo = three_level_demo();
    const std::vector<double> epss{1e-3, 2e-3, 4e-3, 8e-3};
    std::vector<double> inv_eps, total;
    for (double e : epss) {
        GseeResult r = run_gsee(demo, Accuracy{e, 0.1}, ctx.seed + 82, opt);
        inv_eps.push_back(1.0 / e);
        total.push_back(r.resources.t_total());
    }
    double slope_total = loglog_slope(inv_eps, total);

    bool ok = slope_depth >= 0.85 && slope_depth <= 1.15 && slope_total >= 1.7 &&
              slope_total <= 2.3;
    os << "t_max~(1/gap) slope " << slope_depth << " (want [0.85,1.15]); "
       << "t_total~(1/eps) slope " << slope_total << " (want [1.7,2.3])";
    return ok ? pass_result(os.str()) : fail_result(os.str());
}

// ---------------------------------------------------------------------------
// 9. depth/runtime trade-off monotone in alpha

CheckResult check_alpha_tradeoff(const CheckContext& ctx) {
    ProblemInstance demo = three_level_demo();
    Accuracy acc{0.002, 0.1};
    const std::vector<double> alphas{0.0, 0.25, 0.5, 0.75, 1.0};
    std::vector<std::uint64_t> seeds;
    for (int i = 0; i < 10; ++i) seeds.push_back(ctx.seed + 90 + static_cast<std::uint64_t>(i));
    GseeOptions opt;
    opt.workers = ctx.workers;
    std::vector<TradeoffRow> rows = tradeoff_table(demo, acc, alphas, seeds, opt);

    std::vector<double> mean_tmax(alphas.size(), 0.0), mean_ttot(alphas.size(), 0.0);
    for (const TradeoffRow& r : rows) {
        for (std::size_t a = 0; a < alphas.size(); ++a) {
            if (r.alpha == alphas[a]) {
                mean_tmax[a] += r.t_max / seeds.size();
                mean_ttot[a] += r.t_total / seeds.size();
            }
        }
    }
    bool ok = true;
    std::ostringstream os;
    os << "mean t_max: ";
    for (std::size_t a = 0; a < alphas.size(); ++a) {
        os << mean_tmax[a] << (a + 1 < alphas.size() ? ", " : "");
        if (a > 0 && mean_tmax[a] < mean_tmax[a - 1]) ok = false;
    }
    os << "; mean t_total: ";
    for (std::size_t a = 0; a < alphas.size(); ++a) {
        os << mean_ttot[a] << (a + 1 < alphas.size() ? ", " : "");
        if (a > 0 && mean_ttot[a] > mean_ttot[a - 1]) ok = false;
    }
    return ok ? pass_result(os.str()) : fail_result(os.str());
}

// ---------------------------------------------------------------------------
// 10. coarse localization contract

CheckResult check_coarse(const CheckContext& ctx) {
    struct Case {
        ProblemInstance instance;
        double epsilon;
    };
    const Case cases[] = {{three_level_demo(), 0.002}, {two_level_demo(), 0.004}};
    std::ostringstream os;
    bool ok = true;
    const char* sep = "";
    for (const Case& c : cases) {
        GseeParams params = plan_gsee(c.instance, Accuracy{c.epsilon, 0.1});
        SpectralSamplingBackend backend(c.instance.measure);
        const double e0 = c.instance.measure.ground_energy();
        int good = 0;
        for (int i = 0; i < 100; ++i) {
            CoarseOutcome co = coarse_estimate(
                params.coarse, backend, 0.05,
                derive_seed(ctx.seed + static_cast<std::uint64_t>(i), 10), ctx.workers);
            if (std::abs(co.estimate - e0) <= 0.25 * params.sigma) ++good;
        }
        ok = ok && good >= 95;
        os << sep << good << "/100 within sigma/4";
        sep = "; ";
    }
    return ok ? pass_result(os.str()) : fail_result(os.str());
}

// ---------------------------------------------------------------------------
// 11. CLI determinism across repeats and worker counts

CheckResult check_determinism(const CheckContext& ctx) {
    if (ctx.cli_path.empty()) {
        return fail_result("no CLI path provided (pass --cli <path to gsee>)");
    }
    namespace fs = std::filesystem;
    char tmpl[] = "/tmp/gsee_check_XXXXXX";
    char* dir = mkdtemp(tmpl);
    if (!dir) return fail_result("mkdtemp failed");
    fs::path root(dir);
    auto cleanup = [&] {
        std::error_code ec;
        fs::remove_all(root, ec);
    };

    ProblemInstance inst = two_level_demo();
    save_instance((root / "inst.json").string(), inst);

    std::string cli = "'" + ctx.cli_path + "'";
    std::string base = cli + " run --instance '" + (root / "inst.json").string() +
                       "' --epsilon 0.033 --delta 0.1 --seed 42";
    struct Variant {
        const char* dir;
        const char* extra;
    };
    const Variant variants[] = {
        {"a", " --workers 1"}, {"b", " --workers 1"}, {"c", " --workers 4"}};
    for (const Variant& v : variants) {
        std::string cmd = base + v.extra + " --out '" + (root / v.dir).string() +
                          "' > '" + (root / (std::string("log_") + v.dir)).string() +
                          "' 2>&1";
        int rc = run_cmd(cmd);
        if (rc != 0) {
            std::string log = slurp((root / (std::string("log_") + v.dir)).string());
            cleanup();
            return fail_result(std::string("run variant ") + v.dir + " exited " +
                               std::to_string(rc) + ": " + log.substr(0, 300));
        }
    }
    for (const char* file : {"result.csv", "profile.csv"}) {
        std::string a = slurp((root / "a" / file).string());
        std::string b = slurp((root / "b" / file).string());
        std::string c = slurp((root / "c" / file).string());
        if (a != b || a != c) {
            cleanup();
            return fail_result(std::string(file) +
                               " differs across identical/parallel reruns");
        }
    }

    // table1 twice
    for (const char* out : {"t1.csv", "t2.csv"}) {
        std::string cmd = cli + " table1 --out '" + (root / out).string() + "' > '" +
                          (root / "log_t").string() + "' 2>&1";
        if (run_cmd(cmd) != 0) {
            cleanup();
            return fail_result("table1 failed");
        }
    }
    bool t_same = slurp((root / "t1.csv").string()) == slurp((root / "t2.csv").string());
    cleanup();
    if (!t_same) return fail_result("table1 output differs between runs");
    return pass_result("run (x3 incl. --workers 4) and table1 outputs byte-identical");
}

}  // namespace

ProblemInstance three_level_demo() {
    return ProblemInstance(SpectralMeasure({0.30, 0.40, 0.55}, {0.6, 0.25, 0.15}), 0.1,
                           0.5, 0.0, 1.0);
}

ProblemInstance two_level_demo() {
    return ProblemInstance(SpectralMeasure({0.25, 0.65}, {0.5, 0.5}), 0.4, 0.5, 0.0, 1.0);
}

const std::vector<Check>& all_checks() {
    static const std::vector<Check> checks = {
        {1, "headline-depth-reduction", true, check_headline},
        {2, "end-to-end-accuracy", false, check_end_to_end},
        {3, "estimator-unbiasedness", true, check_unbiasedness},
        {4, "sampling-envelope", true, check_envelope},
        {5, "filter-separation", true, check_separation},
        {6, "band-limit-truncation", true, check_truncation},
        {7, "l1-closed-form", true, check_l1},
        {8, "scaling-slopes", false, check_slopes},
        {9, "alpha-tradeoff-monotonicity", false, check_alpha_tradeoff},
        {10, "coarse-localization", true, check_coarse},
        {11, "determinism", true, check_determinism},
    };
    return checks;
}

CheckResult run_check(const Check& check, const CheckContext& ctx) {
    auto start = std::chrono::steady_clock::now();
    CheckResult r;
    try {
        r = check.fn(ctx);
    } catch (const std::exception& e) {
        r.pass = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.id = check.id;
    r.name = check.name;
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

}  // namespace gsee::testkit

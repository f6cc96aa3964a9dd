#include <doctest.h>

#include <cmath>
#include <sstream>

#include "gsee/engine.hpp"
#include "oracle.hpp"
#include "selfcheck.hpp"

using namespace gsee;
namespace tk = gsee::testkit;

TEST_CASE("plan for the three-level demo instance") {
    ProblemInstance demo = tk::three_level_demo();
    GseeParams p = plan_gsee(demo, Accuracy{0.002, 0.1});

    CHECK(p.epsilon_verdict.ok);
    // width cap 0.2 * delta_lb binds here
    CHECK(p.sigma == doctest::Approx(0.02).epsilon(1e-15));
    CHECK(p.eps_tilde == doctest::Approx(4.986778505).epsilon(1e-9));
    CHECK(p.band_limit == doctest::Approx(60.19326449).epsilon(1e-8));
    // sigma / epsilon lands a hair above 10 in doubles, so the ceiling
    // rounds up before the +1 headroom point
    CHECK(p.grid_points == 12);
    CHECK(p.l1 == doctest::Approx(3180.605473).epsilon(1e-9));
    // Hoeffding count at eps_tilde/2, delta/2, m = 12
    CHECK(std::abs(p.samples - 11173836) <= 3);
    // coarse stage geometry hangs off sigma
    CHECK(p.coarse.width == doctest::Approx(p.sigma / 13.32087378).epsilon(1e-9));
}

TEST_CASE("inadmissible epsilon is refused with the largest usable value") {
    ProblemInstance demo = tk::two_level_demo();
    try {
        run_gsee(demo, Accuracy{0.05, 0.1}, 1);
        FAIL("expected EpsilonTooLarge");
    } catch (const EpsilonTooLarge& e) {
        CHECK_FALSE(e.verdict.ok);
        CHECK(e.verdict.max_epsilon ==
              doctest::Approx(separation_constant * 0.2 * 0.4).epsilon(1e-12));
        CHECK(std::string(e.what()).find("admissible") != std::string::npos);
    }
}

TEST_CASE("allow_invalid_epsilon overrides the refusal") {
    ProblemInstance demo = tk::two_level_demo();
    GseeOptions opt;
    opt.allow_invalid_epsilon = true;
    opt.coarse_energy_override = 0.25;
    GseeResult r = run_gsee(demo, Accuracy{0.05, 0.1}, 1, opt);
    CHECK_FALSE(r.params.epsilon_verdict.ok);
    CHECK(r.resources.coarse.n_tests == 0);  // coarse stage skipped
    CHECK(r.grid.size() == static_cast<std::size_t>(r.params.grid_points));
}

TEST_CASE("full run on the two-level demo") {
    ProblemInstance demo = tk::two_level_demo();
    const double eps = 0.033;
    GseeResult r = run_gsee(demo, Accuracy{eps, 0.1}, 7);

    CHECK(std::abs(r.estimate - 0.25) <= eps);
    CHECK(std::abs(r.coarse_energy - 0.25) <= 0.25 * r.params.sigma);
    REQUIRE(r.grid.size() == static_cast<std::size_t>(r.params.grid_points));
    REQUIRE(r.heights.size() == r.grid.size());
    CHECK(r.estimate == r.grid[r.argmin_index]);
    for (std::size_t j = 0; j < r.heights.size(); ++j) {
        CHECK(std::abs(r.heights[r.argmin_index]) <= std::abs(r.heights[j]));
    }
    // grid geometry: M points of spacing sigma/(2M) starting sigma/4 below
    // the coarse centre
    CHECK(r.grid.front() ==
          doctest::Approx(r.coarse_energy - 0.25 * r.params.sigma).epsilon(1e-12));
    CHECK(r.grid[1] - r.grid[0] ==
          doctest::Approx(0.5 * r.params.sigma / r.params.grid_points).epsilon(1e-12));

    // resource accounting
    CHECK(r.resources.main.n_samples == r.params.samples);
    CHECK(r.resources.main.n_tests == 2 * r.params.samples);
    CHECK(r.resources.main.t_max <= r.params.band_limit * (1.0 + 1e-12));
    CHECK(r.resources.t_max_predicted == r.params.band_limit);
    CHECK(r.resources.coarse.n_tests == 2 * r.resources.coarse.n_samples);
    CHECK(r.resources.coarse.classical_ops ==
          r.resources.coarse.n_samples *
              static_cast<std::int64_t>(r.params.coarse.grid.size()));
    CHECK(r.resources.t_total() ==
          r.resources.coarse.t_total + r.resources.main.t_total);
    CHECK(r.delta_used == demo.delta_lb);
    CHECK_FALSE(r.gap_floored);
    CHECK(r.seed == 7);
}

TEST_CASE("runs are deterministic and worker-count independent") {
    ProblemInstance demo = tk::two_level_demo();
    Accuracy acc{0.033, 0.1};
    GseeResult a = run_gsee(demo, acc, 11);
    GseeResult b = run_gsee(demo, acc, 11);
    GseeOptions opt;
    opt.workers = 3;
    GseeResult c = run_gsee(demo, acc, 11, opt);

    CHECK(a.estimate == b.estimate);
    CHECK(a.estimate == c.estimate);
    REQUIRE(a.heights.size() == c.heights.size());
    for (std::size_t j = 0; j < a.heights.size(); ++j) {
        REQUIRE(a.heights[j] == b.heights[j]);
        REQUIRE(a.heights[j] == c.heights[j]);
    }
    CHECK(a.resources.main.t_total == c.resources.main.t_total);
    CHECK(a.resources.coarse.t_max == c.resources.coarse.t_max);

    // a different seed gives different data
    GseeResult d = run_gsee(demo, acc, 12);
    CHECK(a.heights[0] != d.heights[0]);
}

TEST_CASE("alpha = 0 reproduces the direct run; alpha = 1 floors the gap") {
    ProblemInstance demo = tk::three_level_demo();
    Accuracy acc{0.002, 0.1};

    GseeResult direct = run_gsee(demo, acc, 3);
    GseeResult zero = run_gsee_alpha(demo, acc, 0.0, 3);
    CHECK(zero.delta_used == demo.delta_lb);
    CHECK_FALSE(zero.gap_floored);
    CHECK(zero.estimate == direct.estimate);

    GseeResult one = run_gsee_alpha(demo, acc, 1.0, 3);
    CHECK(one.gap_floored);
    // floored at the smallest admissible gap for epsilon (plus the tiny
    // roundoff pad), far above epsilon itself
    CHECK(one.delta_used == doctest::Approx(0.0217844228533027).epsilon(1e-6));
    CHECK(one.params.sigma < direct.params.sigma);
    // shallower total runtime, deeper circuits
    CHECK(one.resources.t_total() < direct.resources.t_total());
    CHECK(one.resources.t_max() > direct.resources.t_max());
    // the accuracy statement still holds at the floored gap
    CHECK(std::abs(one.estimate - 0.30) <= acc.epsilon);

    CHECK_THROWS_AS(run_gsee_alpha(demo, acc, -0.1, 3), std::invalid_argument);
    CHECK_THROWS_AS(run_gsee_alpha(demo, acc, 1.1, 3), std::invalid_argument);
}

TEST_CASE("tradeoff table shape and csv schema") {
    ProblemInstance demo = tk::two_level_demo();
    Accuracy acc{0.033, 0.1};
    std::vector<TradeoffRow> rows = tradeoff_table(demo, acc, {0.0, 1.0}, {1, 2});
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].alpha == 0.0);
    CHECK(rows[1].seed == 2);
    CHECK(rows[2].alpha == 1.0);
    for (const TradeoffRow& r : rows) {
        CHECK(r.t_max > 0.0);
        CHECK(r.t_total > r.t_max);
        CHECK(r.n_tests > 0);
    }

    std::ostringstream out;
    write_tradeoff_csv(out, rows, "check");
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    CHECK(line == "# check");
    std::getline(in, line);
    CHECK(line == "alpha,delta_eff,t_max,t_total,n_tests,success,seed");
    int data_lines = 0;
    while (std::getline(in, line)) {
        if (!line.empty()) ++data_lines;
    }
    CHECK(data_lines == 4);
}

TEST_CASE("grid argmin of the exact filtered profile localizes the ground energy") {
    // Mirrors the run's grid rule, but evaluates the exact convolution
    // instead of sampling: with the coarse centre anywhere within sigma/4 of
    // the truth, the smallest |height| must land within epsilon.
    RandomStream rng(606, 0);
    for (int trial = 0; trial < 100; ++trial) {
        tk::RandomInstance ri = tk::random_valid_instance(rng);
        GseeParams params = plan_gsee(ri.instance, Accuracy{ri.epsilon, 0.1});
        const double e0 = ri.instance.measure.ground_energy();
        const double centre =
            e0 + (2.0 * rng.uniform01() - 1.0) * 0.99 * 0.25 * params.sigma;

        const std::int64_t m = params.grid_points;
        const double step = 0.5 * params.sigma / static_cast<double>(m);
        double best_x = 0.0, best_h = 0.0;
        for (std::int64_t j = 0; j < m; ++j) {
            double x = centre - 0.25 * params.sigma + step * static_cast<double>(j);
            double h = tk::convolution_exact(
                [&](double u) { return tk::ref_derivative_value(params.sigma, u); },
                ri.instance.measure, x);
            if (j == 0 || std::abs(h) < std::abs(best_h)) {
                best_x = x;
                best_h = h;
            }
        }
        REQUIRE(std::abs(best_x - e0) <= ri.epsilon);
    }
}

#include <doctest.h>

#include <cmath>
#include <cstring>
#include <sstream>
#include <string>
#include <vector>

#include "gsee/conv_eval.hpp"
#include "gsee/csv.hpp"
#include "gsee/parallel.hpp"

using namespace gsee;

TEST_CASE("required_samples pinned values") {
    // l1 = 2, eps1 = 0.1, delta1 = 0.05, m = 10:
    // ceil(4 * ln(800) / 0.01) = 2674
    CHECK(required_samples(2.0, 0.1, 0.05, 10) == 2674);
    // l1 = 1, eps1 = 1, delta1 = 0.5, m = 1: ceil(ln 8) = 3
    CHECK(required_samples(1.0, 1.0, 0.5, 1) == 3);
    // l1 = 3, eps1 = 0.5, delta1 = 0.1, m = 5:
    // ceil(9 * ln(200) / 0.25) = ceil(190.739...) = 191
    CHECK(required_samples(3.0, 0.5, 0.1, 5) == 191);
    // monotone in each argument the right way
    CHECK(required_samples(4.0, 0.1, 0.05, 10) > required_samples(2.0, 0.1, 0.05, 10));
    CHECK(required_samples(2.0, 0.2, 0.05, 10) < required_samples(2.0, 0.1, 0.05, 10));
    CHECK(required_samples(2.0, 0.1, 0.05, 100) > required_samples(2.0, 0.1, 0.05, 10));
}

TEST_CASE("required_samples rejects bad input and overflow") {
    CHECK_THROWS_AS(required_samples(0.0, 0.1, 0.05, 10), std::invalid_argument);
    CHECK_THROWS_AS(required_samples(1.0, 0.0, 0.05, 10), std::invalid_argument);
    CHECK_THROWS_AS(required_samples(1.0, 0.1, 1.0, 10), std::invalid_argument);
    CHECK_THROWS_AS(required_samples(1.0, 0.1, 0.05, 0), std::invalid_argument);
    CHECK_THROWS_AS(required_samples(1e10, 1e-9, 0.05, 10), std::overflow_error);
}

namespace {

FourierSampleSet make_set(std::int64_t count, std::uint64_t seed, int workers,
                          const SpectralMeasure& measure) {
    GaussianDerivativeFilter filter(0.5, 3.0);
    SpectralSamplingBackend backend(measure);
    return FourierSampleSet::collect(filter, backend, count, seed, workers);
}

}  // namespace

TEST_CASE("collected samples respect the filter invariants") {
    SpectralMeasure p({0.4}, {1.0});
    FourierSampleSet set = make_set(5000, 77, 1, p);
    CHECK(set.size() == 5000);
    const double expect_abs = set.l1() * std::sqrt(2.0);
    for (const auto& s : set.samples()) {
        REQUIRE(std::abs(s.t) <= set.band_limit());
        REQUIRE(std::abs(std::hypot(s.z.real(), s.z.imag()) - expect_abs) <=
                1e-12 * expect_abs);
    }
}

TEST_CASE("collection is identical for any worker count") {
    SpectralMeasure p({0.2, 0.7}, {0.5, 0.5});
    // three full blocks plus a partial one
    std::int64_t n = 3 * sample_block_size + 1234;
    FourierSampleSet a = make_set(n, 99, 1, p);
    FourierSampleSet b = make_set(n, 99, 4, p);
    REQUIRE(a.size() == b.size());
    for (std::int64_t i = 0; i < n; ++i) {
        const auto& sa = a.samples()[static_cast<std::size_t>(i)];
        const auto& sb = b.samples()[static_cast<std::size_t>(i)];
        REQUIRE(sa.t == sb.t);
        REQUIRE(sa.z == sb.z);
    }
}

TEST_CASE("eval_grid equals eval pointwise") {
    SpectralMeasure p({0.3}, {1.0});
    FourierSampleSet set = make_set(20000, 5, 1, p);

    // irregular grid: same summation path as eval(), so exactly equal
    std::vector<double> irregular{0.1, 0.13, 0.4, 0.72};
    std::vector<double> h = set.eval_grid(irregular);
    for (std::size_t j = 0; j < irregular.size(); ++j) {
        REQUIRE(h[j] == set.eval(irregular[j]));
    }

    // uniform grid: the rotation shortcut must agree to high accuracy
    std::vector<double> uniform;
    for (int j = 0; j < 11; ++j) uniform.push_back(0.1 + 0.05 * j);
    std::vector<double> hu = set.eval_grid(uniform);
    for (std::size_t j = 0; j < uniform.size(); ++j) {
        REQUIRE(hu[j] == doctest::Approx(set.eval(uniform[j])).epsilon(1e-9));
    }

    // and the grid evaluation is worker-count independent bit for bit
    std::vector<double> hu3 = set.eval_grid(uniform, 3);
    for (std::size_t j = 0; j < uniform.size(); ++j) {
        REQUIRE(hu3[j] == hu[j]);
    }
}

TEST_CASE("estimator is near zero at the level of a point measure") {
    // the derivative filter is odd around each level, so the convolution
    // vanishes at the level itself; the estimate must sit within noise
    SpectralMeasure p({0.4}, {1.0});
    FourierSampleSet set = make_set(20000, 31, 1, p);
    double noise = 5.0 * set.l1() * std::sqrt(2.0) / std::sqrt(20000.0);
    CHECK(std::abs(set.eval(0.4)) < noise);
    // and it has the right sign just off the level (negative above, positive
    // below for a derivative-of-Gaussian profile)
    CHECK(set.eval(0.4 + 0.3) < -0.1);
    CHECK(set.eval(0.4 - 0.3) > 0.1);
}

TEST_CASE("dump and load round trip bit for bit") {
    SpectralMeasure p({0.25, 0.8}, {0.7, 0.3});
    FourierSampleSet set = make_set(500, 13, 1, p);
    std::stringstream buf;
    set.dump_csv(buf, "round trip check");

    FourierSampleSet back = FourierSampleSet::load_csv(buf, set.l1(), set.band_limit());
    REQUIRE(back.size() == set.size());
    for (std::int64_t i = 0; i < set.size(); ++i) {
        REQUIRE(back.samples()[static_cast<std::size_t>(i)].t ==
                set.samples()[static_cast<std::size_t>(i)].t);
        REQUIRE(back.samples()[static_cast<std::size_t>(i)].z ==
                set.samples()[static_cast<std::size_t>(i)].z);
    }
    CHECK(back.eval(0.3) == set.eval(0.3));
}

namespace {

// replace data line `index` (0-based, after the header) in a dump
std::string tamper(const std::string& dump, std::size_t index,
                   const std::string& replacement) {
    std::istringstream in(dump);
    std::ostringstream out;
    std::string line;
    std::size_t data = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (!line.empty() && line[0] != '#' && header_seen && data++ == index) {
            out << replacement << '\n';
        } else {
            out << line << '\n';
        }
        if (!header_seen && !line.empty() && line[0] != '#') header_seen = true;
    }
    return out.str();
}

}  // namespace

TEST_CASE("load_csv rejects corrupted dumps") {
    SpectralMeasure p({0.4}, {1.0});
    FourierSampleSet set = make_set(50, 21, 1, p);
    std::stringstream buf;
    set.dump_csv(buf);
    const std::string dump = buf.str();

    // magnitude off by 1%: inconsistent with l1 * sqrt(2)
    {
        const auto& s = set.samples()[3];
        std::ostringstream row;
        row << fmt17(s.t) << ',' << fmt17(s.z.real() * 1.01) << ','
            << fmt17(s.z.imag());
        std::istringstream in(tamper(dump, 3, row.str()));
        CHECK_THROWS_WITH_AS(
            (void)FourierSampleSet::load_csv(in, set.l1(), set.band_limit()),
            doctest::Contains("magnitude"), std::runtime_error);
    }
    // frequency outside the band limit
    {
        const auto& s = set.samples()[0];
        std::ostringstream row;
        row << fmt17(set.band_limit() * 2.0) << ',' << fmt17(s.z.real()) << ','
            << fmt17(s.z.imag());
        std::istringstream in(tamper(dump, 0, row.str()));
        CHECK_THROWS_WITH_AS(
            (void)FourierSampleSet::load_csv(in, set.l1(), set.band_limit()),
            doctest::Contains("band limit"), std::runtime_error);
    }
    // wrong field count
    {
        std::istringstream in(tamper(dump, 1, "1.0,2.0"));
        CHECK_THROWS(
            (void)FourierSampleSet::load_csv(in, set.l1(), set.band_limit()));
    }
    // missing header entirely
    {
        std::istringstream in("");
        CHECK_THROWS(
            (void)FourierSampleSet::load_csv(in, set.l1(), set.band_limit()));
    }
}

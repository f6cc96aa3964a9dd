#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "gsee/instance_io.hpp"

using namespace gsee;

namespace {

ProblemInstance sample_instance() {
    return ProblemInstance(SpectralMeasure({0.30, 0.40, 0.55}, {0.6, 0.25, 0.15}),
                           0.1, 0.5, 0.0, 1.0);
}

}  // namespace

TEST_CASE("instance stream round trip") {
    ProblemInstance a = sample_instance();
    std::stringstream buf;
    write_instance(buf, a);
    ProblemInstance b = read_instance(buf, "<test>");

    REQUIRE(b.measure.size() == a.measure.size());
    for (std::size_t j = 0; j < a.measure.size(); ++j) {
        CHECK(b.measure.energy(j) == a.measure.energy(j));
        CHECK(b.measure.weight(j) == a.measure.weight(j));
    }
    CHECK(b.delta_lb == a.delta_lb);
    CHECK(b.eta_lb == a.eta_lb);
    CHECK(b.e_lo == a.e_lo);
    CHECK(b.e_hi == a.e_hi);
}

TEST_CASE("instance file round trip") {
    std::string path = "/tmp/gsee_test_instance.json";
    save_instance(path, sample_instance());
    ProblemInstance b = load_instance(path);
    CHECK(b.measure.ground_energy() == 0.30);
    CHECK(b.delta_lb == 0.1);
    std::remove(path.c_str());
}

TEST_CASE("missing file is reported with the path") {
    CHECK_THROWS_WITH_AS(load_instance("/nonexistent/gsee.json"),
                         doctest::Contains("/nonexistent/gsee.json"),
                         std::runtime_error);
}

TEST_CASE("malformed instances are rejected") {
    auto parse = [](const char* text) {
        std::istringstream in(text);
        return read_instance(in, "<test>");
    };

    // not JSON at all
    CHECK_THROWS(parse("energies: [0.3]"));
    // missing key
    CHECK_THROWS(parse(R"({"energies":[0.3],"weights":[1.0],"delta_lb":0.1,)"
                       R"("eta_lb":0.5,"e_lo":0.0})"));
    // wrong type
    CHECK_THROWS(parse(R"({"energies":"oops","weights":[1.0],"delta_lb":0.1,)"
                       R"("eta_lb":0.5,"e_lo":0.0,"e_hi":1.0})"));
    // length mismatch
    CHECK_THROWS(parse(R"({"energies":[0.3,0.5],"weights":[1.0],"delta_lb":0.1,)"
                       R"("eta_lb":0.5,"e_lo":0.0,"e_hi":1.0})"));
    // semantic violation caught by the instance validator
    CHECK_THROWS(parse(R"({"energies":[0.3,0.5],"weights":[0.5,0.5],"delta_lb":0.1,)"
                       R"("eta_lb":0.9,"e_lo":0.0,"e_hi":1.0})"));
}

#include <doctest.h>

#include <complex>
#include <stdexcept>
#include <vector>

#include "gsee/spectral_measure.hpp"

using namespace gsee;

TEST_CASE("spectral measure accessors") {
    SpectralMeasure p({0.1, 0.4, 0.9}, {0.5, 0.3, 0.2});
    CHECK(p.size() == 3);
    CHECK(p.ground_energy() == 0.1);
    CHECK(p.ground_weight() == 0.5);
    CHECK(p.gap() == doctest::Approx(0.3));
    CHECK(p.min_energy() == 0.1);
    CHECK(p.max_energy() == 0.9);
    CHECK(p.energy(1) == 0.4);
    CHECK(p.weight(2) == 0.2);
}

TEST_CASE("spectral measure rejects malformed input") {
    CHECK_THROWS_AS(SpectralMeasure({}, {}), std::invalid_argument);
    CHECK_THROWS_AS(SpectralMeasure({0.2, 0.1}, {0.5, 0.5}), std::invalid_argument);
    CHECK_THROWS_AS(SpectralMeasure({0.1, 0.1}, {0.5, 0.5}), std::invalid_argument);
    CHECK_THROWS_AS(SpectralMeasure({0.1, 0.2}, {0.5}), std::invalid_argument);
    CHECK_THROWS_AS(SpectralMeasure({0.1, 0.2}, {-0.1, 1.1}), std::invalid_argument);
    CHECK_THROWS_AS(SpectralMeasure({0.1, 0.2}, {0.5, 0.4}), std::invalid_argument);
}

TEST_CASE("gap needs at least two levels") {
    SpectralMeasure p({0.5}, {1.0});
    CHECK_THROWS_AS(p.gap(), std::logic_error);
}

namespace {
using cd = std::complex<double>;
}

TEST_CASE("dense hamiltonian: diagonal case") {
    std::vector<cd> h = {cd(0.2), cd(0.0), cd(0.0), cd(0.7)};
    std::vector<cd> rho = {cd(0.3), cd(0.0), cd(0.0), cd(0.7)};
    SpectralMeasure p = from_dense_hamiltonian(h, rho, 2);
    REQUIRE(p.size() == 2);
    CHECK(p.energy(0) == doctest::Approx(0.2).epsilon(1e-12));
    CHECK(p.energy(1) == doctest::Approx(0.7).epsilon(1e-12));
    CHECK(p.weight(0) == doctest::Approx(0.3).epsilon(1e-12));
    CHECK(p.weight(1) == doctest::Approx(0.7).epsilon(1e-12));
}

TEST_CASE("dense hamiltonian: off-diagonal mixing") {
    // sigma_x has eigenvalues -1, +1 with eigenvectors (1, -+1)/sqrt(2);
    // the state |0><0| overlaps each with probability 1/2
    std::vector<cd> h = {cd(0.0), cd(1.0), cd(1.0), cd(0.0)};
    std::vector<cd> rho = {cd(1.0), cd(0.0), cd(0.0), cd(0.0)};
    SpectralMeasure p = from_dense_hamiltonian(h, rho, 2);
    REQUIRE(p.size() == 2);
    CHECK(p.energy(0) == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(p.energy(1) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(p.weight(0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(p.weight(1) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("dense hamiltonian: degenerate levels merge") {
    std::vector<cd> h(9, cd(0.0));
    h[0] = cd(0.5);
    h[4] = cd(0.5);
    h[8] = cd(1.0);
    std::vector<cd> rho(9, cd(0.0));
    rho[0] = rho[4] = rho[8] = cd(1.0 / 3.0);
    SpectralMeasure p = from_dense_hamiltonian(h, rho, 3);
    REQUIRE(p.size() == 2);
    CHECK(p.energy(0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(p.weight(0) == doctest::Approx(2.0 / 3.0).epsilon(1e-10));
    CHECK(p.weight(1) == doctest::Approx(1.0 / 3.0).epsilon(1e-10));
}

TEST_CASE("dense hamiltonian: input validation") {
    std::vector<cd> not_herm = {cd(0.0), cd(1.0), cd(0.5), cd(0.0)};
    std::vector<cd> rho = {cd(1.0), cd(0.0), cd(0.0), cd(0.0)};
    CHECK_THROWS(from_dense_hamiltonian(not_herm, rho, 2));

    std::vector<cd> h = {cd(0.0), cd(1.0), cd(1.0), cd(0.0)};
    std::vector<cd> bad_trace = {cd(0.9), cd(0.0), cd(0.0), cd(0.0)};
    CHECK_THROWS(from_dense_hamiltonian(h, bad_trace, 2));

    CHECK_THROWS(from_dense_hamiltonian(h, rho, 3));  // size mismatch
}

#include <doctest.h>

#include <cmath>
#include <filesystem>

#include "oracles.hpp"
#include "riesz/errors.hpp"
#include "riesz/rng.hpp"

using namespace riesz;

namespace {

const KernelSpec kCoulomb = KernelSpec::newtonian(3);

}  // namespace

TEST_SUITE("oracles") {

TEST_CASE("reference energy") {
  CHECK(oracles::reference_energy(PointConfig::from_points({{0, 0, 0}, {1, 0, 0}}), kCoulomb) == 1.0);
  CHECK(oracles::reference_energy(oracles::unit_edge_tetrahedron(), kCoulomb) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(oracles::reference_energy(PointConfig::from_points({{1, 0, 0}, {1, 0, 0}}), kCoulomb), CoincidentPointsError);
  CHECK_THROWS_AS(oracles::reference_energy(PointConfig::from_points({{1, 0, 0}}), kCoulomb), std::invalid_argument);
}

TEST_CASE("polyhedra are inscribed") {
  for (const auto& poly : {oracles::octahedron(), oracles::icosahedron()}) {
    for (std::size_t k = 0; k < poly.size(); ++k) CHECK(norm(poly[k]) == doctest::Approx(1.0).epsilon(1e-15));
  }
  CHECK(oracles::icosahedron().size() == 12);
}

TEST_CASE("grid Fekete search") {
  const auto sphere = CompactSetModel::unit_sphere();
  const auto two = oracles::grid_fekete(sphere, kCoulomb, 2, 32);
  CHECK(two.energy == doctest::Approx(0.5).epsilon(1e-12));
  const auto three = oracles::grid_fekete(sphere, kCoulomb, 3, 32);
  CHECK(three.energy == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-9));
  const auto four = oracles::grid_fekete(sphere, kCoulomb, 4, 32);
  CHECK(four.energy == doctest::Approx(std::sqrt(0.375)).epsilon(1e-9));
  CHECK(four.coarse_energy >= four.energy);
  CHECK(four.configurations > 1000);

  const auto five = oracles::grid_fekete(sphere, kCoulomb, 5, 12);
  // Triangular bipyramid, the Newtonian optimum for five points.
  const double bipyramid = (3.0 / std::sqrt(3.0) + 6.0 / std::sqrt(2.0) + 0.5) / 10.0;
  CHECK(five.energy == doctest::Approx(bipyramid).epsilon(1e-9));

  CHECK_THROWS_AS(oracles::grid_fekete(sphere, kCoulomb, 5, 64), std::length_error);
  CHECK_THROWS_AS(oracles::grid_fekete(sphere, kCoulomb, 6, 8), std::invalid_argument);
  CHECK_THROWS_AS(oracles::grid_fekete(CompactSetModel::unit_ball(), kCoulomb, 3, 8), std::invalid_argument);
}

TEST_CASE("sphere potential quadrature") {
  const auto origin = oracles::sphere_potential_quadrature(1.0, kCoulomb, Point{0, 0, 0}, 20000);
  CHECK(std::abs(origin.value - 1.0) <= 1e-3);
  CHECK(origin.error_estimate <= 1e-3);
  CHECK(std::abs(oracles::sphere_potential_quadrature(1.0, kCoulomb, Point{2, 0, 0}, 20000).value - 0.5) <= 1e-3);
  const auto half = oracles::sphere_potential_quadrature(1.0, kCoulomb, Point{0.5, 0, 0}, 20000);
  CHECK(std::abs(half.value - origin.value) <= 2e-3);

  const auto surface = oracles::sphere_potential_quadrature(1.0, kCoulomb, Point{0, 0.6, 0.8}, 20000);
  CHECK(surface.near_singular);
  CHECK(std::abs(surface.value - 1.0) <= 1e-3);
  CHECK_FALSE(half.near_singular);

  CHECK_THROWS_AS(oracles::sphere_potential_quadrature(1.0, kCoulomb, Point{0, 0, 0}, 999), std::invalid_argument);
  CHECK_THROWS_AS(oracles::sphere_potential_quadrature(1.0, KernelSpec(1.5, 3), Point{0, 0, 0}, 5000), std::invalid_argument);
}

TEST_CASE("quadrature node doubling stays within the error estimate") {
  Rng rng = make_rng(5, "node-doubling");
  for (int i = 0; i < 20; ++i) {
    Point y = random_unit_vector(rng, 3);
    const double r = 3.0 * uniform01(rng);
    for (auto& v : y) v *= r;
    const auto base = oracles::sphere_potential_quadrature(1.0, kCoulomb, y, 8000);
    const auto doubled = oracles::sphere_potential_quadrature(1.0, kCoulomb, y, 16000);
    CHECK(std::abs(doubled.value - base.value) <= base.error_estimate);
  }
}

TEST_CASE("Monte Carlo potential") {
  const auto oracle = equilibrium_oracle(CompactSetModel::unit_sphere(), kCoulomb);
  const auto mc = oracles::monte_carlo_potential(oracle, kCoulomb, Point{2, 0, 0}, 10000, 7);
  CHECK(std::abs(mc.value - 0.5) <= 4.0 * mc.std_error);
  const auto again = oracles::monte_carlo_potential(oracle, kCoulomb, Point{2, 0, 0}, 10000, 7);
  CHECK(again.value == mc.value);
}

TEST_CASE("ledger round trip") {
  const std::vector<oracles::OracleRecord> records = {{"a", "x=1;y=2", 0.1, 1e-3, 4}, {"b", "", 1.0 / 3.0, 0.0, 0}};
  const auto path = std::filesystem::temp_directory_path() / "riesz_ledger_roundtrip.csv";
  oracles::write_ledger(path, records);
  const auto back = oracles::read_ledger(path);
  REQUIRE(back.size() == 2);
  CHECK(back[0].inputs == "x=1;y=2");
  CHECK(back[1].value == 1.0 / 3.0);
  CHECK(back[0].seed == 4);
  std::filesystem::remove(path);
}

}  // TEST_SUITE

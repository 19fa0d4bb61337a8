#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "oracles.hpp"
#include "riesz/configurations.hpp"
#include "riesz/errors.hpp"
#include "riesz/measures.hpp"
#include "riesz/rng.hpp"

using namespace riesz;

namespace {

const KernelSpec kCoulomb = KernelSpec::newtonian(3);

double relative_error(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

}  // namespace

TEST_SUITE("measures") {

TEST_CASE("discrete energy of small configurations") {
  CHECK(discrete_energy(PointConfig::from_points({{0, 0, 0}, {1, 0, 0}}), kCoulomb) == doctest::Approx(1.0));
  CHECK(discrete_energy(oracles::unit_edge_tetrahedron(), kCoulomb) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_AS(discrete_energy(PointConfig::from_points({{0, 0, 0}, {0, 0, 0}}), kCoulomb), CoincidentPointsError);
  CHECK_THROWS_AS(discrete_energy(PointConfig::from_points({{0, 0, 0}}), kCoulomb), std::invalid_argument);
}

TEST_CASE("discrete energy matches the extended-precision reference") {
  const auto points = random_config(CompactSetModel::unit_ball(), 20, 1);
  CHECK(relative_error(discrete_energy(points, kCoulomb), oracles::reference_energy(points, kCoulomb)) <= 1e-12);
  const auto p4 = random_config(CompactSetModel::unit_ball(4), 150, 2);
  const KernelSpec riesz4(1.5, 4);
  CHECK(relative_error(discrete_energy(p4, riesz4), oracles::reference_energy(p4, riesz4)) <= 1e-12);
}

TEST_CASE("parallel determinism across worker counts") {
  const auto points = random_config(CompactSetModel::unit_sphere(), 257, 3);
  const double one = discrete_energy(points, kCoulomb, WorkerCount{1});
  const auto grad_one = discrete_energy_gradient(points, kCoulomb, WorkerCount{1});
  for (unsigned w : {2u, 4u, 8u}) {
    CHECK(discrete_energy(points, kCoulomb, WorkerCount{w}) == one);
    CHECK(discrete_energy_gradient(points, kCoulomb, WorkerCount{w}) == grad_one);
  }
}

TEST_CASE("permutation invariance after canonical sort") {
  auto pts = random_config(CompactSetModel::unit_ball(), 64, 4);
  std::vector<Point> rows;
  for (std::size_t k = 0; k < pts.size(); ++k) rows.push_back(pts.point(k));
  auto sorted = rows;
  std::sort(sorted.begin(), sorted.end());
  Rng rng = make_rng(4, "shuffle");
  std::shuffle(rows.begin(), rows.end(), rng);
  std::sort(rows.begin(), rows.end());
  CHECK(discrete_energy(PointConfig::from_points(rows), kCoulomb) == discrete_energy(PointConfig::from_points(sorted), kCoulomb));
  // Unsorted permutations agree to rounding.
  std::shuffle(rows.begin(), rows.end(), rng);
  CHECK(relative_error(discrete_energy(PointConfig::from_points(rows), kCoulomb), discrete_energy(pts, kCoulomb)) <= 1e-13);
}

TEST_CASE("energy scaling law") {
  const auto pts = random_config(CompactSetModel::unit_ball(), 50, 5);
  for (const KernelSpec spec : {kCoulomb, KernelSpec(1.0, 3)}) {
    for (double c : {0.1, 2.0, 7.5}) {
      std::vector<double> scaled = pts.coords();
      for (auto& v : scaled) v *= c;
      CHECK(relative_error(discrete_energy(PointConfig(3, scaled), spec),
                           std::pow(c, spec.exponent()) * discrete_energy(pts, spec)) <= 1e-10);
    }
  }
}

TEST_CASE("energy gradient matches finite differences") {
  const auto pts = random_config(CompactSetModel::unit_ball(), 12, 6);
  const auto grad = discrete_energy_gradient(pts, kCoulomb);
  const double h = 1e-6;
  for (std::size_t i = 0; i < pts.coords().size(); ++i) {
    auto plus = pts.coords(), minus = pts.coords();
    plus[i] += h;
    minus[i] -= h;
    const double fd = (discrete_energy(PointConfig(3, plus), kCoulomb) - discrete_energy(PointConfig(3, minus), kCoulomb)) / (2 * h);
    CHECK(fd == doctest::Approx(grad[i]).epsilon(1e-5));
  }
}

TEST_CASE("discrete potential") {
  CHECK(discrete_potential(PointConfig::from_points({{0, 0, 0}}), kCoulomb, Point{2, 0, 0}) == doctest::Approx(0.5));
  CHECK(discrete_potential(PointConfig::from_points({{1, 0, 0}, {-1, 0, 0}}), kCoulomb, Point{0, 2, 0}) ==
        doctest::Approx(1.0 / std::sqrt(5.0)));
  CHECK_THROWS_AS(discrete_potential(PointConfig::from_points({{1, 0, 0}}), kCoulomb, Point{1, 0, 0}), SingularityError);

  const auto pts = random_config(CompactSetModel::unit_sphere(), 100, 7);
  long double ref = 0.0L;
  for (std::size_t k = 0; k < pts.size(); ++k) ref += 1.0L / std::sqrt(static_cast<long double>(squared_distance(Point{3, 0, 0}, pts[k])));
  CHECK(relative_error(discrete_potential(pts, kCoulomb, Point{3, 0, 0}), static_cast<double>(ref / 100.0L)) <= 1e-12);
}

TEST_CASE("closeness m_E") {
  const auto ball = CompactSetModel::unit_ball();
  const auto oracle = equilibrium_oracle(ball, kCoulomb);
  CHECK(closeness_m_E(random_config(ball, 40, 8), ball, oracle) == 0.0);
  CHECK(closeness_m_E(PointConfig::from_points({{2, 0, 0}}), ball, oracle) == doctest::Approx(0.5));
  CHECK(closeness_m_E(PointConfig::from_points({{0.1, 0, 0}, {0, 2, 0}}), ball, oracle) == doctest::Approx(0.25));
  // Within the membership tolerance counts as inside.
  CHECK(closeness_m_E(PointConfig::from_points({{1 + 1e-10, 0, 0}}), ball, oracle) == 0.0);

  Rng rng = make_rng(8, "m_E");
  for (int t = 0; t < 50; ++t) {
    PointConfig pts(3);
    for (int k = 0; k < 10; ++k) {
      Point p = random_in_unit_ball(rng, 3);
      for (auto& v : p) v *= 6.0;
      pts.push_back(p);
    }
    const double m = closeness_m_E(pts, ball, oracle);
    CHECK(m >= 0.0);
    CHECK(m <= oracle.robin_constant());
  }
}

TEST_CASE("smoothed potential") {
  const SmoothedConfig at_origin(PointConfig::from_points({{0, 0, 0}}), 1.0);
  CHECK(smoothed_potential(at_origin, kCoulomb, Point{0, 0, 0}) == 1.0);
  CHECK(smoothed_potential(at_origin, kCoulomb, Point{2, 0, 0}) == 0.5);
  const SmoothedConfig narrow(PointConfig::from_points({{0, 0, 0}}), 0.1);
  CHECK(smoothed_potential(narrow, kCoulomb, Point{0.05, 0, 0}) == doctest::Approx(10.0));
  CHECK_THROWS_AS(SmoothedConfig(PointConfig::from_points({{0, 0, 0}}), 0.0), std::invalid_argument);

  const auto pts = random_config(CompactSetModel::unit_ball(), 30, 9);
  const SmoothedConfig s(pts, 0.2);
  Rng rng = make_rng(9, "smoothing");
  for (int i = 0; i < 500; ++i) {
    Point y = random_in_unit_ball(rng, 3);
    for (auto& v : y) v *= 2.0;
    const double plain = discrete_potential(pts, kCoulomb, y);
    const double smooth = smoothed_potential(s, kCoulomb, y);
    CHECK(smooth <= plain);
    double nearest = 1e9;
    for (std::size_t k = 0; k < pts.size(); ++k) nearest = std::min(nearest, distance(y, pts[k]));
    if (nearest >= 0.2) CHECK(smooth == doctest::Approx(plain).epsilon(1e-14));
  }
}

TEST_CASE("smoothed energy terms") {
  const auto pair = PointConfig::from_points({{0, 0, 0}, {1, 0, 0}});
  CHECK(smoothed_energy_terms(SmoothedConfig(pair, 1.0), kCoulomb) == doctest::Approx(1.0));
  CHECK(smoothed_energy_terms(SmoothedConfig(pair, 0.5), kCoulomb) == doctest::Approx(1.5));
  CHECK(smoothed_energy_terms(SmoothedConfig(oracles::unit_edge_tetrahedron(), 1.0), kCoulomb) == doctest::Approx(1.0));
}

TEST_CASE("moments") {
  const auto sphere = CompactSetModel::unit_sphere();
  const auto oracle = equilibrium_oracle(sphere, kCoulomb);
  const auto draws = oracle.sample(5000, 21);
  CHECK(moment_distance(draws, oracle, 2, 5000, 21) == 0.0);

  const auto poles = PointConfig::from_points({{0, 0, 1}, {0, 0, -1}});
  const auto means = monomial_means(poles, 2);
  REQUIRE(means.size() == 9);
  CHECK(means[0] == 0.0);
  CHECK(means[1] == 0.0);
  CHECK(means[2] == 0.0);
  CHECK(means[8] == 1.0);  // x3 * x3
  CHECK_THROWS_AS(monomial_means(poles, 3), std::invalid_argument);

  FeketeSearchParams params;
  params.n = 200;
  params.seed = 1;
  const auto fekete = fekete_search(sphere, kCoulomb, params);
  CHECK(moment_distance(fekete.points, oracle, 2, 100000, 0) < 0.05);
}

TEST_CASE("points CSV round trip") {
  const auto pts = random_config(CompactSetModel::unit_ball(4), 17, 10);
  std::stringstream buffer;
  write_points_csv(buffer, pts);
  const std::string text = buffer.str();
  CHECK(text.rfind("x1,x2,x3,x4\n", 0) == 0);
  std::stringstream again(text);
  CHECK(read_points_csv(again) == pts);

  for (const char* bad : {"", "x1,x2\n1,2,3\n", "y1,y2\n1,2\n", "x1,x2\n1,abc\n", "x1,x2\n1,inf\n"}) {
    std::stringstream in(bad);
    CHECK_THROWS_AS(read_points_csv(in), ParseError);
  }
}

}  // TEST_SUITE

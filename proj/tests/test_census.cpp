#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "runcube/census.hpp"
#include "runcube/errors.hpp"

using namespace runcube;

namespace {

const MPoly Q = MPoly::variable(Var::Q);
const MPoly X = MPoly::variable(Var::X);
const MPoly D = MPoly::variable(Var::D);
const MPoly U = MPoly::variable(Var::U);

const MPoly kDistCubeR5 = 1 + 5 * Q + 6 * Q * Q + Q * Q * Q + (5 + 12 * Q + 2 * Q * Q) * X +
                          (6 + Q) * X * X;
// the value the n=5 polynomial was once claimed to be; correct only at q=1
const MPoly kErroneousR5 = 1 + 5 * Q + 7 * Q * Q + (5 + 14 * Q) * X + 7 * X * X;

}  // namespace

TEST_CASE("oracle census of a single edge") {
  const auto g = FamilyGraph::build(Family::FibonacciRun, 1);
  const Census census = enumerate_oracle(g);
  REQUIRE(census.size() == 3);
  const auto& cubes = census.subcubes();
  CHECK(cubes[0] == Subcube{BitWord::parse("0"), BitWord::parse("0")});
  CHECK(cubes[1] == Subcube{BitWord::parse("0"), BitWord::parse("1")});
  CHECK(cubes[2] == Subcube{BitWord::parse("1"), BitWord::parse("1")});
  CHECK(distance_cube_polynomial(g, CensusMethod::Oracle) == 1 + Q + X);
}

TEST_CASE("oracle census of the full square") {
  const auto g = FamilyGraph::build(Family::Hypercube, 2);
  CHECK(enumerate_oracle(g).size() == 9);
  CHECK(cube_polynomial(g, CensusMethod::Oracle) == 4 + 4 * X + X * X);
  CHECK(distance_cube_polynomial(g, CensusMethod::Oracle) ==
        1 + 2 * Q + Q * Q + (2 + 2 * Q) * X + X * X);
}

TEST_CASE("the 5-dimensional run graph census") {
  const auto g = FamilyGraph::build(Family::FibonacciRun, 5);
  const MPoly dist = distance_cube_polynomial(g, CensusMethod::Oracle);
  CHECK(dist == kDistCubeR5);
  CHECK(dist.to_text() == "1+5q+6q^2+q^3+(5+12q+2q^2)x+(6+q)x^2");

  CHECK(dist != kErroneousR5);
  CHECK(dist.substitute({{Var::Q, MPoly{1}}}) == kErroneousR5.substitute({{Var::Q, MPoly{1}}}));

  CHECK(dcw_polynomial(g) == 1 + 5 * D + 6 * D * D + D * D * MPoly::variable(Var::Z));
  CHECK(updegree_polynomial(g) ==
        MPoly::pow(U, 5) + 2 * MPoly::pow(U, 3) + 3 * U * U + 2 * U + 5);
}

TEST_CASE("lucas-run censuses") {
  const auto g = FamilyGraph::build(Family::LucasRun, 5);
  const MPoly dist = distance_cube_polynomial(g, CensusMethod::Oracle);
  CHECK(dist == 1 + 5 * Q + 5 * Q * Q + (5 + 10 * Q) * X + 5 * X * X);

  // trivial cases
  CHECK(distance_cube_polynomial(FamilyGraph::build(Family::FibonacciRun, 0)) == MPoly{1});
  CHECK(distance_cube_polynomial(FamilyGraph::build(Family::LucasRun, 0)) == MPoly{1});
  CHECK(dcw_polynomial(FamilyGraph::build(Family::FibonacciRun, 1)) == 1 + D);
}

TEST_CASE("recurrence between the run families") {
  std::map<int, MPoly> dist;
  for (int n = 0; n <= 10; ++n) {
    dist[n] = distance_cube_polynomial(FamilyGraph::build(Family::FibonacciRun, n));
  }
  for (int n = 2; n <= 10; ++n) {
    const MPoly lucas = distance_cube_polynomial(FamilyGraph::build(Family::LucasRun, n));
    CHECK(lucas == 2 * dist[n - 1] - dist[n - 2]);
  }
}

TEST_CASE("top-vertex census agrees with the oracle") {
  for (Family family : {Family::FibonacciCube, Family::LucasCube, Family::FibonacciRun,
                        Family::LucasRun}) {
    for (int n = 0; n <= 9; ++n) {
      const auto g = FamilyGraph::build(family, n);
      CHECK(enumerate_oracle(g) == enumerate_topvertex(g));
    }
  }
}

TEST_CASE("per-top-vertex contributions") {
  const auto g = FamilyGraph::build(Family::FibonacciRun, 5);
  const Census census = enumerate_topvertex(g);
  const BitWord top = BitWord::parse("11100");
  std::map<int, int> by_dimension;
  int at_zero = 0;
  for (const Subcube& cube : census.subcubes()) {
    if (cube.top == top) by_dimension[cube.dimension()] += 1;
    if (cube.top == BitWord::zeros(5)) at_zero += 1;
  }
  CHECK(by_dimension == std::map<int, int>{{0, 1}, {1, 2}, {2, 1}});
  CHECK(at_zero == 1);  // 0^n only ever tops its own point cube
}

TEST_CASE("census invariant consistency") {
  for (Family family : {Family::FibonacciCube, Family::LucasCube, Family::FibonacciRun,
                        Family::LucasRun}) {
    for (int n = 0; n <= 9; ++n) {
      const auto g = FamilyGraph::build(family, n);
      const Census census = enumerate_census(g);
      const MPoly dist = distance_cube_polynomial(g);
      CHECK(dist.substitute({{Var::X, MPoly{1}}, {Var::Q, MPoly{1}}}).constant_value() ==
            static_cast<std::int64_t>(census.size()));
      CHECK(dist.substitute({{Var::Q, MPoly{1}}}) == cube_polynomial(g));
      // the x^0 slice counts vertices by weight
      CHECK(dist.substitute({{Var::X, MPoly{0}}}) == weight_polynomial(g, Var::Q));
      // every subcube is bounded by real vertices
      for (const Subcube& cube : census.subcubes()) {
        CHECK(g.contains(cube.bottom));
        CHECK(g.contains(cube.top));
        CHECK((cube.bottom.bits() & ~cube.top.bits()) == 0);
      }
    }
  }
}

TEST_CASE("distance-cube equals the dcw substitution") {
  for (Family family : {Family::FibonacciCube, Family::LucasCube, Family::FibonacciRun,
                        Family::LucasRun}) {
    for (int n = 0; n <= 9; ++n) {
      const auto g = FamilyGraph::build(family, n);
      CHECK(distance_cube_polynomial(g) ==
            dcw_polynomial(g).substitute({{Var::D, Q + X}, {Var::Z, Q}}));
    }
  }
}

TEST_CASE("daisy behaviour of the cube families") {
  for (Family family : {Family::FibonacciCube, Family::LucasCube}) {
    for (int n = 0; n <= 9; ++n) {
      const auto g = FamilyGraph::build(family, n);
      const MPoly dcw = dcw_polynomial(g);
      for (Var v : dcw.variables()) CHECK(v != Var::Z);
      const MPoly dist = distance_cube_polynomial(g);
      CHECK(dist == weight_polynomial(g, Var::D).substitute({{Var::D, X + Q}}));
      CHECK(dist == cube_polynomial(g).substitute({{Var::X, X + Q - 1}}));
    }
  }
}

TEST_CASE("euler-style evaluations") {
  for (Family family : {Family::FibonacciCube, Family::LucasCube, Family::FibonacciRun,
                        Family::LucasRun}) {
    for (int n = 0; n <= 9; ++n) {
      const MPoly dist = distance_cube_polynomial(FamilyGraph::build(family, n));
      CHECK(dist.substitute({{Var::X, MPoly{-1}}, {Var::Q, MPoly{1}}}) == MPoly{1});
      CHECK(dist.substitute({{Var::Q, -X}}) == MPoly{1});
    }
  }
}

TEST_CASE("methods, threads and guards") {
  const auto g = FamilyGraph::build(Family::FibonacciRun, 11);
  // auto dispatch above the oracle window still works
  const MPoly via_auto = distance_cube_polynomial(g);
  CHECK(via_auto == distance_cube_polynomial(g, CensusMethod::TopVertex));
  CHECK_THROWS_AS(enumerate_oracle(FamilyGraph::build(Family::FibonacciRun, 13)), ResourceLimit);
  CHECK_THROWS_AS(enumerate_topvertex(FamilyGraph::build(Family::Hypercube, 3)),
                  UnsupportedFamily);

  // identical results for any thread count
  const auto r10 = FamilyGraph::build(Family::FibonacciRun, 10);
  CHECK(enumerate_topvertex(r10, 1) == enumerate_topvertex(r10, 4));
  CHECK(enumerate_oracle(r10, 1) == enumerate_oracle(r10, 4));
  CHECK(enumerate_oracle(r10, 7) == enumerate_topvertex(r10, 3));
}

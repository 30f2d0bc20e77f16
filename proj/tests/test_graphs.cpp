#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "runcube/errors.hpp"
#include "runcube/graphs.hpp"
#include "runcube/words.hpp"

using namespace runcube;

namespace {

std::set<std::string> vertex_strings(const FamilyGraph& g) {
  std::set<std::string> out;
  for (const BitWord& v : g.vertices()) out.insert(v.str());
  return out;
}

}  // namespace

TEST_CASE("small builds match the drawn vertex sets") {
  CHECK(vertex_strings(FamilyGraph::build(Family::FibonacciRun, 1)) ==
        std::set<std::string>{"0", "1"});
  CHECK(vertex_strings(FamilyGraph::build(Family::LucasRun, 1)) == std::set<std::string>{"0"});
  CHECK(vertex_strings(FamilyGraph::build(Family::FibonacciCube, 2)) ==
        std::set<std::string>{"00", "01", "10"});
  CHECK(vertex_strings(FamilyGraph::build(Family::LucasCube, 1)) == std::set<std::string>{"0"});
  CHECK(vertex_strings(FamilyGraph::build(Family::FibonacciRun, 0)) == std::set<std::string>{""});

  // the 5-dimensional Fibonacci-run graph
  CHECK(vertex_strings(FamilyGraph::build(Family::FibonacciRun, 5)) ==
        std::set<std::string>{"00000", "00001", "00010", "00100", "01000", "10000", "00110",
                              "01001", "01100", "10001", "10010", "11000", "11100"});
  // its Lucas-run subgraph drops 10001 and 11100
  CHECK(vertex_strings(FamilyGraph::build(Family::LucasRun, 5)) ==
        std::set<std::string>{"00000", "00001", "00010", "00100", "01000", "10000", "00110",
                              "01001", "01100", "10010", "11000"});
  CHECK(vertex_strings(FamilyGraph::build(Family::FibonacciRun, 4)) ==
        std::set<std::string>{"0000", "0001", "0010", "0100", "1000", "0110", "1001", "1100"});
}

TEST_CASE("vertex lists are sorted and memberships exact") {
  for (Family family : {Family::Hypercube, Family::FibonacciCube, Family::LucasCube,
                        Family::FibonacciRun, Family::LucasRun}) {
    const auto g = FamilyGraph::build(family, 8);
    CHECK(std::is_sorted(g.vertices().begin(), g.vertices().end()));
    for (const BitWord& v : g.vertices()) CHECK(g.contains(v));
    std::size_t members = 0;
    for (std::uint64_t bits = 0; bits < (1u << 8); ++bits) {
      members += g.contains(BitWord(bits, 8));
    }
    CHECK(members == g.size());
  }
}

TEST_CASE("vertex counts follow the Fibonacci numbers") {
  CHECK(fibonacci_number(0) == 0);
  CHECK(fibonacci_number(1) == 1);
  CHECK(fibonacci_number(10) == 55);
  CHECK(fibonacci_number(27) == 196418);
  for (int n = 0; n <= 20; ++n) {
    CHECK(FamilyGraph::build(Family::FibonacciRun, n).size() == fibonacci_number(n + 2));
    CHECK(FamilyGraph::build(Family::FibonacciCube, n).size() == fibonacci_number(n + 2));
    CHECK(FamilyGraph::build(Family::LucasRun, n).size() ==
          FamilyGraph::build(Family::LucasCube, n).size());
  }
}

TEST_CASE("family containments") {
  for (int n = 0; n <= 12; ++n) {
    const auto run = FamilyGraph::build(Family::FibonacciRun, n);
    const auto lucas_run = FamilyGraph::build(Family::LucasRun, n);
    for (const BitWord& v : lucas_run.vertices()) CHECK(run.contains(v));
    const auto lucas = FamilyGraph::build(Family::LucasCube, n);
    const auto fib = FamilyGraph::build(Family::FibonacciCube, n);
    for (const BitWord& v : lucas.vertices()) CHECK(fib.contains(v));
  }
}

TEST_CASE("phi maps the padded cube families onto the padded run families") {
  for (int n = 0; n <= 14; ++n) {
    const auto fib = FamilyGraph::build(Family::FibonacciCube, n);
    const auto run = FamilyGraph::build(Family::FibonacciRun, n);
    std::set<BitWord> image;
    for (const BitWord& v : fib.vertices()) {
      const BitWord mapped = phi(v.append_zeros(2));
      CHECK(run.contains(mapped.prefix(n)));
      image.insert(mapped);
    }
    CHECK(image.size() == run.size());

    const auto lucas = FamilyGraph::build(Family::LucasCube, n);
    const auto lucas_run = FamilyGraph::build(Family::LucasRun, n);
    std::set<BitWord> lucas_image;
    for (const BitWord& v : lucas.vertices()) {
      const BitWord mapped = phi(v.append_zeros(2));
      CHECK(lucas_run.contains(mapped.prefix(n)));
      lucas_image.insert(mapped);
    }
    CHECK(lucas_image.size() == lucas_run.size());
  }
}

TEST_CASE("degree examples") {
  const auto r5 = FamilyGraph::build(Family::FibonacciRun, 5);
  CHECK(degrees(r5, BitWord::parse("11100")) == DegreePair{2, 0});
  CHECK(degrees(r5, BitWord::zeros(5)) == DegreePair{0, 5});
  const auto r1 = FamilyGraph::build(Family::FibonacciRun, 1);
  CHECK(degrees(r1, BitWord::parse("0")) == DegreePair{0, 1});
  CHECK_THROWS_AS(degrees(r5, BitWord::parse("10100")), VertexNotInGraph);
}

TEST_CASE("down plus up equals the graph degree") {
  for (Family family : {Family::FibonacciCube, Family::LucasCube, Family::FibonacciRun,
                        Family::LucasRun}) {
    const auto g = FamilyGraph::build(family, 7);
    for (const BitWord& v : g.vertices()) {
      const DegreePair deg = degrees(g, v);
      int neighbors = 0;
      for (int pos = 0; pos < 7; ++pos) neighbors += g.contains(v.with_flip(pos));
      CHECK(deg.down + deg.up == neighbors);
      CHECK(deg.down <= v.weight());
    }
  }
}

TEST_CASE("bfs distances") {
  const auto r5 = FamilyGraph::build(Family::FibonacciRun, 5);
  CHECK(bfs_distance(r5, BitWord::zeros(5), BitWord::parse("11100")) == 3);
  CHECK(bfs_distance(r5, BitWord::parse("10010"), BitWord::parse("10010")) == 0);
  CHECK_THROWS_AS(bfs_distance(r5, BitWord::zeros(5), BitWord::parse("10100")), VertexNotInGraph);

  for (int n = 0; n <= 10; ++n) {
    const auto g = FamilyGraph::build(Family::FibonacciRun, n);
    const auto dist = bfs_distances(g, BitWord::zeros(n));
    for (std::size_t i = 0; i < g.size(); ++i) {
      CHECK(dist[i] == g.vertices()[i].weight());
    }
  }
}

TEST_CASE("the 7-dimensional run graph is not isometric") {
  const auto g = FamilyGraph::build(Family::FibonacciRun, 7);
  bool found = false;
  for (const BitWord& u : g.vertices()) {
    const auto dist = bfs_distances(g, u);
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (dist[i] > hamming_distance(u, g.vertices()[i])) {
        found = true;
        break;
      }
    }
    if (found) break;
  }
  CHECK(found);
}

TEST_CASE("resource guards") {
  CHECK_THROWS_AS(FamilyGraph::build(Family::Hypercube, 25), ResourceLimit);
  CHECK_THROWS_AS(FamilyGraph::build(Family::FibonacciRun, 31), ResourceLimit);
  BuildLimits loose;
  loose.max_hypercube_n = 26;
  CHECK(FamilyGraph::build(Family::Hypercube, 4, loose).size() == 16);
}

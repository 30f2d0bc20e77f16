#pragma once

#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "runcube/bitword.hpp"

namespace runcube {

/// The five vertex families. The run families live on words s whose padded
/// forms satisfy the run constraints: s00 run-constrained for FibonacciRun,
/// additionally s0 circular-run-constrained for LucasRun.
enum class Family { Hypercube, FibonacciCube, LucasCube, FibonacciRun, LucasRun };

const char* family_name(Family f);
Family family_from_name(const std::string& name);

/// Size caps for vertex enumeration. The recursively generated families only
/// ever materialize valid words; raw hypercube builds scan all 2^n words and
/// get a tighter default cap.
struct BuildLimits {
  int max_generated_n = 30;
  int max_hypercube_n = 24;
};

/// An immutable vertex set of one family with O(1) expected membership
/// queries. Adjacency is implicit: two vertices are adjacent when they
/// differ in exactly one position.
class FamilyGraph {
 public:
  static FamilyGraph build(Family family, int n, const BuildLimits& limits = {});

  Family family() const { return family_; }
  int dimension() const { return n_; }
  std::size_t size() const { return vertices_.size(); }
  /// Lexicographically sorted.
  const std::vector<BitWord>& vertices() const { return vertices_; }
  bool contains(const BitWord& w) const;

 private:
  FamilyGraph(Family family, int n, std::vector<BitWord> vertices);

  Family family_;
  int n_;
  std::vector<BitWord> vertices_;
  std::unordered_set<std::uint64_t> membership_;
};

struct DegreePair {
  int down = 0;  // 1 -> 0 flips staying in the family
  int up = 0;    // 0 -> 1 flips staying in the family
  friend bool operator==(const DegreePair&, const DegreePair&) = default;
};

/// Down/up degree of a vertex; throws VertexNotInGraph.
DegreePair degrees(const FamilyGraph& g, const BitWord& v);

/// Bit mask (in word-value space) of the 1s of v that can be switched to 0
/// while staying in the family.
std::uint64_t switchable_down_mask(const FamilyGraph& g, const BitWord& v);

/// Exact graph distance; throws VertexNotInGraph / Unreachable.
int bfs_distance(const FamilyGraph& g, const BitWord& from, const BitWord& to);

/// Distances from `source` to all vertices, aligned with g.vertices();
/// -1 marks unreachable vertices.
std::vector<int> bfs_distances(const FamilyGraph& g, const BitWord& source);

/// F_0 = 0, F_1 = 1, F_n = F_{n-1} + F_{n-2}.
std::uint64_t fibonacci_number(int k);

}  // namespace runcube

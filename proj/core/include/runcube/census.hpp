#pragma once

#include <vector>

#include "runcube/bitword.hpp"
#include "runcube/graphs.hpp"
#include "runcube/mpoly.hpp"

namespace runcube {

/// An induced subcube, identified by its unique bottom (minimum-weight) and
/// top (maximum-weight) vertices. Dimension and distance are derived.
struct Subcube {
  BitWord bottom;
  BitWord top;

  int dimension() const { return hamming_distance(bottom, top); }
  int distance() const { return bottom.weight(); }

  friend bool operator==(const Subcube&, const Subcube&) = default;
  friend auto operator<=>(const Subcube& a, const Subcube& b) {
    if (auto c = a.bottom.weight() <=> b.bottom.weight(); c != 0) return c;
    if (auto c = a.bottom <=> b.bottom; c != 0) return c;
    return a.top <=> b.top;
  }
};

/// The complete multiset of induced subcubes of a family graph, sorted by
/// (weight(bottom), bottom, top).
class Census {
 public:
  Census() = default;
  /// Sorts and takes ownership; entries must be duplicate-free.
  explicit Census(std::vector<Subcube> subcubes);

  std::size_t size() const { return subcubes_.size(); }
  const std::vector<Subcube>& subcubes() const { return subcubes_; }

  friend bool operator==(const Census&, const Census&) = default;

 private:
  std::vector<Subcube> subcubes_;
};

enum class CensusMethod { Auto, Oracle, TopVertex };

struct CensusLimits {
  int max_oracle_n = 12;
};

/// Generic method, valid for any induced subgraph of the hypercube: a vertex
/// pair (b, t) with b below t bitwise spans a subcube iff every word between
/// them is a vertex.
Census enumerate_oracle(const FamilyGraph& g, int threads = 1, const CensusLimits& limits = {});

/// Per-top-vertex method: every subset of the switchable 1s of a vertex v
/// spans a subcube with top v. Not offered for raw hypercubes
/// (UnsupportedFamily); there the oracle is the tool.
Census enumerate_topvertex(const FamilyGraph& g, int threads = 1);

/// Auto dispatch: oracle up to n = 10, top-vertex above.
Census enumerate_census(const FamilyGraph& g, CensusMethod method = CensusMethod::Auto,
                        int threads = 1, const CensusLimits& limits = {});

/// sum over subcubes of x^dimension q^distance.
MPoly distance_cube_polynomial(const FamilyGraph& g, CensusMethod method = CensusMethod::Auto,
                               int threads = 1, const CensusLimits& limits = {});
/// distance_cube at q = 1.
MPoly cube_polynomial(const FamilyGraph& g, CensusMethod method = CensusMethod::Auto,
                      int threads = 1, const CensusLimits& limits = {});
/// sum over vertices of d^down(v) z^(weight(v)-down(v)).
MPoly dcw_polynomial(const FamilyGraph& g);
/// sum over vertices of variable^weight(v).
MPoly weight_polynomial(const FamilyGraph& g, Var variable = Var::D);
/// sum over vertices of u^up(v).
MPoly updegree_polynomial(const FamilyGraph& g);

}  // namespace runcube

#include "runcube/graphs.hpp"

#include <deque>
#include <stdexcept>
#include <unordered_map>

#include "runcube/errors.hpp"
#include "runcube/words.hpp"

namespace runcube {
namespace {

void gen_fibonacci_strings(int n, std::uint64_t acc, int filled, bool last_one,
                           std::vector<BitWord>& out) {
  if (filled == n) {
    out.emplace_back(acc, n);
    return;
  }
  gen_fibonacci_strings(n, acc << 1, filled + 1, false, out);
  if (!last_one) gen_fibonacci_strings(n, (acc << 1) | 1, filled + 1, true, out);
}

std::vector<BitWord> build_vertices(Family family, int n, const BuildLimits& limits) {
  if (n < 0) throw std::invalid_argument("graph dimension must be nonnegative");
  const int cap = family == Family::Hypercube ? limits.max_hypercube_n : limits.max_generated_n;
  if (n > cap) {
    throw ResourceLimit("vertex enumeration for " + std::string(family_name(family)) + " capped at n=" +
                        std::to_string(cap) + " (requested " + std::to_string(n) + ")");
  }

  std::vector<BitWord> out;
  switch (family) {
    case Family::Hypercube: {
      out.reserve(std::size_t{1} << n);
      for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) out.emplace_back(v, n);
      break;
    }
    case Family::FibonacciCube: {
      gen_fibonacci_strings(n, 0, 0, false, out);
      break;
    }
    case Family::LucasCube: {
      std::vector<BitWord> fib;
      gen_fibonacci_strings(n, 0, 0, false, fib);
      for (const BitWord& w : fib) {
        // additionally forbid 1s in both the first and last position
        if (n >= 1 && w.bit_at(0) && w.bit_at(n - 1)) continue;
        out.push_back(w);
      }
      break;
    }
    case Family::FibonacciRun: {
      // prefixes of the run-constrained words of length n+2 (all end in 00)
      for (const BitWord& w : run_constrained_words(n + 2)) out.push_back(w.prefix(n));
      break;
    }
    case Family::LucasRun: {
      for (const BitWord& w : run_constrained_words(n + 2)) {
        const BitWord s = w.prefix(n);
        if (classify(s.append_zeros(1), WordKind::CircularRunConstrained)) out.push_back(s);
      }
      break;
    }
  }
  return out;
}

}  // namespace

const char* family_name(Family f) {
  switch (f) {
    case Family::Hypercube: return "hypercube";
    case Family::FibonacciCube: return "fibonacci-cube";
    case Family::LucasCube: return "lucas-cube";
    case Family::FibonacciRun: return "fibonacci-run";
    case Family::LucasRun: return "lucas-run";
  }
  return "?";
}

Family family_from_name(const std::string& name) {
  if (name == "q" || name == "hypercube") return Family::Hypercube;
  if (name == "gamma" || name == "fibonacci-cube") return Family::FibonacciCube;
  if (name == "lambda" || name == "lucas-cube") return Family::LucasCube;
  if (name == "r" || name == "fibonacci-run") return Family::FibonacciRun;
  if (name == "rl" || name == "lucas-run") return Family::LucasRun;
  throw std::invalid_argument("unknown graph family: " + name);
}

FamilyGraph::FamilyGraph(Family family, int n, std::vector<BitWord> vertices)
    : family_(family), n_(n), vertices_(std::move(vertices)) {
  membership_.reserve(vertices_.size() * 2);
  for (const BitWord& w : vertices_) membership_.insert(w.bits());
}

FamilyGraph FamilyGraph::build(Family family, int n, const BuildLimits& limits) {
  return FamilyGraph(family, n, build_vertices(family, n, limits));
}

bool FamilyGraph::contains(const BitWord& w) const {
  return w.length() == n_ && membership_.count(w.bits()) != 0;
}

DegreePair degrees(const FamilyGraph& g, const BitWord& v) {
  if (!g.contains(v)) throw VertexNotInGraph("vertex " + v.str() + " is not in the graph");
  DegreePair d;
  for (int pos = 0; pos < g.dimension(); ++pos) {
    if (g.contains(v.with_flip(pos))) {
      (v.bit_at(pos) ? d.down : d.up) += 1;
    }
  }
  return d;
}

std::uint64_t switchable_down_mask(const FamilyGraph& g, const BitWord& v) {
  if (!g.contains(v)) throw VertexNotInGraph("vertex " + v.str() + " is not in the graph");
  std::uint64_t mask = 0;
  std::uint64_t ones = v.bits();
  while (ones != 0) {
    const std::uint64_t bit = ones & (~ones + 1);
    ones ^= bit;
    if (g.contains(BitWord(v.bits() ^ bit, v.length()))) mask |= bit;
  }
  return mask;
}

std::vector<int> bfs_distances(const FamilyGraph& g, const BitWord& source) {
  if (!g.contains(source)) throw VertexNotInGraph("vertex " + source.str() + " is not in the graph");
  std::unordered_map<std::uint64_t, int> index;
  index.reserve(g.size() * 2);
  for (std::size_t i = 0; i < g.size(); ++i) index.emplace(g.vertices()[i].bits(), static_cast<int>(i));

  std::vector<int> dist(g.size(), -1);
  std::deque<std::uint64_t> queue;
  dist[static_cast<std::size_t>(index.at(source.bits()))] = 0;
  queue.push_back(source.bits());
  while (!queue.empty()) {
    const std::uint64_t cur = queue.front();
    queue.pop_front();
    const int cur_dist = dist[static_cast<std::size_t>(index.at(cur))];
    for (int pos = 0; pos < g.dimension(); ++pos) {
      const std::uint64_t next = cur ^ (std::uint64_t{1} << (g.dimension() - 1 - pos));
      auto it = index.find(next);
      if (it == index.end()) continue;
      int& d = dist[static_cast<std::size_t>(it->second)];
      if (d == -1) {
        d = cur_dist + 1;
        queue.push_back(next);
      }
    }
  }
  return dist;
}

int bfs_distance(const FamilyGraph& g, const BitWord& from, const BitWord& to) {
  if (!g.contains(to)) throw VertexNotInGraph("vertex " + to.str() + " is not in the graph");
  const std::vector<int> dist = bfs_distances(g, from);
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g.vertices()[i] == to) {
      if (dist[i] < 0) throw Unreachable("no path between " + from.str() + " and " + to.str());
      return dist[i];
    }
  }
  throw VertexNotInGraph("vertex " + to.str() + " is not in the graph");
}

std::uint64_t fibonacci_number(int k) {
  if (k < 0) throw std::invalid_argument("negative Fibonacci index");
  if (k > 92) throw OverflowError("Fibonacci number exceeds 64 bits");
  std::uint64_t a = 0, b = 1;
  for (int i = 0; i < k; ++i) {
    const std::uint64_t next = a + b;
    a = b;
    b = next;
  }
  return a;
}

}  // namespace runcube

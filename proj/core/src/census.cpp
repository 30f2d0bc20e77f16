#include "runcube/census.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <thread>

#include "runcube/errors.hpp"

namespace runcube {
namespace {

// Runs fn(chunk_index, begin, end) over `threads` contiguous slices of
// [0, count) and returns the per-chunk outputs in chunk order, so the merged
// result is independent of the thread count.
std::vector<std::vector<Subcube>> run_chunked(std::size_t count, int threads,
                                              const std::function<void(std::size_t, std::size_t,
                                                                       std::vector<Subcube>&)>& fn) {
  if (threads < 1) throw std::invalid_argument("thread count must be positive");
  const std::size_t chunks = std::min<std::size_t>(static_cast<std::size_t>(threads),
                                                   std::max<std::size_t>(count, 1));
  std::vector<std::vector<Subcube>> results(chunks);
  if (chunks == 1) {
    fn(0, count, results[0]);
    return results;
  }
  std::vector<std::thread> pool;
  pool.reserve(chunks);
  for (std::size_t c = 0; c < chunks; ++c) {
    const std::size_t begin = count * c / chunks;
    const std::size_t end = count * (c + 1) / chunks;
    pool.emplace_back([&, c, begin, end] { fn(begin, end, results[c]); });
  }
  for (auto& t : pool) t.join();
  return results;
}

Census merge_sorted(std::vector<std::vector<Subcube>> parts) {
  std::vector<Subcube> all;
  std::size_t total = 0;
  for (const auto& p : parts) total += p.size();
  all.reserve(total);
  for (auto& p : parts) all.insert(all.end(), p.begin(), p.end());
  return Census(std::move(all));
}

MPoly census_polynomial(const Census& census) {
  MPoly out;
  for (const Subcube& cube : census.subcubes()) {
    out += MPoly::monomial(Var::X, cube.dimension()) * MPoly::monomial(Var::Q, cube.distance());
  }
  return out;
}

}  // namespace

Census::Census(std::vector<Subcube> subcubes) : subcubes_(std::move(subcubes)) {
  std::sort(subcubes_.begin(), subcubes_.end());
}

Census enumerate_oracle(const FamilyGraph& g, int threads, const CensusLimits& limits) {
  if (g.dimension() > limits.max_oracle_n) {
    throw ResourceLimit("oracle census capped at n=" + std::to_string(limits.max_oracle_n) +
                        " (requested " + std::to_string(g.dimension()) + ")");
  }
  const std::vector<BitWord>& verts = g.vertices();
  auto parts = run_chunked(verts.size(), threads,
                           [&](std::size_t begin, std::size_t end, std::vector<Subcube>& out) {
    for (std::size_t i = begin; i < end; ++i) {
      const BitWord& bottom = verts[i];
      for (const BitWord& top : verts) {
        if ((bottom.bits() & ~top.bits()) != 0) continue;  // bottom must lie below top
        const std::uint64_t diff = bottom.bits() ^ top.bits();
        bool complete = true;
        // every word between bottom and top must be a vertex
        for (std::uint64_t sub = diff; sub != 0; sub = (sub - 1) & diff) {
          if (sub != diff && !g.contains(BitWord(bottom.bits() | sub, bottom.length()))) {
            complete = false;
            break;
          }
        }
        if (complete) out.push_back(Subcube{bottom, top});
      }
    }
  });
  return merge_sorted(std::move(parts));
}

Census enumerate_topvertex(const FamilyGraph& g, int threads) {
  if (g.family() == Family::Hypercube) {
    throw UnsupportedFamily("top-vertex census is not offered for raw hypercubes");
  }
  const std::vector<BitWord>& verts = g.vertices();
  auto parts = run_chunked(verts.size(), threads,
                           [&](std::size_t begin, std::size_t end, std::vector<Subcube>& out) {
    for (std::size_t i = begin; i < end; ++i) {
      const BitWord& top = verts[i];
      const std::uint64_t mask = switchable_down_mask(g, top);
      std::uint64_t sub = 0;
      while (true) {
        out.push_back(Subcube{BitWord(top.bits() ^ sub, top.length()), top});
        if (sub == mask) break;
        sub = (sub - mask) & mask;  // next subset of mask
      }
    }
  });
  return merge_sorted(std::move(parts));
}

Census enumerate_census(const FamilyGraph& g, CensusMethod method, int threads,
                        const CensusLimits& limits) {
  switch (method) {
    case CensusMethod::Oracle:
      return enumerate_oracle(g, threads, limits);
    case CensusMethod::TopVertex:
      return enumerate_topvertex(g, threads);
    case CensusMethod::Auto:
      break;
  }
  if (g.dimension() <= 10 || g.family() == Family::Hypercube) {
    return enumerate_oracle(g, threads, limits);
  }
  return enumerate_topvertex(g, threads);
}

MPoly distance_cube_polynomial(const FamilyGraph& g, CensusMethod method, int threads,
                               const CensusLimits& limits) {
  return census_polynomial(enumerate_census(g, method, threads, limits));
}

MPoly cube_polynomial(const FamilyGraph& g, CensusMethod method, int threads,
                      const CensusLimits& limits) {
  return distance_cube_polynomial(g, method, threads, limits).substitute({{Var::Q, MPoly{1}}});
}

MPoly dcw_polynomial(const FamilyGraph& g) {
  MPoly out;
  for (const BitWord& v : g.vertices()) {
    const DegreePair deg = degrees(g, v);
    out += MPoly::monomial(Var::D, deg.down) * MPoly::monomial(Var::Z, v.weight() - deg.down);
  }
  return out;
}

MPoly weight_polynomial(const FamilyGraph& g, Var variable) {
  MPoly out;
  for (const BitWord& v : g.vertices()) out += MPoly::monomial(variable, v.weight());
  return out;
}

MPoly updegree_polynomial(const FamilyGraph& g) {
  MPoly out;
  for (const BitWord& v : g.vertices()) out += MPoly::monomial(Var::U, degrees(g, v).up);
  return out;
}

}  // namespace runcube

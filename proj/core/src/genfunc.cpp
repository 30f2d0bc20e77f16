#include "runcube/genfunc.hpp"

#include <algorithm>
#include <stdexcept>

#include "runcube/errors.hpp"

namespace runcube {
namespace {

const MPoly kQ = MPoly::variable(Var::Q);
const MPoly kX = MPoly::variable(Var::X);
const MPoly kD = MPoly::variable(Var::D);
const MPoly kZ = MPoly::variable(Var::Z);
const MPoly kU = MPoly::variable(Var::U);

}  // namespace

const char* gf_name(GfId id) {
  switch (id) {
    case GfId::DcwFibRun: return "dcw-r";
    case GfId::DistCubeFibRun: return "d-r";
    case GfId::DistCubeLucasRun: return "d-rl";
    case GfId::UpDegreeFibRun: return "updeg-r";
  }
  return "?";
}

GfId gf_from_name(const std::string& name) {
  for (GfId id : {GfId::DcwFibRun, GfId::DistCubeFibRun, GfId::DistCubeLucasRun,
                  GfId::UpDegreeFibRun}) {
    if (name == gf_name(id)) return id;
  }
  throw UnknownId("unknown generating function id: " + name);
}

std::vector<std::string> gf_names() { return {"dcw-r", "d-r", "d-rl", "updeg-r"}; }

RationalGF catalog(GfId id) {
  switch (id) {
    case GfId::DcwFibRun:
      return RationalGF{
          {MPoly{1}, kD, kD - kZ, kD * (kD - kZ), kD * (kD - kZ)},
          {MPoly{1}, MPoly{-1}, -kZ, -(kD - kZ), MPoly{0}, -(kD * (kD - kZ))}};
    case GfId::DistCubeFibRun:
      return RationalGF{
          {MPoly{1}, kQ + kX, kX, kX * (kQ + kX), kX * (kQ + kX)},
          {MPoly{1}, MPoly{-1}, -kQ, -kX, MPoly{0}, -(kX * (kQ + kX))}};
    case GfId::DistCubeLucasRun:
      return RationalGF{
          {MPoly{1}, MPoly{0}, kQ + 2 * kX, MPoly{0}, 2 * kX * (kQ + kX)},
          {MPoly{1}, MPoly{-1}, -kQ, -kX, MPoly{0}, -(kX * (kQ + kX))}};
    case GfId::UpDegreeFibRun:
      return RationalGF{
          {MPoly{0}, MPoly{1} + kU, MPoly{2} - kU, -2 * kU, kU - 2, MPoly{0}, MPoly{1} - kU,
           MPoly{1} - kU},
          {MPoly{1}, -kU, MPoly{-2}, 2 * kU - 1, MPoly{1}, MPoly{1} - kU, MPoly{0}, kU - 1}};
  }
  throw UnknownId("unknown generating function id");
}

Series catalog_expand(GfId id, int order) { return expand(catalog(id), order); }

Series letter_series(AlphabetId alphabet, LetterStat stat, int order) {
  if (order < 0) throw std::invalid_argument("negative series order");
  Series out(static_cast<std::size_t>(order) + 1);
  for (int k = 0; 2 * k + 1 <= order; ++k) {
    const int length = 2 * k + 1;
    MPoly term;
    if (stat == LetterStat::Weight) {
      // weight of both (10)^k 0 and 1^k 0^{k+1} is k
      term = MPoly::monomial(Var::D, k);
    } else if (alphabet == AlphabetId::Fibonacci) {
      // in (10)^k 0 every 1 can be switched individually
      term = MPoly::monomial(Var::D, k);
    } else {
      // in 1^k 0^{k+1} only the first and last 1 of the run can be switched
      const int switchable = std::min(k, 2);
      term = MPoly::monomial(Var::D, switchable) * MPoly::monomial(Var::Z, k - switchable);
    }
    out[static_cast<std::size_t>(length)] = term;
  }
  return out;
}

Series monoid_gf(const Series& letters, int order) { return series_inverse(letters, order); }

Series monoid_to_graph_series(const Series& monoid_sum) {
  if (monoid_sum.size() < 3) {
    throw std::invalid_argument("monoid series too short to unpad");
  }
  if (monoid_sum[0] != MPoly{1} || monoid_sum[1] != MPoly{1}) {
    throw std::invalid_argument(
        "monoid series must start 1 + t (the empty word and the singleton 0)");
  }
  return Series(monoid_sum.begin() + 2, monoid_sum.end());
}

}  // namespace runcube

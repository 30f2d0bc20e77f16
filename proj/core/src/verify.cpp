#include "runcube/verify.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "runcube/errors.hpp"
#include "runcube/genfunc.hpp"
#include "runcube/graphs.hpp"
#include "runcube/words.hpp"

namespace runcube {
namespace {

struct IdName {
  IdentityId id;
  const char* name;
};

constexpr IdName kIdNames[] = {
    {IdentityId::Counts, "counts"},
    {IdentityId::DistWeight, "dist-weight"},
    {IdentityId::LucasRunRecurrence, "lucas-run-recurrence"},
    {IdentityId::LucasFibRecurrence, "lucas-fib-recurrence"},
    {IdentityId::Daisy, "daisy"},
    {IdentityId::Euler, "euler"},
    {IdentityId::SelfAnnihilating, "self-annihilating"},
    {IdentityId::SetIdentity, "set-identity"},
    {IdentityId::GfVsCensusDistCube, "gf-vs-census-d-r"},
    {IdentityId::GfVsCensusDcw, "gf-vs-census-dcw-r"},
    {IdentityId::GfVsCensusDistCubeLucas, "gf-vs-census-d-rl"},
    {IdentityId::GfVsCensusUpDegree, "gf-vs-census-updeg-r"},
    {IdentityId::RlGfDerivation, "rl-gf-derivation"},
    {IdentityId::CensusEquivalence, "census-equivalence"},
    {IdentityId::MonoidDcw, "monoid-dcw"},
    {IdentityId::DcwToDist, "dcw-to-dist"},
    {IdentityId::DR5Correction, "d-r5-correction"},
    {IdentityId::FibMonoidWeight, "fib-monoid-weight"},
};

void check_eq(VerifyReport& report, std::string label, int n, const MPoly& lhs, const MPoly& rhs) {
  CheckEntry entry{std::move(label), n, lhs == rhs, "", ""};
  if (!entry.pass) {
    entry.lhs = lhs.to_text();
    entry.rhs = rhs.to_text();
  }
  report.pass = report.pass && entry.pass;
  report.checks.push_back(std::move(entry));
}

void check_that(VerifyReport& report, std::string label, int n, bool ok, std::string lhs = "",
                std::string rhs = "") {
  CheckEntry entry{std::move(label), n, ok, "", ""};
  if (!ok) {
    entry.lhs = std::move(lhs);
    entry.rhs = std::move(rhs);
  }
  report.pass = report.pass && entry.pass;
  report.checks.push_back(std::move(entry));
}

MPoly dist_cube(Family family, int n, const VerifyOptions& opt) {
  return distance_cube_polynomial(FamilyGraph::build(family, n), opt.census_method, opt.threads);
}

// The known-incorrect value once circulated for D_{R_5}: it matches the true
// polynomial after q -> 1 but not before.
MPoly erroneous_d_r5() {
  const MPoly q = MPoly::variable(Var::Q);
  const MPoly x = MPoly::variable(Var::X);
  return 1 + 5 * q + 7 * q * q + (5 + 14 * q) * x + 7 * x * x;
}

void verify_counts(VerifyReport& report, int n_max) {
  for (int n = 0; n <= n_max; ++n) {
    const auto run = FamilyGraph::build(Family::FibonacciRun, n);
    check_that(report, "fibonacci-run size n=" + std::to_string(n), n,
               run.size() == fibonacci_number(n + 2), std::to_string(run.size()),
               std::to_string(fibonacci_number(n + 2)));
  }
  const int lucas_max = std::min(n_max, 20);
  for (int n = 0; n <= lucas_max; ++n) {
    const auto lucas_run = FamilyGraph::build(Family::LucasRun, n);
    const auto lucas_cube = FamilyGraph::build(Family::LucasCube, n);
    check_that(report, "lucas-run vs lucas-cube size n=" + std::to_string(n), n,
               lucas_run.size() == lucas_cube.size(), std::to_string(lucas_run.size()),
               std::to_string(lucas_cube.size()));
  }
  if (n_max > lucas_max) {
    report.note = "lucas-run/lucas-cube size comparison capped at n=20";
  }
}

void verify_dist_weight(VerifyReport& report, int n_max) {
  for (int n = 0; n <= n_max; ++n) {
    const auto g = FamilyGraph::build(Family::FibonacciRun, n);
    const std::vector<int> dist = bfs_distances(g, BitWord::zeros(n));
    bool ok = true;
    std::string bad;
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (dist[i] != g.vertices()[i].weight()) {
        ok = false;
        bad = g.vertices()[i].str() + " dist=" + std::to_string(dist[i]);
        break;
      }
    }
    check_that(report, "distance from 0^n equals weight n=" + std::to_string(n), n, ok, bad,
               "weight");
  }
  if (n_max >= 7) {
    const auto g = FamilyGraph::build(Family::FibonacciRun, 7);
    bool found = false;
    for (const BitWord& u : g.vertices()) {
      const std::vector<int> dist = bfs_distances(g, u);
      for (std::size_t i = 0; i < g.size() && !found; ++i) {
        if (dist[i] > hamming_distance(u, g.vertices()[i])) found = true;
      }
      if (found) break;
    }
    check_that(report, "pair with graph distance above Hamming distance exists n=7", 7, found,
               "no witness found", "witness expected");
  }
}

void verify_recurrence(VerifyReport& report, int n_max, Family cyclic, Family base,
                       const VerifyOptions& opt) {
  for (int n = 2; n <= n_max; ++n) {
    const MPoly lhs = dist_cube(cyclic, n, opt);
    const MPoly rhs = 2 * dist_cube(base, n - 1, opt) - dist_cube(base, n - 2, opt);
    check_eq(report,
             std::string(family_name(cyclic)) + " recurrence n=" + std::to_string(n), n, lhs, rhs);
  }
}

void verify_daisy(VerifyReport& report, int n_max, const VerifyOptions& opt) {
  const MPoly q = MPoly::variable(Var::Q);
  const MPoly x = MPoly::variable(Var::X);
  for (Family family : {Family::FibonacciCube, Family::LucasCube}) {
    for (int n = 0; n <= n_max; ++n) {
      const auto g = FamilyGraph::build(family, n);
      const MPoly dist = distance_cube_polynomial(g, opt.census_method, opt.threads);
      const MPoly cube = dist.substitute({{Var::Q, MPoly{1}}});
      const MPoly weight = weight_polynomial(g, Var::D);
      const std::string tag = std::string(family_name(family)) + " n=" + std::to_string(n);

      const MPoly dcw = dcw_polynomial(g);
      const auto vars = dcw.variables();
      check_that(report, "down-degree equals weight " + tag, n,
                 std::find(vars.begin(), vars.end(), Var::Z) == vars.end(), dcw.to_text(),
                 "no z variable");
      check_eq(report, "distance-cube equals cube(x+q-1) " + tag, n, dist,
               cube.substitute({{Var::X, x + q - 1}}));
      check_eq(report, "distance-cube equals weight(x+q) " + tag, n, dist,
               weight.substitute({{Var::D, x + q}}));
    }
  }
}

void verify_scalar_value(VerifyReport& report, int n_max, const VerifyOptions& opt, bool euler) {
  for (Family family :
       {Family::FibonacciCube, Family::LucasCube, Family::FibonacciRun, Family::LucasRun}) {
    for (int n = 0; n <= n_max; ++n) {
      const MPoly dist = dist_cube(family, n, opt);
      const MPoly value =
          euler ? dist.substitute({{Var::X, MPoly{-1}}, {Var::Q, MPoly{1}}})
                : dist.substitute({{Var::Q, -MPoly::variable(Var::X)}});
      const std::string what = euler ? "cube polynomial at -1 " : "distance-cube at q=-x ";
      check_eq(report, what + std::string(family_name(family)) + " n=" + std::to_string(n), n,
               value, MPoly{1});
    }
  }
}

void verify_set_identity(VerifyReport& report, int n_max) {
  for (int m = 0; m <= n_max; ++m) {
    // left side: the run-constrained words of length m that come from the
    // Lucas-run family, i.e. V(R^l_{m-2}) with the 00 tail restored
    std::set<BitWord> lhs;
    if (m >= 2) {
      const FamilyGraph lucas_run = FamilyGraph::build(Family::LucasRun, m - 2);
      for (const BitWord& s : lucas_run.vertices()) lhs.insert(s.append_zeros(2));
    }

    // right side: (0M \ {0}) u ((M0 \ {0}) \ 0M0), restricted to length m
    const BitWord zero = BitWord::parse("0");
    std::set<BitWord> starts_zero;  // 0M \ {0}
    std::set<BitWord> ends_zero;    // M0 \ {0}
    if (m >= 1) {
      for (const BitWord& w : run_constrained_words(m - 1)) {
        const BitWord prefixed = zero.concat(w);
        if (prefixed != zero) starts_zero.insert(prefixed);
        const BitWord suffixed = w.append_zeros(1);
        if (suffixed != zero) ends_zero.insert(suffixed);
      }
    }
    std::set<BitWord> wrapped;  // 0M0
    if (m >= 2) {
      for (const BitWord& w : run_constrained_words(m - 2)) {
        wrapped.insert(zero.concat(w).append_zeros(1));
      }
    }
    std::set<BitWord> second_part;
    for (const BitWord& w : ends_zero) {
      if (!wrapped.count(w)) second_part.insert(w);
    }

    bool disjoint = true;
    std::set<BitWord> rhs = starts_zero;
    for (const BitWord& w : second_part) {
      if (!rhs.insert(w).second) disjoint = false;
    }

    check_that(report, "set identity length=" + std::to_string(m), m, lhs == rhs && disjoint,
               "lhs size " + std::to_string(lhs.size()),
               "rhs size " + std::to_string(rhs.size()) + (disjoint ? "" : " (union not disjoint)"));
  }
}

void verify_gf_vs_census(VerifyReport& report, int n_max, GfId id, const VerifyOptions& opt) {
  const Series series = catalog_expand(id, n_max);
  for (int n = (id == GfId::UpDegreeFibRun ? 1 : 0); n <= n_max; ++n) {
    MPoly census;
    switch (id) {
      case GfId::DistCubeFibRun:
        census = dist_cube(Family::FibonacciRun, n, opt);
        break;
      case GfId::DistCubeLucasRun:
        census = dist_cube(Family::LucasRun, n, opt);
        break;
      case GfId::DcwFibRun:
        census = dcw_polynomial(FamilyGraph::build(Family::FibonacciRun, n));
        break;
      case GfId::UpDegreeFibRun:
        census = updegree_polynomial(FamilyGraph::build(Family::FibonacciRun, n));
        break;
    }
    check_eq(report, std::string(gf_name(id)) + " vs census n=" + std::to_string(n), n,
             series[static_cast<std::size_t>(n)], census);
  }
  if (id == GfId::DistCubeLucasRun) {
    report.note =
        "d-rl is read as the Lucas-run series (coefficient of t^n is the distance-cube "
        "polynomial of the n-dimensional Lucas-run graph)";
  }
  if (id == GfId::UpDegreeFibRun) {
    report.note = "the up-degree series starts at n=1; its t^0 coefficient is 0 by construction";
  }
}

void verify_rl_derivation(VerifyReport& report, int n_max) {
  const Series run = catalog_expand(GfId::DistCubeFibRun, n_max);
  const Series lucas = catalog_expand(GfId::DistCubeLucasRun, n_max);
  // (1 - t) + (2t - t^2) * sum_n D_{R_n} t^n, coefficientwise
  const Series rhs = series_add({MPoly{1}, MPoly{-1}},
                                series_mul({MPoly{0}, MPoly{2}, MPoly{-1}}, run, n_max), n_max);
  for (int n = 0; n <= n_max; ++n) {
    check_eq(report, "d-rl coefficient n=" + std::to_string(n), n,
             lucas[static_cast<std::size_t>(n)], rhs[static_cast<std::size_t>(n)]);
  }
  report.note =
      "checks d-rl = (1-t) + (2t-t^2)*d-r as truncated series; the d-rl entry is the "
      "Lucas-run series";
}

void verify_census_equivalence(VerifyReport& report, int n_max, const VerifyOptions& opt) {
  const CensusLimits limits;
  const int cap = std::min(n_max, limits.max_oracle_n);
  for (Family family :
       {Family::FibonacciCube, Family::LucasCube, Family::FibonacciRun, Family::LucasRun}) {
    for (int n = 0; n <= cap; ++n) {
      const auto g = FamilyGraph::build(family, n);
      const Census oracle = enumerate_oracle(g, opt.threads);
      const Census top = enumerate_topvertex(g, opt.threads);
      check_that(report,
                 std::string(family_name(family)) + " oracle==topvertex n=" + std::to_string(n), n,
                 oracle == top, "oracle size " + std::to_string(oracle.size()),
                 "topvertex size " + std::to_string(top.size()));
    }
  }
  if (n_max > cap) report.note = "oracle census capped at n=" + std::to_string(cap);
}

void verify_monoid_dcw(VerifyReport& report, int n_max) {
  const Series letters = letter_series(AlphabetId::Run, LetterStat::DownCoweight, n_max + 2);
  const Series graph_series = monoid_to_graph_series(monoid_gf(letters, n_max + 2));
  const Series closed = catalog_expand(GfId::DcwFibRun, n_max);
  for (int n = 0; n <= n_max; ++n) {
    check_eq(report, "monoid-built dcw n=" + std::to_string(n), n,
             graph_series[static_cast<std::size_t>(n)], closed[static_cast<std::size_t>(n)]);
  }
}

void verify_dcw_to_dist(VerifyReport& report, int n_max) {
  const MPoly q = MPoly::variable(Var::Q);
  const MPoly x = MPoly::variable(Var::X);
  const Series dcw = catalog_expand(GfId::DcwFibRun, n_max);
  const Series dist = catalog_expand(GfId::DistCubeFibRun, n_max);
  for (int n = 0; n <= n_max; ++n) {
    check_eq(report, "dcw with d->q+x, z->q n=" + std::to_string(n), n,
             dcw[static_cast<std::size_t>(n)].substitute({{Var::D, q + x}, {Var::Z, q}}),
             dist[static_cast<std::size_t>(n)]);
  }
}

void verify_d_r5_correction(VerifyReport& report, const VerifyOptions& opt) {
  VerifyOptions oracle_opt = opt;
  oracle_opt.census_method = CensusMethod::Oracle;
  const MPoly census = dist_cube(Family::FibonacciRun, 5, oracle_opt);
  const MPoly bad = erroneous_d_r5();
  const MPoly closed = catalog_expand(GfId::DistCubeFibRun, 5)[5];
  check_eq(report, "census matches closed form n=5", 5, census, closed);
  check_that(report, "census differs from the known-bad polynomial n=5", 5, census != bad,
             census.to_text(), bad.to_text());
  check_eq(report, "both agree after q=1 n=5", 5, census.substitute({{Var::Q, MPoly{1}}}),
           bad.substitute({{Var::Q, MPoly{1}}}));
}

void verify_fib_monoid_weight(VerifyReport& report, int n_max, const VerifyOptions& opt) {
  const MPoly q = MPoly::variable(Var::Q);
  const MPoly x = MPoly::variable(Var::X);
  const Series letters = letter_series(AlphabetId::Fibonacci, LetterStat::Weight, n_max + 2);
  const Series weights = monoid_to_graph_series(monoid_gf(letters, n_max + 2));
  for (int n = 0; n <= n_max; ++n) {
    const auto g = FamilyGraph::build(Family::FibonacciCube, n);
    check_eq(report, "monoid-built weight polynomial n=" + std::to_string(n), n,
             weights[static_cast<std::size_t>(n)], weight_polynomial(g, Var::D));
    check_eq(report, "weight series at d=x+q equals distance-cube n=" + std::to_string(n), n,
             weights[static_cast<std::size_t>(n)].substitute({{Var::D, x + q}}),
             distance_cube_polynomial(g, opt.census_method, opt.threads));
  }
}

}  // namespace

const char* identity_name(IdentityId id) {
  for (const auto& entry : kIdNames) {
    if (entry.id == id) return entry.name;
  }
  return "?";
}

IdentityId identity_from_name(const std::string& name) {
  for (const auto& entry : kIdNames) {
    if (name == entry.name) return entry.id;
  }
  throw UnknownId("unknown identity id: " + name);
}

std::vector<std::string> identity_names() {
  std::vector<std::string> out;
  for (const auto& entry : kIdNames) out.emplace_back(entry.name);
  return out;
}

int VerifyReport::first_failure_n() const {
  int first = -1;
  for (const CheckEntry& entry : checks) {
    if (!entry.pass && (first == -1 || entry.n < first)) first = entry.n;
  }
  return first;
}

std::string VerifyReport::to_text() const {
  std::string out = "identity: " + std::string(identity_name(id)) +
                    " (n_max=" + std::to_string(n_max) + ")\n";
  if (!note.empty()) out += "note: " + note + "\n";
  for (const CheckEntry& entry : checks) {
    out += std::string(entry.pass ? "  [ok]   " : "  [FAIL] ") + entry.label + "\n";
    if (!entry.pass) {
      out += "         lhs: " + entry.lhs + "\n";
      out += "         rhs: " + entry.rhs + "\n";
    }
  }
  std::size_t passed = 0;
  for (const CheckEntry& entry : checks) passed += entry.pass;
  out += std::string("result: ") + (pass ? "PASS" : "FAIL") + " (" + std::to_string(passed) + "/" +
         std::to_string(checks.size()) + " checks)";
  if (!pass) out += ", first failure at n=" + std::to_string(first_failure_n());
  out += "\n";
  return out;
}

std::string VerifyReport::to_json_string() const {
  nlohmann::json j;
  j["id"] = identity_name(id);
  j["n_max"] = n_max;
  j["pass"] = pass;
  if (!note.empty()) j["note"] = note;
  if (!pass) j["first_failure_n"] = first_failure_n();
  j["checks"] = nlohmann::json::array();
  for (const CheckEntry& entry : checks) {
    nlohmann::json c;
    c["label"] = entry.label;
    c["n"] = entry.n;
    c["pass"] = entry.pass;
    if (!entry.pass) {
      c["lhs"] = entry.lhs;
      c["rhs"] = entry.rhs;
    }
    j["checks"].push_back(std::move(c));
  }
  return j.dump();
}

VerifyReport verify(IdentityId id, int n_max, const VerifyOptions& options) {
  if (n_max < 0) throw std::invalid_argument("n_max must be nonnegative");
  VerifyReport report;
  report.id = id;
  report.n_max = n_max;
  switch (id) {
    case IdentityId::Counts:
      verify_counts(report, n_max);
      break;
    case IdentityId::DistWeight:
      verify_dist_weight(report, n_max);
      break;
    case IdentityId::LucasRunRecurrence:
      verify_recurrence(report, n_max, Family::LucasRun, Family::FibonacciRun, options);
      break;
    case IdentityId::LucasFibRecurrence:
      verify_recurrence(report, n_max, Family::LucasCube, Family::FibonacciCube, options);
      break;
    case IdentityId::Daisy:
      verify_daisy(report, n_max, options);
      break;
    case IdentityId::Euler:
      verify_scalar_value(report, n_max, options, /*euler=*/true);
      break;
    case IdentityId::SelfAnnihilating:
      verify_scalar_value(report, n_max, options, /*euler=*/false);
      break;
    case IdentityId::SetIdentity:
      verify_set_identity(report, n_max);
      break;
    case IdentityId::GfVsCensusDistCube:
      verify_gf_vs_census(report, n_max, GfId::DistCubeFibRun, options);
      break;
    case IdentityId::GfVsCensusDcw:
      verify_gf_vs_census(report, n_max, GfId::DcwFibRun, options);
      break;
    case IdentityId::GfVsCensusDistCubeLucas:
      verify_gf_vs_census(report, n_max, GfId::DistCubeLucasRun, options);
      break;
    case IdentityId::GfVsCensusUpDegree:
      verify_gf_vs_census(report, n_max, GfId::UpDegreeFibRun, options);
      break;
    case IdentityId::RlGfDerivation:
      verify_rl_derivation(report, n_max);
      break;
    case IdentityId::CensusEquivalence:
      verify_census_equivalence(report, n_max, options);
      break;
    case IdentityId::MonoidDcw:
      verify_monoid_dcw(report, n_max);
      break;
    case IdentityId::DcwToDist:
      verify_dcw_to_dist(report, n_max);
      break;
    case IdentityId::DR5Correction:
      verify_d_r5_correction(report, options);
      break;
    case IdentityId::FibMonoidWeight:
      verify_fib_monoid_weight(report, n_max, options);
      break;
  }
  return report;
}

}  // namespace runcube

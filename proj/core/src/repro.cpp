#include "runcube/repro.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>

#include "runcube/genfunc.hpp"
#include "runcube/verify.hpp"

namespace runcube {
namespace {

// Frozen canonical text of the distance-cube polynomials of the
// Fibonacci-run graphs for n = 1..6.
constexpr std::array<const char*, 6> kDistCubeFibRunGolden = {
    "1+q+x",
    "1+2q+2x",
    "1+3q+q^2+(3+2q)x+x^2",
    "1+4q+3q^2+(4+6q)x+3x^2",
    "1+5q+6q^2+q^3+(5+12q+2q^2)x+(6+q)x^2",
    "1+6q+10q^2+4q^3+(6+20q+10q^2)x+(10+8q)x^2+2x^3",
};

struct Criterion {
  std::string name;
  std::function<bool(std::string&, int)> run;  // detail out-param, threads
};

bool run_verify(IdentityId id, int n_max, int threads, std::string& detail,
                CensusMethod method = CensusMethod::Auto) {
  VerifyOptions options;
  options.census_method = method;
  options.threads = threads;
  const VerifyReport report = verify(id, n_max, options);
  if (!report.pass) {
    detail = identity_name(id);
    detail += " first failure at n=" + std::to_string(report.first_failure_n());
    for (const CheckEntry& entry : report.checks) {
      if (!entry.pass) {
        detail += " [" + entry.label + ": " + entry.lhs + " != " + entry.rhs + "]";
        break;
      }
    }
  }
  return report.pass;
}

std::vector<Criterion> make_criteria() {
  std::vector<Criterion> list;

  list.push_back({"closed-form distance-cube series reproduces the frozen n=1..6 polynomials "
                  "byte-for-byte",
                  [](std::string& detail, int) {
                    const Series series = catalog_expand(GfId::DistCubeFibRun, 6);
                    for (int n = 1; n <= 6; ++n) {
                      const std::string text = series[static_cast<std::size_t>(n)].to_text();
                      if (text != kDistCubeFibRunGolden[static_cast<std::size_t>(n - 1)]) {
                        detail = "n=" + std::to_string(n) + ": got " + text + ", want " +
                                 kDistCubeFibRunGolden[static_cast<std::size_t>(n - 1)];
                        return false;
                      }
                    }
                    return true;
                  }});

  list.push_back({"oracle census of the 5-dimensional Fibonacci-run graph: correct polynomial, "
                  "differs from the known-bad variant, agrees with it at q=1",
                  [](std::string& detail, int threads) {
                    return run_verify(IdentityId::DR5Correction, 5, threads, detail,
                                      CensusMethod::Oracle);
                  }});

  list.push_back({"lucas-run recurrence 2*D(n-1)-D(n-2): top-vertex census n<=16, oracle n<=12",
                  [](std::string& detail, int threads) {
                    return run_verify(IdentityId::LucasRunRecurrence, 16, threads, detail,
                                      CensusMethod::TopVertex) &&
                           run_verify(IdentityId::LucasRunRecurrence, 12, threads, detail,
                                      CensusMethod::Oracle);
                  }});

  list.push_back({"oracle and top-vertex censuses agree as (bottom, top) sets on all four "
                  "families, n<=12",
                  [](std::string& detail, int threads) {
                    return run_verify(IdentityId::CensusEquivalence, 12, threads, detail);
                  }});

  list.push_back({"vertex counts: Fibonacci numbers up to n=25, lucas-run equals lucas-cube up "
                  "to n=20",
                  [](std::string& detail, int threads) {
                    return run_verify(IdentityId::Counts, 25, threads, detail);
                  }});

  list.push_back({"cube polynomial at -1 equals 1 and distance-cube at q=-x equals 1, all four "
                  "families, n<=14",
                  [](std::string& detail, int threads) {
                    return run_verify(IdentityId::Euler, 14, threads, detail) &&
                           run_verify(IdentityId::SelfAnnihilating, 14, threads, detail);
                  }});

  list.push_back({"free-monoid construction equals the closed dcw form to order 22, and "
                  "d->q+x, z->q maps it onto the distance-cube form to order 24",
                  [](std::string& detail, int threads) {
                    return run_verify(IdentityId::MonoidDcw, 22, threads, detail) &&
                           run_verify(IdentityId::DcwToDist, 24, threads, detail);
                  }});

  list.push_back({"corrected up-degree series matches the census up-degree polynomials, "
                  "1<=n<=14",
                  [](std::string& detail, int threads) {
                    return run_verify(IdentityId::GfVsCensusUpDegree, 14, threads, detail);
                  }});

  list.push_back({"daisy identities for the Fibonacci and Lucas cubes and their recurrence, "
                  "n<=14",
                  [](std::string& detail, int threads) {
                    return run_verify(IdentityId::Daisy, 14, threads, detail) &&
                           run_verify(IdentityId::LucasFibRecurrence, 14, threads, detail);
                  }});

  list.push_back({"graph distance from 0^n equals Hamming weight n<=12, with a non-isometric "
                  "witness pair at n=7",
                  [](std::string& detail, int threads) {
                    return run_verify(IdentityId::DistWeight, 12, threads, detail);
                  }});

  list.push_back({"lucas-run set identity for run-constrained words, lengths<=16",
                  [](std::string& detail, int threads) {
                    return run_verify(IdentityId::SetIdentity, 16, threads, detail);
                  }});

  return list;
}

}  // namespace

std::vector<CriterionResult> run_acceptance_suite(int threads) {
  std::vector<CriterionResult> results;
  int index = 1;
  for (const Criterion& criterion : make_criteria()) {
    CriterionResult result;
    result.index = index++;
    result.name = criterion.name;
    const auto start = std::chrono::steady_clock::now();
    try {
      result.pass = criterion.run(result.detail, threads);
    } catch (const std::exception& e) {
      result.pass = false;
      result.detail = std::string("exception: ") + e.what();
    }
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    results.push_back(std::move(result));
  }
  return results;
}

bool all_passed(const std::vector<CriterionResult>& results) {
  for (const CriterionResult& r : results) {
    if (!r.pass) return false;
  }
  return true;
}

std::string format_results(const std::vector<CriterionResult>& results) {
  std::string out;
  for (const CriterionResult& r : results) {
    char timing[32];
    std::snprintf(timing, sizeof(timing), "%.2fs", r.seconds);
    out += std::string(r.pass ? "[PASS] " : "[FAIL] ") + std::to_string(r.index) + ". " + r.name +
           " (" + timing + ")\n";
    if (!r.pass && !r.detail.empty()) out += "       " + r.detail + "\n";
  }
  std::size_t passed = 0;
  for (const CriterionResult& r : results) passed += r.pass;
  out += std::to_string(passed) + "/" + std::to_string(results.size()) + " criteria passed\n";
  return out;
}

}  // namespace runcube

#pragma once

#include <string>
#include <vector>

#include "runcube/census.hpp"

namespace runcube {

/// Machine-checkable identities over the graph families and their
/// enumerator polynomials.
enum class IdentityId {
  Counts,               // |V(R_n)| = F_{n+2}; |V(R^l_n)| = |V(Lucas cube_n)|
  DistWeight,           // BFS distance from 0^n equals Hamming weight in R_n;
                        // at n = 7 some pair has BFS distance > Hamming distance
  LucasRunRecurrence,   // D_{R^l_n} = 2 D_{R_{n-1}} - D_{R_{n-2}}
  LucasFibRecurrence,   // same recurrence for Lucas / Fibonacci cubes
  Daisy,                // D_G(x,q) = C_G(x+q-1) = W_G(x+q) for the cube families
  Euler,                // C_G(-1) = D_G(-1,1) = 1, all four families
  SelfAnnihilating,     // D_G(x,-x) = 1, all four families
  SetIdentity,          // M^l = (0M \ {0}) u ((M0 \ {0}) \ 0M0), lengthwise
  GfVsCensusDistCube,   // catalog d-r vs census of R_n
  GfVsCensusDcw,        // catalog dcw-r vs census of R_n
  GfVsCensusDistCubeLucas,  // catalog d-rl vs census of R^l_n
  GfVsCensusUpDegree,   // catalog updeg-r vs census of R_n (n >= 1)
  RlGfDerivation,       // d-rl series = (1-t) + (2t-t^2) * d-r series
  CensusEquivalence,    // oracle census == top-vertex census, four families
  MonoidDcw,            // monoid-built DCW series == catalog dcw-r
  DcwToDist,            // dcw-r with d->q+x, z->q == d-r, coefficientwise
  DR5Correction,        // census D_{R_5} differs from the known-bad variant
                        // as a polynomial but agrees at q = 1
  FibMonoidWeight,      // monoid-built Fibonacci-cube weight series; its
                        // d->x+q image equals the census distance-cube poly
};

const char* identity_name(IdentityId id);
IdentityId identity_from_name(const std::string& name);  // throws UnknownId
std::vector<std::string> identity_names();

struct CheckEntry {
  std::string label;
  int n = 0;
  bool pass = true;
  std::string lhs;  // canonical text of both sides, filled on failure
  std::string rhs;
};

struct VerifyReport {
  IdentityId id{};
  int n_max = 0;
  bool pass = true;
  std::vector<CheckEntry> checks;
  std::string note;  // interpretation notes, e.g. for the d-rl series

  /// Smallest n among failing checks, or -1 when everything passed.
  int first_failure_n() const;
  std::string to_text() const;
  std::string to_json_string() const;
};

struct VerifyOptions {
  CensusMethod census_method = CensusMethod::Auto;
  int threads = 1;
};

/// Checks one identity for all n up to n_max (ids with internal caps note
/// them in the report). Deterministic; failures carry both sides' canonical
/// polynomial text.
VerifyReport verify(IdentityId id, int n_max, const VerifyOptions& options = {});

}  // namespace runcube

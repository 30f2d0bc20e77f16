#pragma once

#include <optional>
#include <string>
#include <vector>

#include "runcube/census.hpp"
#include "runcube/series.hpp"
#include "runcube/words.hpp"

namespace runcube {

/// Closed-form generating functions for the Fibonacci-run / Lucas-run
/// families, stored verbatim (no algebraic simplification):
///   DcwFibRun       sum_n DCW_{R_n}(d,z) t^n
///   DistCubeFibRun  sum_n D_{R_n}(x,q) t^n
///   DistCubeLucasRun sum_n D_{R^l_n}(x,q) t^n
///   UpDegreeFibRun  sum_{n>=1} (sum_v u^up(v)) t^n
enum class GfId { DcwFibRun, DistCubeFibRun, DistCubeLucasRun, UpDegreeFibRun };

const char* gf_name(GfId id);
GfId gf_from_name(const std::string& name);  // throws UnknownId
std::vector<std::string> gf_names();

RationalGF catalog(GfId id);
Series catalog_expand(GfId id, int order);

/// Per-letter statistic used when summing an alphabet into a series.
enum class LetterStat { DownCoweight, Weight };

/// sum over letters of length <= order of the letter's monomial times
/// t^length. For the run alphabet with the down-coweight statistic the
/// letters contribute t, d t^3, d^2 z^{k-2} t^{2k+1} (k >= 2): only the
/// first and last 1 of a longer run can be switched individually.
Series letter_series(AlphabetId alphabet, LetterStat stat, int order);

/// 1/(1 - letters): the sum of the statistic over the whole free monoid.
Series monoid_gf(const Series& letters, int order);

/// Converts a monoid sum into the per-dimension graph series by removing the
/// empty word and the singleton "0" and unpadding the mandatory 00 tail
/// (a shift by t^2). The input must have constant coefficient 1 and t^1
/// coefficient 1.
Series monoid_to_graph_series(const Series& monoid_sum);

}  // namespace runcube

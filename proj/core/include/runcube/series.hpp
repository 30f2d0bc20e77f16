#pragma once

#include <vector>

#include "runcube/mpoly.hpp"

namespace runcube {

/// Truncated formal power series in t: element k is the coefficient of t^k.
using Series = std::vector<MPoly>;

/// Rational generating function N(t)/D(t) whose coefficients are
/// polynomials. The denominator must have constant term 1.
struct RationalGF {
  Series numerator;
  Series denominator;
};

/// Coefficients of t^0..t^order of N(t)/D(t), by the standard linear
/// recurrence c_n = N_n - sum_{k>=1} D_k c_{n-k}.
Series expand(const RationalGF& gf, int order);

/// Truncated expansion of 1/(1 - f); f must have zero constant term
/// (ConstantTermNonzero otherwise).
Series series_inverse(const Series& f, int order);

Series series_add(const Series& a, const Series& b, int order);
Series series_sub(const Series& a, const Series& b, int order);
Series series_mul(const Series& a, const Series& b, int order);
MPoly series_coeff(const Series& s, int k);

}  // namespace runcube

#include "runcube/series.hpp"

#include <stdexcept>

#include "runcube/errors.hpp"

namespace runcube {

MPoly series_coeff(const Series& s, int k) {
  if (k < 0 || static_cast<std::size_t>(k) >= s.size()) return MPoly{};
  return s[static_cast<std::size_t>(k)];
}

Series expand(const RationalGF& gf, int order) {
  if (order < 0) throw std::invalid_argument("negative expansion order");
  if (gf.denominator.empty() || gf.denominator.front() != MPoly{1}) {
    throw std::invalid_argument("rational GF denominator must have constant term 1");
  }
  Series out(static_cast<std::size_t>(order) + 1);
  for (int n = 0; n <= order; ++n) {
    MPoly c = series_coeff(gf.numerator, n);
    for (int k = 1; k <= n && static_cast<std::size_t>(k) < gf.denominator.size(); ++k) {
      c -= gf.denominator[static_cast<std::size_t>(k)] * out[static_cast<std::size_t>(n - k)];
    }
    out[static_cast<std::size_t>(n)] = std::move(c);
  }
  return out;
}

Series series_inverse(const Series& f, int order) {
  if (order < 0) throw std::invalid_argument("negative expansion order");
  if (!f.empty() && !f.front().is_zero()) {
    throw ConstantTermNonzero("series_inverse requires a zero constant term");
  }
  // g = 1/(1-f) satisfies g = 1 + f*g
  Series g(static_cast<std::size_t>(order) + 1);
  g[0] = MPoly{1};
  for (int n = 1; n <= order; ++n) {
    MPoly c;
    for (int k = 1; k <= n; ++k) {
      c += series_coeff(f, k) * g[static_cast<std::size_t>(n - k)];
    }
    g[static_cast<std::size_t>(n)] = std::move(c);
  }
  return g;
}

Series series_add(const Series& a, const Series& b, int order) {
  Series out(static_cast<std::size_t>(order) + 1);
  for (int n = 0; n <= order; ++n) {
    out[static_cast<std::size_t>(n)] = series_coeff(a, n) + series_coeff(b, n);
  }
  return out;
}

Series series_sub(const Series& a, const Series& b, int order) {
  Series out(static_cast<std::size_t>(order) + 1);
  for (int n = 0; n <= order; ++n) {
    out[static_cast<std::size_t>(n)] = series_coeff(a, n) - series_coeff(b, n);
  }
  return out;
}

Series series_mul(const Series& a, const Series& b, int order) {
  Series out(static_cast<std::size_t>(order) + 1);
  for (int n = 0; n <= order; ++n) {
    MPoly c;
    for (int k = 0; k <= n; ++k) {
      c += series_coeff(a, k) * series_coeff(b, n - k);
    }
    out[static_cast<std::size_t>(n)] = std::move(c);
  }
  return out;
}

}  // namespace runcube

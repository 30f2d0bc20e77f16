#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace runcube {

/// The fixed variable universe. The order q, x, d, z, u is canonical: it
/// drives term ordering, serialization and text layout.
enum class Var : int { Q = 0, X = 1, D = 2, Z = 3, U = 4 };

inline constexpr int kVarCount = 5;
const char* var_name(Var v);
Var var_from_name(const std::string& name);

/// Sparse multivariate polynomial with exact 64-bit integer coefficients.
/// Every arithmetic step is overflow-checked and throws OverflowError rather
/// than wrapping. No zero coefficients are stored.
class MPoly {
 public:
  using Exponents = std::array<std::uint16_t, kVarCount>;
  using TermMap = std::map<Exponents, std::int64_t>;

  MPoly() = default;
  /*implicit*/ MPoly(std::int64_t constant);
  static MPoly variable(Var v);
  static MPoly monomial(Var v, int exponent, std::int64_t coeff = 1);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Value of a constant polynomial; throws if not constant.
  std::int64_t constant_value() const;

  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  int total_degree() const;
  /// Variables occurring with a nonzero exponent, in canonical order.
  std::vector<Var> variables() const;

  MPoly& operator+=(const MPoly& rhs);
  MPoly& operator-=(const MPoly& rhs);
  MPoly& operator*=(const MPoly& rhs);
  friend MPoly operator+(MPoly lhs, const MPoly& rhs) { return lhs += rhs; }
  friend MPoly operator-(MPoly lhs, const MPoly& rhs) { return lhs -= rhs; }
  friend MPoly operator*(const MPoly& lhs, const MPoly& rhs);
  MPoly operator-() const;
  friend bool operator==(const MPoly&, const MPoly&) = default;

  static MPoly pow(const MPoly& base, int exponent);

  /// Exact composition: every bound variable is replaced by its binding,
  /// unbound variables are left fixed.
  MPoly substitute(const std::map<Var, MPoly>& bindings) const;

  /// Human-readable canonical form. Terms are grouped by the outermost
  /// present variable, e.g. "1+5q+6q^2+q^3+(5+12q+2q^2)x+(6+q)x^2".
  std::string to_text() const;
  /// {"vars":[...],"terms":[{"exp":[...],"coeff":"<decimal>"},...]} with the
  /// terms in canonical order (ascending total degree, then earlier
  /// variables taking higher exponents first).
  std::string to_json_string() const;
  static MPoly from_json_string(const std::string& json);
  /// One term per row: exponents, then the coefficient; leading header row.
  std::string to_csv() const;

 private:
  void add_term(const Exponents& exp, std::int64_t coeff);
  TermMap terms_;
};

inline MPoly operator*(std::int64_t c, const MPoly& p) { return MPoly(c) * p; }

}  // namespace runcube

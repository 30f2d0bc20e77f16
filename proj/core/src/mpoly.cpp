#include "runcube/mpoly.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include <json.hpp>

#include "runcube/errors.hpp"

namespace runcube {
namespace {

constexpr std::array<const char*, kVarCount> kVarNames = {"q", "x", "d", "z", "u"};

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

int exp_total(const MPoly::Exponents& e) {
  int t = 0;
  for (auto v : e) t += v;
  return t;
}

// Canonical flat term order for serialized term lists: ascending total
// degree; within a degree, higher exponents on earlier variables first
// (so q^2 precedes qx precedes x^2).
bool graded_less(const MPoly::Exponents& a, const MPoly::Exponents& b) {
  const int ta = exp_total(a), tb = exp_total(b);
  if (ta != tb) return ta < tb;
  for (int i = 0; i < kVarCount; ++i) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

// Text layout order: ascending powers of the outermost variable first
// (compare the last variable down to the first), which yields the grouped
// presentation "constant part, then x group, then x^2 group, ...".
bool colex_less(const MPoly::Exponents& a, const MPoly::Exponents& b) {
  for (int i = kVarCount - 1; i >= 0; --i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

std::string format_monomial(std::int64_t coeff, const MPoly::Exponents& exp) {
  std::string vars;
  for (int i = 0; i < kVarCount; ++i) {
    if (exp[i] == 0) continue;
    vars += kVarNames[static_cast<std::size_t>(i)];
    if (exp[i] > 1) vars += "^" + std::to_string(exp[i]);
  }
  if (vars.empty()) return std::to_string(coeff);
  if (coeff == 1) return vars;
  if (coeff == -1) return "-" + vars;
  return std::to_string(coeff) + vars;
}

std::string join_terms(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& part : parts) {
    if (!out.empty() && part.front() != '-') out += "+";
    out += part;
  }
  return out.empty() ? "0" : out;
}

}  // namespace

const char* var_name(Var v) { return kVarNames[static_cast<std::size_t>(v)]; }

Var var_from_name(const std::string& name) {
  for (int i = 0; i < kVarCount; ++i) {
    if (name == kVarNames[static_cast<std::size_t>(i)]) return static_cast<Var>(i);
  }
  throw std::invalid_argument("unknown polynomial variable: " + name);
}

MPoly::MPoly(std::int64_t constant) {
  if (constant != 0) terms_.emplace(Exponents{}, constant);
}

MPoly MPoly::variable(Var v) { return monomial(v, 1); }

MPoly MPoly::monomial(Var v, int exponent, std::int64_t coeff) {
  if (exponent < 0 || exponent > 0xffff) throw std::invalid_argument("exponent out of range");
  MPoly p;
  if (coeff != 0) {
    Exponents e{};
    e[static_cast<std::size_t>(v)] = static_cast<std::uint16_t>(exponent);
    p.terms_.emplace(e, coeff);
  }
  return p;
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{});
}

std::int64_t MPoly::constant_value() const {
  if (terms_.empty()) return 0;
  if (!is_constant()) throw std::logic_error("polynomial is not constant");
  return terms_.begin()->second;
}

int MPoly::total_degree() const {
  int deg = 0;
  for (const auto& [exp, coeff] : terms_) deg = std::max(deg, exp_total(exp));
  return deg;
}

std::vector<Var> MPoly::variables() const {
  std::array<bool, kVarCount> seen{};
  for (const auto& [exp, coeff] : terms_) {
    for (int i = 0; i < kVarCount; ++i) {
      if (exp[i] != 0) seen[static_cast<std::size_t>(i)] = true;
    }
  }
  std::vector<Var> out;
  for (int i = 0; i < kVarCount; ++i) {
    if (seen[static_cast<std::size_t>(i)]) out.push_back(static_cast<Var>(i));
  }
  return out;
}

void MPoly::add_term(const Exponents& exp, std::int64_t coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(exp, coeff);
  if (!inserted) {
    it->second = checked_add(it->second, coeff);
    if (it->second == 0) terms_.erase(it);
  }
}

MPoly& MPoly::operator+=(const MPoly& rhs) {
  for (const auto& [exp, coeff] : rhs.terms_) add_term(exp, coeff);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& rhs) {
  for (const auto& [exp, coeff] : rhs.terms_) {
    if (coeff == std::numeric_limits<std::int64_t>::min()) {
      throw OverflowError("integer overflow in negation");
    }
    add_term(exp, -coeff);
  }
  return *this;
}

MPoly operator*(const MPoly& lhs, const MPoly& rhs) {
  MPoly out;
  for (const auto& [ea, ca] : lhs.terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      MPoly::Exponents e{};
      for (int i = 0; i < kVarCount; ++i) {
        const int sum = ea[i] + eb[i];
        if (sum > 0xffff) throw OverflowError("exponent overflow in multiplication");
        e[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(sum);
      }
      out.add_term(e, checked_mul(ca, cb));
    }
  }
  return out;
}

MPoly& MPoly::operator*=(const MPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

MPoly MPoly::operator-() const {
  MPoly out;
  out -= *this;
  return out;
}

MPoly MPoly::pow(const MPoly& base, int exponent) {
  if (exponent < 0) throw std::invalid_argument("negative polynomial power");
  MPoly out{1};
  for (int i = 0; i < exponent; ++i) out *= base;
  return out;
}

MPoly MPoly::substitute(const std::map<Var, MPoly>& bindings) const {
  MPoly out;
  for (const auto& [exp, coeff] : terms_) {
    MPoly term{coeff};
    for (int i = 0; i < kVarCount; ++i) {
      if (exp[i] == 0) continue;
      const Var v = static_cast<Var>(i);
      auto it = bindings.find(v);
      if (it != bindings.end()) {
        term *= pow(it->second, exp[i]);
      } else {
        term *= monomial(v, exp[i]);
      }
    }
    out += term;
  }
  return out;
}

std::string MPoly::to_text() const {
  if (terms_.empty()) return "0";

  std::vector<std::pair<Exponents, std::int64_t>> sorted(terms_.begin(), terms_.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return colex_less(a.first, b.first); });

  const std::vector<Var> vars = variables();
  // A polynomial in at most one variable prints flat.
  if (vars.size() <= 1) {
    std::vector<std::string> parts;
    for (const auto& [exp, coeff] : sorted) parts.push_back(format_monomial(coeff, exp));
    return join_terms(parts);
  }

  const int inner = static_cast<int>(vars.front());
  auto outer_key = [&](const Exponents& e) {
    Exponents k = e;
    k[static_cast<std::size_t>(inner)] = 0;
    return k;
  };

  std::vector<std::string> groups;
  std::size_t i = 0;
  while (i < sorted.size()) {
    const Exponents key = outer_key(sorted[i].first);
    std::size_t j = i;
    while (j < sorted.size() && outer_key(sorted[j].first) == key) ++j;

    if (key == Exponents{}) {
      // leading group: the polynomial in the inner variable, unparenthesized
      for (std::size_t k = i; k < j; ++k) {
        groups.push_back(format_monomial(sorted[k].second, sorted[k].first));
      }
    } else if (j - i == 1) {
      groups.push_back(format_monomial(sorted[i].second, sorted[i].first));
    } else {
      std::vector<std::string> coeff_parts;
      for (std::size_t k = i; k < j; ++k) {
        Exponents e = sorted[k].first;
        for (int v = 0; v < kVarCount; ++v) {
          if (v != inner) e[static_cast<std::size_t>(v)] = 0;
        }
        coeff_parts.push_back(format_monomial(sorted[k].second, e));
      }
      groups.push_back("(" + join_terms(coeff_parts) + ")" + format_monomial(1, key));
    }
    i = j;
  }
  return join_terms(groups);
}

std::string MPoly::to_json_string() const {
  const std::vector<Var> vars = variables();
  std::vector<std::pair<Exponents, std::int64_t>> sorted(terms_.begin(), terms_.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return graded_less(a.first, b.first); });

  nlohmann::json j;
  j["vars"] = nlohmann::json::array();
  for (Var v : vars) j["vars"].push_back(var_name(v));
  j["terms"] = nlohmann::json::array();
  for (const auto& [exp, coeff] : sorted) {
    nlohmann::json term;
    term["exp"] = nlohmann::json::array();
    for (Var v : vars) term["exp"].push_back(exp[static_cast<std::size_t>(v)]);
    term["coeff"] = std::to_string(coeff);
    j["terms"].push_back(std::move(term));
  }
  return j.dump();
}

MPoly MPoly::from_json_string(const std::string& json) {
  const nlohmann::json j = nlohmann::json::parse(json);
  std::vector<Var> vars;
  for (const auto& name : j.at("vars")) vars.push_back(var_from_name(name.get<std::string>()));
  MPoly out;
  for (const auto& term : j.at("terms")) {
    const auto& exps = term.at("exp");
    if (exps.size() != vars.size()) {
      throw std::invalid_argument("polynomial JSON: exponent arity mismatch");
    }
    Exponents e{};
    for (std::size_t i = 0; i < vars.size(); ++i) {
      const int value = exps[i].get<int>();
      if (value < 0 || value > 0xffff) throw std::invalid_argument("exponent out of range");
      e[static_cast<std::size_t>(vars[i])] = static_cast<std::uint16_t>(value);
    }
    const std::string coeff_text = term.at("coeff").get<std::string>();
    std::size_t consumed = 0;
    const long long coeff = std::stoll(coeff_text, &consumed);
    if (consumed != coeff_text.size()) {
      throw std::invalid_argument("polynomial JSON: bad coefficient " + coeff_text);
    }
    out.add_term(e, coeff);
  }
  return out;
}

std::string MPoly::to_csv() const {
  const std::vector<Var> vars = variables();
  std::vector<std::pair<Exponents, std::int64_t>> sorted(terms_.begin(), terms_.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return graded_less(a.first, b.first); });

  std::string out;
  for (Var v : vars) {
    out += var_name(v);
    out += ",";
  }
  out += "coeff\n";
  for (const auto& [exp, coeff] : sorted) {
    for (Var v : vars) {
      out += std::to_string(exp[static_cast<std::size_t>(v)]);
      out += ",";
    }
    out += std::to_string(coeff);
    out += "\n";
  }
  return out;
}

}  // namespace runcube

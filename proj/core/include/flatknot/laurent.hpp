#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace flatknot {

using Integer = boost::multiprecision::cpp_int;

// Variables live in one global order: a < t < u < v < s1 < s2 < ...
namespace var {
inline constexpr int a = 0;
inline constexpr int t = 1;
inline constexpr int u = 2;
inline constexpr int v = 3;
inline constexpr int s(int i) { return 3 + i; }  // i >= 1
}  // namespace var

int variable_index(std::string_view name);
std::string variable_name(int index);

/// Exponent vector over the global variable order. Trailing zeros are trimmed,
/// so two equal monomials always compare equal element-wise.
class Monomial {
 public:
  Monomial() = default;
  static Monomial of(int variable, int exponent = 1);

  int exponent(int variable) const;
  void set_exponent(int variable, int exponent);
  bool is_one() const { return exps_.empty(); }
  int size() const { return static_cast<int>(exps_.size()); }
  const std::vector<int>& exponents() const { return exps_; }

  Monomial operator*(const Monomial& other) const;
  Monomial inverse() const;
  Monomial operator/(const Monomial& other) const { return *this * other.inverse(); }

  // Padded lexicographic order; this is the storage order of LaurentPoly.
  friend bool operator<(const Monomial& x, const Monomial& y);
  friend bool operator==(const Monomial& x, const Monomial& y) = default;

  std::string to_string() const;  // "t*s2^-1", "1" for the unit

 private:
  void trim();
  std::vector<int> exps_;
};

/// Display order: total |degree| ascending, ties broken by reverse-lex descending.
bool display_less(const Monomial& x, const Monomial& y);

/// Element of Z[x1^{+-1}, ..., xn^{+-1}]. Zero coefficients are never stored.
class LaurentPoly {
 public:
  using TermMap = std::map<Monomial, Integer>;

  LaurentPoly() = default;
  LaurentPoly(long long constant);  // NOLINT(google-explicit-constructor)
  LaurentPoly(const Monomial& m, Integer coeff = 1);
  static LaurentPoly variable(int index, int exponent = 1);
  static LaurentPoly variable(std::string_view name, int exponent = 1);
  static LaurentPoly parse(std::string_view text);

  bool is_zero() const { return terms_.empty(); }
  bool is_monomial_unit() const;  // +-m for a monomial m
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  Integer coefficient(const Monomial& m) const;
  void add_term(const Monomial& m, const Integer& coeff);

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& q);
  LaurentPoly& operator-=(const LaurentPoly& q);
  LaurentPoly& operator*=(const LaurentPoly& q);
  friend LaurentPoly operator+(LaurentPoly p, const LaurentPoly& q) { return p += q; }
  friend LaurentPoly operator-(LaurentPoly p, const LaurentPoly& q) { return p -= q; }
  friend LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q);
  friend bool operator==(const LaurentPoly& p, const LaurentPoly& q) = default;

  LaurentPoly pow(int exponent) const;  // negative exponents only for units
  LaurentPoly times_monomial(const Monomial& m) const;

  /// Substitute an integer for one variable. Negative powers of the value must
  /// divide exactly (value = +-1, or no negative exponents present).
  LaurentPoly substitute(int variable, long long value) const;
  /// Replace x_from by x_to (exponents add if x_to already occurs).
  LaurentPoly rename(int from, int to) const;

  int max_variable() const;  // -1 for constants
  std::string to_string() const;

 private:
  TermMap terms_;
};

inline LaurentPoly lp_add(const LaurentPoly& p, const LaurentPoly& q) { return p + q; }
inline LaurentPoly lp_mul(const LaurentPoly& p, const LaurentPoly& q) { return p * q; }

/// Exact quotient p / q. Throws std::logic_error when q does not divide p.
LaurentPoly exact_divide(const LaurentPoly& p, const LaurentPoly& q);

using PolyMatrix = std::vector<std::vector<LaurentPoly>>;

/// Determinant by fraction-free (Bareiss) elimination with exact division.
LaurentPoly lp_det(PolyMatrix m);

/// Canonical representative of the class {+- m * p : m a monomial in unit_vars}:
/// every unit variable's minimal exponent is shifted to zero and the first term
/// in display order gets a positive coefficient.
LaurentPoly lp_similar_normalize(const LaurentPoly& p, const std::set<int>& unit_vars);
bool lp_similar_eq(const LaurentPoly& p, const LaurentPoly& q, const std::set<int>& unit_vars);

std::set<int> unit_variables(std::initializer_list<std::string_view> names);

}  // namespace flatknot

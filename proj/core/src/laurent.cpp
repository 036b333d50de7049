#include "flatknot/laurent.hpp"

#include "flatknot/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace flatknot {

int variable_index(std::string_view name) {
  if (name == "a") return var::a;
  if (name == "t") return var::t;
  if (name == "u") return var::u;
  if (name == "v") return var::v;
  if (name.size() >= 2 && name[0] == 's') {
    int i = 0;
    for (char c : name.substr(1)) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw ValidationError("unknown variable '" + std::string(name) + "'");
      i = i * 10 + (c - '0');
    }
    if (i >= 1) return var::s(i);
  }
  throw ValidationError("unknown variable '" + std::string(name) + "'");
}

std::string variable_name(int index) {
  switch (index) {
    case var::a: return "a";
    case var::t: return "t";
    case var::u: return "u";
    case var::v: return "v";
    default: return "s" + std::to_string(index - 3);
  }
}

// ---------------------------------------------------------------- Monomial

Monomial Monomial::of(int variable, int exponent) {
  Monomial m;
  m.set_exponent(variable, exponent);
  return m;
}

int Monomial::exponent(int variable) const {
  return variable < size() ? exps_[variable] : 0;
}

void Monomial::set_exponent(int variable, int exponent) {
  if (variable >= size()) {
    if (exponent == 0) return;
    exps_.resize(variable + 1, 0);
  }
  exps_[variable] = exponent;
  trim();
}

void Monomial::trim() {
  while (!exps_.empty() && exps_.back() == 0) exps_.pop_back();
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  r.exps_.resize(std::max(size(), other.size()), 0);
  for (int i = 0; i < r.size(); ++i) r.exps_[i] = exponent(i) + other.exponent(i);
  r.trim();
  return r;
}

Monomial Monomial::inverse() const {
  Monomial r = *this;
  for (int& e : r.exps_) e = -e;
  return r;
}

bool operator<(const Monomial& x, const Monomial& y) {
  const int n = std::max(x.size(), y.size());
  for (int i = 0; i < n; ++i) {
    const int a = x.exponent(i), b = y.exponent(i);
    if (a != b) return a < b;
  }
  return false;
}

std::string Monomial::to_string() const {
  std::string out;
  for (int i = 0; i < size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += variable_name(i);
    if (exps_[i] != 1) out += "^" + std::to_string(exps_[i]);
  }
  return out.empty() ? "1" : out;
}

bool display_less(const Monomial& x, const Monomial& y) {
  auto weight = [](const Monomial& m) {
    long long w = 0;
    for (int e : m.exponents()) w += std::abs(e);
    return w;
  };
  const long long wx = weight(x), wy = weight(y);
  if (wx != wy) return wx < wy;
  for (int i = std::max(x.size(), y.size()) - 1; i >= 0; --i) {
    const int a = x.exponent(i), b = y.exponent(i);
    if (a != b) return a > b;
  }
  return false;
}

// ------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(long long constant) {
  if (constant != 0) terms_.emplace(Monomial{}, Integer(constant));
}

LaurentPoly::LaurentPoly(const Monomial& m, Integer coeff) {
  if (coeff != 0) terms_.emplace(m, std::move(coeff));
}

LaurentPoly LaurentPoly::variable(int index, int exponent) {
  return LaurentPoly(Monomial::of(index, exponent));
}

LaurentPoly LaurentPoly::variable(std::string_view name, int exponent) {
  return variable(variable_index(name), exponent);
}

bool LaurentPoly::is_monomial_unit() const {
  return terms_.size() == 1 && (terms_.begin()->second == 1 || terms_.begin()->second == -1);
}

Integer LaurentPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

void LaurentPoly::add_term(const Monomial& m, const Integer& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& q) {
  for (const auto& [m, c] : q.terms_) add_term(m, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& q) {
  for (const auto& [m, c] : q.terms_) add_term(m, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) {
  LaurentPoly r;
  for (const auto& [mp, cp] : p.terms_)
    for (const auto& [mq, cq] : q.terms_) r.add_term(mp * mq, cp * cq);
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& q) {
  *this = *this * q;
  return *this;
}

LaurentPoly LaurentPoly::pow(int exponent) const {
  if (exponent < 0) {
    if (!is_monomial_unit()) throw std::domain_error("negative power of a non-unit Laurent polynomial");
    const auto& [m, c] = *terms_.begin();
    Monomial inv = m.inverse();
    return LaurentPoly(inv, c).pow(-exponent);
  }
  LaurentPoly result(1), base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

LaurentPoly LaurentPoly::times_monomial(const Monomial& m) const {
  LaurentPoly r;
  for (const auto& [mm, c] : terms_) r.terms_.emplace(mm * m, c);
  return r;
}

LaurentPoly LaurentPoly::substitute(int variable, long long value) const {
  LaurentPoly r;
  for (const auto& [m, c] : terms_) {
    const int e = m.exponent(variable);
    Monomial rest = m;
    rest.set_exponent(variable, 0);
    Integer factor = 1;
    if (e >= 0) {
      factor = boost::multiprecision::pow(Integer(value), static_cast<unsigned>(e));
      r.add_term(rest, c * factor);
    } else {
      if (value != 1 && value != -1) throw std::domain_error("substitution of a non-unit into a negative power");
      factor = (value == -1 && (-e) % 2 == 1) ? -1 : 1;
      r.add_term(rest, c * factor);
    }
  }
  return r;
}

LaurentPoly LaurentPoly::rename(int from, int to) const {
  LaurentPoly r;
  for (const auto& [m, c] : terms_) {
    Monomial mm = m;
    const int e = mm.exponent(from);
    mm.set_exponent(from, 0);
    mm.set_exponent(to, mm.exponent(to) + e);
    r.add_term(mm, c);
  }
  return r;
}

int LaurentPoly::max_variable() const {
  int mx = -1;
  for (const auto& [m, c] : terms_) mx = std::max(mx, m.size() - 1);
  return mx;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Monomial, Integer>> sorted(terms_.begin(), terms_.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& x, const auto& y) { return display_less(x.first, y.first); });
  std::string out;
  bool first = true;
  for (const auto& [m, c] : sorted) {
    const bool negative = c < 0;
    const Integer magnitude = negative ? Integer(-c) : c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      out += magnitude.str();
    } else if (magnitude == 1) {
      out += m.to_string();
    } else {
      out += magnitude.str() + "*" + m.to_string();
    }
  }
  return out;
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : s_(text) {}

  LaurentPoly parse() {
    LaurentPoly result;
    skip_ws();
    if (pos_ >= s_.size()) throw ParseError("empty polynomial", pos_);
    bool first = true;
    while (true) {
      skip_ws();
      if (pos_ >= s_.size()) break;
      int sign = 1;
      if (s_[pos_] == '+' || s_[pos_] == '-') {
        sign = s_[pos_] == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        throw ParseError("expected '+' or '-'", pos_);
      }
      first = false;
      auto [m, c] = term();
      result.add_term(m, c * sign);
    }
    return result;
  }

 private:
  std::pair<Monomial, Integer> term() {
    Integer coeff = 1;
    Monomial mono;
    bool any = false;
    while (true) {
      skip_ws();
      if (pos_ >= s_.size()) throw ParseError("expected a factor", pos_);
      const char c = s_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        coeff *= Integer(std::string(s_.substr(start, pos_ - start)));
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        std::size_t start = pos_;
        ++pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        int index;
        try {
          index = variable_index(s_.substr(start, pos_ - start));
        } catch (const ValidationError& e) {
          throw ParseError(e.what(), start);
        }
        int e = 1;
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == '^') {
          ++pos_;
          skip_ws();
          int sign = 1;
          if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
            sign = s_[pos_] == '-' ? -1 : 1;
            ++pos_;
          }
          std::size_t es = pos_;
          while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
          if (es == pos_) throw ParseError("expected exponent", pos_);
          e = sign * std::stoi(std::string(s_.substr(es, pos_ - es)));
        }
        mono.set_exponent(index, mono.exponent(index) + e);
      } else {
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
      }
      any = true;
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    if (!any) throw ParseError("empty term", pos_);
    return {mono, coeff};
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view text) { return PolyParser(text).parse(); }

// ------------------------------------------------------ division and det

LaurentPoly exact_divide(const LaurentPoly& p, const LaurentPoly& q) {
  if (q.is_zero()) throw std::logic_error("exact_divide: division by zero");
  if (p.is_zero()) return {};
  const auto& [qlead_m, qlead_c] = *q.terms().rbegin();
  const Monomial lower = p.terms().begin()->first / q.terms().begin()->first;
  LaurentPoly quotient;
  LaurentPoly rest = p;
  const std::size_t cap = 10'000'000;
  for (std::size_t iter = 0; !rest.is_zero(); ++iter) {
    if (iter >= cap) throw std::logic_error("exact_divide: iteration cap reached");
    const auto& [rm, rc] = *rest.terms().rbegin();
    const Monomial m = rm / qlead_m;
    if (m < lower || rc % qlead_c != 0) throw std::logic_error("exact_divide: inexact division");
    const LaurentPoly step(m, Integer(rc / qlead_c));
    quotient += step;
    rest -= step * q;
  }
  return quotient;
}

LaurentPoly lp_det(PolyMatrix m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw ValidationError("lp_det: matrix is not square");
  if (n == 0) return LaurentPoly(1);

  int sign = 1;
  LaurentPoly previous(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    // Pivot on the sparsest nonzero entry of the trailing block.
    std::size_t best_r = n, best_c = n, best_terms = 0;
    for (std::size_t r = k; r < n; ++r)
      for (std::size_t c = k; c < n; ++c) {
        const std::size_t tc = m[r][c].term_count();
        if (tc != 0 && (best_r == n || tc < best_terms)) {
          best_r = r;
          best_c = c;
          best_terms = tc;
        }
      }
    if (best_r == n) return {};
    if (best_r != k) {
      std::swap(m[best_r], m[k]);
      sign = -sign;
    }
    if (best_c != k) {
      for (auto& row : m) std::swap(row[best_c], row[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        LaurentPoly num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] = exact_divide(num, previous);
      }
      m[i][k] = LaurentPoly();
    }
    previous = m[k][k];
  }
  LaurentPoly det = m[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

LaurentPoly lp_similar_normalize(const LaurentPoly& p, const std::set<int>& unit_vars) {
  if (p.is_zero()) return p;
  Monomial shift;
  for (int v : unit_vars) {
    bool seen = false;
    int lo = 0;
    for (const auto& [m, c] : p.terms()) {
      const int e = m.exponent(v);
      if (!seen || e < lo) lo = e;
      seen = true;
    }
    shift.set_exponent(v, -lo);
  }
  LaurentPoly r = p.times_monomial(shift);
  const Monomial* first = nullptr;
  for (const auto& [m, c] : r.terms())
    if (first == nullptr || display_less(m, *first)) first = &m;
  if (r.coefficient(*first) < 0) r = -r;
  return r;
}

bool lp_similar_eq(const LaurentPoly& p, const LaurentPoly& q, const std::set<int>& unit_vars) {
  return lp_similar_normalize(p, unit_vars) == lp_similar_normalize(q, unit_vars);
}

std::set<int> unit_variables(std::initializer_list<std::string_view> names) {
  std::set<int> out;
  for (auto n : names) out.insert(variable_index(n));
  return out;
}

}  // namespace flatknot

#pragma once

// Sparse multivariate polynomials with exact rational coefficients.

#include "toricfol/common.hpp"

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

namespace toricfol {

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

  static Monomial variable(std::size_t nvars, std::size_t j, std::uint32_t power = 1) {
    Monomial m(nvars);
    m.exps_.at(j) = power;
    return m;
  }

  std::size_t size() const { return exps_.size(); }
  std::uint32_t operator[](std::size_t j) const { return exps_[j]; }
  std::uint32_t& operator[](std::size_t j) { return exps_[j]; }
  const std::vector<std::uint32_t>& exponents() const { return exps_; }

  std::uint64_t total_degree() const {
    std::uint64_t d = 0;
    for (auto e : exps_) d += e;
    return d;
  }
  bool is_one() const { return total_degree() == 0; }

  bool divides(const Monomial& o) const {
    for (std::size_t j = 0; j < exps_.size(); ++j)
      if (exps_[j] > o.exps_[j]) return false;
    return true;
  }

  /// Variables with a nonzero exponent.
  std::vector<std::size_t> support() const {
    std::vector<std::size_t> s;
    for (std::size_t j = 0; j < exps_.size(); ++j)
      if (exps_[j]) s.push_back(j);
    return s;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m = a;
    for (std::size_t j = 0; j < m.exps_.size(); ++j) m.exps_[j] += b.exps_[j];
    return m;
  }
  /// a / b; requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial m = a;
    for (std::size_t j = 0; j < m.exps_.size(); ++j) m.exps_[j] -= b.exps_[j];
    return m;
  }
  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial m = a;
    for (std::size_t j = 0; j < m.exps_.size(); ++j) m.exps_[j] = std::max(a.exps_[j], b.exps_[j]);
    return m;
  }
  friend bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t j = 0; j < a.exps_.size(); ++j)
      if (a.exps_[j] && b.exps_[j]) return false;
    return true;
  }
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::uint32_t> exps_;
};

enum class MonomialOrder { grevlex, lex };

/// Three-way comparison under the given order: >0 when a is larger.
inline int compare(const Monomial& a, const Monomial& b, MonomialOrder order) {
  if (order == MonomialOrder::lex) {
    for (std::size_t j = 0; j < a.size(); ++j)
      if (a[j] != b[j]) return a[j] > b[j] ? 1 : -1;
    return 0;
  }
  auto da = a.total_degree(), db = b.total_degree();
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t j = a.size(); j-- > 0;)
    if (a[j] != b[j]) return a[j] < b[j] ? 1 : -1;
  return 0;
}

struct GrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return compare(a, b, MonomialOrder::grevlex) > 0;
  }
};

/// Terms are stored in descending grevlex order, so `begin()` is the
/// grevlex leading term. No zero coefficients are stored.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, GrevlexGreater>;

  explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Rational& c) {
    Polynomial p(nvars);
    p.add_term(Monomial(nvars), c);
    return p;
  }
  static Polynomial variable(std::size_t nvars, std::size_t j) {
    return term(Monomial::variable(nvars, j), 1);
  }
  static Polynomial term(const Monomial& m, const Rational& c) {
    Polynomial p(m.size());
    p.add_term(m, c);
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  Rational coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const Monomial& m, const Rational& c) {
    if (m.size() != nvars_) throw Error("Polynomial: monomial has wrong variable count");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::uint64_t total_degree() const {
    std::uint64_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
  }

  Polynomial& operator+=(const Polynomial& o) {
    check(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    check(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Polynomial& operator*=(const Rational& k) {
    if (k == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= k;
    return *this;
  }
  Polynomial operator-() const {
    Polynomial p = *this;
    for (auto& [m, c] : p.terms_) c = -c;
    return p;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& k) { return a *= k; }
  friend Polynomial operator*(const Rational& k, Polynomial a) { return a *= k; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check(b);
    Polynomial p(a.nvars_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) p.add_term(ma * mb, ca * cb);
    return p;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  /// this += k * m * o
  void add_multiple(const Polynomial& o, const Rational& k, const Monomial& m) {
    check(o);
    for (const auto& [mo, co] : o.terms_) add_term(mo * m, k * co);
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  /// Evaluation at a point; T is Rational, double or std::complex<double>.
  template <class T>
  T evaluate(std::span<const T> point) const {
    if (point.size() != nvars_) throw Error("Polynomial::evaluate: wrong point dimension");
    T sum = T(0);
    for (const auto& [m, c] : terms_) {
      T t;
      if constexpr (std::is_same_v<T, Rational>)
        t = c;
      else
        t = T(c.get_d());
      for (std::size_t j = 0; j < nvars_; ++j)
        for (std::uint32_t e = 0; e < m[j]; ++e) t *= point[j];
      sum += t;
    }
    return sum;
  }

 private:
  void check(const Polynomial& o) const {
    if (o.nvars_ != nvars_)
      throw Error("Polynomial: variable count mismatch (" + std::to_string(nvars_) + " vs " +
                  std::to_string(o.nvars_) + ")");
  }

  std::size_t nvars_ = 0;
  TermMap terms_;
};

inline Polynomial partial_derivative(const Polynomial& f, std::size_t j) {
  if (j >= f.nvars()) throw Error("partial_derivative: variable index out of range");
  Polynomial d(f.nvars());
  for (const auto& [m, c] : f.terms()) {
    if (m[j] == 0) continue;
    Monomial q = m;
    q[j] -= 1;
    d.add_term(q, c * m[j]);
  }
  return d;
}

/// q with num = q * den exactly, or nothing. Division by the single divisor
/// under grevlex; any leading term of the running remainder that the divisor's
/// leading term does not divide means a nonzero remainder.
inline std::optional<Polynomial> divide_exact(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw Error("divide_exact: division by the zero polynomial");
  if (num.nvars() != den.nvars()) throw Error("divide_exact: variable count mismatch");
  const auto& [lm, lc] = *den.terms().begin();
  Polynomial rem = num;
  Polynomial q(num.nvars());
  while (!rem.is_zero()) {
    const auto [m, c] = *rem.terms().begin();
    if (!lm.divides(m)) return std::nullopt;
    Monomial s = m / lm;
    Rational k = c / lc;
    q.add_term(s, k);
    rem.add_multiple(den, -k, s);
  }
  return q;
}

inline std::string default_variable_name(std::size_t j) { return "z" + std::to_string(j + 1); }

inline std::vector<std::string> default_variable_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t j = 0; j < n; ++j) names.push_back(default_variable_name(j));
  return names;
}

inline std::string to_string(const Monomial& m, const std::vector<std::string>& names) {
  std::string s;
  for (std::size_t j = 0; j < m.size(); ++j) {
    if (!m[j]) continue;
    if (!s.empty()) s += "*";
    s += names.at(j);
    if (m[j] > 1) s += "^" + std::to_string(m[j]);
  }
  return s;
}

/// Canonical text form: grevlex-descending terms, integer coefficients
/// printed without a denominator, unit coefficients omitted. "0" for zero.
inline std::string to_string(const Polynomial& p, const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Rational a = abs(c);
    if (first) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    first = false;
    const std::string mono = to_string(m, names);
    if (mono.empty()) {
      s += to_string(a);
    } else {
      if (a != 1) s += to_string(a) + "*";
      s += mono;
    }
  }
  return s;
}

inline std::string to_string(const Polynomial& p) { return to_string(p, default_variable_names(p.nvars())); }

}  // namespace toricfol

#pragma once

// Buchberger's algorithm and the quasi-smoothness certificates built on it.

#include "toricfol/graded_ring.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace toricfol {

struct GroebnerBasis {
  std::vector<Polynomial> generators;
  MonomialOrder order = MonomialOrder::grevlex;
  std::size_t nvars = 0;

  bool is_unit() const { return generators.size() == 1 && generators.front().terms().begin()->first.is_one(); }
};

namespace detail {

inline std::pair<Monomial, Rational> leading_term(const Polynomial& p, MonomialOrder order) {
  if (p.is_zero()) throw Error("leading_term: zero polynomial");
  if (order == MonomialOrder::grevlex) return *p.terms().begin();
  auto best = p.terms().begin();
  for (auto it = p.terms().begin(); it != p.terms().end(); ++it)
    if (compare(it->first, best->first, order) > 0) best = it;
  return *best;
}

inline Polynomial monic(Polynomial p, MonomialOrder order) {
  if (p.is_zero()) return p;
  return p * (1 / leading_term(p, order).second);
}

}  // namespace detail

/// Remainder of full multivariate division by `divisors` (first divisor whose
/// leading monomial divides wins). Zero iff f is in the ideal when the
/// divisors form a Gröbner basis.
inline Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& divisors, MonomialOrder order) {
  std::vector<std::pair<Monomial, Rational>> leads;
  for (const auto& g : divisors) {
    if (g.nvars() != f.nvars()) throw Error("reduce: variable count mismatch");
    leads.push_back(detail::leading_term(g, order));
  }
  Polynomial p = f, rem(f.nvars());
  while (!p.is_zero()) {
    auto [m, c] = detail::leading_term(p, order);
    bool divided = false;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      if (!leads[i].first.divides(m)) continue;
      p.add_multiple(divisors[i], -c / leads[i].second, m / leads[i].first);
      divided = true;
      break;
    }
    if (!divided) {
      rem.add_term(m, c);
      p.add_term(m, -c);
    }
  }
  return rem;
}

inline Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  if (f.nvars() != gb.nvars) throw Error("normal_form: variable count mismatch");
  return reduce(f, gb.generators, gb.order);
}

/// Reduced Gröbner basis: monic, sorted by descending leading monomial.
/// Pairs are processed smallest lcm first (ties: lowest index pair);
/// pairs with coprime leading monomials are skipped.
inline GroebnerBasis buchberger(const std::vector<Polynomial>& gens, MonomialOrder order = MonomialOrder::grevlex) {
  if (gens.empty()) throw Error("buchberger: no generators");
  const std::size_t nvars = gens.front().nvars();
  std::vector<Polynomial> g;
  for (const auto& p : gens) {
    if (p.nvars() != nvars) throw Error("buchberger: variable count mismatch");
    if (!p.is_zero()) g.push_back(detail::monic(p, order));
  }
  if (g.empty()) throw Error("buchberger: all generators are zero");

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < g.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
  while (!pairs.empty()) {
    std::size_t best = 0;
    Monomial best_lcm;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      auto [i, j] = pairs[k];
      Monomial l = lcm(detail::leading_term(g[i], order).first, detail::leading_term(g[j], order).first);
      if (k == 0 || compare(l, best_lcm, order) < 0 ||
          (compare(l, best_lcm, order) == 0 && pairs[k] < pairs[best])) {
        best = k;
        best_lcm = l;
      }
    }
    auto [i, j] = pairs[best];
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));
    auto li = detail::leading_term(g[i], order), lj = detail::leading_term(g[j], order);
    if (coprime(li.first, lj.first)) continue;
    Polynomial s(nvars);
    s.add_multiple(g[i], 1 / li.second, best_lcm / li.first);
    s.add_multiple(g[j], -1 / lj.second, best_lcm / lj.first);
    Polynomial r = reduce(s, g, order);
    if (r.is_zero()) continue;
    g.push_back(detail::monic(r, order));
    for (std::size_t k = 0; k + 1 < g.size(); ++k) pairs.emplace_back(k, g.size() - 1);
  }

  // Minimalize, then interreduce.
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    Monomial li = detail::leading_term(g[i], order).first;
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      Monomial lj = detail::leading_term(g[j], order).first;
      if (lj.divides(li) && (!(lj == li) || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  std::vector<Polynomial> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    reduced.push_back(detail::monic(reduce(minimal[i], others, order), order));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
    return compare(detail::leading_term(a, order).first, detail::leading_term(b, order).first, order) > 0;
  });
  return GroebnerBasis{reduced, order, nvars};
}

/// Krull dimension of the quotient: the largest set of variables containing
/// the support of no leading monomial. Nothing when the ideal is the unit
/// ideal (empty variety).
inline std::optional<std::size_t> ideal_dimension(const GroebnerBasis& gb) {
  if (gb.is_unit()) return std::nullopt;
  const std::size_t n = gb.nvars;
  if (n > 24) throw Error("ideal_dimension: too many variables");
  std::vector<std::uint32_t> lead_supports;
  for (const auto& g : gb.generators) {
    std::uint32_t mask = 0;
    for (auto j : detail::leading_term(g, gb.order).first.support()) mask |= 1u << j;
    lead_supports.push_back(mask);
  }
  std::size_t best = 0;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    bool independent = true;
    for (auto l : lead_supports)
      if ((l & ~s) == 0) {
        independent = false;
        break;
      }
    if (independent) best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcount(s)));
  }
  return best;
}

struct CheckResult {
  bool value = false;
  std::string reason;
};

/// True when the selected partials of f cut out a variety of codimension
/// equal to their number.
inline CheckResult regular_subsequence_check(const Polynomial& f, const std::vector<std::size_t>& indices) {
  if (indices.empty()) return {false, "empty index set"};
  std::vector<Polynomial> partials;
  for (auto i : indices) {
    auto d = partial_derivative(f, i);
    if (d.is_zero()) return {false, "partial derivative with respect to variable " + std::to_string(i + 1) + " is zero"};
    partials.push_back(d);
  }
  auto dim = ideal_dimension(buchberger(partials));
  if (!dim) return {false, "the partials generate the unit ideal"};
  const std::size_t codim = f.nvars() - *dim;
  if (codim != indices.size())
    return {false, "codimension " + std::to_string(codim) + " but " + std::to_string(indices.size()) + " partials"};
  return {true, "codimension " + std::to_string(codim)};
}

enum class Verdict { yes, no, inconclusive };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::yes:
      return "yes";
    case Verdict::no:
      return "no";
    default:
      return "inconclusive";
  }
}

struct Certificate {
  Verdict verdict = Verdict::inconclusive;
  std::string reason;
};

namespace detail {

/// Smallest N <= cap with p^N in the ideal, if any.
inline std::optional<std::uint32_t> power_in_ideal(const Polynomial& p, const GroebnerBasis& gb, std::uint32_t cap) {
  Polynomial q = Polynomial::constant(p.nvars(), 1);
  for (std::uint32_t k = 1; k <= cap; ++k) {
    q = q * p;
    if (normal_form(q, gb).is_zero()) return k;
  }
  return std::nullopt;
}

inline std::uint32_t default_power_cap(const std::vector<Polynomial>& gens) {
  std::uint64_t d = 1;
  for (const auto& g : gens) d = std::max(d, g.total_degree());
  return static_cast<std::uint32_t>(2 * d);
}

}  // namespace detail

/// Whether the common zero set of `gens` is at most the origin. Uses the
/// Gröbner dimension plus a positive combination of radial fields (the zero
/// set is then a cone of dimension 0); otherwise falls back to testing
/// z_j^N in the ideal for N <= cap.
inline Certificate only_origin_check(const std::vector<Polynomial>& gens, const ToricModel& model,
                                     std::optional<std::uint32_t> cap = std::nullopt) {
  std::vector<Polynomial> nonzero;
  for (const auto& g : gens)
    if (!g.is_zero()) nonzero.push_back(g);
  if (nonzero.empty()) return {Verdict::no, "all generators vanish identically"};
  GroebnerBasis gb = buchberger(nonzero);
  auto dim = ideal_dimension(gb);
  if (!dim) return {Verdict::yes, "the generators have no common zero"};
  if (*dim > 0) return {Verdict::no, "common zero set has dimension " + std::to_string(*dim)};
  if (positivity_functional(model)) return {Verdict::yes, "zero-dimensional cone under a positive radial field"};
  const std::uint32_t n = cap.value_or(detail::default_power_cap(nonzero));
  for (std::size_t j = 0; j < model.nvars(); ++j)
    if (!detail::power_in_ideal(model.variable_polynomial(j), gb, n))
      return {Verdict::inconclusive, "no power of " + model.variable_names()[j] + " up to " + std::to_string(n) +
                                         " lies in the ideal"};
  return {Verdict::yes, "every variable has a power in the ideal"};
}

/// Whether Sing(V) ⊆ Z for V = {f = 0}, with Sing(V) cut out by f and its
/// partials. "no" comes with a coordinate subspace inside Sing(V) but not
/// inside Z; "yes" with powers of the irrelevant generators in the ideal.
inline Certificate sing_inside_irrelevant(const Polynomial& f, const ToricModel& model,
                                          std::optional<std::uint32_t> cap = std::nullopt) {
  const IrrelevantIdeal irr = model.irrelevant_ideal();
  const std::size_t n = model.nvars();
  if (n > 20) throw Error("sing_inside_irrelevant: too many variables");
  std::vector<Polynomial> jac{f};
  for (std::size_t j = 0; j < n; ++j) jac.push_back(partial_derivative(f, j));

  // Coordinate subspaces {z_S = 0}, smallest codimension first.
  std::vector<std::uint32_t> masks;
  for (std::uint32_t s = 1; s + 1 < (1u << n); ++s) masks.push_back(s);
  std::stable_sort(masks.begin(), masks.end(),
                   [](std::uint32_t a, std::uint32_t b) { return __builtin_popcount(a) < __builtin_popcount(b); });
  for (auto s : masks) {
    bool inside_z = false;
    for (const auto& comp : irr.components) {
      bool contained = true;
      for (auto j : comp)
        if (!(s & (1u << j))) contained = false;
      if (contained) inside_z = true;
    }
    if (inside_z) continue;
    bool all_vanish = true;
    for (const auto& g : jac) {
      for (const auto& [m, c] : g.terms()) {
        bool killed = false;
        for (auto j : m.support())
          if (s & (1u << j)) killed = true;
        if (!killed) {
          all_vanish = false;
          break;
        }
      }
      if (!all_vanish) break;
    }
    if (all_vanish) {
      std::vector<std::string> vs;
      for (std::size_t j = 0; j < n; ++j)
        if (s & (1u << j)) vs.push_back(model.variable_names()[j]);
      return {Verdict::no, "Sing(V) contains {" + join(vs, " = ") + " = 0}, which is not inside Z"};
    }
  }

  std::vector<Polynomial> nonzero;
  for (const auto& g : jac)
    if (!g.is_zero()) nonzero.push_back(g);
  GroebnerBasis gb = buchberger(nonzero);
  if (gb.is_unit()) return {Verdict::yes, "Sing(V) is empty"};
  const std::uint32_t c = cap.value_or(detail::default_power_cap({f}));
  for (const auto& g : irr.generators) {
    Polynomial p = Polynomial::term(g, 1);
    if (!detail::power_in_ideal(p, gb, c))
      return {Verdict::inconclusive, "no power of " + to_string(g, model.variable_names()) + " up to " +
                                         std::to_string(c) + " lies in the Jacobian ideal"};
  }
  return {Verdict::yes, "every irrelevant generator has a power in the Jacobian ideal"};
}

}  // namespace toricfol

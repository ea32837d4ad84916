#pragma once

// One-dimensional foliations given by quasi-homogeneous vector fields.

#include "toricfol/graded_ring.hpp"
#include "toricfol/vector_field.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace toricfol {

/// Degree implied by one component: deg(P_i) - deg(z_i).
struct ComponentDegree {
  std::size_t index = 0;
  /// Absent when the component is not quasi-homogeneous.
  std::optional<DegreeClass> degree;
};

/// Implied degrees of the nonzero components, in variable order.
inline std::vector<ComponentDegree> component_degrees(const ToricModel& model, const VectorField& x) {
  if (x.size() != model.nvars())
    throw Error("vector field has " + std::to_string(x.size()) + " components, model has " +
                std::to_string(model.nvars()) + " variables");
  std::vector<ComponentDegree> out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    auto d = homogeneous_degree(model, x[i]);
    out.push_back({i, d ? std::optional<DegreeClass>(*d - model.degree(i)) : std::nullopt});
  }
  return out;
}

class InconsistentDegreeError : public Error {
 public:
  InconsistentDegreeError(std::string message, std::size_t first, std::size_t second)
      : Error(std::move(message)), first_(first), second_(second) {}
  std::size_t first() const { return first_; }
  std::size_t second() const { return second_; }

 private:
  std::size_t first_, second_;
};

/// The d with deg(P_i) = d + deg(z_i) for every nonzero component.
inline DegreeClass foliation_degree(const ToricModel& model, const VectorField& x) {
  auto comps = component_degrees(model, x);
  if (comps.empty()) throw Error("foliation_degree: the vector field is zero");
  const auto& names = model.variable_names();
  for (const auto& c : comps)
    if (!c.degree)
      throw InconsistentDegreeError("component d/d" + names[c.index] + " is not quasi-homogeneous", c.index, c.index);
  for (const auto& c : comps)
    if (!(*c.degree == *comps.front().degree))
      throw InconsistentDegreeError("components d/d" + names[comps.front().index] + " and d/d" + names[c.index] +
                                        " imply degrees " + comps.front().degree->to_string() + " and " +
                                        c.degree->to_string(),
                                    comps.front().index, c.index);
  return *comps.front().degree;
}

/// g with X(f) = g f, if it exists.
inline std::optional<Polynomial> invariance_cofactor(const VectorField& x, const Polynomial& f) {
  if (f.is_zero()) throw Error("invariance_cofactor: f is zero");
  return divide_exact(apply_to(x, f), f);
}

struct LieMembership {
  bool member = false;
  /// g_1..g_r with X = sum g_i R_i when member.
  std::vector<Polynomial> witness;
  std::string reason;
};

/// Whether X = sum_i g_i R_i for polynomials g_i. Since (g_i R_i)_j = a_ij g_i z_j,
/// this asks that every P_j be divisible by z_j and that, monomial by monomial,
/// the quotients (P_j / z_j)_j lie in the row space of the radial coefficients.
inline LieMembership lie_g_membership(const ToricModel& model, const VectorField& x) {
  const std::size_t n = model.nvars(), r = model.rank();
  if (x.size() != n) throw Error("lie_g_membership: component count mismatch");
  const auto& names = model.variable_names();
  std::vector<Polynomial> h;
  for (std::size_t j = 0; j < n; ++j) {
    auto q = divide_exact(x[j], model.variable_polynomial(j));
    if (!q) return {false, {}, "component d/d" + names[j] + " is not divisible by " + names[j]};
    h.push_back(*q);
  }
  std::vector<Monomial> support;
  for (const auto& p : h)
    for (const auto& [m, c] : p.terms()) support.push_back(m);
  std::sort(support.begin(), support.end(), GrevlexGreater{});
  support.erase(std::unique(support.begin(), support.end()), support.end());

  RationalMatrix at(n, r);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < r; ++i) at(j, i) = model.radial_field(i).coefficients[j];
  std::vector<Polynomial> g(r, Polynomial(n));
  for (const auto& m : support) {
    RationalVector rhs(n);
    for (std::size_t j = 0; j < n; ++j) rhs[j] = h[j].coefficient(m);
    auto sol = solve_linear_system(at, rhs);
    if (!sol)
      return {false, {}, "coefficients at " + (m.is_one() ? std::string("1") : to_string(m, names)) +
                             " are not a combination of radial fields"};
    for (std::size_t i = 0; i < r; ++i) g[i].add_term(m, (*sol)[i]);
  }
  return {true, g, "X is a polynomial combination of the radial fields"};
}

/// X rebuilt from a Lie(G) witness.
inline VectorField combine_radial(const ToricModel& model, const std::vector<Polynomial>& g) {
  VectorField out(model.nvars());
  for (std::size_t i = 0; i < g.size(); ++i) out += g[i] * model.radial_field(i).as_vector_field();
  return out;
}

namespace detail {

inline Polynomial determinant(const std::vector<std::vector<Polynomial>>& m) {
  const std::size_t k = m.size();
  const std::size_t nv = m.front().front().nvars();
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  Polynomial det(nv);
  do {
    int sign = 1;
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = a + 1; b < k; ++b)
        if (perm[a] > perm[b]) sign = -sign;
    Polynomial term = Polynomial::constant(nv, sign);
    for (std::size_t a = 0; a < k && !term.is_zero(); ++a) term *= m[a][perm[a]];
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

}  // namespace detail

/// The (r+1)x(r+1) minors of the matrix with rows R_1, ..., R_r, X, one per
/// column subset in lexicographic order.
inline std::vector<Polynomial> singular_scheme_minors(const ToricModel& model, const VectorField& x) {
  const std::size_t n = model.nvars(), r = model.rank();
  if (x.size() != n) throw Error("singular_scheme_minors: component count mismatch");
  std::vector<std::vector<Polynomial>> rows;
  for (std::size_t i = 0; i < r; ++i) rows.push_back(model.radial_field(i).as_vector_field().components());
  rows.push_back(x.components());
  const std::size_t k = r + 1;
  std::vector<Polynomial> minors;
  if (k > n) return minors;
  std::vector<std::size_t> cols(k);
  std::iota(cols.begin(), cols.end(), 0);
  for (;;) {
    std::vector<std::vector<Polynomial>> sub(k, std::vector<Polynomial>());
    for (std::size_t a = 0; a < k; ++a)
      for (auto c : cols) sub[a].push_back(rows[a][c]);
    minors.push_back(detail::determinant(sub));
    std::size_t i = k;
    while (i-- > 0) {
      if (cols[i] < n - k + i) {
        ++cols[i];
        for (std::size_t j = i + 1; j < k; ++j) cols[j] = cols[j - 1] + 1;
        break;
      }
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }
  return minors;
}

}  // namespace toricfol

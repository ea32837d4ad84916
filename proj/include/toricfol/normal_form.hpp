#pragma once

// Koszul normal form of a vector field tangent to a hypersurface:
//   X = sum_{j<k} P_jk (df/dz_j d/dz_k - df/dz_k d/dz_j) + (g / theta_i(alpha)) R_i

#include "toricfol/foliation.hpp"
#include "toricfol/groebner.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace toricfol {

struct Decomposition {
  /// Variables involved, ascending.
  std::vector<std::size_t> index_set;
  /// P_jk for j < k (variable indices); absent pairs are zero.
  std::map<std::pair<std::size_t, std::size_t>, Polynomial> pjk;
  Polynomial cofactor;
  std::size_t radial_index = 0;
  Rational theta;

  Polynomial entry(std::size_t j, std::size_t k) const {
    if (j == k) return Polynomial(cofactor.nvars());
    if (j > k) return -entry(k, j);
    auto it = pjk.find({j, k});
    return it == pjk.end() ? Polynomial(cofactor.nvars()) : it->second;
  }

  std::size_t nonzero_count() const {
    std::size_t c = 0;
    for (const auto& [jk, p] : pjk)
      if (!p.is_zero()) ++c;
    return c;
  }
};

class DecompositionError : public Error {
 public:
  using Error::Error;
};

namespace detail {

inline std::vector<std::size_t> resolve_index_set(const ToricModel& model, std::optional<std::vector<std::size_t>> s) {
  std::vector<std::size_t> out;
  if (!s) {
    for (std::size_t j = 0; j < model.nvars(); ++j) out.push_back(j);
    return out;
  }
  out = *s;
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) throw Error("index set repeats a variable");
  for (auto j : out)
    if (j >= model.nvars()) throw Error("index set refers to a variable out of range");
  if (out.size() < 2) throw Error("index set needs at least two variables");
  return out;
}

/// R_i restricted to the index set; it must be supported there.
inline VectorField radial_on(const ToricModel& model, std::size_t i, const std::vector<std::size_t>& s) {
  if (i >= model.rank()) throw Error("radial index " + std::to_string(i + 1) + " out of range");
  const auto& a = model.radial_field(i).coefficients;
  for (std::size_t j = 0; j < a.size(); ++j)
    if (a[j] != 0 && std::find(s.begin(), s.end(), j) == s.end())
      throw Error("radial field " + std::to_string(i + 1) + " is not supported on the index set (it involves " +
                  model.variable_names()[j] + ")");
  return model.radial_field(i).as_vector_field();
}

}  // namespace detail

/// For every radial field: sum_j a_ij z_j df/dz_j == theta_i(alpha) f.
inline std::vector<bool> euler_check(const ToricModel& model, const Polynomial& f) {
  auto alpha = homogeneous_degree(model, f);
  if (!alpha) throw Error("euler_check: polynomial is not quasi-homogeneous");
  std::vector<bool> out;
  for (std::size_t i = 0; i < model.rank(); ++i)
    out.push_back(apply_to(model.radial_field(i).as_vector_field(), f) == model.theta(i, *alpha) * f);
  return out;
}

/// sum_{j<k} P_jk (f_j e_k - f_k e_j) + (g/theta) R_i.
inline VectorField reconstruct(const ToricModel& model, const Polynomial& f, const Decomposition& d) {
  const std::size_t n = model.nvars();
  VectorField out(n);
  for (const auto& [jk, p] : d.pjk) {
    if (p.is_zero()) continue;
    auto [j, k] = jk;
    out[k] += p * partial_derivative(f, j);
    out[j] -= p * partial_derivative(f, k);
  }
  if (!d.cofactor.is_zero()) {
    if (d.theta == 0) throw Error("reconstruct: nonzero cofactor with theta = 0");
    out += (d.cofactor * (1 / d.theta)) * model.radial_field(d.radial_index).as_vector_field();
  }
  return out;
}

/// Exact reconstruction on the index set plus the degree law
/// deg P_jk = deg F + deg z_j + deg z_k - deg f for every nonzero entry.
inline CheckResult verify_decomposition(const ToricModel& model, const Polynomial& f, const VectorField& x,
                                        const Decomposition& d) {
  const auto& names = model.variable_names();
  for (const auto& [jk, p] : d.pjk) {
    auto [j, k] = jk;
    if (j >= k) return {false, "entries must be stored with j < k"};
    if (std::find(d.index_set.begin(), d.index_set.end(), j) == d.index_set.end() ||
        std::find(d.index_set.begin(), d.index_set.end(), k) == d.index_set.end())
      return {false, "entry (" + names[j] + "," + names[k] + ") lies outside the index set"};
  }
  VectorField target = x.restricted_to(d.index_set);
  VectorField rebuilt;
  try {
    rebuilt = reconstruct(model, f, d);
  } catch (const Error& e) {
    return {false, e.what()};
  }
  if (!(rebuilt == target)) {
    for (std::size_t l = 0; l < target.size(); ++l)
      if (!(rebuilt[l] == target[l]))
        return {false, "reconstruction differs from X in component d/d" + names[l]};
  }
  if (target.is_zero() || d.nonzero_count() == 0) return {true, "reconstruction matches"};
  DegreeClass degf = foliation_degree(model, target);
  auto alpha = homogeneous_degree(model, f);
  if (!alpha) return {false, "f is not quasi-homogeneous"};
  for (const auto& [jk, p] : d.pjk) {
    if (p.is_zero()) continue;
    auto [j, k] = jk;
    DegreeClass want = degf + model.degree(j) + model.degree(k) - *alpha;
    auto got = homogeneous_degree(model, p);
    if (!got || !(*got == want))
      return {false, "P(" + names[j] + "," + names[k] + ") has degree " + (got ? got->to_string() : "mixed") +
                         ", expected " + want.to_string()};
  }
  return {true, "reconstruction matches and every entry obeys the degree law"};
}

namespace detail {

struct KoszulSystem {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  /// For each column: pair index and monomial.
  std::vector<std::pair<std::size_t, Monomial>> columns;
  RationalMatrix a;
  RationalVector b;
};

inline KoszulSystem build_koszul_system(const ToricModel& model, const Polynomial& f, const VectorField& y,
                                        const std::vector<std::size_t>& s, const DegreeClass& degf,
                                        const DegreeClass& alpha) {
  KoszulSystem sys;
  const std::size_t n = model.nvars();
  std::vector<Polynomial> df;
  for (std::size_t j = 0; j < n; ++j) df.push_back(partial_derivative(f, j));
  std::map<std::pair<std::size_t, Monomial>, std::size_t, bool (*)(const std::pair<std::size_t, Monomial>&,
                                                                    const std::pair<std::size_t, Monomial>&)>
      row_index([](const std::pair<std::size_t, Monomial>& a, const std::pair<std::size_t, Monomial>& b) {
        if (a.first != b.first) return a.first < b.first;
        return GrevlexGreater{}(a.second, b.second);
      });
  auto row_of = [&](std::size_t comp, const Monomial& m) {
    auto [it, inserted] = row_index.try_emplace({comp, m}, row_index.size());
    return it->second;
  };
  struct Entry {
    std::size_t row, col;
    Rational v;
  };
  std::vector<Entry> entries;
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = a + 1; b < s.size(); ++b) {
      const std::size_t j = s[a], k = s[b];
      sys.pairs.emplace_back(j, k);
      DegreeClass d = degf + model.degree(j) + model.degree(k) - alpha;
      for (const auto& mu : monomials_of_degree(model, d)) {
        const std::size_t col = sys.columns.size();
        sys.columns.emplace_back(sys.pairs.size() - 1, mu);
        for (const auto& [m, c] : df[j].terms()) entries.push_back({row_of(k, m * mu), col, c});
        for (const auto& [m, c] : df[k].terms()) entries.push_back({row_of(j, m * mu), col, -c});
      }
    }
  for (auto l : s)
    for (const auto& [m, c] : y[l].terms()) row_of(l, m);
  sys.a = RationalMatrix(row_index.size(), sys.columns.size());
  for (const auto& e : entries) sys.a(e.row, e.col) += e.v;
  sys.b.assign(row_index.size(), Rational(0));
  for (auto l : s)
    for (const auto& [m, c] : y[l].terms()) sys.b[row_of(l, m)] = c;
  return sys;
}

inline std::optional<RationalVector> solve_restricted(const KoszulSystem& sys, const std::vector<bool>& active) {
  std::vector<std::size_t> keep;
  for (std::size_t c = 0; c < sys.columns.size(); ++c)
    if (active[sys.columns[c].first]) keep.push_back(c);
  RationalMatrix a(sys.a.rows(), keep.size());
  for (std::size_t r = 0; r < sys.a.rows(); ++r)
    for (std::size_t c = 0; c < keep.size(); ++c) a(r, c) = sys.a(r, keep[c]);
  auto x = solve_linear_system(a, sys.b);
  if (!x) return std::nullopt;
  RationalVector full(sys.columns.size());
  for (std::size_t c = 0; c < keep.size(); ++c) full[keep[c]] = (*x)[c];
  return full;
}

}  // namespace detail

/// Solves for P_jk by matching coefficients, with each unknown ranging over the
/// monomials of its forced degree. Pairs are then dropped greedily (in
/// lexicographic order) while the system stays solvable, so the returned
/// table has an inclusion-minimal set of nonzero entries.
inline Decomposition koszul_decompose(const ToricModel& model, const Polynomial& f, const VectorField& x,
                                      std::size_t radial_index,
                                      std::optional<std::vector<std::size_t>> index_set = std::nullopt) {
  const std::size_t n = model.nvars();
  if (x.size() != n || f.nvars() != n) throw Error("koszul_decompose: variable count mismatch");
  auto s = detail::resolve_index_set(model, std::move(index_set));
  VectorField radial = detail::radial_on(model, radial_index, s);
  auto alpha = homogeneous_degree(model, f);
  if (!alpha) throw Error("koszul_decompose: f is not quasi-homogeneous");
  const Rational theta = model.theta(radial_index, *alpha);
  if (theta == 0)
    throw DecompositionError("theta_" + std::to_string(radial_index + 1) + "(" + alpha->to_string() +
                             ") = 0; try another radial index");
  VectorField xs = x.restricted_to(s);
  auto g = invariance_cofactor(xs, f);
  if (!g) throw DecompositionError("the hypersurface is not invariant under the field on the index set");

  Decomposition d;
  d.index_set = s;
  d.cofactor = *g;
  d.radial_index = radial_index;
  d.theta = theta;
  if (xs.is_zero()) return d;

  const DegreeClass degf = foliation_degree(model, xs);
  VectorField y = xs - (*g * (1 / theta)) * radial;
  auto sys = detail::build_koszul_system(model, f, y, s, degf, *alpha);
  std::vector<bool> active(sys.pairs.size(), true);
  auto sol = detail::solve_restricted(sys, active);
  if (!sol) {
    std::vector<std::string> comps;
    for (auto l : s)
      if (!y[l].is_zero()) comps.push_back("d/d" + model.variable_names()[l] + ": " + to_string(y[l], model.variable_names()));
    throw DecompositionError("Koszul system is infeasible (" + std::to_string(sys.a.rows()) + " equations, " +
                             std::to_string(sys.columns.size()) + " unknowns); residual field " + join(comps, "; "));
  }
  for (std::size_t p = 0; p < sys.pairs.size(); ++p) {
    bool used = false;
    for (std::size_t c = 0; c < sys.columns.size(); ++c)
      if (sys.columns[c].first == p && (*sol)[c] != 0) used = true;
    if (!used) {
      active[p] = false;
      continue;
    }
    active[p] = false;
    auto trial = detail::solve_restricted(sys, active);
    if (trial)
      sol = trial;
    else
      active[p] = true;
  }
  for (std::size_t c = 0; c < sys.columns.size(); ++c) {
    if ((*sol)[c] == 0) continue;
    auto [p, mu] = sys.columns[c];
    auto [it, inserted] = d.pjk.try_emplace(sys.pairs[p], Polynomial(n));
    it->second.add_term(mu, (*sol)[c]);
  }
  return d;
}

inline std::string to_string(const Decomposition& d, const std::vector<std::string>& names) {
  std::vector<std::string> parts;
  for (const auto& [jk, p] : d.pjk)
    if (!p.is_zero()) parts.push_back("P(" + names[jk.first] + "," + names[jk.second] + ") = " + to_string(p, names));
  parts.push_back("g = " + to_string(d.cofactor, names));
  parts.push_back("theta = " + toricfol::to_string(d.theta));
  return join(parts, "; ");
}

}  // namespace toricfol

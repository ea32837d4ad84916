#pragma once

// The Cox ring graded by the class group.

#include "toricfol/toric_model.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

namespace toricfol {

class ZeroPolynomialError : public Error {
 public:
  ZeroPolynomialError() : Error("the zero polynomial has no degree") {}
};

/// Common degree of all terms, or nothing when terms disagree.
inline std::optional<DegreeClass> homogeneous_degree(const ToricModel& model, const Polynomial& f) {
  if (f.nvars() != model.nvars())
    throw Error("polynomial has " + std::to_string(f.nvars()) + " variables, model has " +
                std::to_string(model.nvars()));
  if (f.is_zero()) throw ZeroPolynomialError();
  std::optional<DegreeClass> d;
  for (const auto& [m, c] : f.terms()) {
    DegreeClass dm = model.degree(m);
    if (!d)
      d = dm;
    else if (!(*d == dm))
      return std::nullopt;
  }
  return d;
}

inline DegreeClass divisor_degree(const ToricModel& model, const IntVector& a) {
  if (a.size() != model.nvars()) throw Error("divisor needs one coefficient per variable");
  DegreeClass d = model.zero_degree();
  for (std::size_t j = 0; j < a.size(); ++j) d += a[j] * model.degree(j);
  return d;
}

/// c in Q^r with c·deg(z_j) >= 1 for every j, minimizing sum_j c·deg(z_j).
/// Its existence makes every graded piece finite-dimensional.
inline std::optional<RationalVector> positivity_functional(const ToricModel& model) {
  const std::size_t r = model.rank(), n = model.nvars();
  if (r == 0) return std::nullopt;
  RationalMatrix a(n, r);
  RationalVector b(n, Rational(-1)), obj(r);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < r; ++k) {
      a(j, k) = -Rational(model.degree(j).free_part()[k]);
      obj[k] -= Rational(model.degree(j).free_part()[k]);
    }
  LpResult res = maximize_free(a, b, obj);
  if (res.status != LpStatus::optimal) return std::nullopt;
  return res.x;
}

/// Exponent vectors of all monomials of degree alpha, in descending grevlex
/// order. Without a positivity functional an exponent cap must be supplied.
inline std::vector<Monomial> monomials_of_degree(const ToricModel& model, const DegreeClass& alpha,
                                                 std::optional<std::uint32_t> cap = std::nullopt) {
  model.check_degree(alpha);
  const std::size_t n = model.nvars(), r = model.rank();
  std::vector<std::uint32_t> bound(n);
  auto functional = positivity_functional(model);
  if (functional) {
    Rational level = 0;
    for (std::size_t k = 0; k < r; ++k) level += (*functional)[k] * Rational(alpha.free_part()[k]);
    if (level < 0) return {};
    for (std::size_t j = 0; j < n; ++j) {
      Rational w = 0;
      for (std::size_t k = 0; k < r; ++k) w += (*functional)[k] * Rational(model.degree(j).free_part()[k]);
      Integer b = floor(level / w);
      if (!b.fits_uint_p() || b > 1000000) throw Error("monomials_of_degree: degree too large to enumerate");
      bound[j] = static_cast<std::uint32_t>(b.get_ui());
    }
    if (cap)
      for (auto& b : bound) b = std::min(b, *cap);
  } else if (cap) {
    std::fill(bound.begin(), bound.end(), *cap);
  } else {
    throw Error("monomials_of_degree: model '" + model.name() +
                "' has no positive grading functional; an exponent cap is required");
  }

  // Remaining level budget prunes the search when a functional is known.
  std::vector<Rational> weight(n, Rational(0));
  Rational level = 0;
  if (functional) {
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < r; ++k) weight[j] += (*functional)[k] * Rational(model.degree(j).free_part()[k]);
    for (std::size_t k = 0; k < r; ++k) level += (*functional)[k] * Rational(alpha.free_part()[k]);
  }

  std::vector<Monomial> out;
  Monomial cur(n);
  std::function<void(std::size_t, Rational)> rec = [&](std::size_t j, Rational left) {
    if (j == n) {
      if (functional && left != 0) return;
      if (model.degree(cur) == alpha) out.push_back(cur);
      return;
    }
    for (std::uint32_t e = 0; e <= bound[j]; ++e) {
      Rational next = left - weight[j] * e;
      if (functional && next < 0) break;
      cur[j] = e;
      rec(j + 1, next);
    }
    cur[j] = 0;
  };
  rec(0, level);
  std::sort(out.begin(), out.end(), GrevlexGreater{});
  return out;
}

/// #(P_D ∩ M) with P_D = {m : <m, n_rho> >= -a_rho}, by enumerating the
/// integer bounding box of P_D. Returns 0 when P_D is empty.
inline Integer count_lattice_points(const ToricModel& model, const IntVector& a) {
  if (!model.rays()) throw Error("count_lattice_points: model '" + model.name() + "' has no rays");
  const auto& rays = *model.rays();
  if (a.size() != rays.size()) throw Error("count_lattice_points: need one coefficient per ray");
  const std::size_t dim = model.dimension();
  RationalMatrix ineq(rays.size(), dim);
  RationalVector rhs(rays.size());
  for (std::size_t j = 0; j < rays.size(); ++j) {
    for (std::size_t k = 0; k < dim; ++k) ineq(j, k) = -Rational(rays[j][k]);
    rhs[j] = Rational(a[j]);
  }
  IntVector lo(dim), hi(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    RationalVector c(dim);
    c[k] = 1;
    LpResult up = maximize_free(ineq, rhs, c);
    if (up.status == LpStatus::infeasible) return 0;
    if (up.status == LpStatus::unbounded) throw Error("count_lattice_points: polytope is unbounded");
    c[k] = -1;
    LpResult down = maximize_free(ineq, rhs, c);
    if (down.status == LpStatus::unbounded) throw Error("count_lattice_points: polytope is unbounded");
    hi[k] = floor(up.value);
    lo[k] = ceil(-down.value);
    if (hi[k] < lo[k]) return 0;
  }
  Integer count = 0;
  IntVector p = lo;
  for (;;) {
    bool inside = true;
    for (std::size_t j = 0; j < rays.size() && inside; ++j) {
      Integer s = a[j];
      for (std::size_t k = 0; k < dim; ++k) s += p[k] * rays[j][k];
      if (s < 0) inside = false;
    }
    if (inside) ++count;
    std::size_t k = 0;
    for (; k < dim; ++k) {
      if (++p[k] <= hi[k]) break;
      p[k] = lo[k];
    }
    if (k == dim) break;
  }
  return count;
}

}  // namespace toricfol

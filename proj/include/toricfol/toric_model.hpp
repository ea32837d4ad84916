#pragma once

// Toric orbifold models in Cox homogeneous coordinates.

#include "toricfol/degree.hpp"
#include "toricfol/lattice.hpp"
#include "toricfol/polynomial.hpp"
#include "toricfol/rational_linalg.hpp"
#include "toricfol/vector_field.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace toricfol {

/// R = sum_j a_j z_j d/dz_j.
struct RadialField {
  RationalVector coefficients;

  VectorField as_vector_field() const {
    const std::size_t n = coefficients.size();
    VectorField x(n);
    for (std::size_t j = 0; j < n; ++j)
      if (coefficients[j] != 0) x[j] = Polynomial::term(Monomial::variable(n, j), coefficients[j]);
    return x;
  }

  bool all_positive() const {
    return std::all_of(coefficients.begin(), coefficients.end(), [](const Rational& a) { return a > 0; });
  }
};

struct IrrelevantIdeal {
  /// One squarefree monomial per maximal cone: the product of the variables
  /// whose rays are not in the cone.
  std::vector<Monomial> generators;
  /// Irreducible components of the zero set, each given by the variables that
  /// vanish on it (the minimal transversals of the generator supports).
  std::vector<std::vector<std::size_t>> components;

  bool variety_is_origin(std::size_t nvars) const {
    return components.size() == 1 && components.front().size() == nvars;
  }
};

using ConeList = std::vector<std::vector<std::size_t>>;

class ToricModel {
 public:
  const std::string& name() const { return name_; }
  std::size_t dimension() const { return dimension_; }
  std::size_t nvars() const { return names_.size(); }
  /// Rank r of the free part of the class group.
  std::size_t rank() const { return group_.rank; }
  const std::vector<std::string>& variable_names() const { return names_; }
  const std::optional<std::vector<IntVector>>& rays() const { return rays_; }
  const std::optional<ConeList>& max_cones() const { return cones_; }
  bool is_ray_based() const { return rays_.has_value(); }
  /// Class group in the display basis; `projector` sends e_j to deg(z_j).
  const AbelianGroupPresentation& class_group() const { return group_; }
  const IntMatrix& basis_change() const { return basis_change_; }
  const std::vector<DegreeClass>& degrees() const { return degrees_; }
  const DegreeClass& degree(std::size_t j) const { return degrees_.at(j); }
  const std::vector<RadialField>& radial_fields() const { return radial_; }
  const RadialField& radial_field(std::size_t i) const { return radial_.at(i); }

  DegreeClass zero_degree() const { return DegreeClass::zero(rank(), group_.torsion); }

  DegreeClass degree(const Monomial& m) const {
    if (m.size() != nvars()) throw Error("degree: monomial has wrong variable count");
    DegreeClass d = zero_degree();
    for (std::size_t j = 0; j < m.size(); ++j)
      if (m[j]) d += Integer(m[j]) * degrees_[j];
    return d;
  }

  /// Builds a DegreeClass in this model's group from free coordinates and
  /// torsion residues.
  DegreeClass make_degree(std::vector<Integer> free_part, std::vector<Integer> residues = {}) const {
    if (free_part.size() != rank()) throw Error("make_degree: expected " + std::to_string(rank()) + " free coordinates");
    if (residues.empty()) residues.assign(group_.torsion.size(), 0);
    if (residues.size() != group_.torsion.size()) throw Error("make_degree: wrong number of torsion residues");
    return DegreeClass(std::move(free_part), std::move(residues), group_.torsion);
  }

  Monomial variable(std::size_t j) const { return Monomial::variable(nvars(), j); }
  Polynomial variable_polynomial(std::size_t j) const { return Polynomial::variable(nvars(), j); }

  std::optional<std::size_t> variable_index(const std::string& v) const {
    auto it = std::find(names_.begin(), names_.end(), v);
    if (it == names_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - names_.begin());
  }

  /// theta_i(alpha) = sum_j a_ij m_j for an exponent vector m of degree alpha.
  /// Representatives are searched among Laurent monomials, so only the
  /// degree system is solved; the value does not depend on the choice.
  Rational theta(std::size_t i, const DegreeClass& alpha) const {
    if (i >= radial_.size()) throw Error("theta: radial index out of range");
    check_degree(alpha);
    const std::size_t n = nvars(), r = rank(), m = group_.torsion.size();
    IntMatrix a(r + m, n + m);
    for (std::size_t k = 0; k < r + m; ++k)
      for (std::size_t j = 0; j < n; ++j) a(k, j) = group_.projector(k, j);
    for (std::size_t t = 0; t < m; ++t) a(r + t, n + t) = -group_.torsion[t];
    IntVector b = alpha.free_part();
    for (const auto& v : alpha.torsion_part()) b.push_back(v);
    auto x = solve_integer_system(a, b);
    if (!x) throw Error("theta: degree " + alpha.to_string() + " is not realized by any monomial");
    Rational value = 0;
    for (std::size_t j = 0; j < n; ++j) value += radial_[i].coefficients[j] * (*x)[j];
    return value;
  }

  IrrelevantIdeal irrelevant_ideal() const {
    if (!cones_) throw Error("irrelevant_ideal: model '" + name_ + "' has no maximal cone data");
    IrrelevantIdeal ideal;
    const std::size_t n = nvars();
    std::vector<std::vector<std::size_t>> supports;
    for (const auto& cone : *cones_) {
      Monomial g(n);
      std::vector<std::size_t> support;
      for (std::size_t j = 0; j < n; ++j)
        if (std::find(cone.begin(), cone.end(), j) == cone.end()) {
          g[j] = 1;
          support.push_back(j);
        }
      ideal.generators.push_back(g);
      supports.push_back(support);
    }
    ideal.components = minimal_transversals(supports, n);
    return ideal;
  }

  /// Coordinates k (0-based) with (deg z_j)_k >= 0 for every j.
  std::vector<std::size_t> nonnegative_coordinates() const {
    std::vector<std::size_t> ks;
    for (std::size_t k = 0; k < rank(); ++k) {
      bool ok = true;
      for (const auto& d : degrees_)
        if (d.free_part()[k] < 0) ok = false;
      if (ok) ks.push_back(k);
    }
    return ks;
  }

  void check_degree(const DegreeClass& d) const {
    if (d.rank() != rank() || d.moduli() != group_.torsion)
      throw Error("degree " + d.to_string() + " does not belong to the class group of '" + name_ + "'");
  }

  ToricModel with_name(std::string name) const {
    ToricModel m = *this;
    m.name_ = std::move(name);
    return m;
  }

  ToricModel with_variable_names(std::vector<std::string> names) const {
    if (names.size() != nvars()) throw Error("with_variable_names: expected " + std::to_string(nvars()) + " names");
    std::set<std::string> seen(names.begin(), names.end());
    if (seen.size() != names.size()) throw Error("with_variable_names: duplicate variable name");
    ToricModel m = *this;
    m.names_ = std::move(names);
    return m;
  }

  ToricModel with_max_cones(ConeList cones) const {
    ToricModel m = *this;
    m.cones_ = validated_cones(std::move(cones), nvars());
    return m;
  }

  /// Re-expresses degrees in a new basis. `b` is (r+m) x (r+m) and acts on
  /// the canonical (SNF) coordinates: free' = B_ff free, tors' = B_tf free +
  /// B_tt tors. It must induce an automorphism of the class group.
  ToricModel with_basis_change(const IntMatrix& b) const {
    const std::size_t r = rank(), m = group_.torsion.size();
    if (b.rows() != r + m || b.cols() != r + m)
      throw Error("basis change must be " + std::to_string(r + m) + "x" + std::to_string(r + m));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = r; j < r + m; ++j)
        if (b(i, j) != 0) throw Error("basis change: free coordinates cannot depend on torsion");
    IntMatrix bff(r, r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) bff(i, j) = b(i, j);
    if (abs(determinant(bff)) != 1) throw Error("basis change: free block is not unimodular");
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        if ((b(r + i, r + j) * group_.torsion[j]) % group_.torsion[i] != 0)
          throw Error("basis change: torsion block is not well defined on Z/" + group_.torsion[j].get_str());

    ToricModel out = *this;
    out.basis_change_ = b;
    out.group_.projector = b * canonical_projector_;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < nvars(); ++j)
        out.group_.projector(r + i, j) = floor_mod(out.group_.projector(r + i, j), group_.torsion[i]);
    if (!out.degrees_generate_group())
      throw Error("basis change does not induce an automorphism of the class group");
    out.refresh_degrees();
    return out;
  }

  /// Finds a basis change taking the canonical degrees to `target`.
  ToricModel align_to_degrees(const std::vector<DegreeClass>& target) const {
    const std::size_t r = rank(), m = group_.torsion.size(), n = nvars();
    if (target.size() != n) throw Error("align_to_degrees: expected one degree per variable");
    for (const auto& d : target) check_degree(d);

    IntMatrix b(r + m, r + m);
    RationalMatrix ft(n, r);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < r; ++k) ft(j, k) = Rational(canonical_projector_(k, j));
    for (std::size_t i = 0; i < r; ++i) {
      RationalVector rhs(n);
      for (std::size_t j = 0; j < n; ++j) rhs[j] = Rational(target[j].free_part()[i]);
      auto row = solve_linear_system(ft, rhs);
      if (!row) throw Error("align_to_degrees: target free degrees are not a linear image of the canonical ones");
      for (std::size_t k = 0; k < r; ++k) {
        if ((*row)[k].get_den() != 1) throw Error("align_to_degrees: required basis change is not integral");
        b(i, k) = (*row)[k].get_num();
      }
    }

    // Torsion rows: enumerate candidates row by row, then combine.
    std::vector<std::vector<IntVector>> candidates(m);
    for (std::size_t i = 0; i < m; ++i) {
      const Integer t = group_.torsion[i];
      const std::size_t w = r + m;
      Integer space = 1;
      for (std::size_t k = 0; k < w; ++k) space *= t;
      if (space > 1000000) throw Error("align_to_degrees: torsion search space too large");
      IntVector row(w, 0);
      for (Integer count = 0; count < space; ++count) {
        bool ok = true;
        for (std::size_t l = 0; l < m && ok; ++l)
          if ((row[r + l] * group_.torsion[l]) % t != 0) ok = false;
        for (std::size_t j = 0; j < n && ok; ++j) {
          Integer v = 0;
          for (std::size_t k = 0; k < w; ++k) v += row[k] * canonical_projector_(k, j);
          if (floor_mod(v - target[j].torsion_part()[i], t) != 0) ok = false;
        }
        if (ok) candidates[i].push_back(row);
        for (std::size_t k = 0; k < w; ++k) {  // odometer increment
          if (++row[k] < t) break;
          row[k] = 0;
        }
      }
      if (candidates[i].empty()) throw Error("align_to_degrees: no torsion map matches the target degrees");
    }
    std::vector<std::size_t> pick(m, 0);
    for (;;) {
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k < r + m; ++k) b(r + i, k) = candidates[i][pick[i]][k];
      try {
        return with_basis_change(b);
      } catch (const Error&) {
      }
      std::size_t i = 0;
      for (; i < m; ++i) {
        if (++pick[i] < candidates[i].size()) break;
        pick[i] = 0;
      }
      if (i == m) break;
    }
    throw Error("align_to_degrees: target degrees do not come from a class group automorphism");
  }

  friend ToricModel build_from_rays(std::size_t, const std::vector<IntVector>&, std::optional<ConeList>,
                                    std::vector<std::string>, std::string);
  friend ToricModel build_from_presentation(std::size_t, const std::vector<DegreeClass>&, std::optional<ConeList>,
                                            std::vector<std::string>, std::string);
  friend ToricModel build_from_rays_unchecked(std::size_t, const std::vector<IntVector>&, std::optional<ConeList>,
                                              std::vector<std::string>, std::string);

 private:
  ToricModel() = default;

  static ConeList validated_cones(ConeList cones, std::size_t n) {
    for (auto& c : cones) {
      std::sort(c.begin(), c.end());
      if (std::adjacent_find(c.begin(), c.end()) != c.end()) throw Error("maximal cone lists a ray twice");
      for (auto j : c)
        if (j >= n) throw Error("maximal cone refers to ray " + std::to_string(j + 1) + " of " + std::to_string(n));
    }
    return cones;
  }

  /// Minimal sets of variables meeting every support.
  static std::vector<std::vector<std::size_t>> minimal_transversals(
      const std::vector<std::vector<std::size_t>>& supports, std::size_t n) {
    if (n > 24) throw Error("irrelevant_ideal: too many variables for transversal enumeration");
    std::vector<std::uint32_t> hits;
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
      bool ok = true;
      for (const auto& sup : supports) {
        bool met = false;
        for (auto j : sup)
          if (s & (1u << j)) met = true;
        if (!met) {
          ok = false;
          break;
        }
      }
      if (ok) hits.push_back(s);
    }
    std::vector<std::vector<std::size_t>> out;
    for (auto s : hits) {
      bool minimal = true;
      for (auto t : hits)
        if (t != s && (t & s) == t) minimal = false;
      if (!minimal) continue;
      std::vector<std::size_t> comp;
      for (std::size_t j = 0; j < n; ++j)
        if (s & (1u << j)) comp.push_back(j);
      out.push_back(comp);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  bool degrees_generate_group() const {
    const std::size_t r = rank(), m = group_.torsion.size(), n = nvars();
    IntMatrix a(r + m, n + m);
    for (std::size_t k = 0; k < r + m; ++k)
      for (std::size_t j = 0; j < n; ++j) a(k, j) = group_.projector(k, j);
    for (std::size_t t = 0; t < m; ++t) a(r + t, n + t) = group_.torsion[t];
    auto s = smith_normal_form(a);
    if (s.rank() != r + m) return false;
    for (std::size_t i = 0; i < r + m; ++i)
      if (s.D(i, i) != 1) return false;
    return true;
  }

  void refresh_degrees() {
    const std::size_t r = rank(), m = group_.torsion.size();
    degrees_.clear();
    radial_.assign(r, RadialField{RationalVector(nvars())});
    for (std::size_t j = 0; j < nvars(); ++j) {
      IntVector f(r), t(m);
      for (std::size_t k = 0; k < r; ++k) {
        f[k] = group_.projector(k, j);
        radial_[k].coefficients[j] = Rational(f[k]);
      }
      for (std::size_t k = 0; k < m; ++k) t[k] = group_.projector(r + k, j);
      degrees_.emplace_back(std::move(f), std::move(t), group_.torsion);
      if (degrees_.back().is_zero())
        throw Error("variable " + names_[j] + " has degree zero; the model is degenerate");
    }
  }

  void finish(std::vector<std::string> names, std::string name, std::optional<ConeList> cones) {
    if (names.empty()) names = default_variable_names(canonical_projector_.cols());
    if (names.size() != canonical_projector_.cols())
      throw Error("expected " + std::to_string(canonical_projector_.cols()) + " variable names, got " +
                  std::to_string(names.size()));
    names_ = std::move(names);
    std::set<std::string> seen(names_.begin(), names_.end());
    if (seen.size() != names_.size()) throw Error("duplicate variable name");
    name_ = std::move(name);
    if (cones) cones_ = validated_cones(std::move(*cones), names_.size());
    basis_change_ = IntMatrix::identity(group_.rank + group_.torsion.size());
    group_.projector = canonical_projector_;
    refresh_degrees();
  }

  std::string name_;
  std::size_t dimension_ = 0;
  std::vector<std::string> names_;
  std::optional<std::vector<IntVector>> rays_;
  std::optional<ConeList> cones_;
  AbelianGroupPresentation group_;
  IntMatrix canonical_projector_;
  IntMatrix basis_change_;
  std::vector<DegreeClass> degrees_;
  std::vector<RadialField> radial_;
};

/// Like build_from_rays but accepts non-primitive rays. Used for weighted
/// projective spaces, whose ray images in Z^{n+1}/Z·omega need not be primitive.
inline ToricModel build_from_rays_unchecked(std::size_t n, const std::vector<IntVector>& rays,
                                            std::optional<ConeList> max_cones = std::nullopt,
                                            std::vector<std::string> names = {}, std::string name = "") {
  if (rays.size() < n) throw Error("need at least " + std::to_string(n) + " rays, got " + std::to_string(rays.size()));
  IntMatrix pairing(rays.size(), n);
  for (std::size_t j = 0; j < rays.size(); ++j) {
    if (rays[j].size() != n)
      throw Error("ray " + std::to_string(j + 1) + " has " + std::to_string(rays[j].size()) +
                  " coordinates, expected " + std::to_string(n));
    for (std::size_t k = 0; k < n; ++k) pairing(j, k) = rays[j][k];
  }
  if (smith_normal_form(pairing).rank() != n) throw Error("rays do not span R^" + std::to_string(n));
  ToricModel m;
  m.dimension_ = n;
  m.rays_ = rays;
  m.group_ = cokernel(pairing);
  m.canonical_projector_ = m.group_.projector;
  m.finish(std::move(names), std::move(name), std::move(max_cones));
  return m;
}

/// Model from a fan: one ray n_rho in Z^n per Cox variable.
inline ToricModel build_from_rays(std::size_t n, const std::vector<IntVector>& rays,
                                  std::optional<ConeList> max_cones = std::nullopt,
                                  std::vector<std::string> names = {}, std::string name = "") {
  for (std::size_t j = 0; j < rays.size(); ++j)
    if (gcd_of(rays[j]) != 1)
      throw Error("ray " + std::to_string(j + 1) + " is not a primitive lattice vector");
  return build_from_rays_unchecked(n, rays, std::move(max_cones), std::move(names), std::move(name));
}

/// Model from the degrees of the Cox variables. The torsion moduli are taken
/// from the degrees; n = #variables - r.
inline ToricModel build_from_presentation(std::size_t n, const std::vector<DegreeClass>& degrees,
                                          std::optional<ConeList> max_cones = std::nullopt,
                                          std::vector<std::string> names = {}, std::string name = "") {
  if (degrees.empty()) throw Error("presentation needs at least one variable degree");
  const std::size_t r = degrees.front().rank();
  const auto moduli = degrees.front().moduli();
  for (const auto& d : degrees)
    if (d.rank() != r || d.moduli() != moduli) throw Error("variable degrees do not share one class group");
  for (const auto& t : moduli)
    if (t < 2) throw Error("torsion invariants must be at least 2");
  if (degrees.size() != n + r)
    throw Error("presentation of dimension " + std::to_string(n) + " with rank " + std::to_string(r) +
                " needs " + std::to_string(n + r) + " variables, got " + std::to_string(degrees.size()));
  const std::size_t m = moduli.size();
  IntMatrix proj(r + m, degrees.size());
  RationalMatrix free(r, degrees.size());
  for (std::size_t j = 0; j < degrees.size(); ++j) {
    for (std::size_t k = 0; k < r; ++k) {
      proj(k, j) = degrees[j].free_part()[k];
      free(k, j) = Rational(proj(k, j));
    }
    for (std::size_t k = 0; k < m; ++k) proj(r + k, j) = degrees[j].torsion_part()[k];
  }
  if (rank(free) != r) throw Error("free-part degree matrix has rank below " + std::to_string(r));
  ToricModel model;
  model.dimension_ = n;
  model.group_.rank = r;
  model.group_.torsion = moduli;
  model.canonical_projector_ = proj;
  model.finish(std::move(names), std::move(name), std::move(max_cones));
  return model;
}

}  // namespace toricfol

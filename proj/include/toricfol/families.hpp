#pragma once

// Constructors for the standard families of toric orbifolds.

#include "toricfol/graded_ring.hpp"
#include "toricfol/toric_model.hpp"

#include <string>
#include <vector>

namespace toricfol {

namespace detail {

inline std::string int_list(const std::vector<long>& v) {
  std::vector<std::string> s;
  for (long x : v) s.push_back(std::to_string(x));
  return join(s, ",");
}

/// Cones obtained by omitting exactly one variable from each block.
inline ConeList omit_one_per_block(const std::vector<std::vector<std::size_t>>& blocks, std::size_t nvars) {
  ConeList cones;
  std::vector<std::size_t> pick(blocks.size(), 0);
  for (;;) {
    std::vector<std::size_t> cone;
    for (std::size_t j = 0; j < nvars; ++j) {
      bool omitted = false;
      for (std::size_t b = 0; b < blocks.size(); ++b)
        if (blocks[b][pick[b]] == j) omitted = true;
      if (!omitted) cone.push_back(j);
    }
    cones.push_back(cone);
    std::size_t b = blocks.size();
    while (b-- > 0) {
      if (++pick[b] < blocks[b].size()) break;
      pick[b] = 0;
    }
    if (b == static_cast<std::size_t>(-1)) break;
  }
  return cones;
}

}  // namespace detail

/// P^n with rays e_1, ..., e_n, -(e_1 + ... + e_n) and variables z1..z{n+1}.
inline ToricModel projective_space(std::size_t n) {
  if (n == 0) throw Error("projective_space: dimension must be positive");
  std::vector<IntVector> rays;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector e(n);
    e[i] = 1;
    rays.push_back(e);
  }
  rays.push_back(IntVector(n, Integer(-1)));
  std::vector<std::size_t> all(n + 1);
  for (std::size_t j = 0; j <= n; ++j) all[j] = j;
  ToricModel m = build_from_rays(n, rays, detail::omit_one_per_block({all}, n + 1), {}, "P^" + std::to_string(n));
  if (m.degree(0).free_part()[0] < 0) m = m.with_basis_change(IntMatrix{{-1}});
  return m;
}

/// P(omega_0, ..., omega_n). The rays are the images of e_0..e_n in
/// Z^{n+1}/Z·omega, expressed in the basis given by a Smith decomposition of
/// omega; they can be non-primitive. Variables z0..zn.
inline ToricModel weighted_projective(const std::vector<long>& omega) {
  if (omega.size() < 2) throw Error("weighted_projective: need at least two weights");
  Integer g = 0;
  for (long w : omega) {
    if (w < 1) throw Error("weighted_projective: weights must be positive");
    g = gcd(g, Integer(w));
  }
  if (g != 1) throw Error("weighted_projective: weights must have gcd 1");
  const std::size_t n = omega.size() - 1;
  IntMatrix col(n + 1, 1);
  for (std::size_t i = 0; i <= n; ++i) col(i, 0) = omega[i];
  auto s = smith_normal_form(col);
  // U·omega = e_0, so rows 1..n of U map Z^{n+1} onto the quotient.
  std::vector<IntVector> rays(n + 1, IntVector(n));
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t k = 0; k < n; ++k) rays[i][k] = s.U(k + 1, i);
  std::vector<std::string> names;
  std::vector<std::size_t> all;
  for (std::size_t i = 0; i <= n; ++i) {
    names.push_back("z" + std::to_string(i));
    all.push_back(i);
  }
  ToricModel m = build_from_rays_unchecked(n, rays, detail::omit_one_per_block({all}, n + 1), names,
                                           "P(" + detail::int_list(omega) + ")");
  std::vector<DegreeClass> target;
  for (long w : omega) target.push_back(m.make_degree({Integer(w)}));
  return m.align_to_degrees(target);
}

/// P^{n_1} x ... x P^{n_r} with variables z{i}_0..z{i}_{n_i}; z{i}_0 carries
/// the ray -(e_1 + ... + e_{n_i}) of its factor.
inline ToricModel multiprojective(const std::vector<long>& dims) {
  if (dims.empty()) throw Error("multiprojective: need at least one factor");
  std::size_t n = 0;
  for (long d : dims) {
    if (d < 1) throw Error("multiprojective: factor dimensions must be positive");
    n += static_cast<std::size_t>(d);
  }
  std::vector<IntVector> rays;
  std::vector<std::string> names;
  std::vector<std::vector<std::size_t>> blocks;
  std::size_t offset = 0;
  for (std::size_t f = 0; f < dims.size(); ++f) {
    std::vector<std::size_t> block;
    for (long k = 0; k <= dims[f]; ++k) {
      IntVector v(n);
      if (k == 0)
        for (long t = 0; t < dims[f]; ++t) v[offset + static_cast<std::size_t>(t)] = -1;
      else
        v[offset + static_cast<std::size_t>(k - 1)] = 1;
      block.push_back(rays.size());
      rays.push_back(v);
      names.push_back("z" + std::to_string(f + 1) + "_" + std::to_string(k));
    }
    blocks.push_back(block);
    offset += static_cast<std::size_t>(dims[f]);
  }
  std::vector<std::string> parts;
  for (long d : dims) parts.push_back("P^" + std::to_string(d));
  ToricModel m = build_from_rays(n, rays, detail::omit_one_per_block(blocks, rays.size()), names, join(parts, "x"));
  std::vector<DegreeClass> target;
  for (std::size_t f = 0; f < dims.size(); ++f)
    for (long k = 0; k <= dims[f]; ++k) {
      std::vector<Integer> e(dims.size());
      e[f] = 1;
      target.push_back(m.make_degree(e));
    }
  return m.align_to_degrees(target);
}

/// Cones of a scroll: complements of {z1_i, z2_j}.
inline ConeList scroll_cones(std::size_t n) {
  std::vector<std::size_t> first{0, 1}, second;
  for (std::size_t j = 0; j < n; ++j) second.push_back(2 + j);
  return detail::omit_one_per_block({first, second}, n + 2);
}

inline std::vector<std::string> scroll_names(std::size_t n) {
  std::vector<std::string> names{"z1_1", "z1_2"};
  for (std::size_t j = 1; j <= n; ++j) names.push_back("z2_" + std::to_string(j));
  return names;
}

/// F(a_1, ..., a_n) from its action weights: deg z1_i = (1,0), deg z2_j = (-a_j,1).
inline ToricModel rational_scroll(const std::vector<long>& a) {
  if (a.empty()) throw Error("rational_scroll: need at least one twist");
  std::vector<DegreeClass> degrees;
  degrees.emplace_back(std::vector<Integer>{1, 0});
  degrees.emplace_back(std::vector<Integer>{1, 0});
  for (long ai : a) degrees.emplace_back(std::vector<Integer>{Integer(-ai), 1});
  return build_from_presentation(a.size(), degrees, scroll_cones(a.size()), scroll_names(a.size()),
                                 "F(" + detail::int_list(a) + ")");
}

/// The surface F(a_1, a_2) from its fan: rays (1,0), (-1,a_1-a_2), (0,1), (0,-1).
inline ToricModel rational_scroll_fan(long a1, long a2) {
  std::vector<IntVector> rays{{1, 0}, {-1, Integer(a1 - a2)}, {0, 1}, {0, -1}};
  ToricModel m = build_from_rays(2, rays, scroll_cones(2), scroll_names(2),
                                 "F(" + detail::int_list({a1, a2}) + ")");
  return m.align_to_degrees({m.make_degree({1, 0}), m.make_degree({1, 0}), m.make_degree({-a1, 1}),
                             m.make_degree({-a2, 1})});
}

/// The surface with rays 2e_1 - e_2, -e_1 + 2e_2, -e_1 - e_2; class group
/// Z + Z/3 with degrees (1,[0]), (1,[2]), (1,[1]).
inline ToricModel surface_021() {
  std::vector<IntVector> rays{{2, -1}, {-1, 2}, {-1, -1}};
  ToricModel m = build_from_rays(2, rays, ConeList{{0, 1}, {1, 2}, {0, 2}}, {}, "P_Delta(0,2,1)");
  return m.align_to_degrees({m.make_degree({1}, {0}), m.make_degree({1}, {2}), m.make_degree({1}, {1})});
}

/// Toric threefold of the octahedron: rays (±1,±1,±1), one maximal cone per
/// face of the cube they span.
inline ToricModel octahedron_threefold() {
  std::vector<IntVector> rays;
  for (long a : {1, -1})
    for (long b : {1, -1})
      for (long c : {1, -1}) rays.push_back(IntVector{a, b, c});
  ConeList cones;
  for (std::size_t axis = 0; axis < 3; ++axis)
    for (long sign : {1, -1}) {
      std::vector<std::size_t> cone;
      for (std::size_t j = 0; j < rays.size(); ++j)
        if (rays[j][axis] == sign) cone.push_back(j);
      cones.push_back(cone);
    }
  return build_from_rays(3, rays, cones, {}, "octahedron");
}

}  // namespace toricfol

#pragma once

// Example foliations with known invariant hypersurfaces, each carrying the
// values it is expected to reproduce.

#include "toricfol/bounds_audit.hpp"
#include "toricfol/families.hpp"

#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace toricfol {

/// Where an expected value comes from: quoted from the source text, immediate
/// by hand, or computed by an independent oracle and frozen.
enum class Source { stated, elementary, computed };

inline std::string to_string(Source s) {
  switch (s) {
    case Source::stated:
      return "stated";
    case Source::elementary:
      return "elementary";
    default:
      return "computed";
  }
}

struct Expectation {
  std::string key;
  std::string value;
  Source source = Source::computed;
  std::string note;
};

struct Fixture {
  Fixture(std::string name, ToricModel model) : name(std::move(name)), model(std::move(model)) {}

  std::string name;
  std::vector<std::pair<std::string, std::string>> parameters;
  ToricModel model;
  VectorField field;
  Polynomial hypersurface;
  /// Named parts of the field that are expected to be invariant separately.
  std::vector<std::pair<std::string, VectorField>> parts;
  std::optional<std::vector<std::size_t>> subset;
  std::optional<Decomposition> reference;
  /// Automorphism of the torsion part under which degrees are compared.
  IntMatrix torsion_automorphism;
  std::vector<Expectation> expected;

  const Expectation* find(const std::string& key) const {
    for (const auto& e : expected)
      if (e.key == key) return &e;
    return nullptr;
  }
  AuditOptions audit_options() const {
    AuditOptions o;
    o.subset = subset;
    return o;
  }
};

namespace detail {

inline Polynomial mono(const ToricModel& m, std::initializer_list<std::pair<std::size_t, std::uint32_t>> powers,
                       Rational c = 1) {
  Monomial x(m.nvars());
  for (auto [j, p] : powers) x[j] += p;
  return Polynomial::term(x, c);
}

inline IntMatrix torsion_identity(const ToricModel& m) { return IntMatrix::identity(m.class_group().torsion.size()); }

}  // namespace detail

struct Wps2Instance {
  std::vector<long> omega;
  std::vector<long> d;
  long zeta = 0;
  long xi = 0;
  bool sharp() const {
    long best = 0;
    for (std::size_t i = 0; i < omega.size(); ++i)
      for (std::size_t j = i + 1; j < omega.size(); ++j) best = std::max(best, omega[i] + omega[j]);
    return best == xi;
  }
};

/// Checks the weight constraints and returns the instance with ζ = `zeta`, or
/// with the least multiple of lcm(omega) above xi (so deg F >= 1) when zeta is 0.
inline Wps2Instance wps2_instance(const std::vector<long>& omega, long zeta = 0) {
  const std::size_t n = omega.size() - 1;
  if (omega.size() < 2) throw Error("wps2: need at least two weights");
  const std::size_t pairs = (n % 2 == 1) ? (n + 1) / 2 : n / 2;
  if (n % 2 == 0 && n < 2) throw Error("wps2: even variant needs n >= 2");
  long g = 0, l = 1;
  for (long w : omega) {
    if (w < 1) throw Error("wps2: weights must be positive");
    g = std::gcd(g, w);
    l = std::lcm(l, w);
  }
  if (g != 1) throw Error("wps2: weights must have gcd 1");
  const long xi = omega[0] + omega[1];
  for (std::size_t k = 0; k < pairs; ++k)
    if (omega[2 * k] + omega[2 * k + 1] != xi)
      throw Error("wps2: pair sums differ (" + std::to_string(xi) + " vs " +
                  std::to_string(omega[2 * k] + omega[2 * k + 1]) + ")");
  if (zeta == 0) zeta = (xi / l + 1) * l;
  Wps2Instance inst{omega, {}, zeta, xi};
  for (long w : omega) {
    if (zeta % w != 0) throw Error("wps2: no integer d with " + std::to_string(w) + " d = " + std::to_string(zeta));
    inst.d.push_back(zeta / w);
  }
  return inst;
}

/// Admissible weight vectors with entries <= max_weight and 2..max_vars variables.
inline std::vector<Wps2Instance> wps2_instances(long max_weight, std::size_t max_vars) {
  std::vector<Wps2Instance> out;
  for (std::size_t len = 2; len <= max_vars; ++len) {
    if (len == 3) continue;
    std::vector<long> w(len, 1);
    for (;;) {
      try {
        out.push_back(wps2_instance(w));
      } catch (const Error&) {
      }
      std::size_t i = 0;
      while (i < len && w[i] == max_weight) w[i++] = 1;
      if (i == len) break;
      ++w[i];
    }
  }
  return out;
}

/// Pairwise Hamiltonian field on P(omega) with the Fermat-type hypersurface V_c.
inline Fixture wps2(const std::vector<long>& omega, const std::vector<Rational>& c, long zeta = 0) {
  Wps2Instance inst = wps2_instance(omega, zeta);
  const std::size_t n = omega.size() - 1;
  const bool odd = n % 2 == 1;
  const std::size_t pairs = odd ? (n + 1) / 2 : n / 2;
  if (c.size() != pairs + (odd ? 0 : 1))
    throw Error("wps2: expected " + std::to_string(pairs + (odd ? 0 : 1)) + " coefficients c");
  for (const auto& ck : c)
    if (ck == 0) throw Error("wps2: coefficients c must be nonzero");

  Fixture fx("wps2", weighted_projective(omega));
  fx.parameters = {{"omega", detail::int_list(omega)}, {"d", detail::int_list(inst.d)}, {"zeta", std::to_string(inst.zeta)}};
  const ToricModel& m = fx.model;
  auto e = [&](std::size_t j) { return static_cast<std::uint32_t>(inst.d[j]); };
  fx.field = VectorField(m.nvars());
  fx.hypersurface = Polynomial(m.nvars());
  for (std::size_t k = 0; k < pairs; ++k) {
    const std::size_t a = 2 * k, b = 2 * k + 1;
    fx.field[a] += detail::mono(m, {{b, e(b) - 1}}, Rational(inst.d[b]));
    fx.field[b] -= detail::mono(m, {{a, e(a) - 1}}, Rational(inst.d[a]));
    fx.hypersurface += detail::mono(m, {{a, e(a)}}, c[k]) + detail::mono(m, {{b, e(b)}}, c[k]);
  }
  if (!odd) fx.hypersurface += detail::mono(m, {{n, e(n)}}, c.back());
  fx.torsion_automorphism = detail::torsion_identity(m);

  long best = 0;
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) best = std::max(best, omega[i] + omega[j]);
  const long degf = inst.zeta - inst.xi;
  fx.expected = {
      {"deg_f", "(" + std::to_string(degf) + ")", Source::stated, "zeta - xi"},
      {"deg_v", "(" + std::to_string(inst.zeta) + ")", Source::stated, "zeta"},
      {"cofactor", "0", Source::computed, "pairwise cancellation"},
      {"lie_g", "not member", Source::elementary, ""},
      {"strongly_quasi_smooth", "yes", Source::elementary, "Fermat-type partials"},
      {"bound:1", std::to_string(degf + best), Source::stated, "deg F + max(omega_i + omega_j)"},
      {"actual:1", std::to_string(inst.zeta), Source::stated, ""},
      {"slack:1", std::to_string(best - inst.xi), Source::stated, "max(omega_i + omega_j) - xi"},
      {"koszul_decomposition", "valid", Source::elementary, ""},
      {"verdict", "bound holds", Source::stated, ""},
  };
  return fx;
}

/// Field on P^n x P^n (n odd) tangent to sum_k z1_k z2_k.
inline Fixture ms2(long n, const std::vector<Rational>& a, const std::vector<Rational>& b) {
  if (n < 1 || n % 2 == 0) throw Error("ms2: n must be odd and positive");
  const std::size_t pairs = static_cast<std::size_t>(n + 1) / 2;
  if (a.size() != pairs || b.size() != pairs)
    throw Error("ms2: expected " + std::to_string(pairs) + " coefficients in each of a and b");
  Fixture fx("ms2", multiprojective({n, n}));
  auto rl = [](const std::vector<Rational>& v) {
    std::vector<std::string> s;
    for (const auto& x : v) s.push_back(to_string(x));
    return "(" + join(s, ",") + ")";
  };
  fx.parameters = {{"n", std::to_string(n)}, {"a", rl(a)}, {"b", rl(b)}};
  const ToricModel& m = fx.model;
  const std::size_t off = static_cast<std::size_t>(n) + 1;
  auto z1 = [&](std::size_t k) { return k; };
  auto z2 = [&](std::size_t k) { return off + k; };
  fx.field = VectorField(m.nvars());
  for (std::size_t k = 0; k < pairs; ++k) {
    const std::size_t e = 2 * k, o = 2 * k + 1;
    fx.field[z1(e)] += detail::mono(m, {{z1(e), 2}, {z2(o), 1}}, a[k]);
    fx.field[z1(o)] -= detail::mono(m, {{z1(e), 2}, {z2(e), 1}}, a[k]);
    fx.field[z2(e)] += detail::mono(m, {{z2(e), 2}, {z1(o), 1}}, b[k]);
    fx.field[z2(o)] -= detail::mono(m, {{z2(e), 2}, {z1(e), 1}}, b[k]);
  }
  fx.hypersurface = Polynomial(m.nvars());
  for (std::size_t k = 0; k < off; ++k) fx.hypersurface += detail::mono(m, {{z1(k), 1}, {z2(k), 1}});
  fx.torsion_automorphism = detail::torsion_identity(m);
  fx.expected = {
      {"deg_f", "(1,1)", Source::stated, ""},
      {"deg_v", "(1,1)", Source::stated, ""},
      {"cofactor", "0", Source::computed, "pairwise cancellation"},
      {"lie_g", "not member", Source::elementary, ""},
      {"strongly_quasi_smooth", "yes", Source::stated, ""},
      {"bound:1", "3", Source::stated, "deg F_k + 2"},
      {"bound:2", "3", Source::stated, "deg F_k + 2"},
      {"actual:1", "1", Source::stated, ""},
      {"actual:2", "1", Source::stated, ""},
      {"slack:1", "2", Source::elementary, ""},
      {"slack:2", "2", Source::elementary, ""},
      {"koszul_decomposition", "valid", Source::elementary, ""},
      {"verdict", "bound holds", Source::stated, ""},
  };
  return fx;
}

/// Field on the surface with class group Z + Z/3 tangent to the Fermat curve
/// of degree m (m divisible by 3).
inline Fixture tor2(long m) {
  if (m < 3 || m % 3 != 0) throw Error("tor2: m must be a positive multiple of 3");
  Fixture fx("tor2", surface_021());
  fx.parameters = {{"m", std::to_string(m)}};
  const ToricModel& t = fx.model;
  const auto um = static_cast<std::uint32_t>(m);
  fx.field = VectorField(3);
  fx.field[0] = detail::mono(t, {{1, um}});
  fx.field[1] = detail::mono(t, {{0, 1}, {2, um - 1}}) - detail::mono(t, {{0, um - 1}, {1, 1}});
  fx.field[2] = -detail::mono(t, {{0, 1}, {1, um - 1}});
  fx.hypersurface = detail::mono(t, {{0, um}}) + detail::mono(t, {{1, um}}) + detail::mono(t, {{2, um}});
  fx.torsion_automorphism = detail::torsion_identity(t);

  Decomposition ref;
  ref.index_set = {0, 1, 2};
  ref.cofactor = Polynomial(3);
  ref.radial_index = 0;
  ref.theta = m;
  ref.pjk[{0, 1}] = detail::mono(t, {{1, 1}}, Rational(-1, m));
  ref.pjk[{1, 2}] = detail::mono(t, {{0, 1}}, Rational(-1, m));
  fx.reference = ref;

  const std::string ms = std::to_string(m);
  fx.expected = {
      {"deg_f", "(" + std::to_string(m - 1) + ",[0])", Source::stated, ""},
      {"deg_v", "(" + ms + ",[0])", Source::stated, ""},
      {"cofactor", "0", Source::computed, "three-term cancellation"},
      {"lie_g", "not member", Source::computed, "the d/dz1 component is not divisible by z1"},
      {"strongly_quasi_smooth", "yes", Source::stated, ""},
      {"reference_decomposition", "valid", Source::stated, "P12 = -z2/m, P13 = 0, P23 = -z1/m"},
      {"koszul_decomposition", "valid", Source::elementary, ""},
      {"bound:1", std::to_string(m + 1), Source::stated, "(m - 1) + 2"},
      {"actual:1", ms, Source::stated, ""},
      {"slack:1", "1", Source::stated, ""},
      {"verdict", "bound holds", Source::stated, ""},
  };
  return fx;
}

/// X = X_1 + X_2 on P^1 x P^1, each part tangent to a hypersurface whose
/// singular locus is a coordinate plane inside the irrelevant set. The audit
/// runs on the variables {z1_0, z1_1}.
inline Fixture ex_a(long alpha1, long alpha2, const Rational& c1, const Rational& c2) {
  if (alpha1 < 1 || alpha2 < 1) throw Error("exA: exponents must be positive");
  const long alpha = alpha1 + alpha2;
  Fixture fx("exA", multiprojective({1, 1}));
  fx.parameters = {{"alpha1", std::to_string(alpha1)}, {"alpha2", std::to_string(alpha2)},
                   {"c1", to_string(c1)}, {"c2", to_string(c2)}};
  const ToricModel& m = fx.model;
  const std::size_t z10 = 0, z11 = 1, z20 = 2, z21 = 3;
  const auto a = static_cast<std::uint32_t>(alpha), a1 = static_cast<std::uint32_t>(alpha1),
             a2 = static_cast<std::uint32_t>(alpha2);
  VectorField x1(4), x2(4);
  x1[z10] = detail::mono(m, {{z10, 2}, {z21, a}}, c1);
  x1[z11] = -(detail::mono(m, {{z10, 2}, {z20, a}}, c1) + detail::mono(m, {{z10, 2}, {z20, a1}, {z21, a2}}, c1));
  x2[z20] = detail::mono(m, {{z20, 2 + a1}, {z21, a2 - 1}, {z10, 1}}, c2 * alpha2) +
            detail::mono(m, {{z20, 2}, {z21, a2 - 1 + a1}, {z11, 1}}, c2 * alpha);
  x2[z21] = -(detail::mono(m, {{z20, a1 + 1 + a2}, {z10, 1}}, c2 * alpha) +
              detail::mono(m, {{z20, a1 + 1}, {z21, a2}, {z10, 1}}, c2 * alpha1));
  fx.field = x1 + x2;
  fx.parts = {{"X_1", x1}, {"X_2", x2}};
  fx.hypersurface = detail::mono(m, {{z10, 1}, {z20, a}}) + detail::mono(m, {{z11, 1}, {z21, a}}) +
                    detail::mono(m, {{z10, 1}, {z20, a1}, {z21, a2}});
  fx.subset = std::vector<std::size_t>{z10, z11};
  fx.torsion_automorphism = detail::torsion_identity(m);
  const std::string deg = "(1," + std::to_string(alpha) + ")";
  fx.expected = {
      {"deg_f", deg, Source::stated, ""},
      {"deg_v", deg, Source::stated, ""},
      {"cofactor:X_1", "0", Source::computed, "sympy expansion"},
      {"cofactor:X_2", "0", Source::computed, "sympy expansion"},
      {"strongly_quasi_smooth", "no", Source::stated, "Sing(V) = C^2 x {0}"},
      {"sing_inside_Z", "yes", Source::stated, "Sing(V) = C^2 x {0} inside Z"},
      {"regular_subsequence", "yes", Source::computed, "partials in z1_0, z1_1 cut out {z2_0 = z2_1 = 0}"},
      {"koszul_decomposition", "valid", Source::computed, ""},
      {"bound:1", "3", Source::elementary, "pairs inside {z1_0, z1_1}"},
      {"bound:2", std::to_string(alpha), Source::elementary, "pairs inside {z1_0, z1_1}"},
      {"actual:1", "1", Source::stated, ""},
      {"actual:2", std::to_string(alpha), Source::stated, ""},
      {"verdict", "bound holds", Source::stated, ""},
  };
  return fx;
}

/// A field on P^1 x P^1 whose components imply different degrees, tangent to
/// the non-reduced curve z1_0^alpha z2_0^beta.
inline Fixture ex_b(long alpha, long beta) {
  if (alpha < 1 || beta < 1) throw Error("exB: exponents must be positive");
  Fixture fx("exB", multiprojective({1, 1}));
  fx.parameters = {{"alpha", std::to_string(alpha)}, {"beta", std::to_string(beta)}};
  const ToricModel& m = fx.model;
  const std::size_t z10 = 0, z11 = 1, z20 = 2, z21 = 3;
  fx.field = VectorField(4);
  fx.field[z10] = detail::mono(m, {{z10, 1}, {z21, 2}});
  fx.field[z20] = detail::mono(m, {{z20, 1}, {z11, 2}});
  fx.hypersurface = detail::mono(m, {{z10, static_cast<std::uint32_t>(alpha)}, {z20, static_cast<std::uint32_t>(beta)}});
  fx.torsion_automorphism = detail::torsion_identity(m);
  Polynomial g = detail::mono(m, {{z21, 2}}, Rational(alpha)) + detail::mono(m, {{z11, 2}}, Rational(beta));
  const bool fails = alpha > 4 || beta > 4;
  fx.expected = {
      {"deg_f", "inconsistent", Source::computed, "components imply (0,2) and (2,0); stated as (1,1)"},
      {"deg_v", "(" + std::to_string(alpha) + "," + std::to_string(beta) + ")", Source::elementary, ""},
      {"cofactor", to_string(g, m.variable_names()), Source::computed, "X(f)/f expanded"},
      {"strongly_quasi_smooth", "no", Source::stated, "Z inside Sing(V)"},
      {"sing_inside_Z", "no", Source::stated, "Z inside Sing(V)"},
      {"bound:1", "4", Source::elementary, "largest implied degree plus 2"},
      {"bound:2", "4", Source::elementary, "largest implied degree plus 2"},
      {"verdict", fails ? "hypotheses violated; inequality fails" : "hypotheses violated; inequality holds",
       Source::elementary, ""},
  };
  return fx;
}

struct FixtureCheck {
  std::string key;
  std::string expected;
  std::string actual;
  Source source = Source::computed;
  std::string note;
  bool passed = false;
};

struct FixtureReport {
  std::string name;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<FixtureCheck> checks;
  AuditReport audit;
  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const FixtureCheck& c) { return c.passed; });
  }
};

/// Recomputes every expected value from scratch.
inline FixtureReport check_fixture(const Fixture& fx) {
  FixtureReport rep;
  rep.name = fx.name;
  rep.parameters = fx.parameters;
  rep.audit = audit_case(fx.model, fx.field, fx.hypersurface, fx.audit_options());
  const auto& names = fx.model.variable_names();
  const AuditReport& au = rep.audit;

  auto cofactor_string = [&](const VectorField& x) {
    auto g = invariance_cofactor(x, fx.hypersurface);
    return g ? to_string(*g, names) : std::string("not invariant");
  };
  auto strong = [&]() {
    std::vector<Polynomial> partials;
    for (std::size_t j = 0; j < fx.model.nvars(); ++j) partials.push_back(partial_derivative(fx.hypersurface, j));
    return to_string(only_origin_check(partials, fx.model).verdict);
  };
  auto comparison = [&](std::size_t k) -> const CoordinateComparison* {
    for (const auto& c : au.comparisons)
      if (c.k + 1 == k) return &c;
    return nullptr;
  };

  for (const auto& e : fx.expected) {
    std::string actual;
    const std::string& key = e.key;
    if (key == "deg_f") {
      actual = au.deg_f ? au.deg_f->to_string() : "inconsistent";
    } else if (key == "deg_v") {
      actual = au.deg_v ? au.deg_v->to_string() : "mixed";
    } else if (key == "cofactor") {
      actual = cofactor_string(fx.field);
    } else if (key.rfind("cofactor:", 0) == 0) {
      actual = "missing part";
      for (const auto& [pname, x] : fx.parts)
        if ("cofactor:" + pname == key) actual = cofactor_string(x);
    } else if (key == "lie_g") {
      actual = au.lie_g_member ? "member" : "not member";
    } else if (key == "strongly_quasi_smooth") {
      actual = strong();
    } else if (key == "sing_inside_Z") {
      actual = to_string(sing_inside_irrelevant(fx.hypersurface, fx.model).verdict);
    } else if (key == "regular_subsequence") {
      actual = fx.subset && regular_subsequence_check(fx.hypersurface, *fx.subset).value ? "yes" : "no";
    } else if (key == "reference_decomposition") {
      actual = fx.reference ? (verify_decomposition(fx.model, fx.hypersurface, fx.field, *fx.reference).value
                                   ? "valid"
                                   : "invalid")
                            : "missing";
    } else if (key == "koszul_decomposition") {
      actual = au.decomposition
                   ? (verify_decomposition(fx.model, fx.hypersurface, fx.field, *au.decomposition).value ? "valid"
                                                                                                        : "invalid")
                   : "not computed";
    } else if (key.rfind("bound:", 0) == 0 || key.rfind("actual:", 0) == 0 || key.rfind("slack:", 0) == 0) {
      const auto colon = key.find(':');
      const auto* c = comparison(std::stoul(key.substr(colon + 1)));
      const std::string what = key.substr(0, colon);
      if (!c)
        actual = "not eligible";
      else
        actual = toricfol::to_string(what == "bound" ? c->bound : what == "actual" ? c->actual : c->slack);
    } else if (key == "verdict") {
      actual = au.verdict;
    } else {
      actual = "unknown key";
    }
    rep.checks.push_back({key, e.value, actual, e.source, e.note, actual == e.value});
  }
  return rep;
}

}  // namespace toricfol

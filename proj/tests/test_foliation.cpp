#include "toricfol/fixtures.hpp"
#include "toricfol/foliation.hpp"
#include "toricfol/parser.hpp"
#include "toricfol/sampling.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <random>

using namespace toricfol;

namespace {

Polynomial P(const ToricModel& m, const std::string& s) { return parse_polynomial(s, m.variable_names()); }

VectorField field(const ToricModel& m, const std::vector<std::string>& comps) {
  std::vector<Polynomial> v;
  for (const auto& c : comps) v.push_back(P(m, c));
  return VectorField(v);
}

std::vector<ToricModel> models() {
  return {projective_space(2), weighted_projective({1, 2, 3}), multiprojective({1, 1}), rational_scroll({1, 2}),
          surface_021()};
}

}  // namespace

TEST(FoliationDegree, ProductOfLinesField) {
  auto fx = ms2(1, {Rational(1)}, {Rational(-2, 3)});
  EXPECT_EQ(foliation_degree(fx.model, fx.field).to_string(), "(1,1)");
  auto big = ms2(3, {Rational(1), Rational(2)}, {Rational(5), Rational(-1, 2)});
  EXPECT_EQ(foliation_degree(big.model, big.field).to_string(), "(1,1)");
}

TEST(FoliationDegree, TorsionSurfaceField) {
  for (long m : {3L, 6L, 9L}) {
    auto fx = tor2(m);
    EXPECT_EQ(foliation_degree(fx.model, fx.field), fx.model.make_degree({m - 1}, {0}));
  }
}

TEST(FoliationDegree, InconsistentComponentsAreReported) {
  auto fx = ex_b(2, 3);
  try {
    foliation_degree(fx.model, fx.field);
    FAIL() << "expected an inconsistency";
  } catch (const InconsistentDegreeError& e) {
    EXPECT_EQ(e.first(), 0u);
    EXPECT_EQ(e.second(), 2u);
    EXPECT_NE(std::string(e.what()).find("(0,2)"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("(2,0)"), std::string::npos);
  }
  auto comps = component_degrees(fx.model, fx.field);
  ASSERT_EQ(comps.size(), 2u);
  EXPECT_EQ(comps[0].degree->to_string(), "(0,2)");
  EXPECT_EQ(comps[1].degree->to_string(), "(2,0)");
}

TEST(FoliationDegree, ZeroFieldAndMixedComponent) {
  auto m = projective_space(2);
  EXPECT_THROW(foliation_degree(m, VectorField(3)), Error);
  EXPECT_THROW(foliation_degree(m, field(m, {"z1^2 + z2", "0", "0"})), InconsistentDegreeError);
  EXPECT_THROW(foliation_degree(m, VectorField(2)), Error);
}

TEST(FoliationDegree, InvariantUnderRadialShift) {
  std::mt19937 rng(3);
  auto fx = tor2(3);
  const auto d = foliation_degree(fx.model, fx.field);
  for (int trial = 0; trial < 10; ++trial) {
    auto g = random_homogeneous(fx.model, d, rng);
    ASSERT_TRUE(g.has_value());
    VectorField y = fx.field + *g * fx.model.radial_field(0).as_vector_field();
    EXPECT_EQ(foliation_degree(fx.model, y), d);
  }
}

TEST(ApplyTo, RadialFieldGivesEulerFactor) {
  std::mt19937 rng(5);
  for (const auto& m : models()) {
    for (int trial = 0; trial < 10; ++trial) {
      Polynomial f = random_quasi_homogeneous(m, rng);
      if (f.is_zero()) continue;
      auto alpha = *homogeneous_degree(m, f);
      for (std::size_t i = 0; i < m.rank(); ++i) {
        EXPECT_EQ(apply_to(m.radial_field(i).as_vector_field(), f), m.theta(i, alpha) * f) << m.name();
        auto g = invariance_cofactor(m.radial_field(i).as_vector_field(), f);
        ASSERT_TRUE(g.has_value());
        EXPECT_EQ(*g, Polynomial::constant(m.nvars(), m.theta(i, alpha)));
      }
    }
  }
}

TEST(ApplyTo, FixtureFieldsAnnihilateTheirHypersurfaces) {
  for (const auto& fx : {wps2({1, 2, 1, 2}, {Rational(1), Rational(3, 2)}), wps2({1, 1, 1, 1}, {1, 1}, 3),
                         wps2({1, 2, 2, 1, 2}, {Rational(2), Rational(-1), Rational(1, 3)}, 4), tor2(3), tor2(6),
                         ms2(3, {Rational(1, 2), Rational(3)}, {Rational(-1), Rational(7)})}) {
    EXPECT_TRUE(apply_to(fx.field, fx.hypersurface).is_zero()) << fx.name;
    auto g = invariance_cofactor(fx.field, fx.hypersurface);
    ASSERT_TRUE(g.has_value());
    EXPECT_TRUE(g->is_zero());
  }
}

TEST(InvarianceCofactor, NonReducedCurve) {
  for (long a : {1L, 2L, 3L, 5L})
    for (long b : {1L, 2L, 3L, 5L}) {
      auto fx = ex_b(a, b);
      auto g = invariance_cofactor(fx.field, fx.hypersurface);
      ASSERT_TRUE(g.has_value());
      EXPECT_EQ(*g, P(fx.model, std::to_string(a) + "*z2_1^2 + " + std::to_string(b) + "*z1_1^2"));
    }
}

TEST(InvarianceCofactor, PartsOfSplitFieldAreSeparatelyTangent) {
  for (auto [a1, a2] : std::vector<std::pair<long, long>>{{1, 2}, {2, 1}, {1, 1}, {2, 3}})
    for (const auto& c : {Rational(1), Rational(-3, 4)}) {
      auto fx = ex_a(a1, a2, c, 2 * c);
      for (const auto& [name, x] : fx.parts) {
        auto g = invariance_cofactor(x, fx.hypersurface);
        ASSERT_TRUE(g.has_value()) << name;
        EXPECT_TRUE(g->is_zero()) << name;
      }
    }
}

TEST(InvarianceCofactor, AbsentWhenNotTangent) {
  auto m = projective_space(1);
  EXPECT_FALSE(invariance_cofactor(field(m, {"z2", "0"}), P(m, "z1")).has_value());
  EXPECT_THROW(invariance_cofactor(field(m, {"z2", "0"}), Polynomial(2)), Error);
}

TEST(InvarianceCofactor, Linearity) {
  std::mt19937 rng(9);
  auto m = projective_space(2);
  auto f = P(m, "z1*z2*z3");
  // Fields z_j L_j d/dz_j are tangent to the coordinate triangle.
  for (int trial = 0; trial < 10; ++trial) {
    VectorField x(3), y(3);
    for (std::size_t j = 0; j < 3; ++j) {
      x[j] = m.variable_polynomial(j) * *random_homogeneous(m, m.make_degree({1}), rng);
      y[j] = m.variable_polynomial(j) * *random_homogeneous(m, m.make_degree({1}), rng);
    }
    auto gx = invariance_cofactor(x, f), gy = invariance_cofactor(y, f), gxy = invariance_cofactor(x + y, f);
    ASSERT_TRUE(gx && gy && gxy);
    EXPECT_EQ(*gxy, *gx + *gy);
  }
}

TEST(LieMembership, RadialFieldIsMember) {
  auto m = multiprojective({1, 1});
  auto r = lie_g_membership(m, m.radial_field(0).as_vector_field());
  ASSERT_TRUE(r.member);
  EXPECT_EQ(r.witness[0], Polynomial::constant(4, 1));
  EXPECT_TRUE(r.witness[1].is_zero());
}

TEST(LieMembership, PolynomialMultipleOfRadialField) {
  auto m = projective_space(2);
  auto g = P(m, "z1*z2");
  auto x = g * m.radial_field(0).as_vector_field();
  auto r = lie_g_membership(m, x);
  ASSERT_TRUE(r.member);
  EXPECT_EQ(r.witness[0] * m.radial_field(0).coefficients[0], g);
  EXPECT_EQ(combine_radial(m, r.witness), x);
}

TEST(LieMembership, WitnessReconstructsRandomMembers) {
  std::mt19937 rng(21);
  for (const auto& m : models()) {
    auto d = m.degrees()[0];
    for (int trial = 0; trial < 5; ++trial) {
      VectorField x(m.nvars());
      for (std::size_t i = 0; i < m.rank(); ++i) x += *random_homogeneous(m, d, rng) * m.radial_field(i).as_vector_field();
      auto r = lie_g_membership(m, x);
      ASSERT_TRUE(r.member) << m.name();
      EXPECT_EQ(combine_radial(m, r.witness), x);
    }
  }
}

TEST(LieMembership, FixtureFieldsAreNotMembers) {
  auto t = tor2(3);
  auto r = lie_g_membership(t.model, t.field);
  EXPECT_FALSE(r.member);
  EXPECT_NE(r.reason.find("z1"), std::string::npos);
  // Diagonal but not radial.
  auto m = projective_space(2);
  EXPECT_FALSE(lie_g_membership(m, field(m, {"z1", "0", "0"})).member);
}

TEST(SingularScheme, TwoByTwoMinorsOnPlane) {
  auto m = projective_space(2);
  auto minors = singular_scheme_minors(m, field(m, {"z2", "0", "0"}));
  ASSERT_EQ(minors.size(), 3u);
  EXPECT_EQ(minors[0], P(m, "-z2^2"));
  EXPECT_EQ(minors[1], P(m, "-z2*z3"));
  EXPECT_TRUE(minors[2].is_zero());
}

TEST(SingularScheme, RadialFieldHasNoMinors) {
  for (const auto& m : models())
    for (const auto& p : singular_scheme_minors(m, m.radial_field(0).as_vector_field())) EXPECT_TRUE(p.is_zero());
}

TEST(SingularScheme, TorsionSurfaceMinorsMatchOracle) {
  auto fx = tor2(3);
  auto minors = singular_scheme_minors(fx.model, fx.field);
  ASSERT_EQ(minors.size(), 3u);
  // Frozen from sympy.
  EXPECT_EQ(minors[0], P(fx.model, "-z1^3*z2 + z1^2*z3^2 - z2^4"));
  EXPECT_EQ(minors[1], P(fx.model, "-z1^2*z2^2 - z2^3*z3"));
  EXPECT_EQ(minors[2], P(fx.model, "z1^2*z2*z3 - z1*z2^3 - z1*z3^3"));
}

TEST(SingularScheme, TorsionSurfaceMinorsVanishAtSingularPoints) {
  // Roots of a^6 + a^3 - 1: a^3 = (-1 ± sqrt 5)/2, times cube roots of unity.
  auto fx = tor2(3);
  auto minors = singular_scheme_minors(fx.model, fx.field);
  using C = std::complex<double>;
  int checked = 0;
  for (double s : {1.0, -1.0}) {
    const double cube = (-1.0 + s * std::sqrt(5.0)) / 2.0;
    for (int k = 0; k < 3; ++k) {
      C a = std::polar(std::cbrt(std::abs(cube)), (cube < 0 ? M_PI : 0.0) / 3.0 + 2.0 * M_PI * k / 3.0);
      ASSERT_LT(std::abs(std::pow(a, 6) + std::pow(a, 3) - 1.0), 1e-12);
      std::vector<C> pt{C(1.0), a, -1.0 / a};
      for (const auto& p : minors) EXPECT_LT(std::abs(p.evaluate<C>(std::span<const C>(pt))), 1e-9);
      ++checked;
    }
  }
  EXPECT_EQ(checked, 6);
}

#include "toricfol/fixtures.hpp"
#include "toricfol/normal_form.hpp"
#include "toricfol/parser.hpp"
#include "toricfol/sampling.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace toricfol;

namespace {

Polynomial P(const ToricModel& m, const std::string& s) { return parse_polynomial(s, m.variable_names()); }

void expect_degree_law(const Fixture& fx, const Decomposition& d) {
  const auto degf = foliation_degree(fx.model, fx.field.restricted_to(d.index_set));
  const auto alpha = *homogeneous_degree(fx.model, fx.hypersurface);
  for (const auto& [jk, p] : d.pjk) {
    if (p.is_zero()) continue;
    EXPECT_EQ(*homogeneous_degree(fx.model, p), degf + fx.model.degree(jk.first) + fx.model.degree(jk.second) - alpha);
  }
}

}  // namespace

TEST(EulerCheck, Monomials) {
  for (const auto& m : {projective_space(3), multiprojective({1, 2}), rational_scroll({0, 2}), surface_021()})
    for (const auto& s : std::vector<std::string>{"z1_1*z2_1", "z1*z2^2", "z1_2^3", "z3"}) {
      Polynomial f;
      try {
        f = P(m, s);
      } catch (const ParseError&) {
        continue;
      }
      for (bool ok : euler_check(m, f)) EXPECT_TRUE(ok) << m.name() << " " << s;
    }
}

TEST(EulerCheck, FermatOnTorsionSurface) {
  auto fx = tor2(3);
  auto r = euler_check(fx.model, fx.hypersurface);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_TRUE(r[0]);
  EXPECT_EQ(fx.model.theta(0, *homogeneous_degree(fx.model, fx.hypersurface)), 3);
}

TEST(EulerCheck, RandomPolynomialsOnProductOfLines) {
  std::mt19937 rng(13);
  auto m = multiprojective({1, 1});
  for (int trial = 0; trial < 20; ++trial) {
    auto f = random_homogeneous(m, m.make_degree({2, 2}), rng);
    ASSERT_TRUE(f.has_value());
    auto r = euler_check(m, *f);
    EXPECT_EQ(r, std::vector<bool>({true, true}));
  }
  EXPECT_THROW(euler_check(m, P(m, "z1_0 + z2_0")), Error);
}

TEST(VerifyDecomposition, StatedTorsionSurfaceCoefficients) {
  for (long m : {3L, 6L}) {
    auto fx = tor2(m);
    ASSERT_TRUE(fx.reference.has_value());
    auto r = verify_decomposition(fx.model, fx.hypersurface, fx.field, *fx.reference);
    EXPECT_TRUE(r.value) << r.reason;
    expect_degree_law(fx, *fx.reference);
  }
}

TEST(VerifyDecomposition, SignFlipIsRejected) {
  auto fx = tor2(3);
  Decomposition d = *fx.reference;
  d.pjk[{0, 1}] = -d.pjk[{0, 1}];
  auto r = verify_decomposition(fx.model, fx.hypersurface, fx.field, d);
  EXPECT_FALSE(r.value);
  EXPECT_NE(r.reason.find("differs"), std::string::npos);
}

TEST(VerifyDecomposition, WrongDegreeIsRejected) {
  auto fx = tor2(3);
  Decomposition d = *fx.reference;
  d.pjk[{0, 2}] = P(fx.model, "z1^2");
  EXPECT_FALSE(verify_decomposition(fx.model, fx.hypersurface, fx.field, d).value);
}

TEST(VerifyDecomposition, ZeroAgainstZero) {
  auto m = projective_space(2);
  Decomposition d;
  d.index_set = {0, 1, 2};
  d.cofactor = Polynomial(3);
  d.theta = 3;
  EXPECT_TRUE(verify_decomposition(m, P(m, "z1^3 + z2^3 + z3^3"), VectorField(3), d).value);
}

TEST(KoszulDecompose, TorsionSurfaceRoundTrip) {
  for (long m : {3L, 6L}) {
    auto fx = tor2(m);
    auto d = koszul_decompose(fx.model, fx.hypersurface, fx.field, 0);
    EXPECT_TRUE(d.cofactor.is_zero());
    EXPECT_EQ(d.theta, m);
    auto r = verify_decomposition(fx.model, fx.hypersurface, fx.field, d);
    EXPECT_TRUE(r.value) << r.reason;
    EXPECT_EQ(reconstruct(fx.model, fx.hypersurface, d), fx.field);
    expect_degree_law(fx, d);
    EXPECT_GE(d.nonzero_count(), 1u);
  }
}

TEST(KoszulDecompose, RadialFieldItself) {
  auto m = projective_space(2);
  auto f = P(m, "z1^3 + z2^3 + z3^3 - z1*z2*z3");
  auto r = m.radial_field(0).as_vector_field();
  auto d = koszul_decompose(m, f, r, 0);
  EXPECT_EQ(d.nonzero_count(), 0u);
  EXPECT_EQ(d.cofactor, Polynomial::constant(3, 3));
  EXPECT_TRUE(verify_decomposition(m, f, r, d).value);
}

TEST(KoszulDecompose, FixturesRoundTrip) {
  std::vector<Fixture> fixtures{ms2(1, {Rational(2)}, {Rational(-1, 3)}),
                                ms2(3, {Rational(1), Rational(2)}, {Rational(3), Rational(-1)}),
                                wps2({1, 2, 1, 2}, {Rational(1), Rational(2)}), wps2({1, 1, 1, 1}, {1, 1}, 3),
                                wps2({1, 2, 2, 1, 2}, {1, 1, 1}, 4)};
  for (const auto& fx : fixtures) {
    auto d = koszul_decompose(fx.model, fx.hypersurface, fx.field, 0);
    auto r = verify_decomposition(fx.model, fx.hypersurface, fx.field, d);
    EXPECT_TRUE(r.value) << fx.name << ": " << r.reason;
    expect_degree_law(fx, d);
  }
}

TEST(KoszulDecompose, NonzeroCofactor) {
  // X = z1 R + (Hamiltonian part): the cofactor is theta * z1.
  auto m = projective_space(2);
  auto f = P(m, "z1^2 + z2^2 + z3^2");
  VectorField ham(std::vector<Polynomial>{P(m, "z2*z3"), P(m, "-z1*z3"), P(m, "0")});
  VectorField x = P(m, "z1") * m.radial_field(0).as_vector_field() + ham;
  auto d = koszul_decompose(m, f, x, 0);
  EXPECT_EQ(d.cofactor, P(m, "2*z1"));
  EXPECT_TRUE(verify_decomposition(m, f, x, d).value);
  EXPECT_EQ(invariance_cofactor(x, f), d.cofactor);
}

TEST(KoszulDecompose, SubsetOfVariables) {
  for (const auto& c : {Rational(1), Rational(5, 2)}) {
    auto fx = ex_a(1, 2, c, -c);
    auto d = koszul_decompose(fx.model, fx.hypersurface, fx.field, 0, fx.subset);
    EXPECT_TRUE(d.cofactor.is_zero());
    EXPECT_EQ(d.index_set, *fx.subset);
    auto r = verify_decomposition(fx.model, fx.hypersurface, fx.field, d);
    EXPECT_TRUE(r.value) << r.reason;
    ASSERT_EQ(d.nonzero_count(), 1u);
    // Matching the d/dz1_0 component -P z2_1^3 gives P = -c z1_0^2.
    EXPECT_EQ(d.entry(0, 1), c * P(fx.model, "-z1_0^2"));
  }
}

TEST(KoszulDecompose, Errors) {
  auto fx = tor2(3);
  EXPECT_THROW(koszul_decompose(fx.model, fx.hypersurface, fx.field, 1), Error);
  auto a = ex_a(1, 2, 1, 1);
  // R_2 lives on z2_*, not on the subset.
  EXPECT_THROW(koszul_decompose(a.model, a.hypersurface, a.field, 1, a.subset), Error);
  // theta = 0: degree (0,1) has no first coordinate.
  auto m = multiprojective({1, 1});
  auto f = P(m, "z2_0*z2_1");
  VectorField x(std::vector<Polynomial>{Polynomial(4), Polynomial(4), P(m, "z2_0"), P(m, "-z2_1")});
  EXPECT_THROW(koszul_decompose(m, f, x, 0), DecompositionError);
  EXPECT_NO_THROW(koszul_decompose(m, f, x, 1));
  // Not invariant.
  auto b = ex_b(2, 2);
  VectorField y(std::vector<Polynomial>{P(b.model, "z1_1"), Polynomial(4), Polynomial(4), Polynomial(4)});
  EXPECT_THROW(koszul_decompose(b.model, b.hypersurface, y, 0), DecompositionError);
}

TEST(DecompositionPrinting, Canonical) {
  auto fx = tor2(3);
  EXPECT_EQ(to_string(*fx.reference, fx.model.variable_names()),
            "P(z1,z2) = -1/3*z2; P(z2,z3) = -1/3*z1; g = 0; theta = 3");
}

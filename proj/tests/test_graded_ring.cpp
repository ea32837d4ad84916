#include "toricfol/families.hpp"
#include "toricfol/graded_ring.hpp"
#include "toricfol/parser.hpp"
#include "toricfol/sampling.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace toricfol;

namespace {

Polynomial P(const ToricModel& m, const std::string& s) { return parse_polynomial(s, m.variable_names()); }

std::vector<ToricModel> family_models() {
  return {projective_space(2),       weighted_projective({1, 2}),  weighted_projective({1, 2, 3}),
          multiprojective({1, 1}),   multiprojective({1, 2}),      rational_scroll({1, 1}),
          rational_scroll({0, 2, -1}), rational_scroll_fan(0, 2), surface_021()};
}

}  // namespace

TEST(Polynomial, ProductOfVariables) {
  auto m = projective_space(2);
  auto p = P(m, "z1") * P(m, "z2");
  EXPECT_EQ(to_string(p, m.variable_names()), "z1*z2");
  EXPECT_EQ(*homogeneous_degree(m, p), m.degree(0) + m.degree(1));
}

TEST(Polynomial, TorsionDegreesAdd) {
  auto m = surface_021();
  EXPECT_EQ(homogeneous_degree(m, P(m, "z2*z3"))->to_string(), "(2,[0])");
  EXPECT_EQ(homogeneous_degree(m, P(m, "z1*z2*z3"))->to_string(), "(3,[0])");
}

TEST(Polynomial, CancellationGivesZero) {
  auto m = projective_space(2);
  auto f = P(m, "3*z1^2 - 1/2*z2*z3 + 7");
  auto z = f + (-f);
  EXPECT_TRUE(z.is_zero());
  EXPECT_TRUE(z.terms().empty());
  EXPECT_EQ(to_string(z), "0");
}

TEST(Polynomial, VariableCountMismatch) {
  EXPECT_THROW(Polynomial::variable(2, 0) + Polynomial::variable(3, 0), Error);
}

TEST(Polynomial, CanonicalPrinting) {
  auto m = projective_space(2);
  EXPECT_EQ(to_string(P(m, "z3 + z1^2 - 2/4*z2 + 1"), m.variable_names()), "z1^2 - 1/2*z2 + z3 + 1");
  EXPECT_EQ(to_string(P(m, "-z2*z1"), m.variable_names()), "-z1*z2");
}

TEST(Polynomial, GrevlexOrder) {
  // Equal total degree: the smaller exponent in the last variable wins.
  Monomial a(std::vector<std::uint32_t>{1, 1, 0}), b(std::vector<std::uint32_t>{2, 0, 0}),
      c(std::vector<std::uint32_t>{1, 0, 1});
  EXPECT_GT(compare(b, a, MonomialOrder::grevlex), 0);
  EXPECT_GT(compare(a, c, MonomialOrder::grevlex), 0);
  EXPECT_GT(compare(b, c, MonomialOrder::lex), 0);
}

TEST(PartialDerivative, Power) {
  auto m = projective_space(2);
  EXPECT_EQ(partial_derivative(P(m, "z1^5"), 0), P(m, "5*z1^4"));
  EXPECT_TRUE(partial_derivative(P(m, "7"), 1).is_zero());
  EXPECT_THROW(partial_derivative(P(m, "z1"), 3), Error);
}

TEST(PartialDerivative, FermatOnSurface) {
  auto m = surface_021();
  for (long e : {3L, 4L, 6L}) {
    std::string s = "z1^" + std::to_string(e) + " + z2^" + std::to_string(e) + " + z3^" + std::to_string(e);
    auto d = partial_derivative(P(m, s), 1);
    EXPECT_EQ(d, P(m, std::to_string(e) + "*z2^" + std::to_string(e - 1)));
    auto deg = *homogeneous_degree(m, d);
    EXPECT_EQ(deg, m.make_degree({e - 1}, {2 * (e - 1)}));
  }
}

TEST(DivideExact, DifferenceOfSquares) {
  auto m = projective_space(2);
  auto q = divide_exact(P(m, "z1^2 - z2^2"), P(m, "z1 - z2"));
  ASSERT_TRUE(q);
  EXPECT_EQ(*q, P(m, "z1 + z2"));
}

TEST(DivideExact, NotDivisible) {
  auto m = projective_space(2);
  EXPECT_FALSE(divide_exact(P(m, "z1*z2 + 1"), P(m, "z1")));
  EXPECT_THROW(divide_exact(P(m, "z1"), Polynomial(3)), Error);
}

TEST(DivideExact, MonomialHypersurfaceCofactor) {
  auto m = multiprojective({1, 1});
  for (int a : {1, 2, 3, 5})
    for (int b : {1, 2, 3, 5}) {
      auto f = P(m, "z1_0^" + std::to_string(a) + "*z2_0^" + std::to_string(b));
      // X(f) for X = z1_0 z2_1^2 d/dz1_0 + z2_0 z1_1^2 d/dz2_0.
      auto xf = P(m, "z1_0*z2_1^2") * partial_derivative(f, 0) + P(m, "z2_0*z1_1^2") * partial_derivative(f, 2);
      auto q = divide_exact(xf, f);
      ASSERT_TRUE(q);
      EXPECT_EQ(*q, P(m, std::to_string(a) + "*z2_1^2 + " + std::to_string(b) + "*z1_1^2"));
    }
}

TEST(DivideExact, RoundTrip) {
  std::mt19937 rng(11);
  auto m = multiprojective({1, 2});
  for (int trial = 0; trial < 50; ++trial) {
    auto q = random_quasi_homogeneous(m, rng, 3);
    auto d = random_quasi_homogeneous(m, rng, 3);
    auto r = divide_exact(q * d, d);
    ASSERT_TRUE(r);
    EXPECT_EQ(*r, q);
  }
}

TEST(HomogeneousDegree, BilinearForm) {
  for (long n : {1L, 3L}) {
    auto m = multiprojective({n, n});
    std::string s;
    for (long k = 0; k <= n; ++k) s += (k ? " + " : "") + ("z1_" + std::to_string(k)) + "*z2_" + std::to_string(k);
    EXPECT_EQ(homogeneous_degree(m, P(m, s))->to_string(), "(1,1)");
  }
}

TEST(HomogeneousDegree, FermatOnSurface) {
  auto m = surface_021();
  EXPECT_EQ(homogeneous_degree(m, P(m, "z1^3 + z2^3 + z3^3"))->to_string(), "(3,[0])");
  EXPECT_EQ(homogeneous_degree(m, P(m, "z1^6 + z2^6 + z3^6"))->to_string(), "(6,[0])");
  EXPECT_FALSE(homogeneous_degree(m, P(m, "z1^2 + z2^2")));
}

TEST(HomogeneousDegree, MixedAndZero) {
  auto m = projective_space(2);
  EXPECT_FALSE(homogeneous_degree(m, P(m, "z1 + z1^2")));
  EXPECT_THROW(homogeneous_degree(m, Polynomial(3)), ZeroPolynomialError);
}

TEST(MonomialsOfDegree, Examples) {
  auto p2 = projective_space(2);
  EXPECT_EQ(monomials_of_degree(p2, p2.make_degree({2})).size(), 6u);
  auto p11 = multiprojective({1, 1});
  EXPECT_EQ(monomials_of_degree(p11, p11.make_degree({1, 1})).size(), 4u);
  auto p12 = weighted_projective({1, 2});
  auto mons = monomials_of_degree(p12, p12.make_degree({4}));
  std::set<std::vector<std::uint32_t>> got;
  for (const auto& mo : mons) got.insert(mo.exponents());
  EXPECT_EQ(got, (std::set<std::vector<std::uint32_t>>{{4, 0}, {2, 1}, {0, 2}}));
  EXPECT_TRUE(monomials_of_degree(p2, p2.make_degree({-1})).empty());
}

TEST(MonomialsOfDegree, ScrollWithNegativeWeights) {
  auto f = rational_scroll({1, 1});
  auto c = positivity_functional(f);
  ASSERT_TRUE(c);
  for (const auto& d : f.degrees()) {
    Rational v = 0;
    for (std::size_t k = 0; k < 2; ++k) v += (*c)[k] * Rational(d.free_part()[k]);
    EXPECT_GE(v, 1);
  }
  // Degree (0,1) is spanned by the four products z1_a*z2_i.
  auto mons = monomials_of_degree(f, f.make_degree({0, 1}));
  EXPECT_EQ(mons.size(), 4u);
}

TEST(MonomialsOfDegree, NeedsCapWithoutFunctional) {
  // Degrees +1 and -1: no positive functional, infinitely many monomials of degree 0.
  std::vector<DegreeClass> d{DegreeClass(std::vector<Integer>{1}), DegreeClass(std::vector<Integer>{-1})};
  auto m = build_from_presentation(1, d);
  EXPECT_FALSE(positivity_functional(m));
  EXPECT_THROW(monomials_of_degree(m, m.make_degree({0})), Error);
  EXPECT_EQ(monomials_of_degree(m, m.make_degree({0}), 3).size(), 4u);
}

TEST(CountLatticePoints, Examples) {
  auto p2 = projective_space(2);
  EXPECT_EQ(count_lattice_points(p2, IntVector{2, 0, 0}), 6);
  EXPECT_EQ(count_lattice_points(p2, IntVector{0, 0, 0}), 1);
  auto s = surface_021();
  IntVector d{3, 0, 0};
  EXPECT_EQ(count_lattice_points(s, d), Integer(monomials_of_degree(s, divisor_degree(s, d)).size()));
  EXPECT_THROW(count_lattice_points(rational_scroll({1}), IntVector{1, 0, 0}), Error);
}

TEST(CountLatticePoints, UnboundedIsAnError) {
  // Rays (1,0), (0,1), (1,1) span only a quadrant, so the polytope is unbounded.
  auto m = build_from_rays(2, {IntVector{1, 0}, IntVector{0, 1}, IntVector{1, 1}});
  EXPECT_THROW(count_lattice_points(m, IntVector{0, 0, 0}), Error);
}

TEST(GradedRingProperties, DegreeAdditivity) {
  std::mt19937 rng(3);
  for (const auto& m : family_models())
    for (int t = 0; t < 20; ++t) {
      auto f = random_quasi_homogeneous(m, rng, 3), g = random_quasi_homogeneous(m, rng, 3);
      EXPECT_EQ(*homogeneous_degree(m, f * g), *homogeneous_degree(m, f) + *homogeneous_degree(m, g)) << m.name();
    }
}

TEST(GradedRingProperties, EnumerationMatchesPolytope) {
  for (const auto& m : {projective_space(2), multiprojective({1, 1}), surface_021(), rational_scroll_fan(0, 2),
                        weighted_projective({1, 2, 3})}) {
    const std::size_t n = m.nvars();
    std::vector<long> a(n, 0);
    for (;;) {
      IntVector d(a.begin(), a.end());
      EXPECT_EQ(count_lattice_points(m, d), Integer(monomials_of_degree(m, divisor_degree(m, d)).size()))
          << m.name();
      std::size_t k = 0;
      for (; k < n; ++k) {
        if (++a[k] <= 2) break;
        a[k] = 0;
      }
      if (k == n) break;
    }
  }
}

TEST(GradedRingProperties, EligibleCoordinatesStayNonnegative) {
  std::mt19937 rng(5);
  for (const auto& m : family_models())
    for (auto k : m.nonnegative_coordinates())
      for (int t = 0; t < 20; ++t) {
        auto f = random_quasi_homogeneous(m, rng, 4);
        EXPECT_GE(homogeneous_degree(m, f)->free_part()[k], 0) << m.name();
      }
}

TEST(RationalLinearAlgebra, SolveAndRank) {
  RationalMatrix a(2, 3);
  a(0, 0) = 1, a(0, 1) = 2, a(0, 2) = 3;
  a(1, 0) = 2, a(1, 1) = 4, a(1, 2) = 7;
  EXPECT_EQ(rank(a), 2u);
  auto x = solve_linear_system(a, {1, 3});
  ASSERT_TRUE(x);
  EXPECT_EQ(a.apply(*x), (RationalVector{1, 3}));
  a(1, 2) = 6;
  EXPECT_FALSE(solve_linear_system(a, {1, 3}));
}

TEST(RationalLinearAlgebra, Simplex) {
  // max x + y s.t. x + 2y <= 4, 3x + y <= 6.
  RationalMatrix a(2, 2);
  a(0, 0) = 1, a(0, 1) = 2, a(1, 0) = 3, a(1, 1) = 1;
  auto r = maximize(a, {4, 6}, {1, 1});
  ASSERT_EQ(r.status, LpStatus::optimal);
  EXPECT_EQ(r.value, Rational(14, 5));
  // x >= 1 and x <= 0 is infeasible.
  RationalMatrix b(2, 1);
  b(0, 0) = -1, b(1, 0) = 1;
  EXPECT_EQ(maximize(b, {-1, 0}, {1}).status, LpStatus::infeasible);
  RationalMatrix c(1, 1);
  c(0, 0) = -1;
  EXPECT_EQ(maximize(c, {-1}, {1}).status, LpStatus::unbounded);
}

TEST(Parser, RejectsDecimals) {
  auto m = projective_space(2);
  try {
    P(m, "1.5*z1");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.message(), "rational literals must be p/q");
    EXPECT_EQ(e.column(), 1u);
  }
  EXPECT_THROW(P(m, "z1 + w"), ParseError);
  EXPECT_THROW(P(m, "z1 z2"), ParseError);
  EXPECT_THROW(P(m, "z1^-1"), ParseError);
  EXPECT_EQ(P(m, " 2 / 4 * z1 ^ 2 "), Polynomial::term(Monomial(std::vector<std::uint32_t>{2, 0, 0}), Rational(1, 2)));
}

TEST(Parser, Degrees) {
  auto d = parse_degree("(1,[2])");
  EXPECT_EQ(d.free_part, IntVector{1});
  EXPECT_EQ(d.residues, IntVector{2});
  auto e = parse_degree("( -3 , 1 )");
  EXPECT_EQ(e.free_part, (IntVector{-3, 1}));
  EXPECT_THROW(parse_degree("1,2"), ParseError);
  EXPECT_THROW(parse_degree("([1],2)"), ParseError);
}

#include "toricfol/lattice.hpp"
#include "toricfol/oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace toricfol;

namespace {

IntMatrix pairing(const std::vector<IntVector>& rays) { return IntMatrix::from_rows(rays); }

IntVector iv(std::initializer_list<long> v) { return IntVector(v.begin(), v.end()); }

IntMatrix octahedron_pairing() {
  std::vector<IntVector> rays;
  for (long a : {1, -1})
    for (long b : {1, -1})
      for (long c : {1, -1}) rays.push_back(iv({a, b, c}));
  return pairing(rays);
}

void expect_valid_smith(const IntMatrix& a, const SmithDecomposition& s) {
  EXPECT_EQ(s.U * a * s.V, s.D);
  EXPECT_EQ(abs(determinant(s.U)), 1);
  EXPECT_EQ(abs(determinant(s.V)), 1);
  for (std::size_t i = 0; i < s.D.rows(); ++i)
    for (std::size_t j = 0; j < s.D.cols(); ++j)
      if (i != j) {
        EXPECT_EQ(s.D(i, j), 0);
      }
  auto f = s.invariant_factors();
  for (std::size_t i = 0; i + 1 < f.size(); ++i) EXPECT_EQ(f[i + 1] % f[i], 0);
  for (const auto& v : f) EXPECT_GT(v, 0);
}

}  // namespace

TEST(SmithNormalForm, IdentityIsFixed) {
  auto s = smith_normal_form(IntMatrix::identity(2));
  EXPECT_TRUE(s.D.is_identity());
  EXPECT_TRUE(s.U.is_identity());
  EXPECT_TRUE(s.V.is_identity());
}

TEST(SmithNormalForm, SurfacePairingHasFactorsOneThree) {
  IntMatrix a = pairing({iv({2, -1}), iv({-1, 2}), iv({-1, -1})});
  auto s = smith_normal_form(a);
  expect_valid_smith(a, s);
  EXPECT_EQ(s.invariant_factors(), iv({1, 3}));
}

TEST(SmithNormalForm, EmptyMatrix) {
  IntMatrix a(0, 3);
  auto s = smith_normal_form(a);
  EXPECT_EQ(s.D.rows(), 0u);
  EXPECT_EQ(s.rank(), 0u);
}

TEST(SmithNormalForm, Deterministic) {
  IntMatrix a = octahedron_pairing();
  auto s1 = smith_normal_form(a);
  auto s2 = smith_normal_form(a);
  EXPECT_EQ(s1.U, s2.U);
  EXPECT_EQ(s1.V, s2.V);
}

TEST(SmithNormalForm, RandomMatricesMatchMinorOracle) {
  std::mt19937 rng(20261018);
  std::uniform_int_distribution<int> dim(1, 6), entry(-5, 5);
  for (int trial = 0; trial < 200; ++trial) {
    IntMatrix a(dim(rng), dim(rng));
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = entry(rng);
    auto s = smith_normal_form(a);
    expect_valid_smith(a, s);
    EXPECT_EQ(s.invariant_factors(), oracle::invariant_factors_by_minors(a)) << a.to_string();
  }
}

TEST(Cokernel, ProjectivePlane) {
  IntMatrix a = pairing({iv({1, 0}), iv({0, 1}), iv({-1, -1})});
  auto g = cokernel(a);
  EXPECT_EQ(g.rank, 1u);
  EXPECT_TRUE(g.torsion.empty());
  auto d0 = g.project(iv({1, 0, 0}));
  EXPECT_EQ(abs(d0[0]), 1);
  EXPECT_EQ(g.project(iv({0, 1, 0})), d0);
  EXPECT_EQ(g.project(iv({0, 0, 1})), d0);
}

TEST(Cokernel, SurfaceHasThreeTorsion) {
  IntMatrix a = pairing({iv({2, -1}), iv({-1, 2}), iv({-1, -1})});
  auto g = cokernel(a);
  EXPECT_EQ(g.rank, 1u);
  EXPECT_EQ(g.torsion, iv({3}));
  EXPECT_EQ(g.to_string(), "Z + Z/3");
  // The three degrees have equal free part and pairwise distinct residues.
  auto d1 = g.project(iv({1, 0, 0})), d2 = g.project(iv({0, 1, 0})), d3 = g.project(iv({0, 0, 1}));
  EXPECT_EQ(abs(d1[0]), 1);
  EXPECT_EQ(d1[0], d2[0]);
  EXPECT_EQ(d1[0], d3[0]);
  EXPECT_EQ(floor_mod(d1[1] + d2[1] + d3[1], 3), 0);
  EXPECT_NE(d1[1], d2[1]);
  EXPECT_NE(d2[1], d3[1]);
}

TEST(Cokernel, OctahedronHasRankFiveAndTwoTorsion) {
  auto g = cokernel(octahedron_pairing());
  EXPECT_EQ(g.rank, 5u);
  EXPECT_EQ(g.torsion, iv({2, 2}));
  EXPECT_EQ(g.to_string(), "Z^5 + Z/2 + Z/2");
}

TEST(Cokernel, ProjectorKillsImage) {
  IntMatrix a = octahedron_pairing();
  auto g = cokernel(a);
  for (std::size_t j = 0; j < a.cols(); ++j)
    for (const auto& v : g.project(a.column(j))) EXPECT_EQ(v, 0);
}

TEST(Cokernel, PrimaryForm) {
  AbelianGroupPresentation g;
  g.rank = 2;
  g.torsion = iv({6, 12});
  EXPECT_EQ(g.to_string(), "Z^2 + Z/6 + Z/12");
  EXPECT_EQ(g.to_string(true), "Z^2 + Z/2 + Z/3 + Z/3 + Z/4");
}

TEST(Kernel, WeightedProjectiveLine) {
  // Rays (2) and (-1) of P(1,2).
  auto k = kernel_basis(IntMatrix{{2, -1}});
  ASSERT_EQ(k.size(), 1u);
  EXPECT_EQ(k[0], iv({1, 2}));
}

TEST(Kernel, WeightedProjectivePlane) {
  // Columns e1, e2, -e1-2e2: relation z0 + 2 z1 + z2 with weights (1,2,1).
  auto k = kernel_basis(IntMatrix{{1, 0, -1}, {0, 1, -2}});
  ASSERT_EQ(k.size(), 1u);
  EXPECT_EQ(k[0], iv({1, 2, 1}));
}

TEST(Kernel, ProductOfLines) {
  auto k = kernel_basis(IntMatrix{{1, -1, 0, 0}, {0, 0, 1, -1}});
  ASSERT_EQ(k.size(), 2u);
  EXPECT_EQ(k[0], iv({1, 1, 0, 0}));
  EXPECT_EQ(k[1], iv({0, 0, 1, 1}));
}

TEST(Kernel, InjectiveSquareMatrixHasNoKernel) {
  EXPECT_TRUE(kernel_basis(IntMatrix{{2, 1}, {1, 1}}).empty());
}

TEST(Kernel, OctahedronRelations) {
  IntMatrix rays = octahedron_pairing().transpose();
  auto k = kernel_basis(rays);
  EXPECT_EQ(k.size(), 5u);
  for (const auto& v : k) {
    EXPECT_EQ(gcd_of(v), 1);
    for (const auto& x : rays.apply(v)) EXPECT_EQ(x, 0);
  }
}

TEST(SolveIntegerSystem, Identity) {
  auto x = solve_integer_system(IntMatrix::identity(3), iv({4, -2, 7}));
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, iv({4, -2, 7}));
}

TEST(SolveIntegerSystem, ParityObstruction) { EXPECT_FALSE(solve_integer_system(IntMatrix{{2}}, iv({3}))); }

TEST(SolveIntegerSystem, WeightedDegreeFour) {
  IntMatrix a{{1, 2}};
  auto x = solve_integer_system(a, iv({4}));
  ASSERT_TRUE(x);
  EXPECT_EQ(a.apply(*x), iv({4}));
  std::vector<IntVector> nonneg;
  for (long p = 0; p <= 4; ++p)
    for (long q = 0; q <= 4; ++q)
      if (p + 2 * q == 4) nonneg.push_back(iv({p, q}));
  EXPECT_EQ(nonneg, (std::vector<IntVector>{iv({0, 2}), iv({2, 1}), iv({4, 0})}));
}

TEST(SolveIntegerSystem, RandomConsistentSystems) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(-4, 4);
  for (int trial = 0; trial < 100; ++trial) {
    IntMatrix a(3, 4);
    IntVector x0(4);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 4; ++j) a(i, j) = entry(rng);
    for (auto& v : x0) v = entry(rng);
    auto x = solve_integer_system(a, a.apply(x0));
    ASSERT_TRUE(x);
    EXPECT_EQ(a.apply(*x), a.apply(x0));
  }
}

TEST(Determinant, Small) {
  EXPECT_EQ(determinant(IntMatrix{{2, 1}, {1, 1}}), 1);
  EXPECT_EQ(determinant(IntMatrix{{0, 1}, {1, 0}}), -1);
  EXPECT_EQ(determinant(IntMatrix{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}), 0);
}

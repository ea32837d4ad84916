#pragma once

// Property suites shared by the `selftest` command and the acceptance binary.

#include "toricfol/case_file.hpp"
#include "toricfol/families.hpp"
#include "toricfol/fixtures.hpp"
#include "toricfol/graded_ring.hpp"
#include "toricfol/normal_form.hpp"
#include "toricfol/oracles.hpp"
#include "toricfol/sampling.hpp"

#include <random>
#include <string>
#include <vector>

namespace toricfol {

struct SuiteResult {
  explicit SuiteResult(std::string n) : name(std::move(n)) {}
  std::string name;
  std::size_t cases = 0;
  std::vector<std::string> failures;
  bool passed() const { return failures.empty() && cases > 0; }
  void check(bool ok, const std::string& what) {
    ++cases;
    if (!ok && failures.size() < 20) failures.push_back(what);
  }
};

inline std::vector<ToricModel> family_models() {
  return {projective_space(2),         weighted_projective({1, 2}), weighted_projective({1, 2, 3}),
          weighted_projective({1, 1, 2}), multiprojective({1, 1}),  multiprojective({1, 2}),
          rational_scroll({0}),        rational_scroll({1, 2}),     rational_scroll({-2, 0}),
          surface_021()};
}

/// U A V = D, unimodular U and V, divisibility chain, agreement with the
/// determinantal-divisor oracle.
inline SuiteResult snf_suite(int trials, unsigned seed = 20261018) {
  SuiteResult r("smith normal form");
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> dim(1, 6), entry(-5, 5);
  for (int t = 0; t < trials; ++t) {
    IntMatrix a(dim(rng), dim(rng));
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = entry(rng);
    auto s = smith_normal_form(a);
    bool ok = s.U * a * s.V == s.D && abs(determinant(s.U)) == 1 && abs(determinant(s.V)) == 1;
    for (std::size_t i = 0; i < s.D.rows(); ++i)
      for (std::size_t j = 0; j < s.D.cols(); ++j)
        if (i != j && s.D(i, j) != 0) ok = false;
    auto f = s.invariant_factors();
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (f[i] <= 0) ok = false;
      if (i + 1 < f.size() && f[i + 1] % f[i] != 0) ok = false;
    }
    ok = ok && f == oracle::invariant_factors_by_minors(a);
    r.check(ok, a.to_string());
  }
  return r;
}

/// i_{R_i}(df) = theta_i(alpha) f for random quasi-homogeneous f.
inline SuiteResult euler_suite(int per_model, unsigned seed = 7) {
  SuiteResult r("euler identity");
  std::mt19937 rng(seed);
  for (const auto& m : family_models()) {
    int done = 0;
    for (int attempt = 0; done < per_model && attempt < 10 * per_model; ++attempt) {
      Polynomial f = random_quasi_homogeneous(m, rng, 6);
      if (f.is_zero()) continue;
      ++done;
      bool ok = true;
      for (bool b : euler_check(m, f)) ok = ok && b;
      r.check(ok, m.name() + ": " + to_string(f, m.variable_names()));
    }
    r.check(done == per_model, m.name() + ": only " + std::to_string(done) + " samples drawn");
  }
  return r;
}

namespace detail {

/// A nonnegative divisor of degree alpha, searched in a box.
inline std::optional<IntVector> divisor_of_degree(const ToricModel& m, const DegreeClass& alpha, long box) {
  const std::size_t n = m.nvars();
  IntVector a(n, 0);
  std::function<std::optional<IntVector>(std::size_t)> rec = [&](std::size_t j) -> std::optional<IntVector> {
    if (j == n) return divisor_degree(m, a) == alpha ? std::optional<IntVector>(a) : std::nullopt;
    for (long v = 0; v <= box; ++v) {
      a[j] = v;
      if (auto found = rec(j + 1)) return found;
    }
    a[j] = 0;
    return std::nullopt;
  };
  return rec(0);
}

}  // namespace detail

/// Monomial enumeration against lattice points of the divisor polytope.
inline SuiteResult counting_suite(long max_free = 4) {
  SuiteResult r("monomial count vs lattice points");
  auto p2 = projective_space(2);
  const std::vector<long> p2_counts{1, 3, 6, 10, 15, 21, 28};
  for (long d = 0; d <= 6; ++d) {
    auto alpha = p2.make_degree({d});
    auto mons = static_cast<long>(monomials_of_degree(p2, alpha).size());
    auto pts = count_lattice_points(p2, IntVector{d, 0, 0});
    r.check(mons == p2_counts[d] && pts == p2_counts[d],
            "P^2 degree " + std::to_string(d) + ": " + std::to_string(mons) + " monomials, " + pts.get_str() +
                " points");
  }
  auto pp = multiprojective({1, 1});
  for (long a = 0; a <= 3; ++a)
    for (long b = 0; b <= 3; ++b) {
      auto mons = static_cast<long>(monomials_of_degree(pp, pp.make_degree({a, b})).size());
      auto pts = count_lattice_points(pp, IntVector{a, 0, b, 0});
      r.check(mons == (a + 1) * (b + 1) && pts == (a + 1) * (b + 1),
              "P^1xP^1 degree (" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
  auto s = surface_021();
  for (long d = 0; d <= max_free; ++d)
    for (long t = 0; t < 3; ++t) {
      auto alpha = s.make_degree({d}, {t});
      auto mons = Integer(static_cast<long>(monomials_of_degree(s, alpha).size()));
      auto a = detail::divisor_of_degree(s, alpha, d);
      if (!a) {
        // No effective divisor of this class: the degree piece is empty.
        r.check(mons == 0, s.name() + " " + alpha.to_string() + ": nonzero count without effective divisor");
        continue;
      }
      r.check(mons == count_lattice_points(s, *a), s.name() + " " + alpha.to_string());
    }
  return r;
}

inline std::vector<Fixture> standard_fixtures() {
  return {tor2(3),
          tor2(6),
          ms2(1, {Rational(1)}, {Rational(1)}),
          ms2(3, {Rational(2, 3), Rational(-5)}, {Rational(7), Rational(1, 2)}),
          wps2({1, 2, 1, 2}, {Rational(1), Rational(-1, 2)}, 4),
          wps2({1, 1, 1, 1}, {Rational(2), Rational(3)}, 3),
          wps2({1, 2, 2, 1, 2}, {Rational(1), Rational(1), Rational(-3)}, 4),
          ex_a(1, 2, Rational(1), Rational(1)),
          ex_a(1, 2, Rational(-3, 4), Rational(5, 2)),
          ex_b(2, 3),
          ex_b(5, 5)};
}

inline SuiteResult fixture_suite() {
  SuiteResult r("fixture expectations");
  for (const auto& fx : standard_fixtures()) {
    auto rep = check_fixture(fx);
    for (const auto& c : rep.checks)
      r.check(c.passed, fx.name + " " + c.key + ": expected " + c.expected + ", got " + c.actual);
  }
  return r;
}

/// Fixture -> case text -> case; the re-parsed case audits identically.
inline SuiteResult roundtrip_suite() {
  SuiteResult r("case file round trip");
  for (const auto& fx : standard_fixtures()) {
    auto cf = case_from_fixture(fx);
    auto back = parse_case(serialize_case(cf));
    r.check(back == cf, fx.name + ": re-parsed case differs");
    auto rc = resolve_case(back);
    auto a = audit_case(rc.model, *rc.field, *rc.hypersurface, rc.options);
    auto b = audit_case(fx.model, fx.field, fx.hypersurface, fx.audit_options());
    r.check(a.verdict == b.verdict, fx.name + ": verdict " + a.verdict + " vs " + b.verdict);
  }
  return r;
}

/// Whenever every hypothesis passes, the inequality holds.
inline SuiteResult bound_suite(int random_wps, unsigned seed = 11) {
  SuiteResult r("bound under hypotheses");
  std::vector<Fixture> all = standard_fixtures();
  std::mt19937 rng(seed);
  auto instances = wps2_instances(3, 4);
  std::uniform_int_distribution<std::size_t> pick(0, instances.size() - 1);
  for (int t = 0; t < random_wps; ++t) {
    const auto& inst = instances[pick(rng)];
    const std::size_t n = inst.omega.size() - 1;
    std::vector<Rational> c;
    while (c.size() < (n % 2 == 1 ? (n + 1) / 2 : n / 2 + 1)) {
      Rational x = random_coefficient(rng);
      if (x != 0) c.push_back(x);
    }
    all.push_back(wps2(inst.omega, c, inst.zeta));
  }
  for (const auto& fx : all) {
    auto rep = audit_case(fx.model, fx.field, fx.hypersurface, fx.audit_options());
    if (rep.hypotheses_hold()) r.check(rep.inequality_holds(), fx.name + ": " + rep.verdict);
  }
  return r;
}

inline std::vector<SuiteResult> run_selftest() {
  return {snf_suite(50), euler_suite(10), counting_suite(3), fixture_suite(), roundtrip_suite(), bound_suite(6)};
}

}  // namespace toricfol

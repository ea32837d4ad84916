#pragma once

// Random quasi-homogeneous polynomials for property suites.

#include "toricfol/graded_ring.hpp"

#include <random>

namespace toricfol {

/// Random exponent vector with total degree at most `max_degree`.
inline Monomial random_monomial(std::size_t nvars, std::uint32_t max_degree, std::mt19937& rng) {
  Monomial m(nvars);
  std::uniform_int_distribution<std::uint32_t> total(0, max_degree);
  std::uniform_int_distribution<std::size_t> var(0, nvars - 1);
  for (std::uint32_t t = total(rng); t > 0; --t) m[var(rng)] += 1;
  return m;
}

inline Rational random_coefficient(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
  int p = 0;
  while (p == 0) p = num(rng);
  Rational c(p, den(rng));
  c.canonicalize();
  return c;
}

/// Random nonzero polynomial of degree alpha using up to `max_terms` of its
/// monomials whose total degree is at most `max_total`. Returns nothing if
/// no such monomial exists.
inline std::optional<Polynomial> random_homogeneous(const ToricModel& model, const DegreeClass& alpha,
                                                    std::mt19937& rng, std::size_t max_terms = 5,
                                                    std::uint32_t max_total = 6) {
  auto all = monomials_of_degree(model, alpha, max_total);
  std::vector<Monomial> mons;
  for (auto& m : all)
    if (m.total_degree() <= max_total) mons.push_back(std::move(m));
  if (mons.empty()) return std::nullopt;
  std::shuffle(mons.begin(), mons.end(), rng);
  std::uniform_int_distribution<std::size_t> count(1, std::min(max_terms, mons.size()));
  Polynomial f(model.nvars());
  for (std::size_t i = count(rng); i > 0; --i) f.add_term(mons[i - 1], random_coefficient(rng));
  return f;
}

/// Random quasi-homogeneous polynomial whose degree is that of a random
/// monomial of total degree at most `max_total`.
inline Polynomial random_quasi_homogeneous(const ToricModel& model, std::mt19937& rng, std::uint32_t max_total = 6) {
  for (;;) {
    Monomial seed = random_monomial(model.nvars(), max_total, rng);
    auto f = random_homogeneous(model, model.degree(seed), rng, 5, max_total);
    if (f) return *f;
  }
}

}  // namespace toricfol

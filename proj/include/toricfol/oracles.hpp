#pragma once

// Brute-force reference computations used by the property suites.

#include "toricfol/lattice.hpp"

#include <vector>

namespace toricfol::oracle {

inline void subsets(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
}

/// gcd of all k x k minors (0 when every minor vanishes).
inline Integer determinantal_divisor(const IntMatrix& a, std::size_t k) {
  if (k == 0) return 1;
  std::vector<std::vector<std::size_t>> rs, cs;
  subsets(a.rows(), k, rs);
  subsets(a.cols(), k, cs);
  Integer g = 0;
  for (const auto& r : rs)
    for (const auto& c : cs) {
      IntMatrix m(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) m(i, j) = a(r[i], c[j]);
      g = gcd(g, determinant(m));
    }
  return g;
}

/// Invariant factors d_k / d_{k-1} for k = 1..rank.
inline IntVector invariant_factors_by_minors(const IntMatrix& a) {
  IntVector out;
  Integer prev = 1;
  for (std::size_t k = 1; k <= std::min(a.rows(), a.cols()); ++k) {
    Integer d = determinantal_divisor(a, k);
    if (d == 0) break;
    out.push_back(d / prev);
    prev = d;
  }
  return out;
}

}  // namespace toricfol::oracle

#pragma once

// Dense exact linear algebra over Q: elimination and a small simplex solver.

#include "toricfol/common.hpp"

#include <optional>
#include <string>
#include <vector>

namespace toricfol {

using RationalVector = std::vector<Rational>;

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RationalVector apply(const RationalVector& x) const {
    if (x.size() != cols_) throw Error("RationalMatrix::apply: dimension mismatch");
    RationalVector y(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (data_[i * cols_ + j] != 0) y[i] += data_[i * cols_ + j] * x[j];
    return y;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

namespace detail {

/// In-place reduced row echelon form of [A | b] (b may be empty). Returns the
/// pivot column of each nonzero row.
inline std::vector<std::size_t> row_reduce(std::vector<RationalVector>& rows, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    const Rational inv = 1 / rows[r][c];
    for (auto& v : rows[r])
      if (v != 0) v *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rational k = rows[i][c];
      for (std::size_t j = c; j < rows[i].size(); ++j)
        if (rows[r][j] != 0) rows[i][j] -= k * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace detail

inline std::size_t rank(const RationalMatrix& a) {
  std::vector<RationalVector> rows(a.rows(), RationalVector(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) rows[i][j] = a(i, j);
  return detail::row_reduce(rows, a.cols()).size();
}

/// Some x with A x = b, or nothing. Free variables are set to zero, so the
/// answer is deterministic for a given column order.
inline std::optional<RationalVector> solve_linear_system(const RationalMatrix& a, const RationalVector& b) {
  if (b.size() != a.rows()) throw Error("solve_linear_system: dimension mismatch");
  std::vector<RationalVector> rows(a.rows(), RationalVector(a.cols() + 1));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) rows[i][j] = a(i, j);
    rows[i][a.cols()] = b[i];
  }
  auto pivots = detail::row_reduce(rows, a.cols());
  for (std::size_t i = pivots.size(); i < rows.size(); ++i)
    if (rows[i][a.cols()] != 0) return std::nullopt;
  RationalVector x(a.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = rows[i][a.cols()];
  return x;
}

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  RationalVector x;
  Rational value;
};

namespace detail {

/// Dense tableau simplex with Bland's rule (terminates on degenerate input).
class Simplex {
 public:
  // Equality form: T x = rhs, rhs >= 0, x >= 0, with `basis` a feasible basis.
  Simplex(std::vector<RationalVector> t, RationalVector rhs, std::vector<std::size_t> basis)
      : t_(std::move(t)), rhs_(std::move(rhs)), basis_(std::move(basis)) {
    ncols_ = t_.empty() ? 0 : t_.front().size();
  }

  /// Maximizes cost·x over columns flagged in `allowed`; false when unbounded.
  bool maximize(const RationalVector& cost, const std::vector<bool>& allowed) {
    for (;;) {
      // Reduced cost: c_B B^-1 A_j - c_j.
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < ncols_ && !enter; ++j) {
        if (!allowed[j] || is_basic(j)) continue;
        Rational red = -cost[j];
        for (std::size_t i = 0; i < t_.size(); ++i)
          if (t_[i][j] != 0) red += cost[basis_[i]] * t_[i][j];
        if (red < 0) enter = j;
      }
      if (!enter) return true;
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t i = 0; i < t_.size(); ++i) {
        if (t_[i][*enter] <= 0) continue;
        Rational ratio = rhs_[i] / t_[i][*enter];
        if (!leave || ratio < best || (ratio == best && basis_[i] < basis_[*leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (!leave) return false;
      pivot(*leave, *enter);
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    const Rational inv = 1 / t_[r][c];
    for (auto& v : t_[r])
      if (v != 0) v *= inv;
    rhs_[r] *= inv;
    for (std::size_t i = 0; i < t_.size(); ++i) {
      if (i == r || t_[i][c] == 0) continue;
      const Rational k = t_[i][c];
      for (std::size_t j = 0; j < ncols_; ++j)
        if (t_[r][j] != 0) t_[i][j] -= k * t_[r][j];
      rhs_[i] -= k * rhs_[r];
    }
    basis_[r] = c;
  }

  RationalVector solution() const {
    RationalVector x(ncols_);
    for (std::size_t i = 0; i < t_.size(); ++i) x[basis_[i]] = rhs_[i];
    return x;
  }

  bool is_basic(std::size_t j) const {
    for (auto b : basis_)
      if (b == j) return true;
    return false;
  }

  const std::vector<RationalVector>& tableau() const { return t_; }
  const std::vector<std::size_t>& basis() const { return basis_; }

 private:
  std::vector<RationalVector> t_;
  RationalVector rhs_;
  std::vector<std::size_t> basis_;
  std::size_t ncols_ = 0;
};

}  // namespace detail

/// max c·x subject to A x <= b, x >= 0. Two-phase simplex, exact.
inline LpResult maximize(const RationalMatrix& a, const RationalVector& b, const RationalVector& c) {
  const std::size_t m = a.rows(), n = a.cols();
  if (b.size() != m || c.size() != n) throw Error("maximize: dimension mismatch");
  // Columns: x (n), slacks (m), artificials (one per row with b < 0).
  std::vector<std::size_t> art_rows;
  for (std::size_t i = 0; i < m; ++i)
    if (b[i] < 0) art_rows.push_back(i);
  const std::size_t total = n + m + art_rows.size();
  std::vector<RationalVector> t(m, RationalVector(total));
  RationalVector rhs(m);
  std::vector<std::size_t> basis(m);
  std::size_t next_art = n + m;
  for (std::size_t i = 0; i < m; ++i) {
    const int sign = b[i] < 0 ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) t[i][j] = sign * a(i, j);
    t[i][n + i] = sign;
    rhs[i] = sign * b[i];
    if (sign < 0) {
      t[i][next_art] = 1;
      basis[i] = next_art++;
    } else {
      basis[i] = n + i;
    }
  }
  detail::Simplex s(std::move(t), std::move(rhs), std::move(basis));
  std::vector<bool> allowed(total, true);
  if (!art_rows.empty()) {
    RationalVector phase1(total);
    for (std::size_t j = n + m; j < total; ++j) phase1[j] = -1;
    s.maximize(phase1, allowed);
    RationalVector x = s.solution();
    for (std::size_t j = n + m; j < total; ++j)
      if (x[j] != 0) return {LpStatus::infeasible, {}, 0};
    // Drive zero-level artificials out of the basis where possible.
    for (std::size_t i = 0; i < m; ++i) {
      if (s.basis()[i] < n + m) continue;
      for (std::size_t j = 0; j < n + m; ++j)
        if (s.tableau()[i][j] != 0) {
          s.pivot(i, j);
          break;
        }
    }
    for (std::size_t j = n + m; j < total; ++j) allowed[j] = false;
  }
  RationalVector cost(total);
  for (std::size_t j = 0; j < n; ++j) cost[j] = c[j];
  if (!s.maximize(cost, allowed)) return {LpStatus::unbounded, {}, 0};
  RationalVector full = s.solution();
  LpResult res{LpStatus::optimal, RationalVector(full.begin(), full.begin() + static_cast<std::ptrdiff_t>(n)), 0};
  for (std::size_t j = 0; j < n; ++j) res.value += c[j] * res.x[j];
  return res;
}

/// max c·x subject to A x <= b with x unrestricted in sign.
inline LpResult maximize_free(const RationalMatrix& a, const RationalVector& b, const RationalVector& c) {
  const std::size_t n = a.cols();
  RationalMatrix split(a.rows(), 2 * n);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < n; ++j) {
      split(i, j) = a(i, j);
      split(i, n + j) = -a(i, j);
    }
  RationalVector c2(2 * n);
  for (std::size_t j = 0; j < n; ++j) {
    c2[j] = c[j];
    c2[n + j] = -c[j];
  }
  LpResult r = maximize(split, b, c2);
  if (r.status != LpStatus::optimal) return r;
  RationalVector x(n);
  for (std::size_t j = 0; j < n; ++j) x[j] = r.x[j] - r.x[n + j];
  return {LpStatus::optimal, std::move(x), r.value};
}

}  // namespace toricfol

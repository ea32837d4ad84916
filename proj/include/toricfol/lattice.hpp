#pragma once

// Exact integer linear algebra: Smith normal form and the derived cokernel,
// kernel and linear-system routines. Everything runs on GMP integers.

#include "toricfol/common.hpp"

#include <algorithm>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <utility>
#include <vector>

namespace toricfol {

using IntVector = std::vector<Integer>;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw Error("IntMatrix: ragged initializer");
      for (long v : r) data_.emplace_back(v);
    }
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  /// Builds a matrix from a list of equally long rows. `cols` is used when
  /// the list is empty.
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols = 0) {
    if (!rows.empty()) cols = rows.front().size();
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw Error("IntMatrix: ragged rows");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVector row(std::size_t i) const {
    return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }

  IntVector column(std::size_t j) const {
    IntVector c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  IntVector apply(const IntVector& x) const {
    if (x.size() != cols_) throw Error("IntMatrix::apply: dimension mismatch");
    IntVector y(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) y[i] += (*this)(i, j) * x[j];
    return y;
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw Error("IntMatrix: product dimension mismatch");
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
      }
    return c;
  }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  bool is_identity() const { return *this == identity(rows_) && rows_ == cols_; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  /// row[target] += factor * row[source]
  void add_row_multiple(std::size_t target, std::size_t source, const Integer& factor) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(target, j) += factor * (*this)(source, j);
  }
  /// col[target] += factor * col[source]
  void add_col_multiple(std::size_t target, std::size_t source, const Integer& factor) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, target) += factor * (*this)(i, source);
  }
  void negate_row(std::size_t i) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
  }

  std::string to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i) os << "; ";
      for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).get_str();
    }
    return os.str();
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Determinant by fraction-free (Bareiss) elimination.
inline Integer determinant(IntMatrix m) {
  if (m.rows() != m.cols()) throw Error("determinant: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = v;
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

/// U * A * V = D with U, V unimodular and D diagonal with d_1 | d_2 | ...
struct SmithDecomposition {
  IntMatrix U;
  IntMatrix V;
  IntMatrix D;

  std::size_t rank() const {
    std::size_t r = 0;
    for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i)
      if (D(i, i) != 0) ++r;
    return r;
  }

  /// Nonzero diagonal entries, in order.
  IntVector invariant_factors() const {
    IntVector out;
    for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i)
      if (D(i, i) != 0) out.push_back(D(i, i));
    return out;
  }
};

/// Smith normal form. Pivot rule: smallest nonzero |entry| of the remaining
/// block, ties broken by lowest row, then lowest column.
inline SmithDecomposition smith_normal_form(const IntMatrix& a) {
  SmithDecomposition s{IntMatrix::identity(a.rows()), IntMatrix::identity(a.cols()), a};
  IntMatrix& d = s.D;
  const std::size_t rows = a.rows(), cols = a.cols();

  auto find_pivot = [&](std::size_t t) -> std::optional<std::pair<std::size_t, std::size_t>> {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    Integer best_abs;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        if (d(i, j) == 0) continue;
        Integer v = abs(d(i, j));
        if (!best || v < best_abs) {
          best = {i, j};
          best_abs = v;
        }
      }
    return best;
  };

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      auto pivot = find_pivot(t);
      if (!pivot) return s;
      d.swap_rows(t, pivot->first);
      s.U.swap_rows(t, pivot->first);
      d.swap_cols(t, pivot->second);
      s.V.swap_cols(t, pivot->second);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0) continue;
        Integer q = d(i, t) / d(t, t);  // truncating division
        if (q != 0) {
          d.add_row_multiple(i, t, -q);
          s.U.add_row_multiple(i, t, -q);
        }
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0) continue;
        Integer q = d(t, j) / d(t, t);
        if (q != 0) {
          d.add_col_multiple(j, t, -q);
          s.V.add_col_multiple(j, t, -q);
        }
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Row and column are clear; enforce divisibility on the rest.
      bool divides_all = true;
      for (std::size_t i = t + 1; i < rows && divides_all; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (d(i, j) % d(t, t) != 0) {
            d.add_row_multiple(t, i, 1);
            s.U.add_row_multiple(t, i, 1);
            divides_all = false;
            break;
          }
      if (!divides_all) continue;

      if (d(t, t) < 0) {
        d.negate_row(t);
        s.U.negate_row(t);
      }
      break;
    }
  }
  return s;
}

/// Finitely generated abelian group Z^rank + Z/t_1 + ... + Z/t_m presented as
/// a quotient of Z^k, with t_i | t_{i+1}.
struct AbelianGroupPresentation {
  std::size_t rank = 0;
  IntVector torsion;
  /// (rank + m) x k. Free rows first, then one row per torsion factor.
  IntMatrix projector;

  /// Image of x in Z^rank + residues; residues reduced to [0, t_i).
  IntVector project(const IntVector& x) const {
    IntVector y = projector.apply(x);
    for (std::size_t i = 0; i < torsion.size(); ++i) y[rank + i] = floor_mod(y[rank + i], torsion[i]);
    return y;
  }

  /// Torsion in primary form, e.g. Z/6 -> Z/2 + Z/3. Sorted ascending.
  IntVector primary_torsion() const {
    IntVector out;
    for (Integer t : torsion) {
      for (Integer p = 2; p * p <= t; ++p) {
        if (t % p != 0) continue;
        Integer q = 1;
        while (t % p == 0) {
          t /= p;
          q *= p;
        }
        out.push_back(q);
      }
      if (t > 1) out.push_back(t);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::string to_string(bool primary = false) const {
    std::vector<std::string> parts;
    if (rank == 1) parts.emplace_back("Z");
    if (rank > 1) parts.push_back("Z^" + std::to_string(rank));
    for (const Integer& t : primary ? primary_torsion() : torsion) parts.push_back("Z/" + t.get_str());
    if (parts.empty()) return "0";
    return join(parts, " + ");
  }
};

/// Z^rows / image(A).
inline AbelianGroupPresentation cokernel(const IntMatrix& a) {
  SmithDecomposition s = smith_normal_form(a);
  const std::size_t rank_a = s.rank();
  AbelianGroupPresentation g;
  g.rank = a.rows() - rank_a;
  std::vector<std::size_t> torsion_rows;
  for (std::size_t i = 0; i < rank_a; ++i)
    if (s.D(i, i) > 1) {
      torsion_rows.push_back(i);
      g.torsion.push_back(s.D(i, i));
    }
  g.projector = IntMatrix(g.rank + torsion_rows.size(), a.rows());
  for (std::size_t i = 0; i < g.rank; ++i)
    for (std::size_t j = 0; j < a.rows(); ++j) g.projector(i, j) = s.U(rank_a + i, j);
  for (std::size_t t = 0; t < torsion_rows.size(); ++t)
    for (std::size_t j = 0; j < a.rows(); ++j)
      g.projector(g.rank + t, j) = floor_mod(s.U(torsion_rows[t], j), g.torsion[t]);
  return g;
}

/// Row-style Hermite normal form of the lattice spanned by `vectors`: echelon
/// rows with positive pivots and entries above each pivot reduced into
/// [0, pivot). Zero rows are dropped.
inline std::vector<IntVector> hermite_normal_form(std::vector<IntVector> rows) {
  if (rows.empty()) return rows;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    // Euclid on column c among rows r..end.
    for (;;) {
      std::optional<std::size_t> best;
      for (std::size_t i = r; i < rows.size(); ++i)
        if (rows[i][c] != 0 && (!best || abs(rows[i][c]) < abs(rows[*best][c]))) best = i;
      if (!best) break;
      std::swap(rows[r], rows[*best]);
      bool done = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        Integer q = rows[i][c] / rows[r][c];
        for (std::size_t j = 0; j < cols; ++j) rows[i][j] -= q * rows[r][j];
        if (rows[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (rows[r][c] == 0) continue;
    if (rows[r][c] < 0)
      for (auto& v : rows[r]) v = -v;
    for (std::size_t i = 0; i < r; ++i) {
      Integer q = floor_div(rows[i][c], rows[r][c]);
      if (q != 0)
        for (std::size_t j = 0; j < cols; ++j) rows[i][j] -= q * rows[r][j];
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

/// Basis of {x in Z^cols : A x = 0}, in Hermite normal form (so each vector
/// is primitive and the output is canonical).
inline std::vector<IntVector> kernel_basis(const IntMatrix& a) {
  SmithDecomposition s = smith_normal_form(a);
  std::vector<IntVector> basis;
  for (std::size_t j = s.rank(); j < a.cols(); ++j) basis.push_back(s.V.column(j));
  return hermite_normal_form(std::move(basis));
}

/// Some integer x with A x = b, if one exists.
inline std::optional<IntVector> solve_integer_system(const IntMatrix& a, const IntVector& b) {
  if (b.size() != a.rows()) throw Error("solve_integer_system: dimension mismatch");
  SmithDecomposition s = smith_normal_form(a);
  IntVector c = s.U.apply(b);
  const std::size_t rk = s.rank();
  IntVector y(a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (i < rk) {
      if (c[i] % s.D(i, i) != 0) return std::nullopt;
      y[i] = c[i] / s.D(i, i);
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  return s.V.apply(y);
}

inline Integer gcd_of(const IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

}  // namespace toricfol

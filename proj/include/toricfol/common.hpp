#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

namespace toricfol {

using Integer = mpz_class;
using Rational = mpq_class;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string to_string(const Integer& v) { return v.get_str(); }

inline std::string to_string(const Rational& v) {
  Rational c = v;
  c.canonicalize();
  return c.get_str();
}

/// Residue of `v` modulo `m` in [0, m). `m` must be positive.
inline Integer floor_mod(const Integer& v, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Integer ceil_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Integer floor(const Rational& q) { return floor_div(q.get_num(), q.get_den()); }
inline Integer ceil(const Rational& q) { return ceil_div(q.get_num(), q.get_den()); }

template <class T>
std::string join(const std::vector<T>& items, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    if constexpr (std::is_convertible_v<T, std::string>)
      out += items[i];
    else {
      using std::to_string;
      out += to_string(items[i]);
    }
  }
  return out;
}

}  // namespace toricfol

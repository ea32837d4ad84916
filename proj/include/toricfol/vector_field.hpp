#pragma once

#include "toricfol/polynomial.hpp"

#include <string>
#include <vector>

namespace toricfol {

/// X = sum_i P_i d/dz_i. Zero components are allowed.
class VectorField {
 public:
  VectorField() = default;
  explicit VectorField(std::size_t nvars) : components_(nvars, Polynomial(nvars)) {}
  explicit VectorField(std::vector<Polynomial> components) : components_(std::move(components)) {
    for (const auto& p : components_)
      if (p.nvars() != components_.size()) throw Error("VectorField: component has wrong variable count");
  }

  std::size_t size() const { return components_.size(); }
  const Polynomial& operator[](std::size_t i) const { return components_.at(i); }
  Polynomial& operator[](std::size_t i) { return components_.at(i); }
  const std::vector<Polynomial>& components() const { return components_; }

  bool is_zero() const {
    for (const auto& p : components_)
      if (!p.is_zero()) return false;
    return true;
  }

  /// Keeps only the components listed in `indices`.
  VectorField restricted_to(const std::vector<std::size_t>& indices) const {
    VectorField r(size());
    for (auto i : indices) r.components_.at(i) = components_.at(i);
    return r;
  }

  VectorField& operator+=(const VectorField& o) {
    check(o);
    for (std::size_t i = 0; i < size(); ++i) components_[i] += o.components_[i];
    return *this;
  }
  VectorField& operator-=(const VectorField& o) {
    check(o);
    for (std::size_t i = 0; i < size(); ++i) components_[i] -= o.components_[i];
    return *this;
  }
  friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
  friend VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
  friend VectorField operator*(const Polynomial& g, VectorField x) {
    for (auto& p : x.components_) p = g * p;
    return x;
  }
  friend bool operator==(const VectorField& a, const VectorField& b) { return a.components_ == b.components_; }

 private:
  void check(const VectorField& o) const {
    if (o.size() != size()) throw Error("VectorField: component count mismatch");
  }

  std::vector<Polynomial> components_;
};

/// X(f) = sum_i P_i df/dz_i.
inline Polynomial apply_to(const VectorField& x, const Polynomial& f) {
  if (x.size() != f.nvars()) throw Error("apply_to: vector field and polynomial disagree on variable count");
  Polynomial out(f.nvars());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    out += x[i] * partial_derivative(f, i);
  }
  return out;
}

inline std::string to_string(const VectorField& x, const std::vector<std::string>& names) {
  std::vector<std::string> parts;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) parts.push_back("(" + to_string(x[i], names) + ") d/d" + names.at(i));
  return parts.empty() ? "0" : join(parts, " + ");
}

}  // namespace toricfol

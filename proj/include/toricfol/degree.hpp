#pragma once

#include "toricfol/common.hpp"

#include <compare>
#include <string>
#include <vector>

namespace toricfol {

/// Element of Z^r + Z/t_1 + ... + Z/t_m. Carries its own moduli so that
/// arithmetic is self-contained; residues are kept in [0, t_i).
class DegreeClass {
 public:
  DegreeClass() = default;
  DegreeClass(std::vector<Integer> free_part, std::vector<Integer> residues, std::vector<Integer> moduli)
      : free_(std::move(free_part)), torsion_(std::move(residues)), moduli_(std::move(moduli)) {
    if (torsion_.size() != moduli_.size()) throw Error("DegreeClass: residue/modulus count mismatch");
    normalize();
  }
  explicit DegreeClass(std::vector<Integer> free_part) : free_(std::move(free_part)) {}

  static DegreeClass zero(std::size_t rank, std::vector<Integer> moduli) {
    std::vector<Integer> res(moduli.size());
    return DegreeClass(std::vector<Integer>(rank), std::move(res), std::move(moduli));
  }

  const std::vector<Integer>& free_part() const { return free_; }
  const std::vector<Integer>& torsion_part() const { return torsion_; }
  const std::vector<Integer>& moduli() const { return moduli_; }
  std::size_t rank() const { return free_.size(); }

  bool is_zero() const {
    for (const auto& v : free_)
      if (v != 0) return false;
    for (const auto& v : torsion_)
      if (v != 0) return false;
    return true;
  }

  DegreeClass& operator+=(const DegreeClass& o) {
    check_compatible(o);
    for (std::size_t i = 0; i < free_.size(); ++i) free_[i] += o.free_[i];
    for (std::size_t i = 0; i < torsion_.size(); ++i) torsion_[i] += o.torsion_[i];
    normalize();
    return *this;
  }
  DegreeClass& operator-=(const DegreeClass& o) {
    check_compatible(o);
    for (std::size_t i = 0; i < free_.size(); ++i) free_[i] -= o.free_[i];
    for (std::size_t i = 0; i < torsion_.size(); ++i) torsion_[i] -= o.torsion_[i];
    normalize();
    return *this;
  }
  DegreeClass operator-() const {
    DegreeClass d = *this;
    for (auto& v : d.free_) v = -v;
    for (auto& v : d.torsion_) v = -v;
    d.normalize();
    return d;
  }
  friend DegreeClass operator+(DegreeClass a, const DegreeClass& b) { return a += b; }
  friend DegreeClass operator-(DegreeClass a, const DegreeClass& b) { return a -= b; }
  friend DegreeClass operator*(const Integer& k, DegreeClass a) {
    for (auto& v : a.free_) v *= k;
    for (auto& v : a.torsion_) v *= k;
    a.normalize();
    return a;
  }

  friend bool operator==(const DegreeClass& a, const DegreeClass& b) {
    return a.free_ == b.free_ && a.torsion_ == b.torsion_ && a.moduli_ == b.moduli_;
  }
  friend bool operator<(const DegreeClass& a, const DegreeClass& b) {
    if (a.free_ != b.free_) return a.free_ < b.free_;
    return a.torsion_ < b.torsion_;
  }

  /// "(1,[2])", "(1,0)", "(3)".
  std::string to_string() const {
    std::string s = "(";
    bool first = true;
    for (const auto& v : free_) {
      if (!first) s += ",";
      s += v.get_str();
      first = false;
    }
    for (const auto& v : torsion_) {
      if (!first) s += ",";
      s += "[" + v.get_str() + "]";
      first = false;
    }
    return s + ")";
  }

 private:
  void normalize() {
    for (std::size_t i = 0; i < torsion_.size(); ++i) torsion_[i] = floor_mod(torsion_[i], moduli_[i]);
  }
  void check_compatible(const DegreeClass& o) const {
    if (free_.size() != o.free_.size() || moduli_ != o.moduli_)
      throw Error("DegreeClass: incompatible groups " + to_string() + " vs " + o.to_string());
  }

  std::vector<Integer> free_;
  std::vector<Integer> torsion_;
  std::vector<Integer> moduli_;
};

inline std::string to_string(const DegreeClass& d) { return d.to_string(); }

}  // namespace toricfol

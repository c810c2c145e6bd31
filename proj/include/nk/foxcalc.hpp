#pragma once

// Free differential calculus over the integral group ring of a free group.

#include "nk/laurent.hpp"
#include "nk/presentation.hpp"

#include <map>
#include <string>
#include <vector>

namespace nk {

// Finite Z-linear combination of reduced words. Zero coefficients are never
// stored and keys are ordered shortlex, so equality is structural.
class GroupRingElem {
 public:
  GroupRingElem() = default;
  explicit GroupRingElem(const FreeWord& w, Integer c = 1);
  static GroupRingElem one() { return GroupRingElem(FreeWord{}); }

  const std::map<FreeWord, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const FreeWord& w, const Integer& c);
  GroupRingElem& operator+=(const GroupRingElem& o);
  GroupRingElem& operator-=(const GroupRingElem& o);
  friend GroupRingElem operator+(GroupRingElem a, const GroupRingElem& b) { return a += b; }
  friend GroupRingElem operator-(GroupRingElem a, const GroupRingElem& b) { return a -= b; }
  friend GroupRingElem operator*(const GroupRingElem& a, const GroupRingElem& b);
  // Left multiplication by a group element.
  friend GroupRingElem operator*(const FreeWord& w, const GroupRingElem& a);

  friend bool operator==(const GroupRingElem&, const GroupRingElem&) = default;

  // "+2*s1 s2^-1 - 1*e" style, in key order; "0" when empty. Needs generator names.
  std::string to_string(const Presentation& names) const;
  std::string to_string() const;  // generators printed as x<index>

 private:
  std::map<FreeWord, Integer> terms_;
};

GroupRingElem fox_derivative(const FreeWord& w, GeneratorId x);

// Rows indexed by relators, columns by generators.
struct FoxJacobian {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<GroupRingElem> entries;  // row-major

  const GroupRingElem& operator()(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }
};

FoxJacobian jacobian(const Presentation& p);

// Checks sum_j (dw/dx_j)(x_j - 1) == w - 1 exactly in Z[F].
bool fundamental_check(const FreeWord& w);

}  // namespace nk

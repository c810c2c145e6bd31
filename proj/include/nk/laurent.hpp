#pragma once

// Exact Laurent polynomials over the integers, Z[t, t^-1].
//
// Storage is (lowest degree, coefficient vector from lowest to highest).
// Both ends of the coefficient vector are nonzero; the zero polynomial has
// an empty vector and lowest degree 0, so equality is structural.

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace nk {

using Integer = mpz_class;

class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT(google-explicit-constructor)
  explicit LaurentPoly(Integer c);
  LaurentPoly(int low, std::vector<Integer> coeffs);

  static LaurentPoly monomial(Integer c, int degree);
  static LaurentPoly t(int exponent = 1) { return monomial(1, exponent); }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_monomial() const { return coeffs_.size() == 1; }

  // Degree accessors require a nonzero polynomial.
  int low_degree() const;
  int high_degree() const;
  int span() const { return is_zero() ? 0 : static_cast<int>(coeffs_.size()) - 1; }
  std::size_t term_count() const;

  const std::vector<Integer>& coeffs() const { return coeffs_; }
  Integer coeff(int degree) const;
  const Integer& lowest_coeff() const;
  const Integer& highest_coeff() const;

  // Multiply by t^k.
  LaurentPoly shifted(int k) const;
  // Substitute t -> t^-1.
  LaurentPoly reciprocal() const;

  // Value at an integer point. Requires low_degree() >= 0 (or zero).
  Integer evaluate(const Integer& x) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Integer& c);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Integer& c) { return a *= c; }
  friend LaurentPoly operator*(const Integer& c, LaurentPoly a) { return a *= c; }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }

  // Text form "c*t^k + ..." from lowest to highest degree; "0" for zero.
  std::string to_string() const;
  static LaurentPoly parse(std::string_view text);

 private:
  void normalize();

  int low_ = 0;
  std::vector<Integer> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

// a / b when the quotient is a Laurent polynomial; throws std::domain_error
// otherwise (including b == 0).
LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b);

// Unit of Z((t)): nonzero with lowest coefficient +1 or -1.
bool is_novikov_unit(const LaurentPoly& p);

// Same predicate as is_novikov_unit, but rejects zero with std::invalid_argument.
bool is_monic(const LaurentPoly& p);

// a == +-t^k * b for some k.
bool equal_up_to_unit(const LaurentPoly& a, const LaurentPoly& b);

// Representative of p modulo +-t^k: lowest degree 0, lowest coefficient > 0.
LaurentPoly normalized(const LaurentPoly& p);

}  // namespace nk

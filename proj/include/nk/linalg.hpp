#pragma once

// Exact linear algebra over Z, Z[t, t^-1] and F_p[t].
//
// The fast paths (det, rank_over_function_field) evaluate the matrix at
// integer points and work with integer matrices; the points are independent
// and are processed with OpenMP. The *_symbolic variants run fraction-free
// elimination directly on polynomial entries and are kept as the serial
// reference the fast paths are tested against.

#include "nk/matrix.hpp"

#include <cstdint>
#include <vector>

namespace nk {

// Bareiss fraction-free elimination over Z.
Integer bareiss_det(IntMatrix m);
std::size_t bareiss_rank(IntMatrix m);

// Determinant by evaluation at consecutive integer nodes 2, 3, ... and exact
// Newton interpolation. Throws std::invalid_argument on non-square input.
LaurentPoly det(const PolyMatrix& m);

// Reference: Bareiss elimination over Z[t, t^-1] with exact polynomial division.
LaurentPoly det_symbolic(const PolyMatrix& m);

// Rank over Q(t). Each evaluation rank is a lower bound; a nonzero r x r
// minor has degree at most the row-degree bound D, so the maximum over D + 1
// distinct nodes is exact.
std::size_t rank_over_function_field(const PolyMatrix& m);

// Reference: fraction-free elimination over Z[t, t^-1].
std::size_t rank_symbolic(const PolyMatrix& m);

// ---- F_p coefficients -------------------------------------------------------

bool is_prime(std::uint64_t n);

// Polynomial over F_p, coefficients lowest first, trimmed (zero = empty).
struct ModPoly {
  std::vector<std::uint64_t> c;
  bool is_zero() const { return c.empty(); }
  friend bool operator==(const ModPoly&, const ModPoly&) = default;
};

struct ModPolyMatrix {
  std::uint64_t prime = 2;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<ModPoly> data;  // row-major
  // Row i was multiplied by t^row_shift[i] to land in F_p[t]; rank is unchanged.
  std::vector<int> row_shift;

  const ModPoly& operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

// Entrywise coefficient reduction. Throws std::invalid_argument if ell is not prime.
ModPolyMatrix reduce_mod(const PolyMatrix& m, std::uint64_t ell);

// Rank over F_ell(t) (equivalently F_ell((t))) by Bareiss over F_ell[t].
std::size_t rank_mod(const PolyMatrix& m, std::uint64_t ell);
std::size_t rank_mod(const ModPolyMatrix& m);

}  // namespace nk

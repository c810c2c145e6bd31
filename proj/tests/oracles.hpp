#pragma once

// Independent reference computations for tests. Nothing here calls the
// elimination or search code under test.

#include "nk/matrix.hpp"
#include "nk/presentation.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace oracle {

// Leibniz expansion; fine up to 7x7.
nk::LaurentPoly leibniz_det(const nk::PolyMatrix& m);

// det(V - t V^T) for a Seifert matrix V.
nk::LaurentPoly seifert_alexander(const std::vector<std::vector<long>>& v);

// Gaussian elimination over Q.
std::size_t rational_rank(const nk::IntMatrix& m);

// Rank over Q(t) as the maximum rank at the points 1..samples (after clearing
// negative powers row by row with plain multiplication).
std::size_t sampled_rank(const nk::PolyMatrix& m, int samples);

// Homomorphisms to S3 up to conjugation, by trying all 6^g tuples.
std::size_t s3_class_count(const nk::Presentation& p);

// Classical Alexander polynomial from the Fox matrix abelianised by hand:
// entries are sums of +-t^{exponent sum of the prefix}.
nk::PolyMatrix abelian_fox_matrix(const nk::Presentation& p);

std::string fixture(const std::string& name);

}  // namespace oracle

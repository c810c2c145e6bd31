#include "nk/linalg.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using nk::LaurentPoly;
using nk::PolyMatrix;

namespace {

PolyMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int max_deg, double zero_rate) {
  std::uniform_int_distribution<int> low(-2, 2), span(0, max_deg), coef(-3, 3);
  std::bernoulli_distribution zero(zero_rate);
  PolyMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      if (zero(rng)) continue;
      std::vector<nk::Integer> cs(static_cast<std::size_t>(span(rng)) + 1);
      for (auto& x : cs) x = coef(rng);
      m(i, j) = LaurentPoly(low(rng), std::move(cs));
    }
  return m;
}

}  // namespace

TEST_CASE("integer Bareiss") {
  nk::IntMatrix m(3, 3);
  const long v[3][3] = {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = v[i][j];
  CHECK(nk::bareiss_det(m) == 4);
  CHECK(nk::bareiss_rank(m) == 3);
  m(2, 0) = 2;
  m(2, 1) = -1;
  m(2, 2) = 0;
  CHECK(nk::bareiss_det(m) == 0);
  CHECK(nk::bareiss_rank(m) == oracle::rational_rank(m));
}

TEST_CASE("empty matrix conventions") {
  CHECK(nk::det(PolyMatrix(0, 0)) == LaurentPoly(1));
  CHECK(nk::det_symbolic(PolyMatrix(0, 0)) == LaurentPoly(1));
  CHECK(nk::rank_over_function_field(PolyMatrix(0, 3)) == 0);
  CHECK_THROWS_AS(nk::det(PolyMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("determinants agree with the Leibniz oracle") {
  std::mt19937 rng(3);
  for (int k = 0; k < 150; ++k) {
    const std::size_t n = 1 + rng() % 5;
    const PolyMatrix m = random_matrix(rng, n, n, 3, 0.3);
    const LaurentPoly ref = oracle::leibniz_det(m);
    CHECK(nk::det(m) == ref);
    CHECK(nk::det_symbolic(m) == ref);
  }
}

TEST_CASE("singular matrices") {
  std::mt19937 rng(5);
  for (int k = 0; k < 40; ++k) {
    PolyMatrix m = random_matrix(rng, 5, 5, 2, 0.2);
    const LaurentPoly f = LaurentPoly::parse("2 - t^-1");
    for (std::size_t j = 0; j < 5; ++j) m(4, j) = f * m(0, j) + m(2, j).shifted(1);
    CHECK(nk::det(m).is_zero());
    CHECK(nk::rank_over_function_field(m) <= 4);
    CHECK(nk::rank_over_function_field(m) == nk::rank_symbolic(m));
  }
}

TEST_CASE("rank over Q(t) matches the sampled rational oracle") {
  std::mt19937 rng(9);
  for (int k = 0; k < 100; ++k) {
    const std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
    PolyMatrix m = random_matrix(rng, r, c, 2, 0.5);
    if (r > 2)
      for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) * LaurentPoly::parse("1 + t") - m(1, j);
    const std::size_t ref = oracle::sampled_rank(m, 40);
    CHECK(nk::rank_over_function_field(m) == ref);
    CHECK(nk::rank_symbolic(m) == ref);
  }
}

TEST_CASE("rank modulo a prime") {
  PolyMatrix m(2, 2);
  m(0, 0) = LaurentPoly::parse("5 + 10*t");
  m(0, 1) = LaurentPoly::parse("t^-1");
  m(1, 0) = LaurentPoly::parse("5*t");
  m(1, 1) = LaurentPoly::parse("1 + t^3");
  CHECK(nk::rank_over_function_field(m) == 2);
  CHECK(nk::rank_mod(m, 5) == 1);
  CHECK(nk::rank_mod(m, 7) == 2);
  CHECK_THROWS_AS(nk::rank_mod(m, 6), std::invalid_argument);
  CHECK(nk::is_prime(13));
  CHECK_FALSE(nk::is_prime(1));
  CHECK_FALSE(nk::is_prime(91));
}

TEST_CASE("large primes reproduce the characteristic-zero rank") {
  std::mt19937 rng(21);
  for (int k = 0; k < 40; ++k) {
    const PolyMatrix m = random_matrix(rng, 4, 5, 2, 0.4);
    CHECK(nk::rank_mod(m, 1000003) == nk::rank_over_function_field(m));
  }
}

#include "nk/linalg.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace nk {

// ---- integers ---------------------------------------------------------------

Integer bareiss_det(IntMatrix m) {
  if (!m.is_square()) throw std::invalid_argument("bareiss_det: matrix is not square");
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
    const Integer& piv = m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const Integer& lead = m(i, k);
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer& a = m(i, j);
        a *= piv;
        mpz_submul(a.get_mpz_t(), lead.get_mpz_t(), m(k, j).get_mpz_t());
        mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = piv;
  }
  Integer d = m(n - 1, n - 1);
  if (sign < 0) d = -d;
  return d;
}

std::size_t bareiss_rank(IntMatrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t r = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c) == 0) ++p;
    if (p == rows) continue;
    m.swap_rows(r, p);
    const Integer& piv = m(r, c);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const Integer& lead = m(i, c);
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer& a = m(i, j);
        a *= piv;
        mpz_submul(a.get_mpz_t(), lead.get_mpz_t(), m(r, j).get_mpz_t());
        mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, c) = 0;
    }
    prev = piv;
    ++r;
  }
  return r;
}

// ---- Z[t, t^-1] -------------------------------------------------------------

namespace {

// Sum of the k largest entries.
int top_sum(std::vector<int> v, std::size_t k) {
  std::sort(v.begin(), v.end(), std::greater<>());
  k = std::min(k, v.size());
  return std::accumulate(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(k), 0);
}

// Newton form at nodes x_k = first + k to monomial coefficients.
std::vector<Integer> interpolate_consecutive(std::vector<Integer> v, long first) {
  const std::size_t n = v.size();
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = n - 1; i >= j; --i) {
      v[i] -= v[i - 1];
      mpz_divexact_ui(v[i].get_mpz_t(), v[i].get_mpz_t(), j);
    }
  }
  // p(t) = c_0 + (t - x_0)(c_1 + (t - x_1)(c_2 + ...))
  std::vector<Integer> p{v[n - 1]};
  for (std::size_t k = n - 1; k-- > 0;) {
    const Integer xk = first + static_cast<long>(k);
    std::vector<Integer> q(p.size() + 1, Integer(0));
    for (std::size_t d = 0; d < p.size(); ++d) {
      q[d + 1] += p[d];
      mpz_submul(q[d].get_mpz_t(), xk.get_mpz_t(), p[d].get_mpz_t());
    }
    q[0] += v[k];
    p = std::move(q);
  }
  return p;
}

constexpr long kFirstNode = 2;

}  // namespace

LaurentPoly det(const PolyMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("det: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  const RowNormalization rn = row_normalization(m);
  for (std::size_t i = 0; i < n; ++i) {
    bool zero_row = true;
    for (std::size_t j = 0; j < n && zero_row; ++j) zero_row = m(i, j).is_zero();
    if (zero_row) return {};
  }
  const PolyMatrix shifted = shift_rows(m, rn.shift);
  const int bound = std::accumulate(rn.degree.begin(), rn.degree.end(), 0);
  const auto npts = static_cast<std::ptrdiff_t>(bound) + 1;

  std::vector<Integer> values(static_cast<std::size_t>(npts));
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t k = 0; k < npts; ++k) {
    values[static_cast<std::size_t>(k)] = bareiss_det(evaluate(shifted, Integer(kFirstNode + k)));
  }

  const int total_shift = std::accumulate(rn.shift.begin(), rn.shift.end(), 0);
  return LaurentPoly(-total_shift, interpolate_consecutive(std::move(values), kFirstNode));
}

LaurentPoly det_symbolic(const PolyMatrix& input) {
  if (!input.is_square()) throw std::invalid_argument("det_symbolic: matrix is not square");
  PolyMatrix m = input;
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  bool negate = false;
  LaurentPoly prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m(p, k).is_zero()) ++p;
      if (p == n) return {};
      m.swap_rows(k, p);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = divide_exact(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
      }
    }
    prev = m(k, k);
  }
  return negate ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

std::size_t rank_over_function_field(const PolyMatrix& m) {
  const std::size_t full = std::min(m.rows(), m.cols());
  if (full == 0) return 0;
  const RowNormalization rn = row_normalization(m);
  const PolyMatrix shifted = shift_rows(m, rn.shift);
  const int bound = top_sum(rn.degree, full);
  const std::ptrdiff_t npts = static_cast<std::ptrdiff_t>(bound) + 1;

  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  const std::ptrdiff_t chunk = std::max<std::ptrdiff_t>(1, threads);
  std::size_t best = 0;
  for (std::ptrdiff_t start = 0; start < npts && best < full; start += chunk) {
    const std::ptrdiff_t stop = std::min(npts, start + chunk);
    std::vector<std::size_t> ranks(static_cast<std::size_t>(stop - start), 0);
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t k = start; k < stop; ++k) {
      ranks[static_cast<std::size_t>(k - start)] = bareiss_rank(evaluate(shifted, Integer(kFirstNode + k)));
    }
    best = std::max(best, *std::max_element(ranks.begin(), ranks.end()));
  }
  return best;
}

std::size_t rank_symbolic(const PolyMatrix& input) {
  PolyMatrix m = input;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t r = 0;
  LaurentPoly prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c).is_zero()) ++p;
    if (p == rows) continue;
    m.swap_rows(r, p);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        m(i, j) = divide_exact(m(i, j) * m(r, c) - m(i, c) * m(r, j), prev);
      }
      m(i, c) = LaurentPoly();
    }
    prev = m(r, c);
    ++r;
  }
  return r;
}

// ---- F_p[t] -----------------------------------------------------------------

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

void trim(ModPoly& f) {
  while (!f.c.empty() && f.c.back() == 0) f.c.pop_back();
}

ModPoly mul(const ModPoly& a, const ModPoly& b, u64 p) {
  if (a.is_zero() || b.is_zero()) return {};
  ModPoly r;
  r.c.assign(a.c.size() + b.c.size() - 1, 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] = (r.c[i + j] + mulmod(a.c[i], b.c[j], p)) % p;
  }
  trim(r);
  return r;
}

ModPoly sub(const ModPoly& a, const ModPoly& b, u64 p) {
  ModPoly r;
  r.c.assign(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] = (r.c[i] + p - b.c[i]) % p;
  trim(r);
  return r;
}

ModPoly divexact(const ModPoly& a, const ModPoly& b, u64 p) {
  if (b.is_zero()) throw std::domain_error("F_p[t] division by zero");
  if (a.is_zero()) return {};
  if (a.c.size() < b.c.size()) throw std::domain_error("F_p[t] division not exact");
  ModPoly rem = a;
  ModPoly q;
  q.c.assign(a.c.size() - b.c.size() + 1, 0);
  const u64 inv_lead = powmod(b.c.back(), p - 2, p);
  for (std::size_t k = q.c.size(); k-- > 0;) {
    const u64 top = rem.c[k + b.c.size() - 1];
    if (top == 0) continue;
    const u64 f = mulmod(top, inv_lead, p);
    q.c[k] = f;
    for (std::size_t j = 0; j < b.c.size(); ++j) rem.c[k + j] = (rem.c[k + j] + p - mulmod(f, b.c[j], p)) % p;
  }
  trim(rem);
  if (!rem.is_zero()) throw std::domain_error("F_p[t] division not exact");
  trim(q);
  return q;
}

}  // namespace

ModPolyMatrix reduce_mod(const PolyMatrix& m, std::uint64_t ell) {
  if (!is_prime(ell)) throw std::invalid_argument("reduce_mod: modulus " + std::to_string(ell) + " is not prime");
  ModPolyMatrix out;
  out.prime = ell;
  out.rows = m.rows();
  out.cols = m.cols();
  out.data.resize(m.rows() * m.cols());
  const RowNormalization rn = row_normalization(m);
  out.row_shift = rn.shift;
  const Integer modulus(static_cast<unsigned long>(ell));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const LaurentPoly& e = m(i, j);
      if (e.is_zero()) continue;
      ModPoly& f = out.data[i * m.cols() + j];
      const int off = e.low_degree() + rn.shift[i];
      f.c.assign(static_cast<std::size_t>(off) + e.coeffs().size(), 0);
      for (std::size_t k = 0; k < e.coeffs().size(); ++k) {
        Integer r;
        mpz_fdiv_r(r.get_mpz_t(), e.coeffs()[k].get_mpz_t(), modulus.get_mpz_t());
        f.c[static_cast<std::size_t>(off) + k] = r.get_ui();
      }
      trim(f);
    }
  }
  return out;
}

std::size_t rank_mod(const ModPolyMatrix& input) {
  const u64 p = input.prime;
  std::vector<ModPoly> a = input.data;
  const std::size_t rows = input.rows;
  const std::size_t cols = input.cols;
  auto at = [&](std::size_t i, std::size_t j) -> ModPoly& { return a[i * cols + j]; };
  std::size_t r = 0;
  ModPoly prev{{1}};
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && at(piv, c).is_zero()) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(at(r, j), at(piv, j));
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        at(i, j) = divexact(sub(mul(at(i, j), at(r, c), p), mul(at(i, c), at(r, j), p), p), prev, p);
      }
      at(i, c) = {};
    }
    prev = at(r, c);
    ++r;
  }
  return r;
}

std::size_t rank_mod(const PolyMatrix& m, std::uint64_t ell) { return rank_mod(reduce_mod(m, ell)); }

}  // namespace nk

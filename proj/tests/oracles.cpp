#include "oracles.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>

namespace oracle {

using nk::LaurentPoly;

LaurentPoly leibniz_det(const nk::PolyMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  LaurentPoly total;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    LaurentPoly term(1);
    for (std::size_t i = 0; i < n && !term.is_zero(); ++i) term *= m(i, perm[i]);
    if (inversions % 2) total -= term;
    else total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

LaurentPoly seifert_alexander(const std::vector<std::vector<long>>& v) {
  const std::size_t n = v.size();
  nk::PolyMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = LaurentPoly(v[i][j]) - LaurentPoly::monomial(v[j][i], 1);
  return leibniz_det(m);
}

std::size_t rational_rank(const nk::IntMatrix& m) {
  std::vector<std::vector<mpq_class>> a(m.rows(), std::vector<mpq_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t p = rank;
    while (p < m.rows() && a[p][c] == 0) ++p;
    if (p == m.rows()) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t i = rank + 1; i < m.rows(); ++i) {
      if (a[i][c] == 0) continue;
      const mpq_class f = a[i][c] / a[rank][c];
      for (std::size_t j = c; j < m.cols(); ++j) a[i][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

std::size_t sampled_rank(const nk::PolyMatrix& m, int samples) {
  nk::PolyMatrix shifted = m;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    int low = 0;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) low = std::min(low, m(i, j).low_degree());
    for (std::size_t j = 0; j < m.cols(); ++j) shifted(i, j) = m(i, j) * LaurentPoly::t(-low);
  }
  std::size_t best = 0;
  for (int x = 1; x <= samples; ++x) {
    nk::IntMatrix e(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) {
        mpz_class v = 0, pw = 1;
        const auto& p = shifted(i, j);
        if (!p.is_zero()) {
          for (int d = 0; d < p.low_degree(); ++d) pw *= x;
          for (const auto& c : p.coeffs()) {
            v += c * pw;
            pw *= x;
          }
        }
        e(i, j) = v;
      }
    best = std::max(best, rational_rank(e));
  }
  return best;
}

namespace {

using P3 = std::array<int, 3>;

P3 compose(const P3& a, const P3& b) { return {b[a[0]], b[a[1]], b[a[2]]}; }  // a first
P3 inv(const P3& a) {
  P3 r{};
  for (int i = 0; i < 3; ++i) r[a[i]] = i;
  return r;
}

}  // namespace

std::size_t s3_class_count(const nk::Presentation& p) {
  std::vector<P3> s3;
  P3 base{0, 1, 2};
  do s3.push_back(base);
  while (std::next_permutation(base.begin(), base.end()));
  const std::size_t g = p.generator_count();
  std::set<std::vector<P3>> classes;
  std::vector<std::size_t> idx(g, 0);
  for (;;) {
    std::vector<P3> img(g);
    for (std::size_t i = 0; i < g; ++i) img[i] = s3[idx[i]];
    bool ok = true;
    for (const auto& r : p.relators()) {
      P3 acc{0, 1, 2};
      for (const auto& l : r.letters()) acc = compose(acc, l.sign > 0 ? img[l.gen] : inv(img[l.gen]));
      if (acc != P3{0, 1, 2}) {
        ok = false;
        break;
      }
    }
    if (ok) {
      std::vector<P3> best = img;
      for (const auto& c : s3) {
        std::vector<P3> conj(g);
        for (std::size_t i = 0; i < g; ++i) conj[i] = compose(compose(inv(c), img[i]), c);
        best = std::min(best, conj);
      }
      classes.insert(best);
    }
    std::size_t k = 0;
    while (k < g && ++idx[k] == s3.size()) idx[k++] = 0;
    if (k == g) break;
  }
  return classes.size();
}

nk::PolyMatrix abelian_fox_matrix(const nk::Presentation& p) {
  nk::PolyMatrix m(p.relator_count(), p.generator_count());
  for (std::size_t i = 0; i < p.relator_count(); ++i) {
    long exp = 0;
    for (const auto& l : p.relators()[i].letters()) {
      const int x = p.xi()[l.gen];
      if (l.sign > 0) {
        m(i, l.gen) += LaurentPoly::t(static_cast<int>(exp));
        exp += x;
      } else {
        exp -= x;
        m(i, l.gen) -= LaurentPoly::t(static_cast<int>(exp));
      }
    }
  }
  return m;
}

std::string fixture(const std::string& name) { return std::string(NK_FIXTURE_DIR) + "/" + name; }

}  // namespace oracle

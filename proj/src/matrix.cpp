#include "nk/matrix.hpp"

#include <algorithm>
#include <limits>

namespace nk {

IntMatrix evaluate(const PolyMatrix& m, const Integer& x) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).evaluate(x);
  return out;
}

PolyMatrix to_poly(const IntMatrix& m) {
  PolyMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = LaurentPoly(m(i, j));
  return out;
}

PolyMatrix shift_rows(const PolyMatrix& m, std::span<const int> shift) {
  PolyMatrix out = m;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).shifted(shift[i]);
  return out;
}

RowNormalization row_normalization(const PolyMatrix& m) {
  RowNormalization rn;
  rn.shift.assign(m.rows(), 0);
  rn.degree.assign(m.rows(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    int lo = std::numeric_limits<int>::max();
    int hi = std::numeric_limits<int>::min();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const auto& e = m(i, j);
      if (e.is_zero()) continue;
      lo = std::min(lo, e.low_degree());
      hi = std::max(hi, e.high_degree());
    }
    if (lo == std::numeric_limits<int>::max()) continue;
    rn.shift[i] = -lo;
    rn.degree[i] = hi - lo;
  }
  return rn;
}

}  // namespace nk

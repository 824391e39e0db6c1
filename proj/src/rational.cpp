#include "verlinde/rational.hpp"

#include <stdexcept>

namespace verlinde {

RatMatrix inverse_exact(RatMatrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse_exact: matrix not square");
  const Eigen::Index n = m.rows();
  RatMatrix inv = RatMatrix::Identity(n, n);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index piv = col;
    while (piv < n && m(piv, col).is_zero()) ++piv;
    if (piv == n) throw std::invalid_argument("inverse_exact: singular matrix");
    if (piv != col) {
      m.row(piv).swap(m.row(col));
      inv.row(piv).swap(inv.row(col));
    }
    const Rational pivot = m(col, col);
    for (Eigen::Index j = 0; j < n; ++j) {
      m(col, j) /= pivot;
      inv(col, j) /= pivot;
    }
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == col || m(r, col).is_zero()) continue;
      const Rational f = m(r, col);
      for (Eigen::Index j = 0; j < n; ++j) {
        m(r, j) -= f * m(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

} // namespace verlinde

#include "msregion/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace msr {

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols, rows);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols != b.rows) throw std::invalid_argument("matrix shapes do not match");
  RationalMatrix out(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      if (sign(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols; ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

namespace {

// In-place RREF; returns the pivot columns.
std::vector<std::size_t> reduce(RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
    std::size_t p = row;
    while (p < m.rows && sign(m(p, col)) == 0) ++p;
    if (p == m.rows) continue;
    if (p != row)
      for (std::size_t c = 0; c < m.cols; ++c) std::swap(m(p, c), m(row, c));
    Rational inv = 1 / m(row, col);
    for (std::size_t c = 0; c < m.cols; ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows; ++r) {
      if (r == row || sign(m(r, col)) == 0) continue;
      Rational f = m(r, col);
      for (std::size_t c = 0; c < m.cols; ++c) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

RationalMatrix rref(const RationalMatrix& m) {
  RationalMatrix work = m;
  auto pivots = reduce(work);
  RationalMatrix out(pivots.size(), m.cols);
  for (std::size_t r = 0; r < pivots.size(); ++r)
    for (std::size_t c = 0; c < m.cols; ++c) out(r, c) = work(r, c);
  return out;
}

std::size_t rank(const RationalMatrix& m) {
  RationalMatrix work = m;
  return reduce(work).size();
}

RationalMatrix null_space(const RationalMatrix& m) {
  RationalMatrix work = m;
  auto pivots = reduce(work);
  std::vector<bool> is_pivot(m.cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  RationalMatrix basis(free_cols.size(), m.cols);
  for (std::size_t i = 0; i < free_cols.size(); ++i) {
    std::size_t f = free_cols[i];
    basis(i, f) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) basis(i, pivots[r]) = -work(r, f);
  }
  return rref(basis);
}

}  // namespace msr

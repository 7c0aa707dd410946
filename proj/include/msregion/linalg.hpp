#pragma once

#include "msregion/rational.hpp"

#include <vector>

namespace msr {

/// Dense row-major matrix of rationals.
struct RationalMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Rational> data;

  RationalMatrix() = default;
  RationalMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, Rational(0)) {}

  Rational& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

  RationalMatrix transpose() const;
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows == b.rows && a.cols == b.cols && a.data == b.data;
  }
};

/// Reduced row echelon form with unit pivots; zero rows dropped.
RationalMatrix rref(const RationalMatrix& m);
std::size_t rank(const RationalMatrix& m);
/// Basis of {v : m v = 0} as rows, in RREF.
RationalMatrix null_space(const RationalMatrix& m);

}  // namespace msr

#pragma once

// Minimal dense row-major f64 matrix. Accumulation order in matmul is
// fixed (ascending k per output element) so results are reproducible and
// comparable against naive per-element oracles.

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "fedsim/errors.hpp"

namespace fedsim {

struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;  // row-major, data.size() == rows * cols

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c, double fill = 0.0)
      : rows(r), cols(c), data(r * c, fill) {}

  double& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

  double* row(std::size_t r) { return data.data() + r * cols; }
  const double* row(std::size_t r) const { return data.data() + r * cols; }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  bool all_finite() const {
    for (double v : data)
      if (!std::isfinite(v)) return false;
    return true;
  }
};

inline Matrix matmul(const Matrix& a, const Matrix& b) {
  if (a.cols != b.rows) {
    throw ConfigError("matmul: dimension mismatch (" + std::to_string(a.rows) + "x" +
                      std::to_string(a.cols) + " * " + std::to_string(b.rows) + "x" +
                      std::to_string(b.cols) + ")");
  }
  Matrix c(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i) {
    const double* arow = a.row(i);
    double* crow = c.row(i);
    for (std::size_t k = 0; k < a.cols; ++k) {
      const double aik = arow[k];
      const double* brow = b.row(k);
      for (std::size_t j = 0; j < b.cols; ++j) crow[j] += aik * brow[j];
    }
  }
  return c;
}

inline Matrix transpose(const Matrix& a) {
  Matrix t(a.cols, a.rows);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < a.cols; ++j) t(j, i) = a(i, j);
  return t;
}

}  // namespace fedsim

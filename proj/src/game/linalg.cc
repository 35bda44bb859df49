#include "smgame/linalg.h"

#include <algorithm>
#include <cmath>

#include "smgame/errors.h"
#include "smgame/kernels.h"

namespace smgame {

Matrix Matrix::Identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::FromRows(
    std::initializer_list<std::initializer_list<double>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  Matrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw ArgumentError("ragged matrix rows");
    std::copy(row.begin(), row.end(), m.data() + i * c);
    ++i;
  }
  return m;
}

Matrix Matrix::Transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

Matrix Matrix::Block(std::size_t row0, std::size_t col0, std::size_t rows,
                     std::size_t cols) const {
  if (row0 + rows > rows_ || col0 + cols > cols_) {
    throw ArgumentError("matrix block out of range");
  }
  Matrix b(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) b(r, c) = (*this)(row0 + r, col0 + c);
  }
  return b;
}

double Matrix::MaxAbs() const {
  return kernels::Active().max_abs(data_.data(), data_.size());
}

double MaxAbsDifference(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ArgumentError("matrix shapes differ");
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < a.rows() * a.cols(); ++i) {
    worst = std::max(worst, std::fabs(a.data()[i] - b.data()[i]));
  }
  return worst;
}

double InfNorm(std::span<const double> x) {
  return kernels::Active().max_abs(x.data(), x.size());
}

double Norm2(std::span<const double> x) { return std::sqrt(kernels::Dot(x, x)); }

}  // namespace smgame

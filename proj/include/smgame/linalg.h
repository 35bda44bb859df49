#ifndef SMGAME_LINALG_H_
#define SMGAME_LINALG_H_

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace smgame {

using Vector = std::vector<double>;

// Dense row-major matrix. Games here are desk-scale, so dense storage is the
// only representation.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix Identity(std::size_t n);
  static Matrix FromRows(std::initializer_list<std::initializer_list<double>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const double> Row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  const double* data() const { return data_.data(); }
  double* data() { return data_.data(); }

  Matrix Transposed() const;
  // Copy of the [row0, row0 + rows) x [col0, col0 + cols) block.
  Matrix Block(std::size_t row0, std::size_t col0, std::size_t rows,
               std::size_t cols) const;
  double MaxAbs() const;

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

double MaxAbsDifference(const Matrix& a, const Matrix& b);
double InfNorm(std::span<const double> x);
double Norm2(std::span<const double> x);

}  // namespace smgame

#endif  // SMGAME_LINALG_H_

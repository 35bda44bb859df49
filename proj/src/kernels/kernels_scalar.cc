#include <cmath>

#include "kernels_internal.h"

namespace smgame::kernels {
namespace {

double DotScalar(const double* x, const double* y, std::size_t n) {
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) sum += x[i] * y[i];
  return sum;
}

void AxpyScalar(double a, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] = y[i] + a * x[i];
}

void ScaledAddScalar(const double* x, double a, const double* y, double* out,
                     std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = x[i] + a * y[i];
}

void GemvScalar(const double* m, std::size_t rows, std::size_t cols,
                const double* x, double* y) {
  for (std::size_t r = 0; r < rows; ++r) y[r] = DotScalar(m + r * cols, x, cols);
}

double QuadFormScalar(const double* m, std::size_t n, const double* x) {
  double sum = 0.0;
  for (std::size_t r = 0; r < n; ++r) sum += x[r] * DotScalar(m + r * n, x, n);
  return sum;
}

void Rk4CombineScalar(const double* w, double dt, const double* k1,
                      const double* k2, const double* k3, const double* k4,
                      double* out, std::size_t n) {
  const double sixth = dt * (1.0 / 6.0);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = w[i] + sixth * ((k1[i] + 2.0 * (k2[i] + k3[i])) + k4[i]);
  }
}

double MaxAbsScalar(const double* x, std::size_t n) {
  double best = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double a = std::fabs(x[i]);
    best = a > best ? a : best;
  }
  return best;
}

}  // namespace

const KernelTable& ScalarKernels() {
  static const KernelTable table{
      "scalar",     DotScalar,        AxpyScalar,  ScaledAddScalar,
      GemvScalar,   QuadFormScalar,   Rk4CombineScalar, MaxAbsScalar,
  };
  return table;
}

}  // namespace smgame::kernels

#ifndef SMGAME_KERNELS_H_
#define SMGAME_KERNELS_H_

#include <cstddef>
#include <span>
#include <string_view>

#include "smgame/linalg.h"

// Dense inner loops behind the Jacobian algebra and the integrators. Every
// kernel has a scalar reference; the SIMD variants are selected once at
// startup from the CPU's capabilities (override with SMGAME_KERNELS=scalar).
//
// Elementwise kernels (axpy, scaled_add, rk4_combine, max_abs) are bit-exact
// against the scalar reference. Reductions (dot, gemv, quad_form) reassociate
// the sum and agree to a few ulps of the summed magnitudes.
namespace smgame::kernels {

struct KernelTable {
  const char* name;
  double (*dot)(const double* x, const double* y, std::size_t n);
  // y += a * x
  void (*axpy)(double a, const double* x, double* y, std::size_t n);
  // out = x + a * y
  void (*scaled_add)(const double* x, double a, const double* y, double* out,
                     std::size_t n);
  // y = M x, M row-major rows x cols
  void (*gemv)(const double* m, std::size_t rows, std::size_t cols,
               const double* x, double* y);
  // x^T M x, M row-major n x n
  double (*quad_form)(const double* m, std::size_t n, const double* x);
  // out = w + dt/6 (k1 + 2 (k2 + k3) + k4)
  void (*rk4_combine)(const double* w, double dt, const double* k1,
                      const double* k2, const double* k3, const double* k4,
                      double* out, std::size_t n);
  double (*max_abs)(const double* x, std::size_t n);
};

const KernelTable& ScalarKernels();

// nullptr when the variant was not compiled in or the CPU lacks the ISA.
const KernelTable* Avx2Kernels();

// The table used by the library. Chosen on first call and fixed afterwards.
const KernelTable& Active();

// Convenience wrappers over Active().
double Dot(std::span<const double> x, std::span<const double> y);
void Axpy(double a, std::span<const double> x, std::span<double> y);
Vector Gemv(const Matrix& m, std::span<const double> x);
double QuadraticForm(const Matrix& m, std::span<const double> x);

}  // namespace smgame::kernels

#endif  // SMGAME_KERNELS_H_

// Compiled with -mavx2 -mfma. Only reached after a runtime CPU check.
#include <immintrin.h>

#include <cmath>

#include "kernels_internal.h"

namespace smgame::kernels::internal {
namespace {

inline double HorizontalSum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d pair = _mm_add_pd(lo, hi);
  const __m128d swapped = _mm_unpackhi_pd(pair, pair);
  return _mm_cvtsd_f64(_mm_add_sd(pair, swapped));
}

double DotAvx2(const double* x, const double* y, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i + 4),
                           _mm256_loadu_pd(y + i + 4), acc1);
  }
  for (; i + 4 <= n; i += 4) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
  }
  double sum = HorizontalSum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) sum += x[i] * y[i];
  return sum;
}

// Elementwise kernels avoid FMA so they round exactly like the scalar loop.
void AxpyAvx2(double a, const double* x, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d prod = _mm256_mul_pd(va, _mm256_loadu_pd(x + i));
    _mm256_storeu_pd(y + i, _mm256_add_pd(_mm256_loadu_pd(y + i), prod));
  }
  for (; i < n; ++i) y[i] = y[i] + a * x[i];
}

void ScaledAddAvx2(const double* x, double a, const double* y, double* out,
                   std::size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d prod = _mm256_mul_pd(va, _mm256_loadu_pd(y + i));
    _mm256_storeu_pd(out + i, _mm256_add_pd(_mm256_loadu_pd(x + i), prod));
  }
  for (; i < n; ++i) out[i] = x[i] + a * y[i];
}

void GemvAvx2(const double* m, std::size_t rows, std::size_t cols,
              const double* x, double* y) {
  for (std::size_t r = 0; r < rows; ++r) y[r] = DotAvx2(m + r * cols, x, cols);
}

double QuadFormAvx2(const double* m, std::size_t n, const double* x) {
  double sum = 0.0;
  for (std::size_t r = 0; r < n; ++r) sum += x[r] * DotAvx2(m + r * n, x, n);
  return sum;
}

void Rk4CombineAvx2(const double* w, double dt, const double* k1,
                    const double* k2, const double* k3, const double* k4,
                    double* out, std::size_t n) {
  const double sixth = dt * (1.0 / 6.0);
  const __m256d vsixth = _mm256_set1_pd(sixth);
  const __m256d two = _mm256_set1_pd(2.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d mid =
        _mm256_mul_pd(two, _mm256_add_pd(_mm256_loadu_pd(k2 + i),
                                         _mm256_loadu_pd(k3 + i)));
    const __m256d total = _mm256_add_pd(
        _mm256_add_pd(_mm256_loadu_pd(k1 + i), mid), _mm256_loadu_pd(k4 + i));
    _mm256_storeu_pd(out + i, _mm256_add_pd(_mm256_loadu_pd(w + i),
                                            _mm256_mul_pd(vsixth, total)));
  }
  for (; i < n; ++i) {
    out[i] = w[i] + sixth * ((k1[i] + 2.0 * (k2[i] + k3[i])) + k4[i]);
  }
}

double MaxAbsAvx2(const double* x, std::size_t n) {
  const __m256d sign = _mm256_set1_pd(-0.0);
  __m256d best = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    best = _mm256_max_pd(best, _mm256_andnot_pd(sign, _mm256_loadu_pd(x + i)));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, best);
  double out = lanes[0];
  for (int k = 1; k < 4; ++k) out = lanes[k] > out ? lanes[k] : out;
  for (; i < n; ++i) {
    const double a = std::fabs(x[i]);
    out = a > out ? a : out;
  }
  return out;
}

}  // namespace

const KernelTable& Avx2Table() {
  static const KernelTable table{
      "avx2",   DotAvx2,      AxpyAvx2,       ScaledAddAvx2,
      GemvAvx2, QuadFormAvx2, Rk4CombineAvx2, MaxAbsAvx2,
  };
  return table;
}

}  // namespace smgame::kernels::internal

#include <cstdlib>
#include <cstring>

#include "kernels_internal.h"
#include "smgame/errors.h"

namespace smgame::kernels {
namespace {

bool CpuHasAvx2() {
#if defined(SMGAME_BUILD_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const KernelTable& Select() {
  const char* requested = std::getenv("SMGAME_KERNELS");
  if (requested != nullptr && std::strcmp(requested, "scalar") == 0) {
    return ScalarKernels();
  }
  if (const KernelTable* avx2 = Avx2Kernels()) return *avx2;
  return ScalarKernels();
}

void CheckSizes(std::size_t a, std::size_t b) {
  if (a != b) throw ArgumentError("kernel operands have different lengths");
}

}  // namespace

const KernelTable* Avx2Kernels() {
#if defined(SMGAME_BUILD_AVX2)
  static const bool available = CpuHasAvx2();
  return available ? &internal::Avx2Table() : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& Active() {
  static const KernelTable& table = Select();
  return table;
}

double Dot(std::span<const double> x, std::span<const double> y) {
  CheckSizes(x.size(), y.size());
  return Active().dot(x.data(), y.data(), x.size());
}

void Axpy(double a, std::span<const double> x, std::span<double> y) {
  CheckSizes(x.size(), y.size());
  Active().axpy(a, x.data(), y.data(), x.size());
}

Vector Gemv(const Matrix& m, std::span<const double> x) {
  CheckSizes(m.cols(), x.size());
  Vector y(m.rows());
  Active().gemv(m.data(), m.rows(), m.cols(), x.data(), y.data());
  return y;
}

double QuadraticForm(const Matrix& m, std::span<const double> x) {
  CheckSizes(m.rows(), m.cols());
  CheckSizes(m.cols(), x.size());
  return Active().quad_form(m.data(), m.rows(), x.data());
}

}  // namespace smgame::kernels

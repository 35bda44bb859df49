#ifndef SMGAME_TESTS_ORACLES_H_
#define SMGAME_TESTS_ORACLES_H_

// Independent reference computations used as test oracles. Nothing here calls
// into the library's numerical code paths.

#include <array>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace smgame::testing {

using Vec = std::vector<double>;
using Mat2 = std::array<std::array<double, 2>, 2>;

// exp(t M) w0 for a real 2x2 M, from the Cayley-Hamilton closed form
//   exp(tM) = e^{mt} [c(t) I + s(t) (M - m I)],  m = tr M / 2,
// with (c, s) = (cos wt, sin wt / w), (cosh wt, sinh wt / w) or (1, t)
// depending on the sign of the discriminant m^2 - det M.
inline std::array<double, 2> Expm2x2Apply(const Mat2& m, double t,
                                          const std::array<double, 2>& w0) {
  const double half_trace = 0.5 * (m[0][0] + m[1][1]);
  const double det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  const double disc = half_trace * half_trace - det;
  double c = 1.0;
  double s = t;
  if (disc < 0.0) {
    const double w = std::sqrt(-disc);
    c = std::cos(w * t);
    s = std::sin(w * t) / w;
  } else if (disc > 0.0) {
    const double w = std::sqrt(disc);
    c = std::cosh(w * t);
    s = std::sinh(w * t) / w;
  }
  const double scale = std::exp(half_trace * t);
  const double a00 = c + s * (m[0][0] - half_trace);
  const double a01 = s * m[0][1];
  const double a10 = s * m[1][0];
  const double a11 = c + s * (m[1][1] - half_trace);
  return {scale * (a00 * w0[0] + a01 * w0[1]),
          scale * (a10 * w0[0] + a11 * w0[1])};
}

// (f(x + h e_k) - f(x - h e_k)) / 2h
inline double PartialDerivative(const std::function<double(const Vec&)>& f,
                                Vec x, std::size_t k, double h) {
  const double x0 = x[k];
  x[k] = x0 + h;
  const double up = f(x);
  x[k] = x0 - h;
  const double down = f(x);
  return (up - down) / (2.0 * h);
}

// d/ds f(x + s v) at s = 0, fourth-order central stencil.
inline double DirectionalDerivative(const std::function<double(const Vec&)>& f,
                                    const Vec& x, const Vec& v, double h) {
  auto at = [&](double s) {
    Vec y = x;
    for (std::size_t k = 0; k < y.size(); ++k) y[k] += s * v[k];
    return f(y);
  };
  return (-at(2 * h) + 8 * at(h) - 8 * at(-h) + at(-2 * h)) / (12.0 * h);
}

inline std::vector<Vec> UniformPoints(std::size_t dim, std::size_t count,
                                      double lo, double hi,
                                      std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(lo, hi);
  std::vector<Vec> out(count, Vec(dim));
  for (Vec& p : out) {
    for (double& x : p) x = u(rng);
  }
  return out;
}

inline double Norm(const Vec& x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return std::sqrt(s);
}

inline std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Fresh empty directory under the system temp dir.
inline std::filesystem::path ScratchDir(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / ("smgame_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace smgame::testing

#endif  // SMGAME_TESTS_ORACLES_H_

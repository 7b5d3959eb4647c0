#pragma once

#include "coorbit/frame.hpp"
#include "coorbit/hilbert.hpp"
#include "coorbit/types.hpp"

#include <random>

namespace coorbit::testing {

/// Test-side RNG, independent of the library's generator on purpose.
class Rand {
 public:
  explicit Rand(std::uint64_t seed) : gen_(seed) {}

  double real() { return dist_(gen_); }
  cdouble complex_() { return {dist_(gen_), dist_(gen_)}; }

  cvec vector(index_t n) {
    cvec v(n);
    for (index_t i = 0; i < n; ++i) v(i) = complex_();
    return v;
  }

  cmat matrix(index_t rows, index_t cols) {
    cmat a(rows, cols);
    for (index_t j = 0; j < cols; ++j)
      for (index_t i = 0; i < rows; ++i) a(i, j) = complex_();
    return a;
  }

  /// Random frame: gaussian columns, re-drawn if the spanning check fails
  /// (practically never for m >= d).
  Frame frame(index_t d, index_t m) { return Frame(matrix(d, m)); }

  rvec positive(index_t n, double lo = 0.25, double hi = 4.0) {
    std::uniform_real_distribution<double> u(lo, hi);
    rvec v(n);
    for (index_t i = 0; i < n; ++i) v(i) = u(gen_);
    return v;
  }

 private:
  std::mt19937_64 gen_;
  std::normal_distribution<double> dist_;
};

inline const Frame& mercedes() {
  static const Frame frame = mercedes_frame();
  return frame;
}

/// {e1, e1, e2} in C^2: the smallest redundant non-tight example.
inline Frame doubled_e1() {
  cmat m(2, 3);
  m << 1, 1, 0,
       0, 0, 1;
  return Frame(m);
}

}  // namespace coorbit::testing

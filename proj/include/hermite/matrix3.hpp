#pragma once

#include <array>
#include <cstddef>

namespace hermite {

// Dense 3x3 matrix over an exact ring (Rat or Integer).
template <class T>
struct Mat3 {
  std::array<std::array<T, 3>, 3> m{};

  static Mat3 identity() {
    Mat3 out;
    for (std::size_t i = 0; i < 3; ++i) out.m[i][i] = 1;
    return out;
  }

  T& operator()(std::size_t i, std::size_t j) { return m[i][j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return m[i][j]; }

  T trace() const { return m[0][0] + m[1][1] + m[2][2]; }

  T determinant() const {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  }

  friend Mat3 operator*(const Mat3& a, const Mat3& b) {
    Mat3 out;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        T acc = 0;
        for (std::size_t k = 0; k < 3; ++k) acc += a.m[i][k] * b.m[k][j];
        out.m[i][j] = acc;
      }
    return out;
  }

  friend bool operator==(const Mat3& a, const Mat3& b) {
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        if (a.m[i][j] != b.m[i][j]) return false;
    return true;
  }
};

template <class T>
Mat3<T> power(Mat3<T> base, unsigned n) {
  Mat3<T> out = Mat3<T>::identity();
  while (n != 0) {
    if (n & 1u) out = out * base;
    base = base * base;
    n >>= 1u;
  }
  return out;
}

}  // namespace hermite

#pragma once

#include <array>
#include <string>

#include "hermite/cubic_poly.hpp"
#include "hermite/matrix3.hpp"
#include "hermite/rational.hpp"

namespace hermite {

// Element c0 + c1*alpha + c2*alpha^2 of Q(alpha), alpha a root of `poly`.
// Multiplication reduces with alpha^3 = p alpha^2 + q alpha + r, so the
// arithmetic is that of Q[t]/(f) and is valid for any f; inversion needs f
// irreducible.
class FieldElem {
 public:
  explicit FieldElem(CubicPoly poly, Rat c0 = 0, Rat c1 = 0, Rat c2 = 0);

  static FieldElem generator(const CubicPoly& poly) { return FieldElem(poly, 0, 1, 0); }

  const CubicPoly& poly() const { return poly_; }
  const Rat& c0() const { return c_[0]; }
  const Rat& c1() const { return c_[1]; }
  const Rat& c2() const { return c_[2]; }
  const std::array<Rat, 3>& coords() const { return c_; }

  bool is_zero() const { return c_[0] == 0 && c_[1] == 0 && c_[2] == 0; }
  bool is_rational() const { return c_[1] == 0 && c_[2] == 0; }

  // Column j holds the coordinates of e * alpha^j.
  Mat3<Rat> multiplication_matrix() const;

  FieldElem& operator+=(const FieldElem& o);
  FieldElem& operator-=(const FieldElem& o);
  FieldElem& operator*=(const FieldElem& o);
  FieldElem& operator+=(const Rat& s);
  FieldElem& operator-=(const Rat& s);
  FieldElem& operator*=(const Rat& s);

  friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
  friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
  friend FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }
  friend FieldElem operator+(FieldElem a, const Rat& s) { return a += s; }
  friend FieldElem operator+(const Rat& s, FieldElem a) { return a += s; }
  friend FieldElem operator-(FieldElem a, const Rat& s) { return a -= s; }
  friend FieldElem operator*(FieldElem a, const Rat& s) { return a *= s; }
  friend FieldElem operator*(const Rat& s, FieldElem a) { return a *= s; }
  FieldElem operator-() const;

  friend bool operator==(const FieldElem& a, const FieldElem& b) {
    return a.poly_ == b.poly_ && a.c_ == b.c_;
  }

 private:
  void check_same(const FieldElem& o) const;

  CubicPoly poly_;
  std::array<Rat, 3> c_;
};

// Exact inverse via the multiplication-matrix system M(e) v = (1, 0, 0)^T.
// Throws std::domain_error for e = 0 and std::logic_error when M(e) is
// singular (the polynomial was reducible).
FieldElem invert(const FieldElem& e);
FieldElem operator/(const FieldElem& a, const FieldElem& b);
FieldElem pow(FieldElem base, unsigned n);

// Linear functionals Q(alpha) -> Q over the basis {1, alpha, alpha^2}:
//   f: 1 -> 1, alpha -> p, alpha^2 -> 2z + p^2 + 2q
//   g: 1 -> 1, alpha -> p, alpha^2 -> z + p^2 + q      (so g(r/alpha) = z)
Rat f_map(const FieldElem& e, const Integer& z);
Rat g_map(const FieldElem& e, const Integer& z);

// e.g. "1/2 - 1/2*a^2"
std::string to_string(const FieldElem& e, const char* symbol = "a");

}  // namespace hermite

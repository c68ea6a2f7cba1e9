#include "hermite/cubic_field.hpp"

#include <stdexcept>
#include <utility>

namespace hermite {

FieldElem::FieldElem(CubicPoly poly, Rat c0, Rat c1, Rat c2)
    : poly_(std::move(poly)), c_{std::move(c0), std::move(c1), std::move(c2)} {}

void FieldElem::check_same(const FieldElem& o) const {
  if (!(poly_ == o.poly_)) throw std::invalid_argument("field elements over different polynomials");
}

FieldElem& FieldElem::operator+=(const FieldElem& o) {
  check_same(o);
  for (std::size_t i = 0; i < 3; ++i) c_[i] += o.c_[i];
  return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& o) {
  check_same(o);
  for (std::size_t i = 0; i < 3; ++i) c_[i] -= o.c_[i];
  return *this;
}

FieldElem& FieldElem::operator*=(const FieldElem& o) {
  check_same(o);
  const auto& a = c_;
  const auto& b = o.c_;
  Rat d0 = a[0] * b[0];
  Rat d1 = a[0] * b[1] + a[1] * b[0];
  Rat d2 = a[0] * b[2] + a[1] * b[1] + a[2] * b[0];
  Rat d3 = a[1] * b[2] + a[2] * b[1];
  Rat d4 = a[2] * b[2];
  const Rat& p = poly_.p;
  const Rat& q = poly_.q;
  const Rat& r = poly_.r;
  // alpha^3 = p a^2 + q a + r,  alpha^4 = (p^2+q) a^2 + (pq+r) a + pr
  c_[0] = d0 + r * d3 + p * r * d4;
  c_[1] = d1 + q * d3 + (p * q + r) * d4;
  c_[2] = d2 + p * d3 + (p * p + q) * d4;
  return *this;
}

FieldElem& FieldElem::operator+=(const Rat& s) {
  c_[0] += s;
  return *this;
}

FieldElem& FieldElem::operator-=(const Rat& s) {
  c_[0] -= s;
  return *this;
}

FieldElem& FieldElem::operator*=(const Rat& s) {
  for (auto& c : c_) c *= s;
  return *this;
}

FieldElem FieldElem::operator-() const { return FieldElem(poly_, -c_[0], -c_[1], -c_[2]); }

Mat3<Rat> FieldElem::multiplication_matrix() const {
  Mat3<Rat> m;
  FieldElem col = *this;
  const FieldElem alpha = generator(poly_);
  for (std::size_t j = 0; j < 3; ++j) {
    for (std::size_t i = 0; i < 3; ++i) m(i, j) = col.c_[i];
    col *= alpha;
  }
  return m;
}

FieldElem invert(const FieldElem& e) {
  if (e.is_zero()) throw std::domain_error("inverse of zero field element");
  if (e.is_rational()) return FieldElem(e.poly(), 1 / e.c0());

  // Gauss-Jordan on [M | e1].
  Mat3<Rat> m = e.multiplication_matrix();
  std::array<Rat, 3> rhs{1, 0, 0};
  for (std::size_t col = 0; col < 3; ++col) {
    std::size_t pivot = col;
    while (pivot < 3 && m(pivot, col) == 0) ++pivot;
    if (pivot == 3) throw std::logic_error("singular multiplication matrix: polynomial is reducible");
    if (pivot != col) {
      std::swap(m.m[pivot], m.m[col]);
      std::swap(rhs[pivot], rhs[col]);
    }
    Rat inv = 1 / m(col, col);
    for (std::size_t j = col; j < 3; ++j) m(col, j) *= inv;
    rhs[col] *= inv;
    for (std::size_t i = 0; i < 3; ++i) {
      if (i == col || m(i, col) == 0) continue;
      Rat factor = m(i, col);
      for (std::size_t j = col; j < 3; ++j) m(i, j) -= factor * m(col, j);
      rhs[i] -= factor * rhs[col];
    }
  }
  return FieldElem(e.poly(), rhs[0], rhs[1], rhs[2]);
}

FieldElem operator/(const FieldElem& a, const FieldElem& b) { return a * invert(b); }

FieldElem pow(FieldElem base, unsigned n) {
  FieldElem out(base.poly(), 1);
  while (n != 0) {
    if (n & 1u) out *= base;
    base *= base;
    n >>= 1u;
  }
  return out;
}

Rat f_map(const FieldElem& e, const Integer& z) {
  const CubicPoly& f = e.poly();
  return e.c0() + e.c1() * f.p + e.c2() * (2 * Rat(z) + f.p * f.p + 2 * f.q);
}

Rat g_map(const FieldElem& e, const Integer& z) {
  const CubicPoly& f = e.poly();
  return e.c0() + e.c1() * f.p + e.c2() * (Rat(z) + f.p * f.p + f.q);
}

std::string to_string(const FieldElem& e, const char* symbol) {
  static const char* const kPowers[] = {"", "", "^2"};
  std::string out;
  for (std::size_t i = 0; i < 3; ++i) {
    const Rat& c = e.coords()[i];
    if (c == 0) continue;
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    Rat a = abs(c);
    if (i == 0) {
      out += to_string(a);
    } else {
      if (a != 1) out += to_string(a) + "*";
      out += std::string(symbol) + kPowers[i];
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace hermite

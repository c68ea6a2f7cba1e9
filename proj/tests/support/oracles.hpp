// Independent reference computations and seeded generators for the tests.
#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "hermite/cubic_poly.hpp"
#include "hermite/errors.hpp"
#include "hermite/expansion.hpp"
#include "hermite/root_engine.hpp"
#include "hermite/tcf.hpp"

namespace oracle {

using hermite::CubicPoly;
using hermite::Integer;
using hermite::Rat;

constexpr mp_bitcnt_t kBits = 512;

inline mpf_class to_mpf(const Rat& x) { return mpf_class(x, kBits); }

// ---- random generation ---------------------------------------------------

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline Rat random_rat(Rng& rng, long num, long den_max) {
  Rat x(Integer(uniform(rng, -num, num)), Integer(uniform(rng, 1, den_max)));
  x.canonicalize();
  return x;
}

inline Rat random_nonzero_rat(Rng& rng, long num, long den_max) {
  for (;;) {
    Rat x = random_rat(rng, num, den_max);
    if (x != 0) return x;
  }
}

inline CubicPoly random_poly(Rng& rng, long num = 9, long den_max = 4) {
  return CubicPoly{random_rat(rng, num, den_max), random_rat(rng, num, den_max), random_nonzero_rat(rng, num, den_max)};
}

inline CubicPoly random_irreducible(Rng& rng, long num = 9, long den_max = 4) {
  for (;;) {
    CubicPoly f = random_poly(rng, num, den_max);
    if (!hermite::rational_root_check(f)) return f;
  }
}

// Random TCF of shape (2, 3) with nonzero quotients.
inline hermite::TernaryCF random_tcf(Rng& rng) {
  hermite::TernaryCF t;
  for (int i = 0; i < 5; ++i) {
    hermite::PartialQuotient q{random_nonzero_rat(rng, 30, 12), random_nonzero_rat(rng, 30, 12)};
    (i < 2 ? t.pre_period : t.period).push_back(q);
  }
  return t;
}

struct CertifiedInput {
  CubicPoly f;
  Integer z;
  hermite::IsolatingInterval root;
};

// An irreducible cubic, one of its real roots and a z certified for it.
inline CertifiedInput random_certified(Rng& rng, long num = 9, long den_max = 3) {
  for (;;) {
    CubicPoly f = random_irreducible(rng, num, den_max);
    auto roots = hermite::isolate_real_roots(f);
    auto iv = roots[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(roots.size()) - 1))];
    try {
      return {f, hermite::choose_z(f, iv, 16), iv};
    } catch (const hermite::SearchExhausted&) {
    }
  }
}

// ---- exact polynomial arithmetic over Q ----------------------------------

using Poly = std::vector<Rat>;  // ascending coefficients

inline Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// Remainder modulo x^3 - p x^2 - q x - r by schoolbook long division.
inline std::array<Rat, 3> poly_mod(Poly a, const CubicPoly& f) {
  const Poly m{-f.r, -f.q, -f.p, Rat(1)};
  for (std::size_t d = a.size(); d-- > 3;) {
    Rat lead = a[d];
    if (lead == 0) continue;
    for (std::size_t k = 0; k < 4; ++k) a[d - 3 + k] -= lead * m[k];
  }
  a.resize(std::max<std::size_t>(a.size(), 3), Rat(0));
  return {a[0], a[1], a[2]};
}

// ---- brute-force rational roots ------------------------------------------

inline std::vector<Integer> divisors(Integer n) {
  n = abs(n);
  std::vector<Integer> out;
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  }
  return out;
}

// Rational roots of a cubic with integer coefficients a3 x^3 + ... + a0,
// a0 != 0, by trying every +-(divisor of a0)/(divisor of a3).
inline std::vector<Rat> brute_rational_roots(const std::array<Integer, 4>& a) {
  std::vector<Rat> out;
  for (const auto& u : divisors(a[0])) {
    for (const auto& v : divisors(a[3])) {
      for (int s : {1, -1}) {
        Rat x(s * u, v);
        x.canonicalize();
        if (((a[3] * x + a[2]) * x + a[1]) * x + a[0] == 0) out.push_back(x);
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---- roots to 512 bits ----------------------------------------------------

// Exact discriminant of x^3 - p x^2 - q x - r.
inline Rat discriminant(const CubicPoly& f) {
  Rat a = -f.p, b = -f.q, c = -f.r;
  return 18 * a * b * c - 4 * a * a * a * c + a * a * b * b - 4 * b * b * b - 27 * c * c;
}

struct Roots {
  std::vector<mpf_class> real;  // ascending
  bool pair = false;            // one real root plus a conjugate pair
  mpf_class pair_re{0, kBits};
  mpf_class pair_im{0, kBits};
};

inline mpf_class eval_mpf(const CubicPoly& f, const mpf_class& x) {
  return ((x - to_mpf(f.p)) * x - to_mpf(f.q)) * x - to_mpf(f.r);
}

inline mpf_class newton(const CubicPoly& f, mpf_class x) {
  for (int i = 0; i < 80; ++i) {
    mpf_class d = (3 * x - 2 * to_mpf(f.p)) * x - to_mpf(f.q);
    if (d == 0) break;
    x -= eval_mpf(f, x) / d;
  }
  return x;
}

// Durand-Kerner seeds in long double, polished by Newton at 512 bits. The
// number of real roots comes from the exact discriminant (irreducible f, so
// it is never zero).
inline Roots roots(const CubicPoly& f) {
  using C = std::complex<long double>;
  const long double p = f.p.get_d(), q = f.q.get_d(), r = f.r.get_d();
  auto g = [&](C x) { return ((x - p) * x - q) * x - r; };
  std::array<C, 3> z{C(0.4L, 0.9L), C(0.4L, 0.9L) * C(0.4L, 0.9L), C(0.4L, 0.9L) * C(0.4L, 0.9L) * C(0.4L, 0.9L)};
  for (int it = 0; it < 500; ++it)
    for (int i = 0; i < 3; ++i) {
      C den = 1;
      for (int j = 0; j < 3; ++j)
        if (j != i) den *= z[i] - z[j];
      z[i] -= g(z[i]) / den;
    }
  std::sort(z.begin(), z.end(), [](C a, C b) { return std::abs(a.imag()) < std::abs(b.imag()); });
  Roots out;
  const int n_real = discriminant(f) > 0 ? 3 : 1;
  for (int i = 0; i < n_real; ++i) out.real.push_back(newton(f, mpf_class(static_cast<double>(z[i].real()), kBits)));
  std::sort(out.real.begin(), out.real.end());
  if (n_real == 1) {
    out.pair = true;
    const mpf_class& a = out.real[0];
    // x^3 - p x^2 - q x - r = (x - a)(x^2 + (a - p) x + r/a)
    out.pair_re = (to_mpf(f.p) - a) / 2;
    mpf_class im2 = to_mpf(f.r) / a - out.pair_re * out.pair_re;
    out.pair_im = sqrt(im2);
  }
  return out;
}

inline bool close(const mpf_class& a, const mpf_class& b, double tol) {
  mpf_class d = abs(a - b);
  return d < mpf_class(tol, kBits);
}

inline bool close(const Rat& a, const mpf_class& b, double tol) { return close(to_mpf(a), b, tol); }

// c0 + c1 t + c2 t^2
inline mpf_class eval_elem(const hermite::FieldElem& e, const mpf_class& t) {
  return to_mpf(e.c0()) + to_mpf(e.c1()) * t + to_mpf(e.c2()) * t * t;
}

// ---- matrices -------------------------------------------------------------

using RMat = std::array<std::array<Rat, 3>, 3>;

inline RMat to_rmat(const hermite::Mat3<Rat>& m) {
  RMat out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out[i][j] = m(i, j);
  return out;
}

inline RMat mul(const RMat& a, const RMat& b) {
  RMat out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      out[i][j] = 0;
      for (int k = 0; k < 3; ++k) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

struct CharCoeffs {
  Rat trace, minors, det;
};

// Trace, sum of principal 2x2 minors, and a cofactor expansion of the
// determinant along the middle row.
inline CharCoeffs char_coeffs(const RMat& m) {
  CharCoeffs c;
  c.trace = m[0][0] + m[1][1] + m[2][2];
  c.minors = (m[0][0] * m[1][1] - m[0][1] * m[1][0]) + (m[0][0] * m[2][2] - m[0][2] * m[2][0]) +
             (m[1][1] * m[2][2] - m[1][2] * m[2][1]);
  c.det = -m[1][0] * (m[0][1] * m[2][2] - m[0][2] * m[2][1]) + m[1][1] * (m[0][0] * m[2][2] - m[0][2] * m[2][0]) -
          m[1][2] * (m[0][0] * m[2][1] - m[0][1] * m[2][0]);
  return c;
}

// ---- continued fractions --------------------------------------------------

struct Triple {
  Rat A, B, C;
};

// Convergents straight from the definition: X_0 = (a_0, b_0, 1) and
// X_n = a_n X_{n-1} + b_n X_{n-2} + X_{n-3} with
// (A_{-2}, A_{-1}) = (0, 1), (B_{-2}, B_{-1}) = (1, 0), (C_{-2}, C_{-1}) = (0, 0).
inline std::vector<Triple> naive_convergents(const hermite::TernaryCF& t, std::size_t n_max) {
  std::vector<Triple> x{{0, 1, 0}, {1, 0, 0}};  // indices -2, -1
  for (std::size_t n = 0; n <= n_max && t.has_index(n); ++n) {
    const auto& q = t[n];
    if (n == 0) {
      x.push_back({q.a, q.b, 1});
      continue;
    }
    const Triple& x1 = x[x.size() - 1];
    const Triple& x2 = x[x.size() - 2];
    const Triple& x3 = x[x.size() - 3];
    x.push_back({q.a * x1.A + q.b * x2.A + x3.A, q.a * x1.B + q.b * x2.B + x3.B, q.a * x1.C + q.b * x2.C + x3.C});
  }
  return {x.begin() + 2, x.end()};
}

inline RMat naive_product(const hermite::TernaryCF& t, std::size_t n) {
  RMat acc{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  for (std::size_t i = 0; i <= n; ++i) {
    RMat s{{{t[i].a, 1, 0}, {t[i].b, 0, 1}, {1, 0, 0}}};
    acc = mul(acc, s);
  }
  return acc;
}

}  // namespace oracle

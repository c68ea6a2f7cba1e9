#include <doctest.h>

#include <stdexcept>

#include "hermite/cubic_field.hpp"
#include "support/oracles.hpp"

using namespace hermite;

namespace {

FieldElem random_elem(oracle::Rng& rng, const CubicPoly& f) {
  return FieldElem(f, oracle::random_rat(rng, 15, 6), oracle::random_rat(rng, 15, 6), oracle::random_rat(rng, 15, 6));
}

oracle::Poly as_poly(const FieldElem& e) { return {e.c0(), e.c1(), e.c2()}; }

}  // namespace

TEST_CASE("products reduce like polynomials modulo f") {
  oracle::Rng rng(31);
  for (int i = 0; i < 200; ++i) {
    CubicPoly f = oracle::random_poly(rng);
    FieldElem a = random_elem(rng, f), b = random_elem(rng, f);
    CHECK((a * b).coords() == oracle::poly_mod(oracle::poly_mul(as_poly(a), as_poly(b)), f));
    CHECK((a + b) - b == a);
    CHECK(a * (b + Rat(3)) == a * b + a * Rat(3));
  }
}

TEST_CASE("powers of alpha") {
  CubicPoly f = parse_cubic("x^3-5x^2+x-3");
  FieldElem a = FieldElem::generator(f);
  CHECK((a * a * a).coords() == std::array<Rat, 3>{3, -1, 5});
  CHECK(pow(a, 0) == FieldElem(f, 1));
  oracle::Rng rng(32);
  for (unsigned n = 0; n < 12; ++n) {
    oracle::Poly tn(n + 1, Rat(0));
    tn[n] = 1;
    CHECK(pow(a, n).coords() == oracle::poly_mod(tn, f));
  }
}

TEST_CASE("inversion") {
  oracle::Rng rng(33);
  for (int i = 0; i < 150; ++i) {
    CubicPoly f = oracle::random_irreducible(rng);
    FieldElem e = random_elem(rng, f);
    if (e.is_zero()) continue;
    CHECK(e * invert(e) == FieldElem(f, 1));
    FieldElem g = random_elem(rng, f);
    CHECK((g / e) * e == g);
  }
  CubicPoly f = parse_cubic("x^3-5x^2+x-3");
  // r/alpha = alpha^2 - p alpha - q
  CHECK(invert(FieldElem::generator(f)) * Rat(3) == FieldElem(f, 1, -5, 1));
  CHECK_THROWS_AS(invert(FieldElem(f)), std::domain_error);
  // (x - 1)(x^2 + 1): alpha - 1 is a zero divisor
  CubicPoly red = parse_cubic("x^3-x^2+x-1");
  CHECK_THROWS_AS(invert(FieldElem::generator(red) - Rat(1)), std::logic_error);
}

TEST_CASE("multiplication matrix columns are e * alpha^j") {
  oracle::Rng rng(34);
  for (int i = 0; i < 50; ++i) {
    CubicPoly f = oracle::random_poly(rng);
    FieldElem e = random_elem(rng, f);
    auto m = e.multiplication_matrix();
    for (unsigned j = 0; j < 3; ++j) {
      auto col = (e * pow(FieldElem::generator(f), j)).coords();
      for (int r = 0; r < 3; ++r) CHECK(m(r, j) == col[r]);
    }
  }
}

TEST_CASE("the linear maps f and g") {
  oracle::Rng rng(35);
  for (int i = 0; i < 50; ++i) {
    CubicPoly f = oracle::random_irreducible(rng);
    Integer z = oracle::uniform(rng, -9, 9);
    FieldElem alpha = FieldElem::generator(f);
    FieldElem r_over = invert(alpha) * f.r;
    Rat x = oracle::random_rat(rng, 9, 4);
    CHECK(f_map(FieldElem(f, x), z) == x);
    CHECK(g_map(FieldElem(f, x), z) == x);
    CHECK(f_map(alpha, z) == f.p);
    CHECK(g_map(alpha, z) == f.p);
    CHECK(g_map(r_over, z) == z);
    CHECK(f_map(alpha * alpha, z) == 2 * Rat(z) + f.p * f.p + 2 * f.q);
    // linearity
    FieldElem a = random_elem(rng, f), b = random_elem(rng, f);
    CHECK(f_map(a + b * Rat(2), z) == f_map(a, z) + 2 * f_map(b, z));
    CHECK(g_map(a - b, z) == g_map(a, z) - g_map(b, z));
  }
}

TEST_CASE("element printing") {
  CubicPoly f = parse_cubic("x^3-2");
  CHECK(to_string(FieldElem(f, make_rat(1, 2), 0, make_rat(-1, 2))) == "1/2 - 1/2*a^2");
  CHECK(to_string(FieldElem(f)) == "0");
  CHECK(to_string(FieldElem::generator(f), "t") == "t");
}

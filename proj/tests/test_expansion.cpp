#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hermite/cerruti.hpp"
#include "hermite/errors.hpp"
#include "hermite/expansion.hpp"
#include "hermite/reference_checks.hpp"
#include "support/oracles.hpp"

using namespace hermite;

namespace {

Rat q(const char* s) { return parse_rat(s); }

TernaryCF tcf(std::initializer_list<const char*> a, std::initializer_list<const char*> b) {
  std::vector<const char*> av(a), bv(b);
  TernaryCF t;
  for (std::size_t i = 0; i < av.size(); ++i) (i < 2 ? t.pre_period : t.period).push_back({q(av[i]), q(bv[i])});
  return t;
}

const mpf_class& root_in(const oracle::Roots& r, const IsolatingInterval& iv) {
  for (const auto& x : r.real)
    if (oracle::to_mpf(iv.lo) < x && x < oracle::to_mpf(iv.hi)) return x;
  throw std::logic_error("oracle root not found");
}

}  // namespace

TEST_CASE("worked listings") {
  for (const auto& l : reference_listings()) {
    CAPTURE(l.name);
    CHECK(hermite_expansion(l.poly, l.z) == l.expected);
    CHECK(l.expected.pre_period.size() == 2);
    CHECK(l.expected.period.size() == 3);
  }
  CHECK(hermite_expansion(parse_cubic("x^3-5x^2+x-3"), 5) ==
        tcf({"5", "-17", "-19/141", "38", "-19"}, {"5", "65", "-23/47", "46/47", "138"}));
}

TEST_CASE("misprinted listings are inconsistent with their own limits") {
  auto ls = reference_listings();
  // 3x^3-12x^2-4x+1, z = -1: printed b_2 sends the second component elsewhere.
  CubicPoly ex2 = parse_cubic("3x^3-12x^2-4x+1");
  auto alpha = oracle::roots(ex2).real.back();
  auto good = convergents(ls[2].expected, 30)[30];
  auto bad = convergents(ls[2].printed, 30)[30];
  CHECK(oracle::close(Rat(good.B / good.C), alpha, 1e-8));
  CHECK_FALSE(oracle::close(Rat(bad.B / bad.C), alpha, 1e-2));
  CHECK(erratum_notes(ex2, -1).size() == 1);
  CHECK(erratum_notes(ex2, 1).empty());
  CHECK(erratum_notes(parse_cubic("x^3-5x^2+x-3"), 5).size() == 1);
}

TEST_CASE("cube roots") {
  for (long d : {2L, 3L, 5L, 7L, -4L})
    for (long z : {1L, 2L, -1L, 3L}) CHECK(cube_root_expansion(d, z) == hermite_expansion(CubicPoly{0, 0, d}, z));
  TernaryCF t = cube_root_expansion(2, 1);
  CHECK(t.period[0].a == q("6/5"));
  CHECK(t.period[1].a == 3);
  CHECK(t.period[2].a == q("3/2"));
  CHECK(t.pre_period[0] == PartialQuotient{1, 0});
  CHECK(t.pre_period[1] == PartialQuotient{1, q("-1/2")});
  CHECK_THROWS_AS(cube_root_expansion(8, 1), ReducibleError);
  CHECK_THROWS_AS(cube_root_expansion(-27, 1), ReducibleError);
  CHECK_THROWS_AS(cube_root_expansion(2, 0), std::invalid_argument);

  Evaluation e = evaluate(t, q("1e-16"), 400);
  mpf_class c = oracle::roots(CubicPoly{0, 0, 2}).real[0];
  CHECK(oracle::close(e.first, c * c, 1e-12));
  CHECK(oracle::close(e.second, c, 1e-12));
}

TEST_CASE("choosing z") {
  CubicPoly ex1 = parse_cubic("x^3-5x^2+x-3");
  auto iv = isolate_real_roots(ex1)[0];
  Integer z = choose_z(ex1, iv, 16);
  CHECK(z != 0);
  CHECK(abs(z) <= 5);
  CHECK(dominance_certificate(ex1, iv, z).verdict);
  CHECK(dominance_certificate(ex1, iv, 5).verdict);
  for (Integer w = 1; w < abs(z); ++w) {
    CHECK_FALSE(dominance_certificate(ex1, iv, w).verdict);
    CHECK_FALSE(dominance_certificate(ex1, iv, -w).verdict);
  }

  CubicPoly cube{0, 0, 2};
  CHECK(choose_z(cube, isolate_real_roots(cube)[0], 16) == 1);

  // The Ramanujan root 1.24... has the middle square among three real roots.
  CubicPoly ram = parse_cubic("x^3+x^2-2x-1");
  CHECK_THROWS_AS(choose_z(ram, isolate_real_roots(ram)[2], 64), SearchExhausted);
  // -0.445... has the smallest square, so a negative z works.
  Integer z2 = choose_z(ram, isolate_real_roots(ram)[1], 64);
  CHECK(z2 < 0);
  CHECK(dominance_certificate(ram, isolate_real_roots(ram)[1], z2).verdict);
}

TEST_CASE("reduction pipelines of the worked examples") {
  auto ls = reference_listings();
  CubicPoly ram = parse_cubic("x^3+x^2-2x-1");

  auto r3 = expand_root(ram, RootSelector::by_value(0), Integer(3));
  CHECK(r3.pipeline == Pipeline::Dominant);
  CHECK(r3.tcf == ls[3].expected);

  auto r2 = expand_root(ram, RootSelector::by_value(1), Integer(1));
  CHECK(r2.pipeline == Pipeline::ReflectedSmallest);
  CHECK(r2.expanded_poly == parse_cubic("x^3+2x^2-x-1"));
  CHECK(r2.tcf == ls[4].expected);

  auto r1 = expand_root(ram, RootSelector::by_value(2), Integer(2));
  CHECK(r1.pipeline == Pipeline::ShiftedLargestValue);
  REQUIRE(r1.shift);
  CHECK(*r1.shift == 1);
  CHECK(r1.expanded_poly == parse_cubic("x^3-2x^2-x+1"));
  CHECK(r1.tcf == tcf({"2", "9", "12/43", "12", "12"}, {"1", "-16", "-41/43", "-41/43", "-41"}));

  CubicPoly f = parse_cubic("x^3-2x^2+x+1");
  auto s = expand_root(f, RootSelector::smallest(), Integer(5));
  CHECK(s.pipeline == Pipeline::ReflectedSmallest);
  REQUIRE(s.scale);
  CHECK(*s.scale == -1);
  CHECK(s.tcf == tcf({"-5", "13/3", "-20/87", "-20", "20/3"}, {"1", "13", "127/261", "-127/87", "127/3"}));
  CHECK(s.couple_text.first == "α");
  CHECK(s.couple_text.second == "-1/α");
}

TEST_CASE("expansion errors") {
  CHECK_THROWS_AS(expand_root(parse_cubic("x^3-2x^2-x+2"), RootSelector::largest()), ReducibleError);
  CHECK_THROWS_AS(expand_root(parse_cubic("x^3-2"), RootSelector::by_value(1)), std::invalid_argument);
  CHECK_THROWS_AS(expand_root(parse_cubic("x^3-5x^2+x-3"), RootSelector::largest(), Integer(-30)),
                  CertificateError);
}

// Ratio |beta_2| / |beta_1| of the two largest moduli of z + gamma^2 over the
// roots gamma of h; convergents approach their limit at this rate.
double binet_rate(const CubicPoly& h, const Integer& z) {
  auto r = oracle::roots(h);
  std::vector<mpf_class> m;
  for (const auto& g : r.real) m.push_back(abs(z + g * g));
  if (r.pair) {
    mpf_class re = z + r.pair_re * r.pair_re - r.pair_im * r.pair_im, im = 2 * r.pair_re * r.pair_im;
    m.push_back(sqrt(re * re + im * im));
  }
  std::sort(m.begin(), m.end(), [](const mpf_class& a, const mpf_class& b) { return a > b; });
  return mpf_class(m[1] / m[0]).get_d();
}

TEST_CASE("every expansion converges to its declared couple") {
  oracle::Rng rng(61);
  int checked = 0, too_slow = 0;
  for (int i = 0; i < 12; ++i) {
    CubicPoly f = oracle::random_irreducible(rng, 6, 2);
    auto ivs = isolate_real_roots(f);
    auto r = oracle::roots(f);
    for (std::size_t k = 0; k < ivs.size(); ++k) {
      CAPTURE(to_string(f));
      CAPTURE(k);
      ExpansionResult res = expand_root(f, RootSelector::by_value(k));
      CHECK(res.certificate.verdict);
      CHECK(res.tcf.pre_period.size() == 2);
      CHECK(res.tcf.period.size() == 3);
      double rate = binet_rate(res.expanded_poly, res.z);
      REQUIRE(rate < 1.0);
      std::size_t n = static_cast<std::size_t>(std::ceil(std::log(1e-13) / std::log(rate))) + 12;
      if (n > 1500) {
        ++too_slow;
        continue;
      }
      auto c = convergents(res.tcf, n)[n];
      REQUIRE(c.C != 0);
      const mpf_class& alpha = root_in(r, res.target);
      CHECK(oracle::close(Rat(c.A / c.C), oracle::eval_elem(res.couple.first, alpha), 1e-9));
      CHECK(oracle::close(Rat(c.B / c.C), oracle::eval_elem(res.couple.second, alpha), 1e-9));
      ++checked;
    }
  }
  MESSAGE("round-trip checked " << checked << " roots; " << too_slow << " converge too slowly to evaluate here");
  CHECK(checked >= 12);
}

TEST_CASE("convergents are scaled Cerruti triples") {
  struct Ex {
    CubicPoly f;
    long z;
  };
  std::vector<Ex> cases{{parse_cubic("x^3-5x^2+x-3"), 5}, {parse_cubic("3x^3-12x^2-4x+1"), 1},
                        {parse_cubic("3x^3-12x^2-4x+1"), -1}, {parse_cubic("x^3+x^2-2x-1"), 3},
                        {parse_cubic("x^3+2x^2-x-1"), 1}, {parse_cubic("x^3-2x^2-x+1"), 2}};
  for (const auto& [f, z] : cases) {
    auto cs = convergents(hermite_expansion(f, z), 12);
    auto mus = mu_sequence(f, z, 13);
    NInvariants inv = closed_form_invariants(f, z);
    Rat s = f.p * f.q + f.r;
    for (std::size_t n = 0; n <= 12; ++n) {
      Rat scale = pow(inv.det, static_cast<unsigned>((n + 1) / 3));
      if (n % 3 == 1) scale *= s;
      CHECK(cs[n].A * scale == mus[n + 1].mu0);
      CHECK(cs[n].C * scale == mus[n + 1].mu2);
      CHECK(cs[n].B * scale == mus[n + 1].mu1 + f.p * mus[n + 1].mu2);
    }
  }
}

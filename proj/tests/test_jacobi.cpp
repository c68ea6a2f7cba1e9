#include <doctest.h>

#include "hermite/cerruti.hpp"
#include "hermite/errors.hpp"
#include "hermite/expansion.hpp"
#include "hermite/jacobi.hpp"
#include "hermite/reference_checks.hpp"
#include "support/oracles.hpp"

using namespace hermite;

namespace {

// Sound and minimal: the reported repetition holds and no earlier state
// repeats.
void check_cycle(const RunTranscript& t) {
  if (!t.cycle) {
    for (std::size_t i = 0; i < t.states.size(); ++i)
      for (std::size_t j = i + 1; j < t.states.size(); ++j)
        CHECK_FALSE((t.states[i].x == t.states[j].x && t.states[i].y == t.states[j].y));
    return;
  }
  const auto [pre, per] = *t.cycle;
  REQUIRE(pre + per < t.states.size());
  CHECK(t.states[pre + per].x == t.states[pre].x);
  CHECK(t.states[pre + per].y == t.states[pre].y);
  for (std::size_t j = 1; j < pre + per; ++j)
    for (std::size_t i = 0; i < j; ++i) CHECK_FALSE((t.states[i].x == t.states[j].x && t.states[i].y == t.states[j].y));
}

}  // namespace

TEST_CASE("modified algorithm on the first worked example") {
  CubicPoly f = parse_cubic("x^3-5x^2+x-3");
  RunTranscript t = run_modified(f, 5, 50);
  REQUIRE(t.cycle);
  CHECK(t.cycle->pre_period == 2);
  CHECK(t.cycle->period == 3);
  CHECK(t.as_tcf() == reference_listings()[0].expected);
  REQUIRE(t.states.size() == 6);
  CHECK(t.states[3].x.coords() == std::array<Rat, 3>{5, 0, 1});
  CHECK(t.states[5].x == t.states[2].x);
  CHECK(t.states[5].y == t.states[2].y);
  CHECK(t.states[0].x == FieldElem(f, -f.q, -f.p, 1));
  CHECK(t.states[0].y == FieldElem::generator(f));
  check_cycle(t);
}

TEST_CASE("modified transcripts reproduce the closed-form expansion") {
  oracle::Rng rng(71);
  for (int i = 0; i < 25; ++i) {
    auto in = oracle::random_certified(rng);
    CAPTURE(to_string(in.f));
    CAPTURE(in.z.get_str());
    RunTranscript t = run_modified(in.f, in.z, 20);
    REQUIRE(t.cycle);
    CHECK(t.cycle->pre_period == 2);
    CHECK(t.cycle->period == 3);
    CHECK(t.as_tcf() == hermite_expansion(in.f, in.z));
    check_cycle(t);

    const FieldElem beta(in.f, Rat(in.z), 0, 1);
    NInvariants inv = closed_form_invariants(in.f, in.z);
    Rat s = in.f.p * in.f.q + in.f.r;
    CHECK(t.states[2].x == beta * (s / inv.det));
    CHECK(t.states[3].x == beta);
    CHECK(t.states[4].x == beta * (1 / s));
  }
}

TEST_CASE("modified algorithm on cube roots") {
  RunTranscript t = run_modified(CubicPoly{0, 0, 2}, 1, 20);
  REQUIRE(t.cycle);
  CHECK(t.cycle->pre_period == 2);
  CHECK(t.cycle->period == 3);
  CHECK(t.as_tcf() == cube_root_expansion(2, 1));
}

TEST_CASE("classic algorithm floors") {
  CubicPoly f = parse_cubic("x^3-5x^2+x-3");
  auto iv = isolate_real_roots(f)[0];
  FieldElem alpha = FieldElem::generator(f);
  RunTranscript t = run_classic(invert(alpha) * Rat(3), alpha, iv, 12);
  REQUIRE(!t.quotients.empty());
  CHECK(t.quotients[0] == PartialQuotient{0, 4});

  CubicPoly cube{0, 0, 2};
  auto civ = isolate_real_roots(cube)[0];
  FieldElem c = FieldElem::generator(cube);
  RunTranscript ct = run_classic(c * c, c, civ, 30);
  CHECK(ct.quotients[0] == PartialQuotient{1, 1});

  // Against the 512-bit oracle, step by step.
  auto r = oracle::roots(f);
  for (std::size_t n = 0; n < t.quotients.size(); ++n) {
    mpf_class x = oracle::eval_elem(t.states[n].x, r.real[0]);
    mpf_class y = oracle::eval_elem(t.states[n].y, r.real[0]);
    CHECK(Rat(t.quotients[n].a) == Rat(mpq_class(floor(x))));
    CHECK(Rat(t.quotients[n].b) == Rat(mpq_class(floor(y))));
  }
}

TEST_CASE("classic algorithm stops on an integer second component") {
  CubicPoly f = parse_cubic("x^3-2");
  auto iv = isolate_real_roots(f)[0];
  RunTranscript t = run_classic(FieldElem::generator(f), FieldElem(f, 3), iv, 10);
  CHECK(t.finite);
  CHECK(t.quotients.size() == 1);
  CHECK(t.quotients[0] == PartialQuotient{1, 3});
  CHECK_FALSE(t.cycle);
}

TEST_CASE("comparison report") {
  CubicPoly f = parse_cubic("x^3-5x^2+x-3");
  RunComparison c = compare_runs(f, 5, 40);
  REQUIRE(c.modified.cycle);
  CHECK(c.modified.cycle->pre_period == 2);
  CHECK(c.modified.cycle->period == 3);
  CHECK(c.classic.quotients.size() <= 40);
  REQUIRE(c.modified_errors.size() == 40);
  // The error shrinks geometrically: compare whole periods.
  for (std::size_t n = 5; n + 3 < 40; ++n) {
    REQUIRE(c.modified_errors[n]);
    REQUIRE(c.modified_errors[n + 3]);
    CHECK(*c.modified_errors[n + 3] < *c.modified_errors[n]);
  }
  CHECK(*c.modified_errors[39] < 1e-15);
  CHECK_THROWS_AS(compare_runs(f, -30, 10), CertificateError);
}

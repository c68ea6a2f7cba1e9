#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "hermite/cubic_field.hpp"
#include "hermite/cubic_poly.hpp"
#include "hermite/rational.hpp"

namespace hermite {

// Rational-endpoint interval holding exactly one (irrational) real root of
// `poly`, with f(lo), f(hi) nonzero and of opposite signs.
struct IsolatingInterval {
  Rat lo;
  Rat hi;
  CubicPoly poly;

  Rat width() const { return hi - lo; }
  Rat midpoint() const { return (lo + hi) / 2; }
};

// Closed rational interval [lo, hi].
struct RatInterval {
  Rat lo;
  Rat hi;

  bool contains_zero() const { return lo <= 0 && hi >= 0; }
  bool overlaps(const RatInterval& o) const { return lo <= o.hi && o.lo <= hi; }
};

// Sturm sequence root count on (a, b].
std::size_t count_real_roots(const CubicPoly& f, const Rat& a, const Rat& b);

// The 1 or 3 real roots of an irreducible cubic, sorted by value.
// Throws ReducibleError when f has a rational root.
std::vector<IsolatingInterval> isolate_real_roots(const CubicPoly& f);

// One bisection step.
IsolatingInterval bisect(const IsolatingInterval& iv);

// Sub-interval isolating the same root with width <= `width`.
IsolatingInterval refine(const IsolatingInterval& iv, const Rat& width);

// Interval enclosure of c0 + c1 t + c2 t^2 over t in [iv.lo, iv.hi].
RatInterval enclose(const FieldElem& e, const IsolatingInterval& iv);

struct RootSign {
  int sign;
  IsolatingInterval interval;  // refinement at which the sign was certified
};

struct RootFloor {
  Integer value;
  IsolatingInterval interval;
};

// Sign of e evaluated at the root isolated by iv. Exact zero test first,
// then adaptive refinement until the enclosure excludes zero.
RootSign certify_sign(const FieldElem& e, const IsolatingInterval& iv);
int sign_at_root(const FieldElem& e, const IsolatingInterval& iv);

// floor(e(alpha)), certified by an enclosure with no integer inside.
RootFloor certify_floor(const FieldElem& e, const IsolatingInterval& iv);
Integer floor_at_root(const FieldElem& e, const IsolatingInterval& iv);

// Refines two intervals until their enclosures of |e1| and |e2| separate;
// returns -1, +1 for |e1| < |e2|, |e1| > |e2|. Never returns on exact ties,
// so callers must rule those out structurally.
int compare_moduli(const FieldElem& e1, const IsolatingInterval& iv1, const FieldElem& e2,
                   const IsolatingInterval& iv2);

// Index of the candidate interval containing `value` (an element of Q(alpha),
// alpha isolated by `iv`), which must be a root of the candidates' cubic.
// Candidates must be pairwise disjoint.
std::size_t locate_root(const FieldElem& value, const IsolatingInterval& iv,
                        const std::vector<IsolatingInterval>& candidates);

enum class RootKind { Real, ComplexPair };

struct RootRef {
  RootKind kind = RootKind::Real;
  std::size_t index = 0;  // into ModulusOrder::real_roots when kind == Real

  friend bool operator==(const RootRef&, const RootRef&) = default;
};

// Roots of an irreducible cubic ordered by modulus, largest first. The
// conjugate pair of a one-real-root cubic is a single ranking entry.
struct ModulusOrder {
  std::vector<IsolatingInterval> real_roots;
  bool complex_pair = false;
  std::vector<RootRef> ranking;
  std::vector<std::pair<RootRef, RootRef>> ties;

  bool tied(const RootRef& a) const;
  bool strictly_largest(const RootRef& a) const;
  bool strictly_smallest(const RootRef& a) const;
};

ModulusOrder classify_moduli(const CubicPoly& f);

}  // namespace hermite

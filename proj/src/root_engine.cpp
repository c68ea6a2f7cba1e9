#include "hermite/root_engine.hpp"

#include <algorithm>
#include <stdexcept>

#include "hermite/errors.hpp"

namespace hermite {

namespace {

// Dense polynomial over Q, coefficients low to high.
using Poly = std::vector<Rat>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly remainder(Poly a, const Poly& b) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    Rat factor = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] -= factor * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

Rat eval(const Poly& a, const Rat& x) {
  Rat acc = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<Poly> sturm_sequence(const CubicPoly& f) {
  std::vector<Poly> seq;
  seq.push_back({-f.r, -f.q, -f.p, 1});
  seq.push_back({-f.q, -2 * f.p, 3});
  while (true) {
    Poly rem = remainder(seq[seq.size() - 2], seq.back());
    if (rem.empty()) break;
    for (auto& c : rem) c = -c;
    seq.push_back(std::move(rem));
  }
  return seq;
}

std::size_t sign_variations(const std::vector<Poly>& seq, const Rat& x) {
  std::size_t changes = 0;
  int last = 0;
  for (const auto& poly : seq) {
    int s = sign(eval(poly, x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

void isolate(const CubicPoly& f, const std::vector<Poly>& seq, const Rat& a, const Rat& b,
             std::size_t count, std::vector<IsolatingInterval>& out) {
  if (count == 0) return;
  if (count == 1) {
    out.push_back(IsolatingInterval{a, b, f});
    return;
  }
  Rat mid = (a + b) / 2;
  std::size_t left = sign_variations(seq, a) - sign_variations(seq, mid);
  isolate(f, seq, a, mid, left, out);
  isolate(f, seq, mid, b, count - left, out);
}

RatInterval scale(const Rat& c, const RatInterval& x) {
  if (c >= 0) return {c * x.lo, c * x.hi};
  return {c * x.hi, c * x.lo};
}

RatInterval magnitude(const RatInterval& x) {
  Rat a = abs(x.lo), b = abs(x.hi);
  if (x.contains_zero()) return {0, std::max(a, b)};
  return {std::min(a, b), std::max(a, b)};
}

}  // namespace

std::size_t count_real_roots(const CubicPoly& f, const Rat& a, const Rat& b) {
  auto seq = sturm_sequence(f);
  return sign_variations(seq, a) - sign_variations(seq, b);
}

std::vector<IsolatingInterval> isolate_real_roots(const CubicPoly& f) {
  require_irreducible(f);
  auto seq = sturm_sequence(f);
  Rat bound = 1 + std::max({abs(f.p), abs(f.q), abs(f.r)});
  std::vector<IsolatingInterval> out;
  isolate(f, seq, -bound, bound, sign_variations(seq, -bound) - sign_variations(seq, bound), out);
  for (const auto& iv : out) {
    if (sign(f(iv.lo)) * sign(f(iv.hi)) != -1 || count_real_roots(f, iv.lo, iv.hi) != 1) {
      throw std::logic_error("root isolation produced an invalid interval");
    }
  }
  return out;
}

IsolatingInterval bisect(const IsolatingInterval& iv) {
  Rat mid = iv.midpoint();
  int s_mid = sign(iv.poly(mid));
  if (s_mid == 0) throw std::logic_error("isolating interval bisected at an exact rational root");
  if (s_mid == sign(iv.poly(iv.lo))) return IsolatingInterval{mid, iv.hi, iv.poly};
  return IsolatingInterval{iv.lo, mid, iv.poly};
}

IsolatingInterval refine(const IsolatingInterval& iv, const Rat& width) {
  if (width <= 0) throw std::invalid_argument("refine: width must be positive");
  IsolatingInterval out = iv;
  while (out.width() > width) out = bisect(out);
  return out;
}

RatInterval enclose(const FieldElem& e, const IsolatingInterval& iv) {
  RatInterval t{iv.lo, iv.hi};
  RatInterval t2;
  if (iv.lo >= 0) t2 = {iv.lo * iv.lo, iv.hi * iv.hi};
  else if (iv.hi <= 0) t2 = {iv.hi * iv.hi, iv.lo * iv.lo};
  else t2 = {0, std::max(iv.lo * iv.lo, iv.hi * iv.hi)};
  RatInterval a = scale(e.c1(), t);
  RatInterval b = scale(e.c2(), t2);
  return {e.c0() + a.lo + b.lo, e.c0() + a.hi + b.hi};
}

RootSign certify_sign(const FieldElem& e, const IsolatingInterval& iv) {
  if (e.is_zero()) return {0, iv};
  if (e.is_rational()) return {sign(e.c0()), iv};
  IsolatingInterval cur = iv;
  while (true) {
    RatInterval box = enclose(e, cur);
    if (box.lo > 0) return {1, cur};
    if (box.hi < 0) return {-1, cur};
    cur = bisect(cur);
  }
}

int sign_at_root(const FieldElem& e, const IsolatingInterval& iv) { return certify_sign(e, iv).sign; }

RootFloor certify_floor(const FieldElem& e, const IsolatingInterval& iv) {
  if (e.is_rational()) return {floor(e.c0()), iv};
  IsolatingInterval cur = iv;
  while (true) {
    RatInterval box = enclose(e, cur);
    Integer lo = floor(box.lo);
    if (floor(box.hi) == lo) return {lo, cur};
    cur = bisect(cur);
  }
}

Integer floor_at_root(const FieldElem& e, const IsolatingInterval& iv) {
  return certify_floor(e, iv).value;
}

int compare_moduli(const FieldElem& e1, const IsolatingInterval& iv1, const FieldElem& e2,
                   const IsolatingInterval& iv2) {
  IsolatingInterval a = iv1, b = iv2;
  while (true) {
    RatInterval m1 = magnitude(enclose(e1, a));
    RatInterval m2 = magnitude(enclose(e2, b));
    if (m1.lo > m2.hi) return 1;
    if (m1.hi < m2.lo) return -1;
    a = bisect(a);
    b = bisect(b);
  }
}

std::size_t locate_root(const FieldElem& value, const IsolatingInterval& iv,
                        const std::vector<IsolatingInterval>& candidates) {
  IsolatingInterval alpha = iv;
  std::vector<IsolatingInterval> roots = candidates;
  while (true) {
    RatInterval box = enclose(value, alpha);
    std::size_t hits = 0, hit = 0;
    for (std::size_t i = 0; i < roots.size(); ++i) {
      if (box.overlaps(RatInterval{roots[i].lo, roots[i].hi})) {
        ++hits;
        hit = i;
      }
    }
    if (hits == 0) throw std::logic_error("value is not a root of the candidate polynomial");
    if (hits == 1) return hit;
    alpha = bisect(alpha);
    for (auto& r : roots) r = bisect(r);
  }
}

bool ModulusOrder::tied(const RootRef& a) const {
  return std::any_of(ties.begin(), ties.end(),
                     [&](const auto& t) { return t.first == a || t.second == a; });
}

bool ModulusOrder::strictly_largest(const RootRef& a) const {
  return !ranking.empty() && ranking.front() == a && !tied(a);
}

bool ModulusOrder::strictly_smallest(const RootRef& a) const {
  return !ranking.empty() && ranking.back() == a && !tied(a);
}

ModulusOrder classify_moduli(const CubicPoly& f) {
  ModulusOrder order;
  order.real_roots = isolate_real_roots(f);
  const FieldElem alpha = FieldElem::generator(f);

  if (order.real_roots.size() == 3) {
    // |a_i| = |a_j| would make the third root p - a_i - a_j rational.
    std::vector<std::size_t> idx{0, 1, 2};
    std::sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) {
      return compare_moduli(alpha, order.real_roots[i], alpha, order.real_roots[j]) > 0;
    });
    for (std::size_t i : idx) order.ranking.push_back({RootKind::Real, i});
    return order;
  }

  order.complex_pair = true;
  const RootRef real{RootKind::Real, 0};
  const RootRef pair{RootKind::ComplexPair, 0};
  // |pair|^2 = r/alpha, so |alpha| vs |pair| is sign(alpha) * (alpha^3 - r),
  // and alpha^3 - r = p alpha^2 + q alpha.
  if (f.p == 0 && f.q == 0) {
    order.ranking = {real, pair};
    order.ties.emplace_back(real, pair);
    return order;
  }
  const IsolatingInterval& iv = order.real_roots.front();
  int s = sign_at_root(alpha, iv) * sign_at_root(FieldElem(f, 0, f.q, f.p), iv);
  if (s > 0) order.ranking = {real, pair};
  else order.ranking = {pair, real};
  return order;
}

}  // namespace hermite

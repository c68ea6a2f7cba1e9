#include "hermite/jacobi.hpp"

#include <array>
#include <map>

#include "hermite/dominance.hpp"
#include "hermite/errors.hpp"

namespace hermite {

namespace {

using StateKey = std::array<Rat, 6>;

StateKey key_of(const FieldElem& x, const FieldElem& y) {
  return {x.c0(), x.c1(), x.c2(), y.c0(), y.c1(), y.c2()};
}

// Appends (x, y) as state n; returns the earlier index if it repeats.
std::optional<std::size_t> record(RunTranscript& t, std::map<StateKey, std::size_t>& seen, std::size_t n,
                                  const FieldElem& x, const FieldElem& y) {
  t.states.push_back(AlgoState{n, x, y});
  auto [it, inserted] = seen.emplace(key_of(x, y), n);
  if (inserted) return std::nullopt;
  return it->second;
}

}  // namespace

TernaryCF RunTranscript::as_tcf() const {
  TernaryCF out;
  if (!cycle) {
    out.pre_period = quotients;
    return out;
  }
  auto mid = quotients.begin() + static_cast<std::ptrdiff_t>(cycle->pre_period);
  out.pre_period.assign(quotients.begin(), mid);
  out.period.assign(mid, mid + static_cast<std::ptrdiff_t>(cycle->period));
  return out;
}

RunTranscript run_modified(const CubicPoly& f, const Integer& z, std::size_t max_steps) {
  require_irreducible(f);
  RunTranscript t;
  std::map<StateKey, std::size_t> seen;
  FieldElem x(f, -f.q, -f.p, 1);  // r/alpha = alpha^2 - p alpha - q
  FieldElem y = FieldElem::generator(f);
  record(t, seen, 0, x, y);

  for (std::size_t n = 0; n < max_steps; ++n) {
    // f_map(r/alpha) would give 2z + q under linearity; a_0 = z is emitted directly.
    Rat a = n == 0 ? Rat(z) : f_map(x, z);
    Rat b = g_map(y, z);
    t.quotients.push_back({a, b});
    FieldElem denom = y - b;
    if (denom.is_zero()) throw VanishingDenominator("y_n - b_n vanished in the modified algorithm", n);
    FieldElem nx = invert(denom);
    FieldElem ny = (x - a) * nx;
    if (auto prev = record(t, seen, n + 1, nx, ny)) {
      t.cycle = Cycle{*prev, n + 1 - *prev};
      break;
    }
    x = std::move(nx);
    y = std::move(ny);
  }
  return t;
}

RunTranscript run_classic(const FieldElem& x0, const FieldElem& y0, const IsolatingInterval& iv,
                          std::size_t max_steps) {
  if (!(x0.poly() == iv.poly) || !(y0.poly() == iv.poly)) {
    throw std::invalid_argument("run_classic: states and interval over different polynomials");
  }
  require_irreducible(iv.poly);
  RunTranscript t;
  std::map<StateKey, std::size_t> seen;
  FieldElem x = x0, y = y0;
  IsolatingInterval root = iv;
  record(t, seen, 0, x, y);

  for (std::size_t n = 0; n < max_steps; ++n) {
    RootFloor fa = certify_floor(x, root);
    RootFloor fb = certify_floor(y, fa.interval);
    root = fb.interval;
    Rat a(fa.value), b(fb.value);
    t.quotients.push_back({a, b});
    FieldElem denom = y - b;
    if (denom.is_zero()) {
      t.finite = true;
      break;
    }
    FieldElem nx = invert(denom);
    FieldElem ny = (x - a) * nx;
    if (auto prev = record(t, seen, n + 1, nx, ny)) {
      t.cycle = Cycle{*prev, n + 1 - *prev};
      break;
    }
    x = std::move(nx);
    y = std::move(ny);
  }
  return t;
}

namespace {

std::vector<std::optional<double>> approximation_errors(const TernaryCF& tcf, std::size_t count,
                                                        const Rat& first, const Rat& second) {
  std::vector<std::optional<double>> out;
  ConvergentStream stream(tcf);
  for (std::size_t i = 0; i < count && !stream.done(); ++i) {
    const ConvergentTriple& c = stream.next();
    if (c.C == 0) {
      out.emplace_back(std::nullopt);
      continue;
    }
    Rat err = std::max(abs(c.A / c.C - first), abs(c.B / c.C - second));
    out.emplace_back(err.get_d());
  }
  return out;
}

}  // namespace

RunComparison compare_runs(const CubicPoly& f, const Integer& z, std::size_t max_steps) {
  std::optional<IsolatingInterval> root;
  for (const auto& iv : isolate_real_roots(f)) {
    if (dominance_certificate(f, iv, z).verdict) {
      root = iv;
      break;
    }
  }
  if (!root) throw CertificateError("z = " + to_string(z) + " is not certified for any real root");

  const FieldElem x0(f, -f.q, -f.p, 1);
  const FieldElem y0 = FieldElem::generator(f);
  RunComparison out{*root, run_modified(f, z, max_steps), run_classic(x0, y0, *root, max_steps), {}, {}};

  // Reference values far below double resolution.
  const IsolatingInterval fine = refine(*root, make_rat(1, pow(Integer(2), 1100)));
  const Rat first = enclose(x0, fine).lo;
  const Rat second = fine.lo;
  out.modified_errors = approximation_errors(out.modified.as_tcf(), max_steps, first, second);
  out.classic_errors = approximation_errors(out.classic.as_tcf(), out.classic.quotients.size(), first, second);
  return out;
}

}  // namespace hermite

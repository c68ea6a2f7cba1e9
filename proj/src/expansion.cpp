#include "hermite/expansion.hpp"

#include <stdexcept>
#include <vector>

#include "hermite/errors.hpp"

namespace hermite {

TernaryCF hermite_expansion(const CubicPoly& f, const Integer& z) {
  require_irreducible(f);
  const Rat& p = f.p;
  const Rat& q = f.q;
  const Rat& r = f.r;
  const Rat zq(z);
  // (alpha^2 - q)(alpha - p) = pq + r, so pq + r = 0 forces a rational root.
  const Rat s = p * q + r;
  if (s == 0) throw std::logic_error("pq + r = 0 for an irreducible cubic");
  const NInvariants inv = closed_form_invariants(f, z);
  if (inv.det == 0) throw std::logic_error("det(N) = 0 for an irreducible cubic");

  TernaryCF t;
  t.pre_period = {
      {zq, p},
      {(2 * zq + p * p + q) / s, -(zq * zq + q * zq + p * p * zq - p * r) / s},
  };
  t.period = {
      {s * inv.tr / inv.det, -inv.i1 / inv.det},
      {inv.tr, -s * inv.i1 / inv.det},
      {inv.tr / s, -inv.i1 / s},
  };
  return t;
}

TernaryCF cube_root_expansion(const Integer& d, const Integer& z) {
  if (z == 0) throw std::invalid_argument("cube_root_expansion: z must be nonzero");
  Integer root;
  if (mpz_root(root.get_mpz_t(), d.get_mpz_t(), 3) != 0) {
    throw ReducibleError("cube_root_expansion: " + to_string(d) + " is a perfect cube");
  }
  const Rat dq(d), zq(z);
  const Rat z2 = zq * zq;
  const Rat den = z2 * zq + dq * dq;
  TernaryCF t;
  t.pre_period = {{zq, 0}, {2 * zq / dq, -z2 / dq}};
  t.period = {
      {3 * dq * zq / den, -3 * z2 / den},
      {3 * zq, -3 * dq * z2 / den},
      {3 * zq / dq, -3 * z2 / dq},
  };
  return t;
}

Integer choose_z(const CubicPoly& f, const IsolatingInterval& target, long window) {
  require_irreducible(f);
  auto roots = isolate_real_roots(f);
  if (roots.size() == 3) {
    // z + alpha_i^2 are real; the middle square can never dominate.
    const FieldElem alpha = FieldElem::generator(f);
    const std::size_t t = locate_root(alpha, target, roots);
    int above = 0;
    for (std::size_t i = 0; i < 3; ++i)
      if (i != t) above += compare_moduli(alpha, roots[i], alpha, roots[t]) > 0 ? 1 : 0;
    if (above == 1) {
      throw SearchExhausted("target root has the middle square among three real roots; no z exists");
    }
  }
  for (long k = 1; k <= window; ++k) {
    for (long z : {k, -k}) {
      if (dominance_certificate(f, target, Integer(z)).verdict) return Integer(z);
    }
  }
  throw SearchExhausted("no certified z with |z| <= " + std::to_string(window));
}

std::string to_string(Pipeline p) {
  switch (p) {
    case Pipeline::Dominant: return "dominant";
    case Pipeline::ReflectedSmallest: return "reflected_smallest";
    case Pipeline::ShiftedLargestValue: return "shifted_largest_value";
    case Pipeline::ShiftedSmallestValue: return "shifted_smallest_value";
    case Pipeline::ShiftedMiddleValue: return "shifted_middle_value";
  }
  return "unknown";
}

namespace {

std::size_t resolve_index(const ModulusOrder& order, const RootSelector& selector) {
  switch (selector.kind) {
    case RootSelector::Kind::LargestModulus: {
      const RootRef& top = order.ranking.front();
      if (top.kind == RootKind::Real) return top.index;
      // complex pair on top: acceptable only when tied with the real root
      for (const auto& [a, b] : order.ties) {
        if (a.kind == RootKind::Real) return a.index;
        if (b.kind == RootKind::Real) return b.index;
      }
      throw std::invalid_argument("the complex pair is strictly largest in modulus; no real root qualifies");
    }
    case RootSelector::Kind::SmallestModulus: {
      const RootRef& bottom = order.ranking.back();
      if (bottom.kind == RootKind::Real) return bottom.index;
      for (const auto& [a, b] : order.ties) {
        if (a.kind == RootKind::Real) return a.index;
        if (b.kind == RootKind::Real) return b.index;
      }
      throw std::invalid_argument("the complex pair is strictly smallest in modulus; no real root qualifies");
    }
    case RootSelector::Kind::IndexByValue:
      if (selector.index >= order.real_roots.size()) {
        throw std::invalid_argument("root index " + std::to_string(selector.index) + " out of range (" +
                                    std::to_string(order.real_roots.size()) + " real roots)");
      }
      return selector.index;
  }
  throw std::invalid_argument("unknown root selector");
}

struct Certified {
  Integer z;
  DominanceCertificate certificate;
};

// With a hint: certify exactly that z. Without: search the window.
std::optional<Certified> certify(const CubicPoly& h, const IsolatingInterval& target,
                                 const std::optional<Integer>& z_hint, const ExpansionOptions& options,
                                 std::optional<DominanceCertificate>* failed = nullptr) {
  if (z_hint) {
    DominanceCertificate cert = dominance_certificate(h, target, *z_hint);
    if (cert.verdict) return Certified{*z_hint, std::move(cert)};
    if (failed && !failed->has_value()) *failed = std::move(cert);
    return std::nullopt;
  }
  try {
    Integer z = choose_z(h, target, options.z_window);
    return Certified{z, dominance_certificate(h, target, z)};
  } catch (const SearchExhausted&) {
    return std::nullopt;
  }
}

std::string over(const Rat& c, const std::string& expr) {
  if (c == 1) return "1/" + expr;
  if (c == -1) return "-1/" + expr;
  if (c.get_den() == 1) return to_string(c) + "/" + expr;
  return "(" + to_string(c) + ")/" + expr;
}

std::string shifted_symbol(const Rat& k) {
  return "(α " + std::string(k < 0 ? "- " : "+ ") + to_string(Rat(abs(k))) + ")";
}

std::string describe_failure(const DominanceCertificate& cert) {
  return "z = " + to_string(cert.z) + " is not certified: z + α² is not strictly largest in modulus among the roots of " +
         to_string(cert.charpoly) + " (target root " + to_decimal(refine(cert.target, make_rat(1, 1 << 30)).midpoint(), 8) +
         ")";
}

// Direct or reflected expansion of the root `target` of h. On success, the
// returned TCF converges to (r_h/beta, beta) [direct] or to
// (beta, 1/(r_h beta)) [reflected], beta being the target root of h.
struct Stage {
  TernaryCF tcf;
  bool reflected = false;
  CubicPoly expanded_poly;
  Certified certified;
};

std::optional<Stage> expand_at(const CubicPoly& h, const IsolatingInterval& target, const ModulusOrder& order,
                               std::size_t target_index, const std::optional<Integer>& z_hint,
                               const ExpansionOptions& options,
                               std::optional<DominanceCertificate>* failed) {
  if (auto c = certify(h, target, z_hint, options, failed)) {
    return Stage{hermite_expansion(h, c->z), false, h, std::move(*c)};
  }
  if (!order.strictly_smallest(RootRef{RootKind::Real, target_index})) return std::nullopt;

  const CubicPoly hr = reflect(h);
  const auto hr_roots = isolate_real_roots(hr);
  const FieldElem inv_beta = invert(FieldElem::generator(h));
  const IsolatingInterval& hr_target = hr_roots[locate_root(inv_beta, target, hr_roots)];
  if (auto c = certify(hr, hr_target, z_hint, options, failed)) {
    return Stage{scale_transform(hermite_expansion(hr, c->z), h.r), true, hr, std::move(*c)};
  }
  return std::nullopt;
}

// Whether some z in the window certifies the direct or the reflected stage.
bool stage_available(const CubicPoly& h, const IsolatingInterval& target, const ModulusOrder& order,
                     std::size_t target_index, const ExpansionOptions& options) {
  try {
    choose_z(h, target, options.z_window);
    return true;
  } catch (const SearchExhausted&) {
  }
  if (!order.strictly_smallest(RootRef{RootKind::Real, target_index})) return false;
  const CubicPoly hr = reflect(h);
  const auto hr_roots = isolate_real_roots(hr);
  const IsolatingInterval& hr_target =
      hr_roots[locate_root(invert(FieldElem::generator(h)), target, hr_roots)];
  try {
    choose_z(hr, hr_target, options.z_window);
    return true;
  } catch (const SearchExhausted&) {
    return false;
  }
}

}  // namespace

IsolatingInterval resolve_root(const CubicPoly& f, const RootSelector& selector) {
  ModulusOrder order = classify_moduli(f);
  return order.real_roots[resolve_index(order, selector)];
}

ExpansionResult expand_root(const CubicPoly& f, const RootSelector& selector,
                            const std::optional<Integer>& z_hint, const ExpansionOptions& options) {
  require_irreducible(f);
  const ModulusOrder order = classify_moduli(f);
  const std::size_t index = resolve_index(order, selector);
  const IsolatingInterval target = order.real_roots[index];
  const FieldElem alpha = FieldElem::generator(f);
  std::optional<DominanceCertificate> failed;

  auto finish = [&](Stage stage, Pipeline pipeline, const std::optional<Rat>& k, const CubicPoly& h) {
    ExpansionResult res{std::move(stage.tcf),
                        f,
                        target,
                        pipeline,
                        stage.certified.z,
                        k,
                        std::nullopt,
                        stage.expanded_poly,
                        std::move(stage.certified.certificate),
                        {alpha, alpha},
                        {}};
    const Rat kk = k.value_or(Rat(0));
    const FieldElem beta = alpha + kk;  // target root of h
    const std::string beta_text = k ? shifted_symbol(kk) : std::string("α");
    if (!stage.reflected) {
      // (r_h / beta, beta); the leading b quotient absorbs the shift
      if (k) res.tcf.pre_period[0].b -= kk;
      res.couple = {h.r * invert(beta), alpha};
      res.couple_text = {over(h.r, beta_text), "α"};
    } else {
      res.scale = h.r;
      if (k) res.tcf.pre_period[0].a -= kk;
      res.couple = {alpha, invert(h.r * beta)};
      res.couple_text = {"α", over(1 / h.r, beta_text)};
    }
    return res;
  };

  if (auto stage = expand_at(f, target, order, index, z_hint, options, &failed)) {
    Pipeline pl = stage->reflected ? Pipeline::ReflectedSmallest : Pipeline::Dominant;
    return finish(std::move(*stage), pl, std::nullopt, f);
  }
  // A hinted z is not rescued by shifting when an unshifted stage exists.
  if (z_hint && failed && stage_available(f, target, order, index, options)) {
    throw CertificateError(describe_failure(*failed));
  }

  // Rational shifts k, so that alpha + k admits one of the stages above.
  std::vector<std::pair<Rat, Pipeline>> shifts;
  const std::size_t n_real = order.real_roots.size();
  const bool middle = n_real == 3 && index == 1;
  if (middle) {
    // k near -alpha pushes the shifted root towards 0, the smallest modulus.
    IsolatingInterval iv = target;
    for (unsigned j = 0; j < options.shift_steps; ++j) {
      Rat unit = make_rat(1, pow(Integer(2), j));
      iv = refine(iv, unit / 4);
      Rat k = -Rat(floor(iv.midpoint() / unit + Rat(1, 2))) * unit;
      if (k == 0) continue;
      bool seen = false;
      for (const auto& s : shifts) seen = seen || s.first == k;
      if (!seen) shifts.emplace_back(k, Pipeline::ShiftedMiddleValue);
    }
  } else {
    const bool largest_value = index + 1 == n_real;
    const bool smallest_value = index == 0;
    for (unsigned j = 0; j < options.shift_steps; ++j) {
      Rat step(pow(Integer(2), j));
      if (largest_value) shifts.emplace_back(step, Pipeline::ShiftedLargestValue);
      if (smallest_value) shifts.emplace_back(-step, Pipeline::ShiftedSmallestValue);
    }
  }

  for (const auto& [k, pipeline] : shifts) {
    const CubicPoly h = shift(f, k);
    const ModulusOrder h_order = classify_moduli(h);
    const std::size_t h_index = locate_root(alpha + k, target, h_order.real_roots);
    if (auto stage = expand_at(h, h_order.real_roots[h_index], h_order, h_index, z_hint, options, &failed)) {
      return finish(std::move(*stage), pipeline, k, h);
    }
  }

  if (z_hint && failed) throw CertificateError(describe_failure(*failed));
  throw SearchExhausted("no pipeline produced a certified expansion (|z| <= " + std::to_string(options.z_window) +
                        ", " + std::to_string(shifts.size()) + " shifts tried)");
}

}  // namespace hermite

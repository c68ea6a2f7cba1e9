#include "hermite/tcf.hpp"

#include <stdexcept>

namespace hermite {

const PartialQuotient& TernaryCF::operator[](std::size_t n) const {
  if (n < pre_period.size()) return pre_period[n];
  if (period.empty()) throw std::out_of_range("index past the end of a finite ternary continued fraction");
  return period[(n - pre_period.size()) % period.size()];
}

const ConvergentTriple& ConvergentStream::next() {
  if (done()) throw std::out_of_range("convergent stream exhausted");
  const PartialQuotient& pq = (*t_)[next_];
  ConvergentTriple x{next_,
                     pq.a * back1_.A + pq.b * back2_.A + back3_.A,
                     pq.a * back1_.B + pq.b * back2_.B + back3_.B,
                     pq.a * back1_.C + pq.b * back2_.C + back3_.C};
  back3_ = std::move(back2_);
  back2_ = std::move(back1_);
  back1_ = std::move(x);
  ++next_;
  return back1_;
}

std::vector<ConvergentTriple> convergents(const TernaryCF& t, std::size_t n_max) {
  std::vector<ConvergentTriple> out;
  ConvergentStream stream(t);
  for (std::size_t i = 0; i <= n_max && !stream.done(); ++i) out.push_back(stream.next());
  return out;
}

Mat3<Rat> step_matrix(const PartialQuotient& pq) {
  Mat3<Rat> m;
  m.m = {{{pq.a, Rat(1), Rat(0)}, {pq.b, Rat(0), Rat(1)}, {Rat(1), Rat(0), Rat(0)}}};
  return m;
}

Mat3<Rat> matrix_form(const TernaryCF& t, std::size_t n) {
  Mat3<Rat> out = Mat3<Rat>::identity();
  for (std::size_t i = 0; i <= n; ++i) out = out * step_matrix(t[i]);
  return out;
}

Mat3<Integer> integer_step_matrix(const PartialQuotient& pq) {
  const Integer a = pq.a.get_num(), b = pq.a.get_den();
  const Integer c = pq.b.get_num(), d = pq.b.get_den();
  Mat3<Integer> m;
  m.m = {{{a * d, b * d, Integer(0)}, {c * b, Integer(0), b * d}, {b * d, Integer(0), Integer(0)}}};
  return m;
}

std::optional<Rat> SSequences::first_ratio(std::size_t n) const {
  if (s_second.at(n) == 0) return std::nullopt;
  const Integer d1 = second_den.size() > 1 ? second_den[1] : Integer(1);
  return s[n] / (Rat(first_den[0] * d1) * s_second[n]);
}

std::optional<Rat> SSequences::second_ratio(std::size_t n) const {
  if (s_second.at(n) == 0) return std::nullopt;
  return s_prime[n] / (Rat(second_den[0]) * s_second[n]);
}

namespace {

// Writing a_i = an_i/b_i and b_i = cn_i/d_i:
//   s_n = an_n d_n s_{n-1} + b_n b_{n-1} cn_n d_{n-1} s_{n-2}
//         + b_n b_{n-1} b_{n-2} d_n d_{n-1} d_{n-2} s_{n-3}
// (same for s', s''), seeded by closed forms for n = 0, 1, 2. The n = 0
// seeds carry a 1/d_1 factor so the ratio identities hold for every d_1.
SSequences build_s_sequences(const TernaryCF& t, std::size_t n) {
  SSequences out;
  std::vector<Integer> an, cn;
  const std::size_t count = n + 1;
  for (std::size_t i = 0; i < count; ++i) {
    an.push_back(t[i].a.get_num());
    out.first_den.push_back(t[i].a.get_den());
    cn.push_back(t[i].b.get_num());
    out.second_den.push_back(t[i].b.get_den());
  }
  const auto& b = out.first_den;
  const auto& d = out.second_den;
  const Integer d1 = count > 1 ? d[1] : Integer(1);

  out.s.push_back(Rat(an[0]));
  out.s_prime.push_back(make_rat(cn[0], d1));
  out.s_second.push_back(make_rat(1, d1));
  if (count > 1) {
    out.s.push_back(Rat(an[0] * an[1] * d[1] + b[0] * b[1] * cn[1]));
    out.s_prime.push_back(Rat(an[1] * cn[0] + b[1] * d[0]));
    out.s_second.push_back(Rat(an[1]));
  }
  if (count > 2) {
    out.s.push_back(Rat(an[2] * d[2]) * out.s[1] + Rat(b[2] * b[1] * cn[2] * d[1]) * out.s[0] +
                    Rat(b[2] * b[1] * b[0] * d[2] * d[1]));
    out.s_prime.push_back(Rat(b[1] * b[2] * cn[0] * cn[2] + an[1] * an[2] * cn[0] * d[2] +
                              an[2] * b[1] * d[0] * d[2]));
    out.s_second.push_back(Rat(b[1] * b[2] * cn[2] + an[1] * an[2] * d[2]));
  }
  for (std::size_t k = 3; k < count; ++k) {
    const Rat c1(an[k] * d[k]);
    const Rat c2(b[k] * b[k - 1] * cn[k] * d[k - 1]);
    const Rat c3(b[k] * b[k - 1] * b[k - 2] * d[k] * d[k - 1] * d[k - 2]);
    for (auto* seq : {&out.s, &out.s_prime, &out.s_second}) {
      auto& v = *seq;
      v.push_back(c1 * v[k - 1] + c2 * v[k - 2] + c3 * v[k - 3]);
    }
  }
  return out;
}

}  // namespace

IntegerMatrixForm integer_matrix_form(const TernaryCF& t, std::size_t n) {
  IntegerMatrixForm out;
  out.product = Mat3<Integer>::identity();
  for (std::size_t i = 0; i <= n; ++i) {
    out.steps.push_back(integer_step_matrix(t[i]));
    out.product = out.product * out.steps.back();
  }
  out.sequences = build_s_sequences(t, n);
  return out;
}

Evaluation evaluate(const TernaryCF& t, const Rat& tol, std::size_t n_cap) {
  if (tol <= 0) throw std::invalid_argument("evaluate: tolerance must be positive");
  ConvergentStream stream(t);
  Evaluation out;
  bool have_prev = false;
  for (std::size_t i = 0; i <= n_cap && !stream.done(); ++i) {
    const ConvergentTriple& x = stream.next();
    if (x.C == 0) continue;
    Rat first = x.A / x.C, second = x.B / x.C;
    if (have_prev) {
      out.delta = std::max(abs(first - out.first), abs(second - out.second));
    }
    out.first = std::move(first);
    out.second = std::move(second);
    out.index = x.n;
    if (have_prev && out.delta < tol) {
      out.converged = true;
      return out;
    }
    have_prev = true;
  }
  if (!have_prev) throw std::domain_error("evaluate: no convergent with nonzero denominator");
  if (stream.done()) {
    // Finite expansion fully consumed: the last convergent is its value.
    out.delta = 0;
    out.converged = true;
  }
  return out;
}

TernaryCF scale_transform(const TernaryCF& t, const Rat& rho) {
  if (rho == 0) throw std::invalid_argument("scale_transform: rho must be nonzero");
  if (t.pre_period.size() != 2 || t.period.size() != 3) {
    throw std::invalid_argument("scale_transform: expected pre-period 2 and period 3");
  }
  const Rat rho2 = rho * rho;
  const auto& a = t.pre_period;
  const auto& p = t.period;
  TernaryCF out;
  out.pre_period = {{rho * a[0].a, a[0].b / rho}, {rho * a[1].a, rho2 * a[1].b}};
  out.period = {{p[0].a / rho2, p[0].b / rho}, {rho * p[1].a, p[1].b / rho}, {rho * p[2].a, rho2 * p[2].b}};
  return out;
}

}  // namespace hermite

#include "hermite/cerruti.hpp"

#include <stdexcept>

#include "hermite/dominance.hpp"
#include "hermite/errors.hpp"
#include "hermite/root_engine.hpp"

namespace hermite {

MatrixN build_N(const CubicPoly& f, const Integer& z) {
  const Rat& p = f.p;
  const Rat& q = f.q;
  const Rat& r = f.r;
  Rat zq(z);
  MatrixN out{{}, f, z};
  out.entries.m = {{{zq, r, p * r}, {Rat(0), q + zq, p * q + r}, {Rat(1), p, p * p + q + zq}}};
  return out;
}

NInvariants closed_form_invariants(const CubicPoly& f, const Integer& z) {
  const Rat& p = f.p;
  const Rat& q = f.q;
  const Rat& r = f.r;
  Rat zq(z);
  Rat p2 = p * p, z2 = zq * zq;
  return NInvariants{
      p2 + 2 * q + 3 * zq,
      q * q - 2 * p * r + 2 * p2 * zq + 4 * q * zq + 3 * z2,
      r * r + q * q * zq - 2 * p * r * zq + p2 * z2 + 2 * q * z2 + z2 * zq,
  };
}

NInvariants invariants(const MatrixN& n) {
  NInvariants closed = closed_form_invariants(n.poly, n.z);
  Rat tr = n.entries.trace();
  NInvariants direct{tr, (tr * tr - (n.entries * n.entries).trace()) / 2, n.entries.determinant()};
  if (!(closed == direct)) {
    throw std::logic_error("closed-form invariants of N disagree with the direct computation");
  }
  return closed;
}

CubicPoly characteristic_polynomial(const NInvariants& inv) {
  return CubicPoly{inv.tr, -inv.i1, inv.det};
}

CerrutiStream::CerrutiStream(const CubicPoly& f, const Integer& z)
    : inv_(closed_form_invariants(f, z)) {
  const Rat& p = f.p;
  const Rat& q = f.q;
  const Rat& r = f.r;
  Rat zq(z);
  seed_[0] = {0, 1, 0, 0};
  seed_[1] = {1, zq, 0, 1};
  seed_[2] = {2, zq * zq + p * r, p * q + r, p * p + q + 2 * zq};
}

const CerrutiTriple& CerrutiStream::next() {
  if (emitted_ < 3) {
    window_[emitted_] = seed_[emitted_];
    return window_[emitted_++];
  }
  const auto& a = window_[2];
  const auto& b = window_[1];
  const auto& c = window_[0];
  CerrutiTriple t{emitted_,
                  inv_.tr * a.mu0 - inv_.i1 * b.mu0 + inv_.det * c.mu0,
                  inv_.tr * a.mu1 - inv_.i1 * b.mu1 + inv_.det * c.mu1,
                  inv_.tr * a.mu2 - inv_.i1 * b.mu2 + inv_.det * c.mu2};
  window_[0] = std::move(window_[1]);
  window_[1] = std::move(window_[2]);
  window_[2] = std::move(t);
  ++emitted_;
  return window_[2];
}

std::vector<CerrutiTriple> mu_sequence(const CubicPoly& f, const Integer& z, std::size_t n_max) {
  CerrutiStream stream(f, z);
  std::vector<CerrutiTriple> out;
  out.reserve(n_max + 1);
  for (std::size_t i = 0; i <= n_max; ++i) out.push_back(stream.next());
  return out;
}

Mat3<Rat> patterned_power(const CubicPoly& f, const CerrutiTriple& mu) {
  const Rat& p = f.p;
  const Rat& q = f.q;
  const Rat& r = f.r;
  Mat3<Rat> m;
  m.m = {{{mu.mu0, r * mu.mu2, r * mu.mu1 + p * r * mu.mu2},
          {mu.mu1, mu.mu0 + q * mu.mu2, (p * q + r) * mu.mu2 + q * mu.mu1},
          {mu.mu2, mu.mu1 + p * mu.mu2, mu.mu0 + p * mu.mu1 + (p * p + q) * mu.mu2}}};
  return m;
}

bool matrix_power_check(const MatrixN& n_matrix, unsigned n) {
  CerrutiStream stream(n_matrix.poly, n_matrix.z);
  CerrutiTriple mu;
  for (unsigned i = 0; i <= n; ++i) mu = stream.next();
  return power(n_matrix.entries, n) == patterned_power(n_matrix.poly, mu);
}

std::pair<Rat, Rat> binet_ratios(const CubicPoly& f, const Integer& z, const IsolatingInterval& iv,
                                 std::size_t n) {
  if (!dominance_certificate(f, iv, z).verdict) {
    throw CertificateError("z = " + to_string(z) + " does not make z + alpha^2 strictly dominant");
  }
  CerrutiStream stream(f, z);
  CerrutiTriple mu;
  for (std::size_t i = 0; i <= n; ++i) mu = stream.next();
  if (mu.mu2 == 0) throw VanishingDenominator("mu^(2) vanishes", n);
  return {mu.mu0 / mu.mu2, mu.mu1 / mu.mu2};
}

std::vector<std::size_t> vanishing_mu2_indices(const CubicPoly& f, const Integer& z,
                                               std::size_t n_max) {
  std::vector<std::size_t> out;
  CerrutiStream stream(f, z);
  for (std::size_t i = 0; i <= n_max; ++i)
    if (stream.next().mu2 == 0) out.push_back(i);
  return out;
}

}  // namespace hermite

#include "hermite/dominance.hpp"

#include <stdexcept>

#include "hermite/errors.hpp"

namespace hermite {

DominanceCertificate dominance_certificate(const CubicPoly& f, const IsolatingInterval& target,
                                           const Integer& z) {
  require_irreducible(f);
  if (!(target.poly == f)) throw std::invalid_argument("isolating interval belongs to another polynomial");

  DominanceCertificate cert{f, z, target, invariants(build_N(f, z)), {}, {}, 0, false};
  // z + alpha_i^2 = 0 would make alpha_i^2 rational, impossible at degree 3.
  if (cert.invariants_of_N.det == 0) throw std::logic_error("det(N) = 0 for an irreducible cubic");
  cert.charpoly = characteristic_polynomial(cert.invariants_of_N);
  // z + alpha^2 has degree 3 over Q, so its minimal polynomial is charpoly(N).
  if (rational_root_check(cert.charpoly)) {
    throw std::logic_error("charpoly(N) is reducible although f is irreducible");
  }
  cert.charpoly_order = classify_moduli(cert.charpoly);

  // Locate z + alpha^2 among the real roots of charpoly(N).
  const FieldElem beta(f, Rat(z), 0, 1);
  cert.beta_index = locate_root(beta, target, cert.charpoly_order.real_roots);
  cert.verdict = cert.charpoly_order.strictly_largest(RootRef{RootKind::Real, cert.beta_index});
  return cert;
}

}  // namespace hermite

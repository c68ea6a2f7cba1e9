#pragma once

#include <cstddef>

#include "hermite/cerruti.hpp"
#include "hermite/cubic_poly.hpp"
#include "hermite/root_engine.hpp"

namespace hermite {

// Certifies whether beta_1 = z + alpha^2 is strictly the largest-modulus root
// of charpoly(N), where alpha is the root isolated by `target`. All decisions
// are exact sign tests on rationals and on elements of Q(alpha).
struct DominanceCertificate {
  CubicPoly poly;
  Integer z;
  IsolatingInterval target;
  NInvariants invariants_of_N;
  CubicPoly charpoly;          // x^3 - tr x^2 + i1 x - det
  ModulusOrder charpoly_order; // modulus ranking of the charpoly roots
  std::size_t beta_index = 0;  // which real root of charpoly is z + alpha^2
  bool verdict = false;
};

DominanceCertificate dominance_certificate(const CubicPoly& f, const IsolatingInterval& target,
                                           const Integer& z);

}  // namespace hermite

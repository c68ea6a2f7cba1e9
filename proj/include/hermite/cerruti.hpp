#pragma once

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "hermite/cubic_poly.hpp"
#include "hermite/matrix3.hpp"
#include "hermite/rational.hpp"

namespace hermite {

struct IsolatingInterval;

// Fundamental matrix of (f, z):
//   [ z   r    pr        ]
//   [ 0   q+z  pq+r      ]
//   [ 1   p    p^2+q+z   ]
// Its eigenvalues are z + alpha_i^2.
struct MatrixN {
  Mat3<Rat> entries;
  CubicPoly poly;
  Integer z;
};

// Coefficients of charpoly(N) = x^3 - tr x^2 + i1 x - det.
struct NInvariants {
  Rat tr;
  Rat i1;
  Rat det;

  friend bool operator==(const NInvariants&, const NInvariants&) = default;
};

// Coordinates of (z + alpha^2)^n over {1, alpha, alpha^2}.
struct CerrutiTriple {
  std::size_t n = 0;
  Rat mu0;
  Rat mu1;
  Rat mu2;

  friend bool operator==(const CerrutiTriple&, const CerrutiTriple&) = default;
};

MatrixN build_N(const CubicPoly& f, const Integer& z);

// Closed forms in (p, q, r, z).
NInvariants closed_form_invariants(const CubicPoly& f, const Integer& z);

// Direct trace / (tr^2 - tr(N^2))/2 / determinant, cross-checked against the
// closed forms; a mismatch throws std::logic_error.
NInvariants invariants(const MatrixN& n);

// charpoly(N) in the library's minus convention: (tr, -i1, det).
CubicPoly characteristic_polynomial(const NInvariants& inv);

// mu_0 = (1,0,0), mu_1 = (z,0,1), mu_2 = (z^2+pr, pq+r, p^2+q+2z), then
// mu_n = tr mu_{n-1} - i1 mu_{n-2} + det mu_{n-3}.
class CerrutiStream {
 public:
  CerrutiStream(const CubicPoly& f, const Integer& z);

  const CerrutiTriple& next();
  const NInvariants& invariants() const { return inv_; }

 private:
  NInvariants inv_;
  std::array<CerrutiTriple, 3> seed_;
  std::array<CerrutiTriple, 3> window_;  // last three emitted, oldest first
  std::size_t emitted_ = 0;
};

std::vector<CerrutiTriple> mu_sequence(const CubicPoly& f, const Integer& z, std::size_t n_max);

// N^n assembled from the Cerruti triple of index n.
Mat3<Rat> patterned_power(const CubicPoly& f, const CerrutiTriple& mu);

// True iff the exact power N^n equals the patterned matrix built from mu_n.
bool matrix_power_check(const MatrixN& n_matrix, unsigned n);

// (mu_n^(0) / mu_n^(2), mu_n^(1) / mu_n^(2)), tending to (r/alpha, alpha - p)
// when z + alpha^2 strictly dominates. Throws CertificateError when z is not
// certified for the root isolated by `iv`, VanishingDenominator when
// mu_n^(2) = 0.
std::pair<Rat, Rat> binet_ratios(const CubicPoly& f, const Integer& z, const IsolatingInterval& iv,
                                 std::size_t n);

// Indices in [0, n_max] where mu_n^(2) vanishes.
std::vector<std::size_t> vanishing_mu2_indices(const CubicPoly& f, const Integer& z,
                                               std::size_t n_max);

}  // namespace hermite

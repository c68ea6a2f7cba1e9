#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>

#include "hermite/cubic_field.hpp"
#include "hermite/dominance.hpp"
#include "hermite/tcf.hpp"

namespace hermite {

// Periodic expansion of (r/alpha, alpha) with pre-period
//   a: z, (2z + p^2 + q)/(pq + r)
//   b: p, -(z^2 + qz + p^2 z - pr)/(pq + r)
// and period
//   a: (pq + r) tr/det, tr, tr/(pq + r)
//   b: -i1/det, -(pq + r) i1/det, -i1/(pq + r).
// Converges when z + alpha^2 strictly dominates the other roots of
// charpoly(N); that certificate is the caller's responsibility.
TernaryCF hermite_expansion(const CubicPoly& f, const Integer& z);

// Expansion of (d^(2/3), d^(1/3)) for a non-cube integer d and z != 0.
TernaryCF cube_root_expansion(const Integer& d, const Integer& z);

// Smallest |z| (positive first, z != 0) in [-window, window] certified by
// dominance_certificate. Throws SearchExhausted when none exists, which is
// immediate for the middle alpha^2 of three real roots.
Integer choose_z(const CubicPoly& f, const IsolatingInterval& target, long window);

enum class Pipeline {
  Dominant,
  ReflectedSmallest,
  ShiftedLargestValue,
  ShiftedSmallestValue,
  ShiftedMiddleValue,
};

std::string to_string(Pipeline p);

struct RootSelector {
  enum class Kind { LargestModulus, SmallestModulus, IndexByValue };
  Kind kind = Kind::LargestModulus;
  std::size_t index = 0;  // ascending value order, for IndexByValue

  static RootSelector largest() { return {Kind::LargestModulus, 0}; }
  static RootSelector smallest() { return {Kind::SmallestModulus, 0}; }
  static RootSelector by_value(std::size_t i) { return {Kind::IndexByValue, i}; }
};

struct ExpansionOptions {
  long z_window = 64;
  unsigned shift_steps = 12;  // candidate shifts tried before giving up
};

struct ExpansionResult {
  TernaryCF tcf;
  CubicPoly poly;                  // the input cubic
  IsolatingInterval target;        // the requested root of `poly`
  Pipeline pipeline = Pipeline::Dominant;
  Integer z;
  std::optional<Rat> shift;        // k, when the root was translated
  std::optional<Rat> scale;        // rho, when the reflected expansion was rescaled
  CubicPoly expanded_poly;         // the cubic fed to hermite_expansion
  DominanceCertificate certificate;
  // The two limits as elements of Q(alpha), alpha = target root of `poly`.
  std::pair<FieldElem, FieldElem> couple;
  std::pair<std::string, std::string> couple_text;
};

// Resolves the selector against the real roots of f (throws
// std::invalid_argument when it cannot be resolved).
IsolatingInterval resolve_root(const CubicPoly& f, const RootSelector& selector);

// Tries, in order: the direct expansion, the reflected expansion (target
// strictly smallest in modulus), then rational shifts of the root. With a
// z hint, the hint is the only z tried at each stage, and shifts are tried
// only when no z at all would serve an unshifted stage; otherwise an
// uncertified hint throws CertificateError.
ExpansionResult expand_root(const CubicPoly& f, const RootSelector& selector,
                            const std::optional<Integer>& z_hint = std::nullopt,
                            const ExpansionOptions& options = {});

}  // namespace hermite

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hermite/rational.hpp"

namespace hermite {

// Monic cubic stored in the "minus" convention x^3 - p x^2 - q x - r.
struct CubicPoly {
  Rat p;
  Rat q;
  Rat r;

  // f(x) = x^3 - p x^2 - q x - r
  Rat operator()(const Rat& x) const;
  // f'(x) = 3x^2 - 2p x - q
  Rat derivative(const Rat& x) const;

  friend bool operator==(const CubicPoly&, const CubicPoly&) = default;
};

// Parses a degree-3 polynomial with rational coefficients, e.g.
// "3x^3-12x^2-4x+1", "x^3 + 2/3 x - 1", "2*x^3 - x". Returns the monic
// normalization (p, q, r) = (-a2/a3, -a1/a3, -a0/a3).
CubicPoly parse_cubic(std::string_view text);

// "x^3 - 5x^2 + x - 3"; parse_cubic(to_string(f)) == f.
std::string to_string(const CubicPoly& f);

// All rational roots of f, ascending and without repeats.
std::vector<Rat> rational_roots(const CubicPoly& f);

// A rational root of f, if any: the one of least absolute value, positive
// first. For a cubic, no rational root <=> irreducible over Q.
std::optional<Rat> rational_root_check(const CubicPoly& f);

// Throws ReducibleError naming the rational root.
void require_irreducible(const CubicPoly& f);

// Monic cubic whose roots are 1/alpha_i: (p, q, r) -> (-q/r, -p/r, 1/r).
CubicPoly reflect(const CubicPoly& f);

// Monic cubic whose roots are alpha_i + k, i.e. f(x - k).
CubicPoly shift(const CubicPoly& f, const Rat& k);

}  // namespace hermite

#pragma once

#include <string>
#include <vector>

#include "hermite/cubic_poly.hpp"
#include "hermite/tcf.hpp"

namespace hermite {

// A worked expansion as originally published, plus the value actually
// produced when the published listing contains a misprint.
struct ReferenceListing {
  std::string name;
  CubicPoly poly;
  Integer z;
  TernaryCF printed;
  TernaryCF expected;  // equals `printed` unless an erratum applies
  std::string erratum; // empty when none
};

std::vector<ReferenceListing> reference_listings();

// Known misprints affecting the expansion of f with this z.
std::vector<std::string> erratum_notes(const CubicPoly& f, const Integer& z);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

// The full golden suite behind `hermite verify-examples`.
std::vector<CheckResult> verify_reference_examples();

}  // namespace hermite

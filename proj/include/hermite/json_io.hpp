#pragma once

#include <json.hpp>

#include "hermite/expansion.hpp"
#include "hermite/jacobi.hpp"
#include "hermite/tcf.hpp"

namespace hermite {

using Json = nlohmann::ordered_json;

// { "pre_period": [["a","b"], ...], "period": [["a","b"], ...] } with every
// rational as a "num/den" (or integer) string.
Json tcf_to_json(const TernaryCF& t);
TernaryCF tcf_from_json(const Json& j);  // throws ParseError

Json certificate_to_json(const DominanceCertificate& c);
Json expansion_to_json(const ExpansionResult& r);
Json convergents_to_json(const std::vector<ConvergentTriple>& cs, int digits);
Json transcript_to_json(const RunTranscript& t);
Json comparison_to_json(const RunComparison& c, int digits);

}  // namespace hermite

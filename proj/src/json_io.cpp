#include "hermite/json_io.hpp"

#include <cstdio>

#include "hermite/errors.hpp"

namespace hermite {

namespace {

Json quotients_to_json(const std::vector<PartialQuotient>& qs) {
  Json arr = Json::array();
  for (const auto& q : qs) arr.push_back(Json::array({to_string(q.a), to_string(q.b)}));
  return arr;
}

std::vector<PartialQuotient> quotients_from_json(const Json& j, const char* field) {
  if (!j.contains(field) || !j.at(field).is_array()) {
    throw ParseError(std::string("TCF JSON: missing array '") + field + "'");
  }
  std::vector<PartialQuotient> out;
  for (const auto& pair : j.at(field)) {
    if (!pair.is_array() || pair.size() != 2) throw ParseError("TCF JSON: quotients must be [a, b] pairs");
    auto rat = [](const Json& v) {
      if (v.is_string()) return parse_rat(v.get<std::string>());
      if (v.is_number_integer()) return Rat(Integer(v.dump()));
      throw ParseError("TCF JSON: rationals must be strings");
    };
    out.push_back({rat(pair[0]), rat(pair[1])});
  }
  return out;
}

Json interval_to_json(const IsolatingInterval& iv) {
  return Json::array({to_string(iv.lo), to_string(iv.hi)});
}

std::string format_double(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*e", digits > 1 ? digits - 1 : 0, v);
  return buf;
}

Json errors_to_json(const std::vector<std::optional<double>>& errs, int digits) {
  Json arr = Json::array();
  for (const auto& e : errs) arr.push_back(e ? Json(format_double(*e, digits)) : Json(nullptr));
  return arr;
}

}  // namespace

Json tcf_to_json(const TernaryCF& t) {
  Json j;
  j["pre_period"] = quotients_to_json(t.pre_period);
  j["period"] = quotients_to_json(t.period);
  return j;
}

TernaryCF tcf_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("TCF JSON must be an object");
  const Json& body = j.contains("tcf") ? j.at("tcf") : j;
  TernaryCF t{quotients_from_json(body, "pre_period"), quotients_from_json(body, "period")};
  if (t.pre_period.empty() && t.period.empty()) throw ParseError("TCF JSON: no partial quotients");
  return t;
}

Json certificate_to_json(const DominanceCertificate& c) {
  Json j;
  j["poly"] = to_string(c.poly);
  j["z"] = to_string(c.z);
  j["target"] = interval_to_json(c.target);
  j["invariants"] = {{"tr", to_string(c.invariants_of_N.tr)},
                     {"i1", to_string(c.invariants_of_N.i1)},
                     {"det", to_string(c.invariants_of_N.det)}};
  j["charpoly"] = to_string(c.charpoly);
  j["verdict"] = c.verdict;
  return j;
}

Json expansion_to_json(const ExpansionResult& r) {
  Json j;
  j["poly"] = to_string(r.poly);
  j["root"] = interval_to_json(r.target);
  j["pipeline"] = to_string(r.pipeline);
  j["z"] = to_string(r.z);
  j["k"] = r.shift ? Json(to_string(*r.shift)) : Json(nullptr);
  j["rho"] = r.scale ? Json(to_string(*r.scale)) : Json(nullptr);
  j["expanded_poly"] = to_string(r.expanded_poly);
  j["couple"] = Json::array({r.couple_text.first, r.couple_text.second});
  j["tcf"] = tcf_to_json(r.tcf);
  j["certificate"] = certificate_to_json(r.certificate);
  return j;
}

Json convergents_to_json(const std::vector<ConvergentTriple>& cs, int digits) {
  Json arr = Json::array();
  for (const auto& c : cs) {
    Json e;
    e["n"] = c.n;
    e["A"] = to_string(c.A);
    e["B"] = to_string(c.B);
    e["C"] = to_string(c.C);
    if (c.C == 0) {
      e["skipped"] = true;
    } else {
      Rat x = c.A / c.C, y = c.B / c.C;
      e["first"] = to_string(x);
      e["second"] = to_string(y);
      e["first_decimal"] = to_decimal(x, digits);
      e["second_decimal"] = to_decimal(y, digits);
    }
    arr.push_back(std::move(e));
  }
  return arr;
}

Json transcript_to_json(const RunTranscript& t) {
  Json j;
  j["quotients"] = quotients_to_json(t.quotients);
  j["cycle"] = t.cycle ? Json{{"pre_period", t.cycle->pre_period}, {"period", t.cycle->period}} : Json(nullptr);
  j["finite"] = t.finite;
  j["steps"] = t.quotients.size();
  return j;
}

Json comparison_to_json(const RunComparison& c, int digits) {
  Json j;
  j["root"] = interval_to_json(c.root);
  Json m = transcript_to_json(c.modified);
  m["errors"] = errors_to_json(c.modified_errors, digits);
  Json k = transcript_to_json(c.classic);
  k["errors"] = errors_to_json(c.classic_errors, digits);
  j["modified"] = std::move(m);
  j["classic"] = std::move(k);
  return j;
}

}  // namespace hermite

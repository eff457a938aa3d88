#pragma once

#include <string>
#include <vector>

#include "../../vendor/json.hpp"
#include "fga/ambient.hpp"

namespace fga {

using Json = nlohmann::ordered_json;

inline std::string rational_str(const Rational& r) { return r.str(); }

inline std::string bigfloat_str(const BigFloat& v) {
  return v.str(20, std::ios_base::scientific);
}

/// JSON report for a certification run.  Schema (version 1):
/// { "schema": 1, "input": ..., "mode": "exact"|"float", "precision": bits,
///   "points": [ { "coords": [...], "gamma_norm": ...,
///                 "ricci_norms": [...] } ],
///   "verdict": ... }
inline Json strategy_json(const StrategyReport& rep, const std::string& input,
                          bool exact, unsigned prec_bits) {
  Json j;
  j["schema"] = 1;
  j["input"] = input;
  j["mode"] = exact ? "exact" : "float";
  j["precision"] = exact ? 0 : prec_bits;
  j["tu_grid"] = Json::array();
  for (const auto& [t0, u0] : rep.tu_grid)
    j["tu_grid"].push_back({rational_str(t0), rational_str(u0)});
  j["points"] = Json::array();
  for (const auto& pr : rep.points) {
    Json p;
    p["coords"] = Json::array();
    for (int i = 0; i < 5; ++i) p["coords"].push_back(rational_str(pr.coords[i]));
    p["gamma_norm"] = bigfloat_str(pr.gamma_norm);
    p["ricci_norms"] = Json::array();
    for (const auto& rn : pr.ricci_norms)
      p["ricci_norms"].push_back(bigfloat_str(rn));
    j["points"].push_back(std::move(p));
  }
  j["degenerate_skipped"] = rep.degenerate_skipped;
  j["verdict"] = rep.verdict;
  if (!rep.detail.empty()) j["detail"] = rep.detail;
  return j;
}

}  // namespace fga

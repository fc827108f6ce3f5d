#pragma once

// JSON encodings shared by the command-line tool.

#include <string>
#include <vector>

#include <json.hpp>

#include "hornsat/hornsat.hpp"

namespace hornsat::report {

using Json = nlohmann::ordered_json;

inline Json tuple_json(const std::vector<SchubertIndex>& t) {
  Json out = Json::array();
  for (const auto& idx : t) out.push_back(format_index(idx));
  return out;
}

inline Json lhs_json(const InequalityLHS& lhs) {
  return Json{{"d", lhs.d}, {"ktuple", tuple_json(lhs.ktuple)}, {"value", lhs.value}};
}

inline Json verdict_json(const HornVerdict& v) {
  Json out{{"mode", to_string(v.mode)}, {"nonzero", v.nonzero}, {"trace_depth", v.trace_depth}};
  out["witness"] = v.witness ? lhs_json(*v.witness) : Json(nullptr);
  return out;
}

inline Json probe_json(const ProbeReport& r) {
  return Json{{"outcome", to_string(r.outcome)}, {"expected", r.expected}, {"observed_ranks", r.observed_ranks}};
}

inline Json filtration_json(const FiltrationCertificate& c, const ProblemTuple& p, const FiltrationCheck& chk) {
  Json positions = Json::array();
  Json composed = Json::array();
  for (int u = 0; u <= c.depth(); ++u) {
    positions.push_back(tuple_json(c.positions[static_cast<std::size_t>(u)]));
    composed.push_back(tuple_json(composed_positions(c, p, u)));
  }
  return Json{{"seed", c.seed},
              {"prime", c.prime},
              {"problem", c.problem},
              {"hom_rank", c.hom_rank},
              {"depth", c.depth()},
              {"chain_dims", c.dims()},
              {"positions", positions},
              {"positions_in_n", composed},
              {"verification",
               {{"structure", chk.structure},
                {"i", chk.clause_i},
                {"ii", chk.clause_ii},
                {"iii", chk.clause_iii},
                {"observed_rank", chk.observed_rank},
                {"predicted_rank", chk.predicted_rank},
                {"ok", chk.ok()}}}};
}

inline Json hn_json(const HNResult& r) {
  Json out{{"outcome", to_string(r.outcome)}, {"total_slope", format_slope(r.total)}, {"candidates_tried", r.candidates_tried}};
  if (r.outcome == HNOutcome::codimension_violation) out["codim_excess"] = r.codim_excess;
  if (r.certificate) {
    const auto& c = *r.certificate;
    out["certificate"] = Json{{"d", c.contradictor.d},
                              {"ktuple", tuple_json(c.contradictor.ktuple)},
                              {"slope", format_slope(c.contradictor.slope)},
                              {"ltuple", tuple_json(c.ltuple)},
                              {"violated", lhs_json(c.violated)},
                              {"point_check", c.point_check.str()}};
  } else {
    out["certificate"] = nullptr;
  }
  return out;
}

}  // namespace hornsat::report

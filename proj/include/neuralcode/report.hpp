// Copyright 2026 The neuralcode Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "neuralcode/analysis.hpp"
#include "neuralcode/collapse.hpp"
#include "neuralcode/contractibility.hpp"
#include "neuralcode/homology.hpp"
#include "neuralcode/realization.hpp"

namespace ncode::report {

using nlohmann::json;

inline constexpr const char* kSchemaVersion = "1.0.0";

inline json to_json(Face f) { return f.labels(); }

inline json to_json(const std::vector<Face>& faces) {
  json arr = json::array();
  for (Face f : faces) arr.push_back(to_json(f));
  return arr;
}

inline json to_json(const Code& code) {
  return {{"n", code.ambient_n()}, {"words", to_json(code.words())}, {"has_empty_word", code.has_empty_word()}};
}

inline json to_json(const std::vector<CollapseStep>& steps) {
  json arr = json::array();
  for (const auto& s : steps) arr.push_back({{"sigma", to_json(s.sigma)}, {"tau", to_json(s.tau)}});
  return arr;
}

inline json to_json(const BettiVector& b) { return {{"prime", b.prime}, {"reduced", b.reduced}}; }

inline json to_json(const Evidence& e) {
  json j{{"reason", to_string(e.reason)}, {"nodes_explored", e.nodes_explored}};
  if (e.reason == Reason::collapse_certificate) j["collapse_sequence"] = to_json(e.collapse_sequence);
  if (e.betti) j["betti"] = to_json(*e.betti);
  if (e.apex) j["apex"] = *e.apex;
  return j;
}

inline json to_json(const TriStatus& s) {
  json j{{"value", to_string(s.value)}, {"certificate", to_json(s.evidence)}};
  if (s.witness) j["witness"] = to_json(*s.witness);
  return j;
}

inline json to_json(const LinkCheck& c) {
  json j = to_json(c.status);
  j["face"] = to_json(c.face);
  j["link_facets"] = to_json(c.link.facets());
  return j;
}

inline json to_json(const LocalVerdict& v) {
  json j = to_json(v.status);
  json links = json::array();
  for (const auto& c : v.checks) links.push_back(to_json(c));
  j["links"] = std::move(links);
  return j;
}

inline json to_json(const CollapseOutcome& o) {
  json j{{"status", to_string(o.status)},
         {"nodes_explored", o.nodes_explored},
         {"budget_exhausted", o.budget_exhausted}};
  if (o.status == Tri::yes) j["certificate"] = to_json(o.certificate);
  return j;
}

inline json to_json(const GoodCoverVerdict& v) {
  json j = to_json(v.status);
  json regions = json::array();
  for (const auto& c : v.checks) {
    json r = to_json(c.status);
    r["tau"] = to_json(c.tau);
    r["gamma"] = to_json(c.gamma);
    regions.push_back(std::move(r));
  }
  j["regions"] = std::move(regions);
  return j;
}

/// Timing values are left out when `elapsed_ms` is empty so deterministic
/// runs serialize byte-identically.
inline json classification(const AnalysisReport& r, std::optional<double> elapsed_ms) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["input"] = to_json(r.code);
  j["sparsity"] = r.sparsity;
  j["max_intersection_complete"] = r.max_intersection_complete;
  j["locally_good"] = to_json(r.locally_good);
  j["locally_great"] = to_json(r.locally_great);
  j["mandatory"] = {{"found", to_json(r.mandatory_found)}, {"unknown", to_json(r.mandatory_unknown)}};
  j["implication_notes"] = r.implication_notes;
  if (r.inconsistency) j["inconsistency"] = *r.inconsistency;
  if (elapsed_ms) {
    j["timings"] = {{"deterministic", false}, {"total_ms", *elapsed_ms}};
  } else {
    j["timings"] = {{"deterministic", true}};
  }
  return j;
}

}  // namespace ncode::report

#pragma once

#include <string>

#include "json.hpp"

#include "gridbasis/survey.hpp"
#include "gridbasis/verify.hpp"

namespace gridbasis {

inline nlohmann::json perm_json(const Permutation& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (std::uint8_t r : p.ranks()) arr.push_back(static_cast<int>(r));
  return arr;
}

inline nlohmann::json perm_list_json(const std::vector<Permutation>& perms) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& p : perms) arr.push_back(perm_json(p));
  return arr;
}

// Stable report schema:
//   { "class": string, "max_len": int, "basis": [[int,...],...] sorted by
//     (length, lex), "members_by_length": {len: count},
//     "stabilized_at": int|null, "lookahead": int }
inline nlohmann::json report_json(const BasisReport& r) {
  nlohmann::json j;
  j["class"] = r.class_description;
  j["max_len"] = r.max_len;
  j["basis"] = perm_list_json(r.elements);
  nlohmann::json counts = nlohmann::json::object();
  for (const auto& [len, count] : r.members_by_length) counts[std::to_string(len)] = count;
  j["members_by_length"] = counts;
  j["stabilized_at"] = r.stabilized_at ? nlohmann::json(*r.stabilized_at) : nlohmann::json(nullptr);
  j["lookahead"] = r.lookahead;
  return j;
}

inline std::string report_text(const BasisReport& r) {
  std::string s;
  s += "class: " + r.class_description + "\n";
  s += "max-len: " + std::to_string(r.max_len) + "\n";
  s += "lookahead: " + std::to_string(r.lookahead) + "\n";
  s += "members-by-length:";
  for (const auto& [len, count] : r.members_by_length)
    s += " " + std::to_string(len) + "=" + std::to_string(count);
  s += "\n";
  s += "basis-count: " + std::to_string(r.elements.size()) + "\n";
  for (const auto& [len, elems] : r.elements_by_length()) {
    s += "length " + std::to_string(len) + ":\n";
    for (const auto& p : elems) s += "  " + to_string(p) + "\n";
  }
  s += "stabilized-at: " + (r.stabilized_at ? std::to_string(*r.stabilized_at) : "none") + "\n";
  return s;
}

inline nlohmann::json relative_json(const RelativeBasisReport& r) {
  nlohmann::json j = report_json(r.full);
  j["relative_basis"] = perm_list_json(r.in_f);
  nlohmann::json tags = nlohmann::json::object();
  for (std::size_t i = 0; i < r.in_f.size(); ++i)
    tags[to_string(r.in_f[i])] = r.sides[i] == SquintSide::a ? "A" : "B";
  j["side_tags"] = tags;
  j["outside_basis"] = perm_list_json(r.outside);
  return j;
}

inline std::string relative_text(const RelativeBasisReport& r) {
  std::string s;
  s += "grid: " + r.grid.to_string() + "\n";
  s += "max-len: " + std::to_string(r.full.max_len) + "\n";
  s += "basis-count: " + std::to_string(r.full.elements.size()) + "\n";
  s += "relative-basis-count: " + std::to_string(r.in_f.size()) + "\n";
  {
    int current = -1;
    for (std::size_t i = 0; i < r.in_f.size(); ++i) {
      if (r.in_f[i].size() != current) {
        current = r.in_f[i].size();
        s += "length " + std::to_string(current) + ":\n";
      }
      s += "  " + to_string(r.in_f[i]) + " side=" +
           (r.sides[i] == SquintSide::a ? "A" : "B") + "\n";
    }
  }
  s += "outside-count: " + std::to_string(r.outside.size()) + "\n";
  for (const auto& p : r.outside) s += "  " + to_string(p) + "\n";
  return s;
}

inline nlohmann::json lemma3_json(const GridSpec& g, int max_len, const Lemma3Report& r) {
  nlohmann::json j;
  j["grid"] = g.to_string();
  j["max_len"] = max_len;
  j["verdict"] = r.pass ? "PASS" : "FAIL";
  j["counterexample"] = r.counterexample ? perm_json(*r.counterexample) : nlohmann::json(nullptr);
  return j;
}

inline std::string lemma3_text(const Lemma3Report& r) {
  if (r.pass) return "PASS\n";
  return "FAIL\ncounterexample: " + to_string(*r.counterexample) + "\n";
}

inline nlohmann::json observation2_json(const GridSpec& g, const Observation2Report& r) {
  nlohmann::json j;
  j["grid"] = g.to_string();
  j["max_len"] = r.basis_e.max_len;
  j["verdict"] = r.pass ? "PASS" : "FAIL";
  j["violations"] = perm_list_json(r.violations);
  return j;
}

inline std::string observation2_text(const Observation2Report& r) {
  if (r.pass) return "PASS\n";
  std::string s = "FAIL\n";
  for (const auto& p : r.violations) s += "violation: " + to_string(p) + "\n";
  return s;
}

inline nlohmann::json survey_json(const std::vector<SurveyOrbit>& orbits, const EnumLimits& lim) {
  nlohmann::json j;
  j["max_len"] = lim.max_len;
  j["lookahead"] = lim.lookahead;
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& orbit : orbits) {
    nlohmann::json entry;
    entry["representative"] = orbit.representative.to_string();
    nlohmann::json members = nlohmann::json::array();
    for (const auto& g : orbit.members) members.push_back(g.to_string());
    entry["members"] = members;
    entry["report"] = report_json(orbit.report);
    arr.push_back(entry);
  }
  j["orbits"] = arr;
  return j;
}

inline std::string survey_text(const std::vector<SurveyOrbit>& orbits) {
  std::string s = "orbits: " + std::to_string(orbits.size()) + "\n";
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    s += "-- orbit " + std::to_string(i + 1) + "/" + std::to_string(orbits.size()) + " --\n";
    s += "members:";
    for (const auto& g : orbits[i].members) s += " " + g.to_string();
    s += "\n";
    s += report_text(orbits[i].report);
  }
  return s;
}

}  // namespace gridbasis

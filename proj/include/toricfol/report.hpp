#pragma once

// Machine (JSON, sorted keys) and text renderings of results. Both carry the
// same numbers; integers that do not fit in 64 bits are written as strings.

#include "toricfol/bounds_audit.hpp"
#include "toricfol/fixtures.hpp"

#include <json.hpp>

#include <sstream>
#include <string>

namespace toricfol {

using Json = nlohmann::json;

inline Json to_json(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

inline std::string pair_name(const std::vector<std::string>& names, std::pair<std::size_t, std::size_t> p) {
  return "(" + names[p.first] + "," + names[p.second] + ")";
}

inline Json to_json(const Decomposition& d, const std::vector<std::string>& names) {
  Json j;
  Json idx = Json::array();
  for (auto v : d.index_set) idx.push_back(names[v]);
  j["index_set"] = idx;
  Json entries = Json::object();
  for (const auto& [jk, p] : d.pjk)
    if (!p.is_zero()) entries["P" + pair_name(names, jk)] = to_string(p, names);
  j["entries"] = entries;
  j["cofactor"] = to_string(d.cofactor, names);
  j["radial_index"] = d.radial_index + 1;
  j["theta"] = to_string(d.theta);
  j["text"] = to_string(d, names);
  return j;
}

inline Json to_json(const AuditReport& r) {
  const auto& names = r.variables;
  Json j;
  j["model"] = r.model;
  j["variables"] = names;
  j["deg_f"] = r.deg_f ? Json(r.deg_f->to_string()) : Json(nullptr);
  Json comps = Json::object();
  for (const auto& [v, d] : r.deg_f_components) comps[names[v]] = d.to_string();
  j["deg_f_components"] = comps;
  j["deg_v"] = r.deg_v ? Json(r.deg_v->to_string()) : Json(nullptr);
  Json eligible = Json::array();
  for (auto k : r.eligible_k) eligible.push_back(k + 1);
  j["eligible_k"] = eligible;
  if (r.subset) {
    Json s = Json::array();
    for (auto v : *r.subset) s.push_back(names[v]);
    j["subset"] = s;
  } else {
    j["subset"] = nullptr;
  }
  j["quasi_smoothness"] = r.quasi_smoothness;
  j["cofactor"] = r.cofactor ? Json(to_string(*r.cofactor, names)) : Json("not invariant");
  j["lie_g_member"] = r.lie_g_member;
  Json hyps = Json::array();
  for (const auto& h : r.hypotheses)
    hyps.push_back({{"name", h.name}, {"status", to_string(h.status)}, {"detail", h.detail}});
  j["hypotheses"] = hyps;
  Json bound = Json::object(), actual = Json::object(), slack = Json::object(), coords = Json::array();
  for (const auto& c : r.comparisons) {
    const std::string k = std::to_string(c.k + 1);
    bound[k] = to_json(c.bound);
    actual[k] = to_json(c.actual);
    slack[k] = to_json(c.slack);
    Json cj{{"k", c.k + 1},
            {"bound", to_json(c.bound)},
            {"actual", to_json(c.actual)},
            {"slack", to_json(c.slack)},
            {"sharp", c.sharp},
            {"max_pair", pair_name(names, c.max_pair)}};
    cj["pair_bound"] = c.pair_bound ? to_json(*c.pair_bound) : Json(nullptr);
    cj["witness_pair"] = c.witness_pair ? Json(pair_name(names, *c.witness_pair)) : Json(nullptr);
    coords.push_back(cj);
  }
  j["bound"] = bound;
  j["actual"] = actual;
  j["slack"] = slack;
  j["comparisons"] = coords;
  j["decomposition"] = r.decomposition ? to_json(*r.decomposition, names) : Json(nullptr);
  j["warnings"] = r.warnings;
  j["verdict"] = r.verdict;
  j["exit_code"] = r.exit_code();
  return j;
}

inline Json to_json(const FixtureReport& r) {
  Json j;
  j["fixture"] = r.name;
  Json params = Json::object();
  for (const auto& [k, v] : r.parameters) params[k] = v;
  j["parameters"] = params;
  Json checks = Json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"key", c.key},
                      {"expected", c.expected},
                      {"actual", c.actual},
                      {"source", to_string(c.source)},
                      {"note", c.note},
                      {"passed", c.passed}});
  j["checks"] = checks;
  j["passed"] = r.passed();
  j["audit"] = to_json(r.audit);
  return j;
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

inline std::string to_text(const AuditReport& r) {
  const auto& names = r.variables;
  std::ostringstream o;
  o << "model: " << r.model << "\n";
  o << "variables: " << join(names, ", ") << "\n";
  if (r.deg_f) {
    o << "deg_f: " << r.deg_f->to_string() << "\n";
  } else {
    std::vector<std::string> parts;
    for (const auto& [v, d] : r.deg_f_components) parts.push_back(names[v] + " -> " + d.to_string());
    o << "deg_f: inconsistent (" << join(parts, "; ") << ")\n";
  }
  o << "deg_v: " << (r.deg_v ? r.deg_v->to_string() : std::string("not quasi-homogeneous")) << "\n";
  std::vector<std::string> ks;
  for (auto k : r.eligible_k) ks.push_back(std::to_string(k + 1));
  o << "eligible_k: " << (ks.empty() ? std::string("none") : join(ks, ", ")) << "\n";
  if (r.subset) {
    std::vector<std::string> s;
    for (auto v : *r.subset) s.push_back(names[v]);
    o << "subset: " << join(s, ", ") << "\n";
  }
  o << "quasi_smoothness: " << r.quasi_smoothness << "\n";
  o << "cofactor: " << (r.cofactor ? to_string(*r.cofactor, names) : std::string("not invariant")) << "\n";
  o << "lie_g_member: " << (r.lie_g_member ? "yes" : "no") << "\n";
  o << "hypotheses:\n";
  for (const auto& h : r.hypotheses) {
    o << "  [" << to_string(h.status) << "] " << h.name;
    if (!h.detail.empty()) o << ": " << h.detail;
    o << "\n";
  }
  for (const auto& c : r.comparisons) {
    o << "coordinate " << c.k + 1 << ": bound " << c.bound << ", actual " << c.actual << ", slack " << c.slack
      << (c.sharp ? " (sharp)" : "") << ", max pair " << pair_name(names, c.max_pair);
    if (c.pair_bound) o << ", pair bound " << *c.pair_bound;
    if (c.witness_pair) o << " at " << pair_name(names, *c.witness_pair);
    o << "\n";
  }
  if (r.decomposition) o << "decomposition: " << to_string(*r.decomposition, names) << "\n";
  for (const auto& w : r.warnings) o << "warning: " << w << "\n";
  o << "verdict: " << r.verdict << "\n";
  return o.str();
}

inline std::string to_text(const FixtureReport& r) {
  std::ostringstream o;
  o << "fixture: " << r.name;
  std::vector<std::string> ps;
  for (const auto& [k, v] : r.parameters) ps.push_back(k + "=" + v);
  if (!ps.empty()) o << " (" << join(ps, ", ") << ")";
  o << "\n";
  for (const auto& c : r.checks) {
    o << (c.passed ? "  ok   " : "  FAIL ") << c.key << ": expected " << c.expected << ", got " << c.actual << " ["
      << to_string(c.source) << "]";
    if (!c.note.empty()) o << " " << c.note;
    o << "\n";
  }
  o << to_text(r.audit);
  o << "fixture " << (r.passed() ? "passed" : "FAILED") << "\n";
  return o.str();
}

}  // namespace toricfol

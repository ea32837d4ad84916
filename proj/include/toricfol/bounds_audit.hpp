#pragma once

// Poincaré-type degree bounds for invariant hypersurfaces, with a full check
// of the hypotheses under which they are guaranteed.

#include "toricfol/normal_form.hpp"

#include <optional>
#include <string>
#include <vector>

namespace toricfol {

/// Largest (deg z_i)_k + (deg z_j)_k over pairs i < j of `vars` (all
/// variables when empty), with the maximizing pair.
inline std::pair<Integer, std::pair<std::size_t, std::size_t>> max_pair_degree(
    const ToricModel& model, std::size_t k, const std::vector<std::size_t>& vars = {}) {
  std::vector<std::size_t> v = vars;
  if (v.empty())
    for (std::size_t j = 0; j < model.nvars(); ++j) v.push_back(j);
  if (v.size() < 2) throw Error("pairwise bound needs at least two variables");
  std::optional<Integer> best;
  std::pair<std::size_t, std::size_t> arg{0, 0};
  for (std::size_t a = 0; a < v.size(); ++a)
    for (std::size_t b = a + 1; b < v.size(); ++b) {
      Integer s = model.degree(v[a]).free_part()[k] + model.degree(v[b]).free_part()[k];
      if (!best || s > *best) {
        best = s;
        arg = {v[a], v[b]};
      }
    }
  return {*best, arg};
}

/// deg(F)_k + max over pairs of (deg z_i)_k + (deg z_j)_k; the pairs range
/// over `subset` when given. k is 0-based and must be an eligible coordinate.
inline Integer poincare_bound(const ToricModel& model, const DegreeClass& degf, std::size_t k,
                              const std::vector<std::size_t>& subset = {}) {
  model.check_degree(degf);
  auto eligible = model.nonnegative_coordinates();
  if (std::find(eligible.begin(), eligible.end(), k) == eligible.end())
    throw Error("coordinate " + std::to_string(k + 1) + " is not eligible: some variable has negative degree there");
  return degf.free_part()[k] + max_pair_degree(model, k, subset).first;
}

struct AuditOptions {
  /// 0-based radial field for the decomposition; first usable one when absent.
  std::optional<std::size_t> radial_index;
  /// Restrict to a subset of variables (the field's part X_1 on it).
  std::optional<std::vector<std::size_t>> subset;
  std::optional<std::uint32_t> power_cap;
  bool decompose = true;
};

enum class HypothesisStatus { pass, fail, inconclusive };

inline std::string to_string(HypothesisStatus s) {
  switch (s) {
    case HypothesisStatus::pass:
      return "pass";
    case HypothesisStatus::fail:
      return "fail";
    default:
      return "inconclusive";
  }
}

struct Hypothesis {
  std::string name;
  HypothesisStatus status = HypothesisStatus::inconclusive;
  std::string detail;
};

struct CoordinateComparison {
  std::size_t k = 0;  // 0-based
  Integer bound;
  Integer actual;
  Integer slack;
  bool sharp = false;
  /// Variables realizing the pairwise maximum.
  std::pair<std::size_t, std::size_t> max_pair;
  /// Finer bound from the nonzero decomposition entries, when available.
  std::optional<Integer> pair_bound;
  std::optional<std::pair<std::size_t, std::size_t>> witness_pair;
};

struct AuditReport {
  std::string model;
  std::vector<std::string> variables;
  std::optional<DegreeClass> deg_f;
  /// Per-component implied degrees when they disagree.
  std::vector<std::pair<std::size_t, DegreeClass>> deg_f_components;
  std::optional<DegreeClass> deg_v;
  std::vector<std::size_t> eligible_k;
  std::optional<std::vector<std::size_t>> subset;
  std::string quasi_smoothness;
  std::optional<Polynomial> cofactor;
  bool lie_g_member = false;
  std::vector<Hypothesis> hypotheses;
  std::vector<CoordinateComparison> comparisons;
  std::optional<Decomposition> decomposition;
  std::vector<std::string> warnings;
  std::string verdict;

  bool hypotheses_hold() const {
    return std::all_of(hypotheses.begin(), hypotheses.end(),
                       [](const Hypothesis& h) { return h.status == HypothesisStatus::pass; });
  }
  bool inequality_holds() const {
    return std::all_of(comparisons.begin(), comparisons.end(),
                       [](const CoordinateComparison& c) { return c.slack >= 0; });
  }
  /// 0 when the bound is asserted and holds, 2 otherwise.
  int exit_code() const { return verdict == "bound holds" ? 0 : 2; }
};

namespace detail {

inline std::string var_list(const ToricModel& model, const std::vector<std::size_t>& v) {
  std::vector<std::string> s;
  for (auto j : v) s.push_back(model.variable_names()[j]);
  return "{" + join(s, ", ") + "}";
}

}  // namespace detail

/// Runs every check for one (model, field, hypersurface) case. Failed
/// hypotheses are recorded, never thrown; the numeric comparison is made
/// whenever the degrees are available.
inline AuditReport audit_case(const ToricModel& model, const VectorField& x, const Polynomial& f,
                              const AuditOptions& options = {}) {
  AuditReport rep;
  rep.model = model.name();
  rep.variables = model.variable_names();
  rep.eligible_k = model.nonnegative_coordinates();
  const std::size_t n = model.nvars();
  if (x.size() != n || f.nvars() != n) throw Error("audit: field, hypersurface and model disagree on variables");
  if (f.is_zero()) throw Error("audit: the hypersurface polynomial is zero");

  std::vector<std::size_t> s;
  if (options.subset) {
    s = detail::resolve_index_set(model, options.subset);
    rep.subset = s;
  }
  const VectorField xs = options.subset ? x.restricted_to(s) : x;
  const std::string xname = options.subset ? "X_1" : "X";

  // Degrees.
  std::vector<DegreeClass> degf_candidates;
  if (x.is_zero()) {
    rep.hypotheses.push_back({"foliation degree", HypothesisStatus::fail, "the vector field is zero"});
  } else {
    try {
      rep.deg_f = foliation_degree(model, x);
      degf_candidates.push_back(*rep.deg_f);
      rep.hypotheses.push_back({"foliation degree", HypothesisStatus::pass, rep.deg_f->to_string()});
    } catch (const InconsistentDegreeError& e) {
      std::vector<std::string> parts;
      for (const auto& c : component_degrees(model, x))
        if (c.degree) {
          rep.deg_f_components.emplace_back(c.index, *c.degree);
          degf_candidates.push_back(*c.degree);
          parts.push_back("d/d" + model.variable_names()[c.index] + " -> " + c.degree->to_string());
        }
      rep.hypotheses.push_back({"foliation degree", HypothesisStatus::fail, e.what()});
      rep.warnings.push_back("foliation degree is inconsistent (" + join(parts, ", ") +
                             "); bounds use the largest implied degree per coordinate");
    }
  }
  rep.deg_v = homogeneous_degree(model, f);
  rep.hypotheses.push_back({"hypersurface quasi-homogeneous",
                            rep.deg_v ? HypothesisStatus::pass : HypothesisStatus::fail,
                            rep.deg_v ? rep.deg_v->to_string() : "terms have different degrees"});

  // Invariance.
  rep.cofactor = invariance_cofactor(xs, f);
  rep.hypotheses.push_back({"invariance", rep.cofactor ? HypothesisStatus::pass : HypothesisStatus::fail,
                            rep.cofactor ? xname + "(f) = g f with g = " + to_string(*rep.cofactor, rep.variables)
                                         : xname + "(f) is not a multiple of f"});

  // Lie(G).
  auto lie = lie_g_membership(model, xs);
  rep.lie_g_member = lie.member;
  rep.hypotheses.push_back({xname + " not in Lie(G)", lie.member ? HypothesisStatus::fail : HypothesisStatus::pass,
                            lie.reason});

  // Quasi-smoothness.
  std::vector<Polynomial> partials;
  for (std::size_t j = 0; j < n; ++j) partials.push_back(partial_derivative(f, j));
  Certificate strong = only_origin_check(partials, model, options.power_cap);
  std::optional<Certificate> in_z;
  auto sing_in_z = [&]() -> const Certificate& {
    if (!in_z) {
      if (model.max_cones())
        in_z = sing_inside_irrelevant(f, model, options.power_cap);
      else
        in_z = Certificate{Verdict::inconclusive, "no maximal cone data for the irrelevant ideal"};
    }
    return *in_z;
  };
  if (strong.verdict == Verdict::yes)
    rep.quasi_smoothness = "strong";
  else if (sing_in_z().verdict == Verdict::yes)
    rep.quasi_smoothness = "quasi-with-Sing-in-Z";
  else if (sing_in_z().verdict == Verdict::no)
    rep.quasi_smoothness = "fails";
  else
    rep.quasi_smoothness = "inconclusive";

  if (!options.subset) {
    HypothesisStatus st = strong.verdict == Verdict::yes  ? HypothesisStatus::pass
                          : strong.verdict == Verdict::no ? HypothesisStatus::fail
                                                          : HypothesisStatus::inconclusive;
    rep.hypotheses.push_back({"strongly quasi-smooth", st, strong.reason});
  } else {
    const Certificate& z = sing_in_z();
    HypothesisStatus st = z.verdict == Verdict::yes  ? HypothesisStatus::pass
                          : z.verdict == Verdict::no ? HypothesisStatus::fail
                                                     : HypothesisStatus::inconclusive;
    rep.hypotheses.push_back({"quasi-smooth (Sing(V) inside Z)", st, z.reason});
    auto reg = regular_subsequence_check(f, s);
    rep.hypotheses.push_back({"regular subsequence " + detail::var_list(model, s),
                              reg.value ? HypothesisStatus::pass : HypothesisStatus::fail, reg.reason});
    std::optional<std::size_t> supported;
    for (std::size_t i = 0; i < model.rank() && !supported; ++i) {
      try {
        detail::radial_on(model, i, s);
        supported = i;
      } catch (const Error&) {
      }
    }
    rep.hypotheses.push_back({"radial field supported on subset",
                              supported ? HypothesisStatus::pass : HypothesisStatus::fail,
                              supported ? "R_" + std::to_string(*supported + 1) : "no radial field is supported there"});
  }
  rep.hypotheses.push_back({"eligible coordinates", rep.eligible_k.empty() ? HypothesisStatus::fail : HypothesisStatus::pass,
                            rep.eligible_k.empty() ? "every coordinate has a variable of negative degree"
                                                   : std::to_string(rep.eligible_k.size()) + " coordinate(s)"});

  // Decomposition (also yields the witnessing pairs).
  if (options.decompose && rep.deg_f && rep.deg_v && rep.cofactor) {
    std::vector<std::size_t> candidates;
    if (options.radial_index)
      candidates.push_back(*options.radial_index);
    else
      for (std::size_t i = 0; i < model.rank(); ++i) candidates.push_back(i);
    std::string last_error;
    for (auto i : candidates) {
      try {
        rep.decomposition = koszul_decompose(model, f, x, i, options.subset);
        break;
      } catch (const Error& e) {
        last_error = e.what();
      }
    }
    if (!rep.decomposition) rep.warnings.push_back("no decomposition: " + last_error);
  }

  // Numeric comparison.
  if (rep.deg_v && !degf_candidates.empty()) {
    for (auto k : rep.eligible_k) {
      if (options.subset && s.size() < 2) break;
      CoordinateComparison c;
      c.k = k;
      Integer df = degf_candidates.front().free_part()[k];
      for (const auto& d : degf_candidates) df = std::max(df, d.free_part()[k]);
      auto [pmax, pair] = max_pair_degree(model, k, s);
      c.bound = df + pmax;
      c.max_pair = pair;
      c.actual = rep.deg_v->free_part()[k];
      c.slack = c.bound - c.actual;
      c.sharp = c.slack == 0;
      if (rep.decomposition && rep.decomposition->nonzero_count() > 0) {
        for (const auto& [jk, p] : rep.decomposition->pjk) {
          if (p.is_zero()) continue;
          Integer v = df + model.degree(jk.first).free_part()[k] + model.degree(jk.second).free_part()[k];
          if (!c.pair_bound || v > *c.pair_bound) {
            c.pair_bound = v;
            c.witness_pair = jk;
          }
        }
      }
      rep.comparisons.push_back(c);
    }
  }

  bool any_fail = false, any_inconclusive = false;
  for (const auto& h : rep.hypotheses) {
    if (h.status == HypothesisStatus::fail) any_fail = true;
    if (h.status == HypothesisStatus::inconclusive) any_inconclusive = true;
  }
  const bool compared = !rep.comparisons.empty();
  if (any_fail) {
    if (!compared)
      rep.verdict = "hypotheses violated; inequality not evaluated";
    else
      rep.verdict = rep.inequality_holds() ? "hypotheses violated; inequality holds"
                                           : "hypotheses violated; inequality fails";
  } else if (any_inconclusive || !compared) {
    rep.verdict = "inconclusive";
  } else {
    rep.verdict = rep.inequality_holds() ? "bound holds" : "bound violated";
  }
  return rep;
}

}  // namespace toricfol

#pragma once

// Command-line driver. Exit codes: 0 success or verified, 1 input error or
// could not compute, 2 computed but a hypothesis, expectation or bound failed.

#include "toricfol/bounds_audit.hpp"
#include "toricfol/case_file.hpp"
#include "toricfol/fixtures.hpp"
#include "toricfol/report.hpp"
#include "toricfol/selftest.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace toricfol {

namespace cli {

inline constexpr int kOk = 0;
inline constexpr int kInputError = 1;
inline constexpr int kFailed = 2;

struct Options {
  std::string format = "text";
  std::string model_path;
  std::string case_path;
  std::string poly;
  std::optional<std::size_t> radial_index;
  std::string subset;
  std::optional<std::uint32_t> power_cap;

  std::string fixture;
  long m = 3;
  long n = 1;
  std::string a, b, c, omega = "1,2,1,2";
  long zeta = 0;
  long alpha1 = 1, alpha2 = 2;
  std::string c1 = "1", c2 = "1";
  long alpha = 5, beta = 5;
};

inline std::vector<Rational> rational_list(const std::string& text, std::size_t count, const std::string& flag) {
  std::vector<Rational> out;
  if (text.empty()) return std::vector<Rational>(count, Rational(1));
  for (auto& [item, off] : detail::split_at(text, ',')) {
    try {
      out.push_back(parse_rational(item));
    } catch (const ParseError& e) {
      throw Error(flag + ": " + e.message() + " (at '" + item + "')");
    }
  }
  return out;
}

inline std::vector<long> long_list(const std::string& text, const std::string& flag) {
  std::vector<long> out;
  for (auto& [item, off] : detail::split_at(text, ',')) {
    Integer v;
    try {
      v = parse_integer(item);
    } catch (const ParseError& e) {
      throw Error(flag + ": " + e.message() + " (at '" + item + "')");
    }
    if (!v.fits_slong_p()) throw Error(flag + ": value out of range");
    out.push_back(v.get_si());
  }
  return out;
}

inline Fixture make_fixture(const Options& o) {
  const std::string& name = o.fixture;
  if (name == "tor2") return tor2(o.m);
  if (name == "ms2") {
    const std::size_t count = static_cast<std::size_t>(std::max(1L, (o.n + 1) / 2));
    return ms2(o.n, rational_list(o.a, count, "--a"), rational_list(o.b, count, "--b"));
  }
  if (name == "wps2") {
    auto omega = long_list(o.omega, "--omega");
    const std::size_t n = omega.empty() ? 0 : omega.size() - 1;
    const std::size_t count = n % 2 == 1 ? (n + 1) / 2 : n / 2 + 1;
    return wps2(omega, rational_list(o.c, count, "--c"), o.zeta);
  }
  if (name == "exA") return ex_a(o.alpha1, o.alpha2, parse_rational(o.c1), parse_rational(o.c2));
  if (name == "exB") return ex_b(o.alpha, o.beta);
  throw Error("unknown fixture '" + name + "' (expected wps2, ms2, tor2, exA or exB)");
}

/// The case named by --case, with its model replaced by --model if given.
inline CaseFile load_inputs(const Options& o) {
  if (o.case_path.empty() && o.model_path.empty()) throw Error("give --case FILE or --model FILE");
  CaseFile cf = o.case_path.empty() ? load_case(o.model_path) : load_case(o.case_path);
  if (!o.case_path.empty() && !o.model_path.empty()) cf.model = load_case(o.model_path).model;
  return cf;
}

inline ResolvedCase resolve_inputs(const Options& o) {
  ResolvedCase rc = resolve_case(load_inputs(o));
  if (o.radial_index) {
    if (*o.radial_index < 1 || *o.radial_index > rc.model.rank())
      throw Error("--radial-index must lie in 1.." + std::to_string(rc.model.rank()));
    rc.options.radial_index = *o.radial_index - 1;
  }
  if (!o.subset.empty()) {
    std::vector<std::size_t> s;
    for (auto& [item, off] : detail::split_at(o.subset, ',')) {
      if (!item.empty() && std::isdigit(static_cast<unsigned char>(item[0]))) {
        Integer i = parse_integer(item);
        if (i < 1 || i > static_cast<long>(rc.model.nvars()))
          throw Error("--subset index " + item + " outside 1.." + std::to_string(rc.model.nvars()));
        s.push_back(i.get_ui() - 1);
      } else {
        s.push_back(resolve_variables(rc.model, {item}).front());
      }
    }
    rc.options.subset = s;
  }
  if (o.power_cap) rc.options.power_cap = *o.power_cap;
  return rc;
}

inline const Polynomial& need_hypersurface(const ResolvedCase& rc) {
  if (!rc.hypersurface) throw Error("the case has no [hypersurface] section");
  return *rc.hypersurface;
}

inline const VectorField& need_field(const ResolvedCase& rc) {
  if (!rc.field) throw Error("the case has no [field] section");
  return *rc.field;
}

inline int classgroup(const Options& o, std::ostream& out) {
  ToricModel m = build_model(load_inputs(o).model);
  const auto& g = m.class_group();
  const auto& names = m.variable_names();
  Json j;
  j["model"] = m.name();
  j["class_group"] = g.to_string(false);
  j["primary_form"] = g.to_string(true);
  j["rank"] = g.rank;
  Json tors = Json::array();
  for (const auto& t : g.torsion) tors.push_back(to_json(t));
  j["torsion"] = tors;
  Json degs = Json::object();
  for (std::size_t v = 0; v < m.nvars(); ++v) degs[names[v]] = m.degree(v).to_string();
  j["degrees"] = degs;
  Json radial = Json::array();
  for (const auto& r : m.radial_fields()) {
    std::vector<std::string> cs;
    for (const auto& c : r.coefficients) cs.push_back(to_string(c));
    radial.push_back(cs);
  }
  j["radial_fields"] = radial;
  if (o.format == "machine") {
    out << dump(j);
    return kOk;
  }
  out << "model: " << m.name() << "\n";
  out << "class group: " << g.to_string(false) << "\n";
  out << "primary form: " << g.to_string(true) << "\n";
  for (std::size_t v = 0; v < m.nvars(); ++v) out << "deg " << names[v] << " = " << m.degree(v).to_string() << "\n";
  for (std::size_t i = 0; i < m.rank(); ++i)
    out << "R" << i + 1 << " = " << to_string(m.radial_field(i).as_vector_field(), names) << "\n";
  return kOk;
}

inline int degree(const Options& o, std::ostream& out) {
  ResolvedCase rc = resolve_inputs(o);
  const auto& names = rc.model.variable_names();
  Polynomial f = o.poly.empty() ? need_hypersurface(rc) : parse_polynomial(o.poly, names);
  auto d = homogeneous_degree(rc.model, f);
  Json j;
  j["polynomial"] = to_string(f, names);
  j["degree"] = d ? Json(d->to_string()) : Json(nullptr);
  bool ok = d.has_value();
  if (rc.field && o.poly.empty()) {
    try {
      j["deg_f"] = foliation_degree(rc.model, *rc.field).to_string();
    } catch (const Error& e) {
      j["deg_f"] = nullptr;
      j["deg_f_error"] = e.what();
      ok = false;
    }
  }
  if (o.format == "machine") {
    out << dump(j);
  } else {
    out << "degree: " << (d ? d->to_string() : std::string("not quasi-homogeneous")) << "\n";
    if (j.contains("deg_f"))
      out << "deg_f: "
          << (j["deg_f"].is_null() ? j["deg_f_error"].get<std::string>() : j["deg_f"].get<std::string>()) << "\n";
  }
  return ok ? kOk : kFailed;
}

inline int invariance(const Options& o, std::ostream& out) {
  ResolvedCase rc = resolve_inputs(o);
  const auto& names = rc.model.variable_names();
  auto g = invariance_cofactor(need_field(rc), need_hypersurface(rc));
  const std::string text = g ? to_string(*g, names) : "not invariant";
  if (o.format == "machine") {
    out << dump(Json{{"invariant", g.has_value()}, {"cofactor", g ? Json(text) : Json(nullptr)}});
  } else {
    out << (g ? "cofactor: " + text : text) << "\n";
  }
  return g ? kOk : kFailed;
}

inline int decompose(const Options& o, std::ostream& out, std::ostream& err) {
  ResolvedCase rc = resolve_inputs(o);
  const auto& names = rc.model.variable_names();
  Decomposition d;
  try {
    d = koszul_decompose(rc.model, need_hypersurface(rc), need_field(rc), rc.options.radial_index.value_or(0),
                         rc.options.subset);
  } catch (const DecompositionError& e) {
    err << "no decomposition: " << e.what() << "\n";
    if (o.format == "machine") out << dump(Json{{"decomposition", nullptr}, {"error", e.what()}});
    return kFailed;
  }
  auto check = verify_decomposition(rc.model, *rc.hypersurface, *rc.field, d);
  if (o.format == "machine") {
    Json j = to_json(d, names);
    j["verified"] = check.value;
    out << dump(Json{{"decomposition", j}});
  } else {
    out << to_string(d, names) << "\n";
    out << "verified: " << (check.value ? "yes" : "no, " + check.reason) << "\n";
  }
  return check.value ? kOk : kFailed;
}

inline int audit(const Options& o, std::ostream& out) {
  ResolvedCase rc = resolve_inputs(o);
  AuditReport r = audit_case(rc.model, need_field(rc), need_hypersurface(rc), rc.options);
  out << (o.format == "machine" ? dump(to_json(r)) : to_text(r));
  return r.exit_code();
}

inline int fixture(const Options& o, std::ostream& out) {
  FixtureReport r = check_fixture(make_fixture(o));
  out << (o.format == "machine" ? dump(to_json(r)) : to_text(r));
  return r.passed() ? kOk : kFailed;
}

inline int export_case(const Options& o, std::ostream& out) {
  out << serialize_case(case_from_fixture(make_fixture(o)));
  return kOk;
}

inline int selftest(const Options& o, std::ostream& out) {
  bool all = true;
  Json suites = Json::array();
  for (const auto& s : run_selftest()) {
    all = all && s.passed();
    suites.push_back({{"suite", s.name}, {"cases", s.cases}, {"passed", s.passed()}, {"failures", s.failures}});
    if (o.format != "machine") {
      out << (s.passed() ? "PASS " : "FAIL ") << s.name << " (" << s.cases << " cases)\n";
      for (const auto& f : s.failures) out << "  " << f << "\n";
    }
  }
  if (o.format == "machine") out << dump(Json{{"suites", suites}, {"passed", all}});
  return all ? kOk : kFailed;
}

}  // namespace cli

inline int run_cli(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  cli::Options o;
  CLI::App app{"Foliation and invariant hypersurface checks on toric orbifolds", "toricfol"};
  app.require_subcommand(1);
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "machine"}))
      ->capture_default_str();

  auto inputs = [&](CLI::App* sub) {
    sub->add_option("--model", o.model_path, "Case file whose [model] section is used");
    sub->add_option("--case", o.case_path, "Case file");
  };
  auto audit_flags = [&](CLI::App* sub) {
    sub->add_option("--radial-index", o.radial_index, "Radial field to use (1-based)");
    sub->add_option("--subset", o.subset, "Variable subset: 1-based indices or names, comma separated");
    sub->add_option("--power-cap", o.power_cap, "Largest power tried in radical membership tests");
  };
  auto fixture_flags = [&](CLI::App* sub) {
    sub->add_option("name", o.fixture, "wps2, ms2, tor2, exA or exB")->required();
    sub->add_option("--m", o.m, "tor2: multiple of 3");
    sub->add_option("--n", o.n, "ms2: odd dimension");
    sub->add_option("--a", o.a, "ms2: comma separated rationals");
    sub->add_option("--b", o.b, "ms2: comma separated rationals");
    sub->add_option("--omega", o.omega, "wps2: weights");
    sub->add_option("--c", o.c, "wps2: comma separated nonzero rationals");
    sub->add_option("--zeta", o.zeta, "wps2: common value of omega_k d_k (0 picks the least admissible)");
    sub->add_option("--alpha1", o.alpha1, "exA");
    sub->add_option("--alpha2", o.alpha2, "exA");
    sub->add_option("--c1", o.c1, "exA: rational");
    sub->add_option("--c2", o.c2, "exA: rational");
    sub->add_option("--alpha", o.alpha, "exB");
    sub->add_option("--beta", o.beta, "exB");
  };

  auto* cg = app.add_subcommand("classgroup", "Class group, variable degrees and radial fields");
  inputs(cg);
  auto* deg = app.add_subcommand("degree", "Degree of a polynomial (and of the field, if present)");
  inputs(deg);
  deg->add_option("--poly", o.poly, "Polynomial; defaults to the case hypersurface");
  auto* inv = app.add_subcommand("invariance", "Cofactor g with X(f) = g f");
  inputs(inv);
  auto* dec = app.add_subcommand("decompose", "Koszul normal form of the field");
  inputs(dec);
  audit_flags(dec);
  auto* aud = app.add_subcommand("audit", "Hypotheses and degree bound");
  inputs(aud);
  audit_flags(aud);
  auto* fix = app.add_subcommand("fixture", "Recompute a named example and compare with its expected values");
  fixture_flags(fix);
  auto* exp = app.add_subcommand("export", "Print a named example as a case file");
  fixture_flags(exp);
  auto* st = app.add_subcommand("selftest", "Property suites at small sizes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? cli::kOk : cli::kInputError;
  }

  try {
    if (cg->parsed()) return cli::classgroup(o, out);
    if (deg->parsed()) return cli::degree(o, out);
    if (inv->parsed()) return cli::invariance(o, out);
    if (dec->parsed()) return cli::decompose(o, out, err);
    if (aud->parsed()) return cli::audit(o, out);
    if (fix->parsed()) return cli::fixture(o, out);
    if (exp->parsed()) return cli::export_case(o, out);
    if (st->parsed()) return cli::selftest(o, out);
  } catch (const CaseFileError& e) {
    for (const auto& d : e.diagnostics()) err << "error: " << d.to_string() << "\n";
    return cli::kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return cli::kInputError;
  }
  return cli::kInputError;
}

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"toricfol"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace toricfol

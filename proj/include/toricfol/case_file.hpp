#pragma once

// Plain-text case files:
//
//   [model]
//   name = P_Delta(0,2,1)
//   dimension = 2
//   variables = z1, z2, z3
//   rays = (2,-1); (-1,2); (-1,-1)        or  degrees = (1,0); (1,0); (-1,1)
//   torsion = 3                            (presentation route only)
//   cones = {z1, z2}; {z2, z3}; {z1, z3}
//   align = (1,[0]); (1,[2]); (1,[1])       (ray route only)
//
//   [hypersurface]
//   f = z1^3 + z2^3 + z3^3
//
//   [field]
//   z1 = z2^3
//
//   [options]
//   radial_index = 1
//   subset = z1_0, z1_1
//   power_cap = 12
//
// '#' starts a comment. Indices in files and on the command line are 1-based.

#include "toricfol/fixtures.hpp"
#include "toricfol/parser.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace toricfol {

struct Diagnostic {
  std::size_t line = 0;
  std::size_t column = 0;
  std::string message;
  std::string to_string() const {
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message;
  }
};

class CaseFileError : public Error {
 public:
  explicit CaseFileError(std::vector<Diagnostic> diagnostics)
      : Error(summary(diagnostics)), diagnostics_(std::move(diagnostics)) {}
  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

 private:
  static std::string summary(const std::vector<Diagnostic>& d) {
    std::vector<std::string> parts;
    for (const auto& x : d) parts.push_back(x.to_string());
    return join(parts, "\n");
  }
  std::vector<Diagnostic> diagnostics_;
};

struct ModelSpec {
  std::string name;
  std::size_t dimension = 0;
  std::vector<std::string> variables;
  std::optional<std::vector<IntVector>> rays;
  std::optional<std::vector<ParsedDegree>> degrees;
  IntVector torsion;
  std::optional<std::vector<std::vector<std::string>>> cones;
  std::optional<std::vector<ParsedDegree>> align;

  bool operator==(const ModelSpec&) const = default;
};

struct CaseFile {
  ModelSpec model;
  std::optional<std::string> hypersurface;
  /// (variable, expression) in file order.
  std::vector<std::pair<std::string, std::string>> field;
  std::optional<std::size_t> radial_index;  // 1-based
  std::optional<std::vector<std::string>> subset;
  std::optional<std::uint32_t> power_cap;

  bool operator==(const CaseFile&) const = default;
};

inline bool operator==(const ParsedDegree& a, const ParsedDegree& b) {
  return a.free_part == b.free_part && a.residues == b.residues;
}

namespace detail {

inline std::string trim(const std::string& s) {
  auto l = s.find_first_not_of(" \t\r");
  if (l == std::string::npos) return "";
  auto r = s.find_last_not_of(" \t\r");
  return s.substr(l, r - l + 1);
}

/// Splits on `sep`, reporting each piece with its offset in `s`.
inline std::vector<std::pair<std::string, std::size_t>> split_at(const std::string& s, char sep) {
  std::vector<std::pair<std::string, std::size_t>> out;
  std::size_t start = 0;
  for (;;) {
    auto p = s.find(sep, start);
    std::string piece = s.substr(start, p == std::string::npos ? std::string::npos : p - start);
    auto lead = piece.find_first_not_of(" \t");
    out.emplace_back(trim(piece), start + (lead == std::string::npos ? 0 : lead));
    if (p == std::string::npos) break;
    start = p + 1;
  }
  return out;
}

inline std::string degree_text(const ParsedDegree& d) {
  std::vector<std::string> parts;
  for (const auto& v : d.free_part) parts.push_back(v.get_str());
  for (const auto& v : d.residues) parts.push_back("[" + v.get_str() + "]");
  return "(" + join(parts, ",") + ")";
}

}  // namespace detail

/// Parses a case file, collecting every located problem before failing.
inline CaseFile parse_case(const std::string& text) {
  CaseFile cf;
  std::vector<Diagnostic> diags;
  std::string section;
  std::map<std::string, std::size_t> seen, value_column;
  std::size_t lineno = 0;
  std::istringstream in(text);
  std::string raw;
  bool have_dimension = false;
  auto fail = [&](std::size_t col, const std::string& msg) { diags.push_back({lineno, col, msg}); };

  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    if (auto h = line.find('#'); h != std::string::npos) line = line.substr(0, h);
    if (detail::trim(line).empty()) continue;
    const std::size_t indent = line.find_first_not_of(" \t");
    std::string t = detail::trim(line);
    if (t.front() == '[') {
      if (t.back() != ']') {
        fail(indent + 1, "section header must end with ']'");
        continue;
      }
      section = detail::trim(t.substr(1, t.size() - 2));
      if (section != "model" && section != "hypersurface" && section != "field" && section != "options")
        fail(indent + 2, "unknown section [" + section + "]");
      if (seen.count("[" + section + "]")) fail(indent + 1, "section [" + section + "] repeated");
      seen["[" + section + "]"] = lineno;
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      fail(indent + 1, "expected 'key = value'");
      continue;
    }
    if (section.empty()) {
      fail(indent + 1, "entry outside any section");
      continue;
    }
    const std::string key = detail::trim(line.substr(0, eq));
    const std::string value = detail::trim(line.substr(eq + 1));
    const std::size_t vcol = line.find_first_not_of(" \t", eq + 1) == std::string::npos
                                 ? eq + 2
                                 : line.find_first_not_of(" \t", eq + 1) + 1;
    const std::string qualified = section + "." + key;
    if (section != "field" && seen.count(qualified)) {
      fail(indent + 1, "key '" + key + "' repeated");
      continue;
    }
    seen[qualified] = lineno;
    value_column[qualified] = vcol;

    try {
      if (section == "model") {
        if (key == "name") {
          cf.model.name = value;
        } else if (key == "dimension") {
          Integer d = parse_integer(value);
          if (d < 1) throw ParseError("dimension must be positive", 1);
          cf.model.dimension = d.get_ui();
          have_dimension = true;
        } else if (key == "variables") {
          for (auto& [name, off] : detail::split_at(value, ',')) {
            if (name.empty() || !(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_'))
              throw ParseError("invalid variable name '" + name + "'", off + 1);
            for (char c : name)
              if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
                throw ParseError("invalid variable name '" + name + "'", off + 1);
            cf.model.variables.push_back(name);
          }
        } else if (key == "rays") {
          std::vector<IntVector> rays;
          for (auto& [item, off] : detail::split_at(value, ';')) {
            try {
              rays.push_back(parse_integer_list(item));
            } catch (const ParseError& e) {
              throw ParseError(e.message(), off + e.column());
            }
          }
          cf.model.rays = rays;
        } else if (key == "degrees" || key == "align") {
          std::vector<ParsedDegree> ds;
          for (auto& [item, off] : detail::split_at(value, ';')) {
            try {
              ds.push_back(parse_degree(item));
            } catch (const ParseError& e) {
              throw ParseError(e.message(), off + e.column());
            }
          }
          (key == "degrees" ? cf.model.degrees : cf.model.align) = ds;
        } else if (key == "torsion") {
          cf.model.torsion = parse_integer_list(value);
        } else if (key == "cones") {
          std::vector<std::vector<std::string>> cones;
          for (auto& [item, off] : detail::split_at(value, ';')) {
            if (item.size() < 2 || item.front() != '{' || item.back() != '}')
              throw ParseError("a cone is written {x, y, ...}", off + 1);
            std::vector<std::string> cone;
            for (auto& [v, voff] : detail::split_at(item.substr(1, item.size() - 2), ','))
              if (!v.empty()) cone.push_back(v);
            cones.push_back(cone);
          }
          cf.model.cones = cones;
        } else {
          fail(indent + 1, "unknown model key '" + key + "'");
        }
      } else if (section == "hypersurface") {
        if (key != "f") {
          fail(indent + 1, "the hypersurface is given as 'f = ...'");
          continue;
        }
        cf.hypersurface = value;
      } else if (section == "field") {
        for (const auto& [v, e] : cf.field)
          if (v == key) throw ParseError("component d/d" + key + " given twice", 1);
        cf.field.emplace_back(key, value);
      } else if (section == "options") {
        if (key == "radial_index") {
          Integer i = parse_integer(value);
          if (i < 1) throw ParseError("radial_index is 1-based", 1);
          cf.radial_index = i.get_ui();
        } else if (key == "subset") {
          std::vector<std::string> s;
          for (auto& [v, off] : detail::split_at(value, ',')) s.push_back(v);
          cf.subset = s;
        } else if (key == "power_cap") {
          Integer c = parse_integer(value);
          if (c < 1) throw ParseError("power_cap must be positive", 1);
          cf.power_cap = static_cast<std::uint32_t>(c.get_ui());
        } else {
          fail(indent + 1, "unknown option '" + key + "'");
        }
      }
    } catch (const ParseError& e) {
      fail(vcol + e.column() - 1, e.message());
    } catch (const Error& e) {
      fail(vcol, e.what());
    }
  }

  // Cross-checks that need the whole file.
  auto at = [&](const std::string& key) { return seen.count(key) ? seen[key] : 0; };
  const auto& m = cf.model;
  if (!seen.count("[model]")) diags.push_back({0, 0, "missing [model] section"});
  if (seen.count("[model]") && !have_dimension) diags.push_back({at("[model]"), 1, "model needs a dimension"});
  if (m.rays && m.degrees) diags.push_back({at("model.degrees"), 1, "give either rays or degrees, not both"});
  if (seen.count("[model]") && !seen.count("model.rays") && !seen.count("model.degrees"))
    diags.push_back({at("[model]"), 1, "model needs rays or degrees"});
  if (m.align && !m.rays) diags.push_back({at("model.align"), 1, "align applies to the ray route only"});
  if (!m.torsion.empty() && !m.degrees) diags.push_back({at("model.torsion"), 1, "torsion applies to degrees only"});
  const std::size_t nv = m.rays ? m.rays->size() : m.degrees ? m.degrees->size() : 0;
  if (!m.variables.empty() && nv && m.variables.size() != nv)
    diags.push_back({at("model.variables"), 1,
                     std::to_string(m.variables.size()) + " variables for " + std::to_string(nv) + " rays/degrees"});
  std::vector<std::string> names = m.variables;
  if (names.empty() && nv) names = default_variable_names(nv);
  auto known = [&](const std::string& v) { return std::find(names.begin(), names.end(), v) != names.end(); };
  if (m.cones)
    for (const auto& c : *m.cones)
      for (const auto& v : c)
        if (!known(v)) diags.push_back({at("model.cones"), 1, "cone mentions undeclared variable '" + v + "'"});
  if (cf.subset)
    for (const auto& v : *cf.subset)
      if (!known(v)) diags.push_back({at("options.subset"), 1, "subset mentions undeclared variable '" + v + "'"});
  if (!names.empty()) {
    if (cf.hypersurface) {
      try {
        parse_polynomial(*cf.hypersurface, names);
      } catch (const ParseError& e) {
        diags.push_back({at("hypersurface.f"), value_column["hypersurface.f"] + e.column() - 1, e.message()});
      }
    }
    for (const auto& [v, e] : cf.field) {
      if (!known(v)) diags.push_back({at("field." + v), 1, "field component for undeclared variable '" + v + "'"});
      try {
        parse_polynomial(e, names);
      } catch (const ParseError& pe) {
        diags.push_back({at("field." + v), value_column["field." + v] + pe.column() - 1, pe.message()});
      }
    }
  }
  if (!diags.empty()) {
    std::stable_sort(diags.begin(), diags.end(),
                     [](const Diagnostic& a, const Diagnostic& b) { return a.line < b.line; });
    throw CaseFileError(diags);
  }
  return cf;
}

inline CaseFile load_case(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_case(ss.str());
}

inline std::string serialize_case(const CaseFile& cf) {
  std::ostringstream o;
  const auto& m = cf.model;
  o << "[model]\n";
  if (!m.name.empty()) o << "name = " << m.name << "\n";
  o << "dimension = " << m.dimension << "\n";
  if (!m.variables.empty()) o << "variables = " << join(m.variables, ", ") << "\n";
  if (m.rays) {
    std::vector<std::string> parts;
    for (const auto& r : *m.rays) {
      std::vector<std::string> c;
      for (const auto& x : r) c.push_back(x.get_str());
      parts.push_back("(" + join(c, ",") + ")");
    }
    o << "rays = " << join(parts, "; ") << "\n";
  }
  if (m.degrees) {
    std::vector<std::string> parts;
    for (const auto& d : *m.degrees) parts.push_back(detail::degree_text(d));
    o << "degrees = " << join(parts, "; ") << "\n";
  }
  if (!m.torsion.empty()) {
    std::vector<std::string> c;
    for (const auto& x : m.torsion) c.push_back(x.get_str());
    o << "torsion = " << join(c, ", ") << "\n";
  }
  if (m.cones) {
    std::vector<std::string> parts;
    for (const auto& c : *m.cones) parts.push_back("{" + join(c, ", ") + "}");
    o << "cones = " << join(parts, "; ") << "\n";
  }
  if (m.align) {
    std::vector<std::string> parts;
    for (const auto& d : *m.align) parts.push_back(detail::degree_text(d));
    o << "align = " << join(parts, "; ") << "\n";
  }
  if (cf.hypersurface) o << "\n[hypersurface]\nf = " << *cf.hypersurface << "\n";
  if (!cf.field.empty()) {
    o << "\n[field]\n";
    for (const auto& [v, e] : cf.field) o << v << " = " << e << "\n";
  }
  if (cf.radial_index || cf.subset || cf.power_cap) {
    o << "\n[options]\n";
    if (cf.radial_index) o << "radial_index = " << *cf.radial_index << "\n";
    if (cf.subset) o << "subset = " << join(*cf.subset, ", ") << "\n";
    if (cf.power_cap) o << "power_cap = " << *cf.power_cap << "\n";
  }
  return o.str();
}

inline ToricModel build_model(const ModelSpec& ms) {
  const std::size_t nv = ms.rays ? ms.rays->size() : ms.degrees ? ms.degrees->size() : 0;
  if (!nv) throw Error("model needs rays or degrees");
  std::vector<std::string> names = ms.variables.empty() ? default_variable_names(nv) : ms.variables;
  std::optional<ConeList> cones;
  if (ms.cones) {
    cones = ConeList{};
    for (const auto& c : *ms.cones) {
      std::vector<std::size_t> idx;
      for (const auto& v : c) {
        auto it = std::find(names.begin(), names.end(), v);
        if (it == names.end()) throw Error("cone mentions undeclared variable '" + v + "'");
        idx.push_back(static_cast<std::size_t>(it - names.begin()));
      }
      cones->push_back(idx);
    }
  }
  if (ms.rays) {
    for (const auto& r : *ms.rays)
      if (r.size() != ms.dimension)
        throw Error("ray of length " + std::to_string(r.size()) + " in dimension " + std::to_string(ms.dimension));
    ToricModel m = build_from_rays(ms.dimension, *ms.rays, cones, names, ms.name);
    if (ms.align) {
      std::vector<DegreeClass> target;
      for (const auto& d : *ms.align) target.push_back(m.make_degree(d.free_part, d.residues));
      m = m.align_to_degrees(target);
    }
    return m;
  }
  std::vector<DegreeClass> degrees;
  for (const auto& d : *ms.degrees) {
    if (d.residues.size() != ms.torsion.size())
      throw Error("degree " + detail::degree_text(d) + " does not match torsion with " +
                  std::to_string(ms.torsion.size()) + " factor(s)");
    degrees.emplace_back(d.free_part, d.residues, ms.torsion);
  }
  return build_from_presentation(ms.dimension, degrees, cones, names, ms.name);
}

/// A case resolved against its model.
struct ResolvedCase {
  ToricModel model;
  std::optional<Polynomial> hypersurface;
  std::optional<VectorField> field;
  AuditOptions options;
};

inline std::vector<std::size_t> resolve_variables(const ToricModel& m, const std::vector<std::string>& vars) {
  std::vector<std::size_t> out;
  for (const auto& v : vars) {
    auto i = m.variable_index(v);
    if (!i) throw Error("undeclared variable '" + v + "'");
    out.push_back(*i);
  }
  return out;
}

inline ResolvedCase resolve_case(const CaseFile& cf) {
  ResolvedCase rc{build_model(cf.model), std::nullopt, std::nullopt, {}};
  const auto& names = rc.model.variable_names();
  if (cf.hypersurface) rc.hypersurface = parse_polynomial(*cf.hypersurface, names);
  if (!cf.field.empty()) {
    VectorField x(rc.model.nvars());
    for (const auto& [v, e] : cf.field) x[*rc.model.variable_index(v)] = parse_polynomial(e, names);
    rc.field = x;
  }
  if (cf.radial_index) {
    if (*cf.radial_index > rc.model.rank())
      throw Error("radial_index " + std::to_string(*cf.radial_index) + " exceeds the rank " +
                  std::to_string(rc.model.rank()));
    rc.options.radial_index = *cf.radial_index - 1;
  }
  if (cf.subset) rc.options.subset = resolve_variables(rc.model, *cf.subset);
  rc.options.power_cap = cf.power_cap;
  return rc;
}

/// The presentation of a model: degrees, torsion moduli and cones by name.
inline ModelSpec describe_model(const ToricModel& m) {
  ModelSpec s;
  s.name = m.name();
  s.dimension = m.dimension();
  s.variables = m.variable_names();
  std::vector<ParsedDegree> ds;
  for (const auto& d : m.degrees()) ds.push_back({d.free_part(), d.torsion_part()});
  s.degrees = ds;
  s.torsion = m.class_group().torsion;
  if (m.max_cones()) {
    std::vector<std::vector<std::string>> cones;
    for (const auto& c : *m.max_cones()) {
      std::vector<std::string> names;
      for (auto j : c) names.push_back(m.variable_names()[j]);
      cones.push_back(names);
    }
    s.cones = cones;
  }
  return s;
}

inline CaseFile case_from_fixture(const Fixture& fx) {
  CaseFile cf;
  cf.model = describe_model(fx.model);
  const auto& names = fx.model.variable_names();
  cf.hypersurface = to_string(fx.hypersurface, names);
  for (std::size_t j = 0; j < fx.field.size(); ++j)
    if (!fx.field[j].is_zero()) cf.field.emplace_back(names[j], to_string(fx.field[j], names));
  if (fx.subset) {
    std::vector<std::string> s;
    for (auto j : *fx.subset) s.push_back(names[j]);
    cf.subset = s;
  }
  return cf;
}

}  // namespace toricfol

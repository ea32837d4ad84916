#include "toricfol/cli.hpp"

#include <gtest/gtest.h>

#include <regex>
#include <sstream>

using namespace toricfol;

namespace {

const std::string kCases = CASES_DIR;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

const char* kPlane = R"(
[model]
name = P^2
dimension = 2
rays = (1,0); (0,1); (-1,-1)

[hypersurface]
f = z1^3 + z2^3 + z3^3
)";

std::vector<Diagnostic> diagnostics_of(const std::string& text) {
  try {
    parse_case(text);
  } catch (const CaseFileError& e) {
    return e.diagnostics();
  }
  return {};
}

}  // namespace

TEST(CaseFile, MinimalPlane) {
  auto rc = resolve_case(parse_case(kPlane));
  EXPECT_EQ(rc.model.class_group().to_string(false), "Z");
  ASSERT_TRUE(rc.hypersurface.has_value());
  EXPECT_EQ(homogeneous_degree(rc.model, *rc.hypersurface)->to_string(), "(3)");
  EXPECT_FALSE(rc.field.has_value());
}

TEST(CaseFile, ExportedTorsionSurfaceRoundTrips) {
  auto cf = case_from_fixture(tor2(3));
  auto text = serialize_case(cf);
  EXPECT_EQ(parse_case(text), cf);
  EXPECT_EQ(serialize_case(parse_case(text)), text);
}

TEST(CaseFile, EveryFixtureRoundTrips) {
  for (const auto& fx : standard_fixtures()) {
    auto cf = case_from_fixture(fx);
    EXPECT_EQ(parse_case(serialize_case(cf)), cf) << fx.name;
  }
}

TEST(CaseFile, DecimalLiteralIsRejected) {
  auto d = diagnostics_of("[model]\ndimension = 2\nrays = (1,0); (0,1); (-1,-1)\n[hypersurface]\nf = 1.5*z1\n");
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].message, "rational literals must be p/q");
  EXPECT_EQ(d[0].line, 5u);
  EXPECT_EQ(d[0].column, 5u);
}

TEST(CaseFile, DecimalInRayIsRejected) {
  auto d = diagnostics_of("[model]\ndimension = 1\nrays = (1); (-1.0)\n");
  ASSERT_FALSE(d.empty());
  EXPECT_EQ(d[0].line, 3u);
}

TEST(CaseFile, AllProblemsAreReported) {
  auto d = diagnostics_of(R"([model]
dimension = 2
rays = (1,0); (0,1); (-1,-1)
colour = blue
[field]
w = z1
z1 = z4^2
[options]
radial_index = 0
)");
  ASSERT_GE(d.size(), 4u);
  std::vector<std::size_t> lines;
  for (const auto& x : d) lines.push_back(x.line);
  EXPECT_TRUE(std::is_sorted(lines.begin(), lines.end()));
  std::string all;
  for (const auto& x : d) all += x.to_string() + "\n";
  EXPECT_NE(all.find("unknown model key 'colour'"), std::string::npos) << all;
  EXPECT_NE(all.find("undeclared variable 'w'"), std::string::npos) << all;
  EXPECT_NE(all.find("line 7"), std::string::npos) << all;
  EXPECT_NE(all.find("radial_index is 1-based"), std::string::npos) << all;
}

TEST(CaseFile, StructuralErrors) {
  EXPECT_FALSE(diagnostics_of("[hypersurface]\nf = 1\n").empty());
  EXPECT_FALSE(diagnostics_of("[model]\ndimension = 1\nrays = (1); (-1)\ndegrees = (1); (1)\n").empty());
  EXPECT_FALSE(diagnostics_of("[model]\ndimension = 1\nrays = (1); (-1)\nvariables = x\n").empty());
  EXPECT_FALSE(diagnostics_of("[model\n").empty());
  EXPECT_FALSE(diagnostics_of("[model]\ndimension = 1\nrays = (1); (-1)\ncones = {z1}; {z9}\n").empty());
  EXPECT_TRUE(diagnostics_of("# only a comment\n[model]\ndimension = 1\nrays = (1); (-1)  # P^1\n").empty());
}

TEST(CaseFile, RayAndPresentationRoutesAgree) {
  auto from_rays = resolve_case(load_case(kCases + "/tor2_3.case"));
  auto from_degrees = resolve_case(parse_case(serialize_case(case_from_fixture(tor2(3)))));
  EXPECT_TRUE(from_rays.model.is_ray_based());
  EXPECT_FALSE(from_degrees.model.is_ray_based());
  EXPECT_EQ(from_rays.model.degrees(), from_degrees.model.degrees());
  EXPECT_EQ(*from_rays.field, *from_degrees.field);
  auto a = audit_case(from_rays.model, *from_rays.field, *from_rays.hypersurface);
  auto b = audit_case(from_degrees.model, *from_degrees.field, *from_degrees.hypersurface);
  EXPECT_EQ(to_text(a), to_text(b));
}

TEST(Cli, FixtureTorsionSurface) {
  auto r = run({"fixture", "tor2", "--m", "3"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("bound 4, actual 3"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("fixture passed"), std::string::npos);
}

TEST(Cli, EveryFixtureCommandPasses) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"fixture", "wps2"},
           {"fixture", "wps2", "--omega", "1,1,1,1", "--c", "2,-3"},
           {"fixture", "wps2", "--omega", "1,2,2,1,2", "--zeta", "4", "--c", "1,1/2,-3"},
           {"fixture", "ms2", "--n", "3", "--a", "1,2", "--b", "-1/2,3"},
           {"fixture", "tor2", "--m", "6"},
           {"fixture", "exA", "--c1", "-3/4", "--c2", "2"},
           {"fixture", "exB", "--alpha", "2", "--beta", "3"}}) {
    auto r = run(args);
    EXPECT_EQ(r.code, 0) << args[1] << "\n" << r.out << r.err;
  }
}

TEST(Cli, NonReducedCurveAuditFails) {
  auto r = run({"audit", "--case", kCases + "/exb_5_5.case"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("verdict: hypotheses violated; inequality fails"), std::string::npos) << r.out;
}

TEST(Cli, OctahedronClassGroup) {
  auto r = run({"classgroup", "--model", kCases + "/octahedron.case"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("class group: Z^5 + Z/2 + Z/2"), std::string::npos) << r.out;
}

TEST(Cli, SubsetFromCommandLine) {
  auto full = run({"audit", "--case", kCases + "/exa_1_2.case", "--subset", "1,2"});
  auto named = run({"audit", "--case", kCases + "/exa_1_2.case", "--subset", "z1_0,z1_1"});
  EXPECT_EQ(full.code, 0) << full.out << full.err;
  EXPECT_EQ(full.out, named.out);
}

TEST(Cli, DegreeInvarianceDecompose) {
  auto d = run({"degree", "--case", kCases + "/tor2_3.case"});
  EXPECT_EQ(d.code, 0);
  EXPECT_EQ(d.out, "degree: (3,[0])\ndeg_f: (2,[0])\n");
  auto mixed = run({"degree", "--case", kCases + "/tor2_3.case", "--poly", "z1 + z2^2"});
  EXPECT_EQ(mixed.code, 2);
  auto inv = run({"invariance", "--case", kCases + "/p2_fermat.case"});
  EXPECT_EQ(inv.code, 0);
  EXPECT_EQ(inv.out, "cofactor: 3*z1\n");
  auto dec = run({"decompose", "--case", kCases + "/tor2_3.case"});
  EXPECT_EQ(dec.code, 0);
  EXPECT_NE(dec.out.find("P(z1,z2) = -1/3*z2; P(z2,z3) = -1/3*z1; g = 0; theta = 3"), std::string::npos) << dec.out;
}

TEST(Cli, InputErrorsExitOne) {
  EXPECT_EQ(run({"audit", "--case", kCases + "/missing.case"}).code, 1);
  EXPECT_EQ(run({"audit"}).code, 1);
  EXPECT_EQ(run({"nonsense"}).code, 1);
  EXPECT_EQ(run({"audit", "--case", kCases + "/tor2_3.case", "--radial-index", "2"}).code, 1);
  EXPECT_EQ(run({"audit", "--case", kCases + "/octahedron.case"}).code, 1);
  EXPECT_EQ(run({"fixture", "tor2", "--m", "4"}).code, 1);
  EXPECT_EQ(run({"fixture", "exZ"}).code, 1);
  EXPECT_EQ(run({"--format", "xml", "selftest"}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, OutputIsDeterministic) {
  for (const auto& fmt : {"text", "machine"}) {
    auto a = run({"--format", fmt, "audit", "--case", kCases + "/tor2_3.case"});
    auto b = run({"--format", fmt, "audit", "--case", kCases + "/tor2_3.case"});
    EXPECT_EQ(a.out, b.out);
  }
}

TEST(Cli, MachineAndTextCarryTheSameNumbers) {
  const std::regex coord(R"(coordinate (\d+): bound (-?\d+), actual (-?\d+), slack (-?\d+))");
  for (const auto& name : {"tor2_3", "exb_5_5", "exb_2_3", "exa_1_2", "ms2_3", "wps2_1212", "p2_fermat"}) {
    const std::string path = kCases + "/" + name + ".case";
    auto text = run({"audit", "--case", path});
    auto machine = run({"--format", "machine", "audit", "--case", path});
    EXPECT_EQ(text.code, machine.code) << name;
    auto j = Json::parse(machine.out);
    EXPECT_EQ(j["exit_code"].get<int>(), machine.code);

    std::size_t seen = 0;
    for (std::sregex_iterator it(text.out.begin(), text.out.end(), coord), end; it != end; ++it, ++seen) {
      const std::string k = (*it)[1];
      EXPECT_EQ(j["bound"][k].get<long>(), std::stol((*it)[2])) << name << " k=" << k;
      EXPECT_EQ(j["actual"][k].get<long>(), std::stol((*it)[3])) << name << " k=" << k;
      EXPECT_EQ(j["slack"][k].get<long>(), std::stol((*it)[4])) << name << " k=" << k;
    }
    EXPECT_EQ(seen, j["bound"].size()) << name;
    EXPECT_GT(seen, 0u) << name;

    std::smatch m;
    ASSERT_TRUE(std::regex_search(text.out, m, std::regex("verdict: ([^\n]*)")));
    EXPECT_EQ(m[1].str(), j["verdict"].get<std::string>());
    ASSERT_TRUE(std::regex_search(text.out, m, std::regex("deg_v: ([^\n]*)")));
    EXPECT_EQ(m[1].str(), j["deg_v"].get<std::string>());
    if (!j["deg_f"].is_null()) {
      ASSERT_TRUE(std::regex_search(text.out, m, std::regex("deg_f: ([^\n]*)")));
      EXPECT_EQ(m[1].str(), j["deg_f"].get<std::string>());
    }
  }
}

TEST(Cli, ExportThenAudit) {
  auto exported = run({"export", "exB", "--alpha", "5", "--beta", "5"});
  ASSERT_EQ(exported.code, 0);
  EXPECT_EQ(exported.out, serialize_case(load_case(kCases + "/exb_5_5.case")));
}

TEST(Cli, Selftest) {
  auto r = run({"--format", "machine", "selftest"});
  EXPECT_EQ(r.code, 0) << r.out;
  auto j = Json::parse(r.out);
  EXPECT_TRUE(j["passed"].get<bool>());
  EXPECT_GE(j["suites"].size(), 6u);
}

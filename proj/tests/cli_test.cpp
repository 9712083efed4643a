#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "braidvar/variety.hpp"
#include "cli.hpp"
#include "json_io.hpp"
#include "svg.hpp"

using namespace braidvar;
using namespace braidvar::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

int count_of(const std::string& hay, const std::string& needle) {
  int n = 0;
  for (auto p = hay.find(needle); p != std::string::npos; p = hay.find(needle, p + 1)) ++n;
  return n;
}

}  // namespace

TEST(Cli, ExitCodes) {
  EXPECT_EQ(call({"count", "--braid", "1,1,1", "--field", "3"}).code, kOk);
  EXPECT_EQ(call({"rulings", "--braid", "1,2", "--strands", "3"}).code, kDomainError);
  EXPECT_EQ(call({"rulings"}).code, kUsageError);
  EXPECT_EQ(call({"rulings", "--braid", "1,x"}).code, kUsageError);
  EXPECT_EQ(call({"count", "--braid", "1,1,1", "--field", "4"}).code, kUsageError);
  EXPECT_EQ(call({"nosuch"}).code, kUsageError);
  EXPECT_EQ(call({"demazure", "--braid", "1,1", "--format", "svg"}).code, kUsageError);
  EXPECT_EQ(call({"weave", "--braid", "1,1,1", "--ruling-index", "7"}).code, kUsageError);
  EXPECT_EQ(call({"count", "--braid", "1,1,1,1,1,1,1,1", "--field", "5", "--budget", "100"}).code, kBudgetExhausted);
  EXPECT_EQ(call({"fmap", "--braid", "1,1,2,2,1,1,2,2", "--strands", "3"}).code, kDomainError);
}

TEST(Cli, BudgetFromEnvironment) {
  ::setenv("BRAIDVAR_BUDGET", "50", 1);
  EXPECT_EQ(call({"count", "--braid", "1,1,1,1,1,1", "--field", "5"}).code, kBudgetExhausted);
  ::setenv("BRAIDVAR_BUDGET", "lots", 1);
  EXPECT_EQ(call({"count", "--braid", "1,1,1", "--field", "5"}).code, kUsageError);
  ::unsetenv("BRAIDVAR_BUDGET");
  EXPECT_EQ(call({"count", "--braid", "1,1,1,1,1,1", "--field", "5"}).code, kOk);
}

TEST(Cli, TextOutputs) {
  auto c = call({"cluster", "--braid", "1,1,1"});
  EXPECT_EQ(c.code, kOk);
  EXPECT_NE(c.out.find("A_1 = z2"), std::string::npos);
  EXPECT_NE(c.out.find("A_2 = z2*z3 - 1"), std::string::npos);
  auto f = call({"fmap", "--braid", "1,1,1"});
  EXPECT_NE(f.out.find("-y1/y2^2"), std::string::npos);
  auto d = call({"deodhar", "--braid", "1,1,1", "--format", "csv"});
  EXPECT_EQ(count_of(d.out, "\n"), 3);
  auto v = call({"verify", "--braid", "1,1,1", "--field", "5"});
  EXPECT_EQ(v.code, kOk);
  auto j = json::parse(v.out);
  EXPECT_EQ(j.at("brute_force").get<int>(), 21);
  EXPECT_TRUE(j.at("partition_ok").get<bool>());
  auto dec = call({"weave", "--braid", "2,1,1,2,2,1,2", "--strands", "3", "--decompose", "--format", "json"});
  EXPECT_EQ(dec.code, kOk);
  EXPECT_NE(dec.out.find("non_right_inductive"), std::string::npos);
}

TEST(Cli, OutFileMatchesStdout) {
  const std::string path = ::testing::TempDir() + "braidvar_rulings.json";
  auto direct = call({"rulings", "--braid", "1,1,1,1", "--format", "json"});
  EXPECT_EQ(call({"rulings", "--braid", "1,1,1,1", "--format", "json", "--out", path}).out, "");
  std::ifstream f(path);
  std::stringstream buf;
  buf << f.rdbuf();
  EXPECT_EQ(buf.str(), direct.out);
}

TEST(Cli, SelftestIsSeeded) {
  auto a = call({"selftest", "--seed", "9", "--format", "json"});
  auto b = call({"selftest", "--seed", "9", "--format", "json"});
  EXPECT_EQ(a.code, kOk);
  EXPECT_EQ(a.out, b.out);
}

TEST(Json, OutputsReparse) {
  const std::vector<std::vector<std::string>> cmds{
      {"demazure", "--braid", "1,1,2,2,1,1,2,2", "--strands", "3", "--format", "json"},
      {"rulings", "--braid", "1,1,2,2,1,1,2,2", "--strands", "3", "--format", "json"},
      {"deodhar", "--braid", "1,1,1,1", "--format", "json"},
      {"weave", "--braid", "1,1,1,1", "--format", "json"},
      {"cluster", "--braid", "1,1,2,2,1,1,2,2", "--strands", "3", "--format", "json"},
      {"svars", "--braid", "1,1,1", "--format", "json"},
      {"fmap", "--braid", "1,1,1", "--format", "json"},
      {"count", "--braid", "1,1,1", "--format", "json"},
      {"verify", "--braid", "1,2,1", "--strands", "3"},
  };
  for (const auto& c : cmds) {
    auto r = call(c);
    ASSERT_EQ(r.code, kOk) << c[0] << ' ' << r.err;
    auto j = json::parse(r.out);
    EXPECT_EQ(json::parse(j.dump()), j) << c[0];
  }
}

TEST(Json, TypedRoundTrips) {
  BraidWord beta = parse_braid("1,1,2,2,1,1,2,2", 3);
  EXPECT_EQ(braid_from_json(braid_json(beta)), beta);
  for (const auto& rho : enumerate_rulings(beta)) {
    EXPECT_EQ(ruling_from_json(json::parse(ruling_json(rho).dump())), rho);
    Morphism m = build_right_simplifying(beta, rho);
    Morphism back = morphism_from_json(json::parse(morphism_json(m).dump()));
    EXPECT_EQ(morphism_json(back), morphism_json(m));
    EXPECT_EQ(back.layers, m.layers);
  }
  CountReport r = verify_decomposition(parse_braid("1,1,1"), 3);
  EXPECT_EQ(report_json(report_from_json(json::parse(report_json(r).dump()))), report_json(r));
  std::vector<Scalar> s{Scalar(parse_rational("z1 - 1/z2")), Scalar(parse_rational("(z1 + 1)/(z2*z4)"))};
  EXPECT_EQ(scalars_from_json(scalars_json(s)), s);
}

TEST(Svg, GlyphCounts) {
  BraidWord cube = parse_braid("1,1,1");
  std::string s = render_weave(build_right_simplifying(cube, maximal_ruling(cube)));
  EXPECT_EQ(count_of(s, "class=\"trivalent\""), 2);
  EXPECT_EQ(count_of(s, "class=\"cup\""), 0);
  EXPECT_EQ(s.rfind("<svg", 0), 0u);
  BraidWord d3 = half_twist(3);
  std::string h = render_weave(build_right_simplifying(d3, maximal_ruling(d3)));
  EXPECT_EQ(count_of(h, "class=\"trivalent\"") + count_of(h, "class=\"cup\"") + count_of(h, "class=\"hexavalent\""), 0);
  BraidWord sq = parse_braid("1,1,2,2,1,1,2,2", 3);
  for (const auto& rho : enumerate_rulings(sq)) {
    std::string w = render_weave(build_right_simplifying(sq, rho));
    const int t = count_of(w, "class=\"trivalent\""), c = count_of(w, "class=\"cup\"");
    EXPECT_EQ(t, rho.switches()) << rho.to_string();
    EXPECT_EQ(c, rho.departures()) << rho.to_string();
    EXPECT_EQ(t + 2 * c, 5);
    std::string r = render_ruling(rho);
    EXPECT_EQ(count_of(r, "class=\"switch\""), rho.switches());
    EXPECT_EQ(count_of(r, "class=\"departure\""), rho.departures());
  }
}

TEST(Svg, ByteStable) {
  auto a = call({"render", "--braid", "1,1,2,2,1,1,2,2", "--strands", "3", "--kind", "weave"});
  auto b = call({"render", "--braid", "1,1,2,2,1,1,2,2", "--strands", "3", "--kind", "weave"});
  EXPECT_EQ(a.code, kOk);
  EXPECT_EQ(a.out, b.out);
  auto r = call({"render", "--braid", "1,1,1", "--kind", "ruling", "--ruling-index", "1"});
  EXPECT_EQ(count_of(r.out, "class=\"departure\""), 1);
  EXPECT_EQ(call({"rulings", "--braid", "1,1,1", "--format", "svg"}).code, kOk);
}

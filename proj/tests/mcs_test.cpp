#include <gtest/gtest.h>

#include <map>

#include "braidvar/errors.hpp"
#include "braidvar/mcs.hpp"
#include "braidvar/weave.hpp"
#include "support.hpp"

using namespace braidvar;
using braidvar::test::braid_of;
using braidvar::test::braid_set;
using braidvar::test::expr;
using braidvar::test::Gen;
using braidvar::test::ys;
using braidvar::test::zs;

namespace {

Atom random_atom(Gen& g, int n, std::uint32_t p) {
  switch (g.uniform(0, 2)) {
    case 0: {
      int i = g.uniform(1, n - 1), j = g.uniform(i + 1, n);
      return Handleslide{i, j, g.residues(1, p)[0]};
    }
    case 1:
      return MarkedPoint{g.uniform(1, n), g.units(1, p)[0]};
    default:
      return Crossing{g.uniform(1, n - 1)};
  }
}

// SR values with units at switches, zeros at departures.
std::vector<Scalar> random_sr(Gen& g, const NormalRuling& rho, std::uint32_t p) {
  std::vector<Scalar> out;
  for (auto l : rho.labels) {
    if (l == Label::Switch) out.push_back(g.units(1, p)[0]);
    else if (l == Label::Departure) out.push_back(Scalar::mod(0, p));
    else out.push_back(g.residues(1, p)[0]);
  }
  return out;
}

// Atoms through crossing k and its trailing decorations, stopping at the
// handleslide that precedes crossing k+1.
std::size_t cut_after_crossing(const std::vector<Atom>& atoms, int k) {
  int seen = 0;
  for (std::size_t e = 0; e < atoms.size(); ++e) {
    if (!std::holds_alternative<Crossing>(atoms[e])) continue;
    if (++seen == k + 1) return e - 1;
  }
  return atoms.size();
}

}  // namespace

TEST(MCS, AFormMonodromyIsBraidMatrix) {
  for (const auto& nb : braid_set()) {
    BraidWord b = braid_of(nb);
    auto z = zs(b.length());
    EXPECT_EQ(mcs_monodromy(a_form(b, z)), compose_letters(b.letters, z, b.n)) << nb.name;
    std::vector<Atom> framed;
    for (int k = 1; k <= b.length(); ++k) {
      framed.emplace_back(Letter{b[k], z[static_cast<std::size_t>(k - 1)]});
      framed.emplace_back(Scaling{b[k], Scalar(1L)});
    }
    EXPECT_EQ(mcs_monodromy(a_form(b, z, true)), compose(framed, b.n)) << nb.name;
  }
}

TEST(MCS, EveryRulePreservesMonodromy) {
  Gen g(51);
  const std::uint32_t p = 7;
  std::map<std::string, int> fired;
  for (int it = 0; it < 4000; ++it) {
    const int n = g.uniform(2, 4);
    Atom l = random_atom(g, n, p), r = random_atom(g, n, p);
    auto app = swap_rule(l, r);
    if (!app) continue;
    ++fired[app->rule];
    ASSERT_EQ(compose({l, r}, n), compose(app->replacement, n)) << app->rule;
  }
  for (const auto& name : rule_names()) EXPECT_GT(fired[name], 0) << name;
}

TEST(MCS, RulesSymbolic) {
  const Scalar x = expr("x1"), y = expr("y1"), t = expr("t1");
  auto check = [](const Atom& l, const Atom& r, int n, const std::string& rule) {
    auto app = swap_rule(l, r);
    ASSERT_TRUE(app.has_value());
    EXPECT_EQ(app->rule, rule);
    EXPECT_EQ(compose({l, r}, n), compose(app->replacement, n)) << rule;
  };
  check(Handleslide{1, 2, x}, Handleslide{1, 2, y}, 3, "merge");
  check(Handleslide{1, 2, x}, Handleslide{2, 3, y}, 3, "chain");
  check(Handleslide{2, 3, x}, Handleslide{1, 2, y}, 3, "cochain");
  check(Handleslide{1, 2, x}, Handleslide{3, 4, y}, 4, "commute");
  check(Handleslide{1, 2, x}, MarkedPoint{1, t}, 3, "slide-past-point");
  check(Handleslide{1, 2, x}, MarkedPoint{2, t}, 3, "slide-past-point");
  check(MarkedPoint{2, t}, Handleslide{1, 2, x}, 3, "point-past-slide");
  check(MarkedPoint{1, t}, MarkedPoint{1, expr("t2")}, 2, "points");
  check(Handleslide{1, 3, x}, Crossing{1}, 3, "slide-past-crossing");
  check(MarkedPoint{1, t}, Crossing{1}, 2, "point-past-crossing");
  EXPECT_FALSE(swap_rule(Handleslide{1, 2, x}, Crossing{1}).has_value());
}

TEST(MCS, PushRightKeepsMonodromy) {
  Gen g(52);
  const std::uint32_t p = 5;
  for (int it = 0; it < 300; ++it) {
    MCSState s;
    s.n = g.uniform(2, 4);
    for (int k = g.uniform(1, 8); k > 0; --k) s.atoms.push_back(random_atom(g, s.n, p));
    auto pushed = push_right(s, s.atoms.size());
    ASSERT_EQ(mcs_monodromy(pushed), mcs_monodromy(s));
    ASSERT_EQ(pushed.braid(), s.braid());
  }
}

TEST(MCS, SRFormOfCubeOfGenerator) {
  BraidWord b = parse_braid("1,1,1");
  NormalRuling rho = maximal_ruling(b);
  auto sr = a_to_sr(rho, zs(3));
  EXPECT_EQ(sr.values[0], expr("z1"));
  EXPECT_EQ(sr.values[1], expr("z2"));
  EXPECT_EQ(sr.values[2], expr("z3 + 1/z2"));
  auto framed = a_to_sr(rho, zs(3), true);
  EXPECT_EQ(framed.values[2], expr("z3 - 1/z2"));
  EXPECT_EQ(sr.switch_inverse(2), expr("-1/z2"));
}

// Independent oracle: after every crossing the A-form prefix and the SR-form
// prefix differ by a unipotent upper triangular factor.
TEST(MCS, SweepMatchesPrefixMonodromy) {
  for (bool framed : {false, true}) {
    for (const auto& nb : braid_set()) {
      BraidWord b = braid_of(nb);
      Gen g(53);
      for (const auto& rho : enumerate_rulings(b)) {
        auto a = sr_to_a(rho, random_sr(g, rho, 11), framed);
        auto sr = a_to_sr(rho, a, framed);
        MCSState A = a_form(b, a, framed);
        const auto& S = sr.state.atoms;
        for (int k = 1; k <= b.length(); ++k) {
          const std::size_t ea = cut_after_crossing(A.atoms, k);
          const std::size_t es = cut_after_crossing(S, k);
          std::vector<Atom> pa(A.atoms.begin(), A.atoms.begin() + static_cast<std::ptrdiff_t>(ea));
          std::vector<Atom> ps(S.begin(), S.begin() + static_cast<std::ptrdiff_t>(es));
          SquareMatrix ratio = compose(pa, b.n) * compose(ps, b.n).inverse();
          ASSERT_TRUE(ratio.is_unipotent_upper()) << nb.name << ' ' << rho.to_string() << " letter " << k;
        }
      }
    }
  }
}

TEST(MCS, RoundTripOnRandomFieldInputs) {
  Gen g(54);
  const std::uint32_t p = 7;
  for (bool framed : {false, true}) {
    for (const auto& nb : braid_set()) {
      BraidWord b = braid_of(nb);
      auto rulings = enumerate_rulings(b);
      for (int it = 0; it < 100; ++it) {
        const auto& rho = rulings[static_cast<std::size_t>(it) % rulings.size()];
        auto sr = random_sr(g, rho, p);
        auto a = sr_to_a(rho, sr, framed);
        ASSERT_EQ(a_to_sr(rho, a, framed).values, sr);
        ASSERT_EQ(sr_to_a(rho, a_to_sr(rho, a, framed).values, framed), a);
      }
    }
  }
}

TEST(MCS, SweepDomainErrors) {
  BraidWord b = parse_braid("1,1,1");
  NormalRuling rho = maximal_ruling(b);
  std::vector<Scalar> a{Scalar(0L), Scalar(0L), Scalar(1L)};
  EXPECT_THROW(a_to_sr(rho, a), DomainError);
  NormalRuling dep = parse_ruling(b, "RDR");
  std::vector<Scalar> sr{Scalar(0L), Scalar(1L), Scalar(0L)};
  EXPECT_THROW(sr_to_a(dep, sr), DomainError);
}

TEST(FMap, CubeOfGenerator) {
  BraidWord b = parse_braid("1,1,1");
  Morphism m = build_right_simplifying(b, maximal_ruling(b));
  auto f = f_map(m, ys(2));
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f[0], expr("y2"));
  EXPECT_EQ(f[1], expr("-y1/y2^2"));
  std::vector<Scalar> c{expr("c1"), expr("c2")};
  auto inv = f_map_inverse(m, c);
  EXPECT_EQ(inv[0], expr("-c1^2*c2"));
  EXPECT_EQ(inv[1], expr("c1"));
  EXPECT_EQ(f_map(m, inv), c);
}

TEST(FMap, NeedsHalfTwistPrefix) {
  BraidWord b = parse_braid("1,1,2,2,1,1,2,2", 3);
  Morphism m = build_right_simplifying(b, maximal_ruling(b));
  EXPECT_THROW(f_map(m, chart_parameters(m)), DomainError);
}

TEST(FMapProperty, InverseOnRandomBraids) {
  Gen g(55);
  const std::uint32_t p = 11;
  for (int it = 0; it < 40; ++it) {
    BraidWord beta = g.half_twist_braid(g.uniform(2, 3), g.uniform(1, 5));
    auto rulings = enumerate_rulings(beta);
    const auto& rho = rulings[static_cast<std::size_t>(g.uniform(0, static_cast<int>(rulings.size()) - 1))];
    Morphism m = build_right_simplifying(beta, rho);
    std::vector<Scalar> params;
    for (std::size_t k = m.moves.size(); k-- > 0;) {
      if (m.moves[k].kind == MoveKind::Trivalent) params.push_back(g.units(1, p)[0]);
      if (m.moves[k].kind == MoveKind::Cup) params.push_back(g.residues(1, p)[0]);
    }
    ASSERT_EQ(f_map_inverse(m, f_map(m, params)), params) << beta.to_string() << ' ' << rho.to_string();
  }
}

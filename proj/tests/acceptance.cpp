// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "braidvar/cluster.hpp"
#include "braidvar/deodhar.hpp"
#include "braidvar/mcs.hpp"
#include "braidvar/ruling.hpp"
#include "braidvar/variety.hpp"
#include "braidvar/weave.hpp"
#include "identities.hpp"
#include "support.hpp"

using namespace braidvar;
using braidvar::test::braid_of;
using braidvar::test::braid_set;
using braidvar::test::expr;
using braidvar::test::ys;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (cond) return;
    ok = false;
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

struct Criterion {
  int id;
  std::string name;
  double limit_s;
  std::function<Outcome()> body;
};

Morphism maximal_morphism(const BraidWord& b) { return build_right_simplifying(b, maximal_ruling(b)); }

Outcome small_cluster() {
  Outcome o;
  auto A = cluster_variables(maximal_morphism(parse_braid("1,1,1")));
  o.require(A.size() == 2, "expected two cluster variables");
  if (A.size() == 2) {
    o.require(A[0] == expr("z2"), "A_1 = " + A[0].to_string());
    o.require(A[1] == expr("z2*z3 - 1"), "A_2 = " + A[1].to_string());
  }
  return o;
}

Outcome medium_cluster() {
  Outcome o;
  Morphism m = maximal_morphism(parse_braid("1,1,2,2,1,1,2,2", 3));
  const Scalar vv = expr("z7 - z3*z6/z2 + (1 - z6*(z5 + (1 - z3*z4)/z2))/z4");
  const std::vector<Scalar> want_s{expr("z2"), expr("z4"), expr("z6"), vv, expr("z8") - vv.inverse()};
  auto s = s_variables(m);
  o.require(s == want_s, "s-variables differ");
  auto A = cluster_variables(m);
  o.require(A.size() == 5, "expected five cluster variables");
  if (A.size() == 5) {
    o.require(A[3] == expr("z2*z4*z7 + z2 - z2*z5*z6 - z6"), "A_4 = " + A[3].to_string());
    o.require(A[4] == expr("-z2*z4 + z2*z4*z7*z8 + z2*z8 - z2*z5*z6*z8 - z6*z8"), "A_5 = " + A[4].to_string());
  }
  return o;
}

Outcome fmap_oracle() {
  Outcome o;
  Morphism m = maximal_morphism(parse_braid("1,1,1"));
  auto f = f_map(m, ys(2));
  o.require(f.size() == 2 && f[0] == expr("y2") && f[1] == expr("-y1/y2^2"), "f(y1, y2) differs");
  const std::vector<Scalar> c{expr("c1"), expr("c2")};
  auto inv = f_map_inverse(m, c);
  o.require(inv.size() == 2 && inv[0] == expr("-c1^2*c2") && inv[1] == expr("c1"), "f^-1 differs");
  o.require(f_map(m, inv) == c, "f o f^-1 is not the identity");
  return o;
}

Outcome point_counts() {
  Outcome o;
  for (const auto& nb : braid_set()) {
    BraidWord b = braid_of(nb);
    for (std::uint32_t q : {2u, 3u, 5u}) {
      const auto bf = brute_force_count(b, q);
      const auto r = ruling_point_count(b, q);
      const auto d = deodhar_point_count(b, q);
      std::ostringstream msg;
      msg << nb.name << " q=" << q << ": " << bf << '/' << r << '/' << d;
      o.require(bf == r && r == d, msg.str());
    }
  }
  return o;
}

Outcome partition() {
  Outcome o;
  for (const auto& nb : braid_set()) {
    BraidWord b = braid_of(nb);
    for (std::uint32_t q : {2u, 3u}) {
      CountReport rep = verify_decomposition(b, q);
      const std::string tag = nb.name + " q=" + std::to_string(q);
      o.require(rep.partition_ok, tag + " partition");
      for (const auto& rho : enumerate_rulings(b)) {
        auto it = rep.piece_sizes.find(rho.to_string());
        const auto want = piece_size(rho.departures(), rho.switches(), q);
        o.require(it != rep.piece_sizes.end() && it->second == want, tag + " fiber " + rho.to_string());
      }
    }
  }
  return o;
}

Outcome identities() {
  Outcome o;
  const auto ids = braidvar::test::matrix_identities();
  for (const auto& id : ids) o.require(id.holds(), id.name);
  o.detail = std::to_string(ids.size()) + " identities" + (o.detail.empty() ? "" : ": " + o.detail);
  return o;
}

Outcome bijection() {
  Outcome o;
  for (const auto& nb : braid_set()) {
    BraidWord b = braid_of(nb);
    auto rulings = enumerate_rulings(b);
    auto seqs = enumerate_distinguished(b, Permutation::longest(b.n));
    o.require(rulings.size() == seqs.size(), nb.name + " counts");
    for (const auto& r : rulings) o.require(sequence_to_ruling(ruling_to_sequence(r)) == r, nb.name + " ruling round trip");
    for (const auto& s : seqs) o.require(ruling_to_sequence(sequence_to_ruling(s)) == s, nb.name + " sequence round trip");
    NormalRuling top = maximal_ruling(b);
    o.require(top.departures() == 0, nb.name + " maximal has departures");
    for (const auto& r : rulings)
      if (!(r == top)) o.require(r.switches() < top.switches(), nb.name + " switch count not strictly maximal");
  }
  return o;
}

Outcome sr_round_trip() {
  Outcome o;
  const std::uint32_t p = 7;
  std::mt19937_64 rng(8);
  auto residue = [&](int lo) { return Scalar::mod(std::uniform_int_distribution<int>(lo, p - 1)(rng), p); };
  for (const auto& nb : braid_set()) {
    BraidWord b = braid_of(nb);
    auto rulings = enumerate_rulings(b);
    int good = 0;
    for (int it = 0; it < 100; ++it) {
      const auto& rho = rulings[static_cast<std::size_t>(it) % rulings.size()];
      std::vector<Scalar> sr;
      for (auto l : rho.labels) sr.push_back(l == Label::Switch ? residue(1) : l == Label::Departure ? Scalar::mod(0, p) : residue(0));
      const auto a = sr_to_a(rho, sr);
      const auto back = a_to_sr(rho, a).values;
      if (back == sr && sr_to_a(rho, back) == a) ++good;
    }
    o.require(good == 100, nb.name + " " + std::to_string(good) + "/100");
  }
  BraidWord cube = parse_braid("1,1,1");
  NormalRuling rho = maximal_ruling(cube);
  auto z = chart_embed(build_right_simplifying(cube, rho), ys(2));
  auto sr = a_to_sr(rho, z).values;
  o.require(sr == std::vector<Scalar>{expr("-1/y1 - 1/y2"), expr("y2"), expr("-y1/y2^2")}, "hand trace differs");
  return o;
}

Outcome decomposability() {
  Outcome o;
  std::string measured = "root Y-trees for k=1..5:", required = " required:";
  for (int k = 1; k <= 5; ++k) {
    std::string w = "1";
    for (int j = 0; j < k; ++j) w += ",1";
    auto s = is_cycle_decomposable(parse_braid(w, 2));
    o.require(s.status == Decomposability::Decomposable, "s1^" + std::to_string(k + 1) + " not decomposable");
    measured += " " + std::to_string(s.root_y_trees);
    required += " " + std::to_string(k - 2);
    o.require(s.root_y_trees == k - 2, "s1^" + std::to_string(k + 1) + " has " + std::to_string(s.root_y_trees) + " Y-trees");
  }
  auto chain = is_cycle_decomposable(parse_braid("1,2,1,2,1,2,2,1,2", 3));
  o.require(chain.non_right_inductive_reached, "Delta3 (s2 s1 s2)^2 chain never leaves right inductive weaves");
  BraidWord c1 = parse_braid("2,1,1,2,2,1,2", 3);
  auto first = is_cycle_decomposable(c1);
  bool witnessed = false;
  for (const auto& nd : first.nodes) {
    if (nd.parent != 0 || nd.right_inductive || !nd.deletable) continue;
    auto st = chart_strata(nd.morphism, 3);
    if (!st.single_stratum && st.witness) witnessed = true;
  }
  o.require(witnessed, "no F_3 witness after the first deletion");
  o.detail = measured + required + (o.detail.empty() ? "" : "; " + o.detail);
  return o;
}

Outcome u_variables() {
  Outcome o;
  for (const auto& nb : braid_set()) {
    Morphism m = maximal_morphism(braid_of(nb));
    o.require(cluster_via_u(m) == cluster_variables(m), nb.name);
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "cluster variables of s1^3", 1.0, small_cluster},
      {2, "s-variables and cluster variables of (s1^2 s2^2)^2", 10.0, medium_cluster},
      {3, "f-map of s1^3 and its inverse", 1.0, fmap_oracle},
      {4, "point counts agree three ways, q in {2,3,5}", 60.0, point_counts},
      {5, "ruling pieces partition X(beta), q in {2,3}", 60.0, partition},
      {6, "symbolic matrix identities", 5.0, identities},
      {7, "rulings biject with distinguished sequences", 60.0, bijection},
      {8, "A-form / SR-form round trip over F_7 and hand trace", 60.0, sr_round_trip},
      {9, "cycle decomposability", 60.0, decomposability},
      {10, "cluster variables via framings", 60.0, u_variables},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.limit_s) o.require(false, "over time limit");
    if (!o.ok) ++failed;
    std::printf("%s  %2d  %-52s %8.3fs / %.0fs%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.name.c_str(), secs, c.limit_s,
                o.detail.empty() ? "" : "  ", o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}

#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include "CLI11.hpp"

#include "braidvar/cluster.hpp"
#include "braidvar/deodhar.hpp"
#include "braidvar/errors.hpp"
#include "braidvar/mcs.hpp"
#include "braidvar/ruling.hpp"
#include "braidvar/variety.hpp"
#include "braidvar/weave.hpp"
#include "json_io.hpp"
#include "svg.hpp"

namespace braidvar::cli {

namespace {

struct Options {
  std::string braid;
  int strands = 0;
  std::uint32_t field = 3;
  std::optional<int> ruling_index;
  std::string format;
  std::string out;
  std::uint64_t budget = kDefaultPointBudget;
  std::uint64_t seed = 1;
  bool decompose = false;
  std::string kind = "weave";
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One command's output in every format it supports; empty means unsupported.
struct Output {
  json j;
  std::string text;
  std::string csv;
  std::string svg;
};

struct Command {
  std::string name;
  std::string help;
  std::set<std::string> formats;
  std::string default_format;
  bool needs_braid = true;
  std::function<Output(const Options&, const BraidWord&)> body;
};

std::string join(const std::vector<Scalar>& v, const std::string& sep = ", ") {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? sep : "") + v[k].to_string();
  return s;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

NormalRuling selected_ruling(const Options& o, const BraidWord& beta) {
  if (!o.ruling_index) return maximal_ruling(beta);
  auto all = enumerate_rulings(beta);
  const int k = *o.ruling_index;
  if (k < 0 || k >= static_cast<int>(all.size()))
    throw UsageError("--ruling-index " + std::to_string(k) + " out of range (braid has " + std::to_string(all.size()) +
                     " rulings)");
  return all[static_cast<std::size_t>(k)];
}

Output cmd_demazure(const Options&, const BraidWord& beta) {
  Permutation d = demazure_product(beta);
  const bool w0 = d == Permutation::longest(beta.n);
  Output o;
  o.j = json{{"braid", braid_json(beta)}, {"demazure", d.one_line()}, {"length", d.length()}, {"is_w0", w0}};
  o.text = "delta = " + d.to_string() + "  length " + std::to_string(d.length()) + (w0 ? "  (w0)" : "") + "\n";
  return o;
}

Output cmd_rulings(const Options& opt, const BraidWord& beta) {
  auto all = enumerate_rulings(beta);
  NormalRuling top = maximal_ruling(beta);
  Output o;
  json list = json::array();
  std::ostringstream text, csv;
  text << "#  labels  S R D\n";
  csv << "index,labels,switches,returns,departures\n";
  int maximal = -1;
  for (std::size_t k = 0; k < all.size(); ++k) {
    const auto& r = all[k];
    if (r == top) maximal = static_cast<int>(k);
    list.push_back(ruling_json(r));
    text << k << "  " << r.to_string() << "  " << r.switches() << ' ' << r.returns() << ' ' << r.departures()
         << (r == top ? "  maximal" : "") << '\n';
    csv << k << ',' << r.to_string() << ',' << r.switches() << ',' << r.returns() << ',' << r.departures() << '\n';
  }
  o.j = json{{"braid", braid_json(beta)}, {"rulings", list}, {"maximal", maximal}};
  o.text = text.str();
  o.csv = csv.str();
  o.svg = render_ruling(selected_ruling(opt, beta));
  return o;
}

Output cmd_deodhar(const Options&, const BraidWord& beta) {
  require_demazure_w0(beta);
  auto seqs = enumerate_distinguished(beta, Permutation::longest(beta.n));
  Output o;
  json list = json::array();
  std::ostringstream text, csv;
  csv << "index,cases,t,c,ruling\n";
  int k = 0;
  for (const auto& s : seqs) {
    json js = sequence_json(s);
    const std::string ruling = sequence_to_ruling(s).to_string();
    js["ruling"] = ruling;
    list.push_back(js);
    std::string cases;
    for (auto c : s.cases) cases += std::to_string(static_cast<int>(c));
    auto sh = shape(s);
    text << k << "  cases " << cases << "  t=" << sh.t << " c=" << sh.c << "  ruling " << ruling << '\n';
    csv << k << ',' << cases << ',' << sh.t << ',' << sh.c << ',' << ruling << '\n';
    ++k;
  }
  o.j = json{{"braid", braid_json(beta)}, {"sequences", list}};
  o.text = text.str();
  o.csv = csv.str();
  return o;
}

Output cmd_weave(const Options& opt, const BraidWord& beta) {
  NormalRuling rho = selected_ruling(opt, beta);
  Morphism m = build_right_simplifying(beta, rho);
  Output o;
  o.j = morphism_json(m);
  o.j["ruling"] = rho.to_string();
  o.j["trivalent"] = m.trivalent_count();
  o.j["cup"] = m.cup_count();
  o.j["y_trees"] = find_y_trees(m).size();
  o.j["parameters"] = scalars_json(chart_parameters(m));
  std::ostringstream text;
  text << "ruling " << rho.to_string() << ": " << m.trivalent_count() << " trivalent, " << m.cup_count() << " cup, "
       << find_y_trees(m).size() << " Y-trees\n";
  text << "[" << m.layers[0].to_string() << "]\n";
  for (std::size_t k = 0; k < m.moves.size(); ++k)
    text << "  " << move_kind_name(m.moves[k].kind) << " @" << m.moves[k].pos << " -> [" << m.layers[k + 1].to_string()
         << "]\n";
  if (opt.decompose) {
    auto s = is_cycle_decomposable(beta, opt.budget, opt.field);
    json nodes = json::array();
    for (const auto& nd : s.nodes) {
      nodes.push_back(json{{"parent", nd.parent},
                           {"y_tree", nd.y_tree},
                           {"right_inductive", nd.right_inductive},
                           {"ruling", nd.ruling ? nd.ruling->to_string() : ""},
                           {"deletable", nd.deletable},
                           {"trivalent", nd.morphism.trivalent_count()},
                           {"cup", nd.morphism.cup_count()}});
    }
    o.j["decomposition"] = json{{"status", decomposability_name(s.status)},
                                {"root_y_trees", s.root_y_trees},
                                {"nodes", nodes},
                                {"decomposing", s.decomposing},
                                {"non_right_inductive_reached", s.non_right_inductive_reached},
                                {"field", s.q}};
    text << "cycle decomposability over F_" << s.q << ": " << decomposability_name(s.status) << ", "
         << s.root_y_trees << " Y-trees at the root, " << s.nodes.size() << " nodes";
    if (s.non_right_inductive_reached) text << "; non-right-inductive weave reached";
    text << '\n';
    for (std::size_t k = 0; k < s.nodes.size(); ++k) {
      const auto& nd = s.nodes[k];
      text << "  node " << k << " parent " << nd.parent << (nd.right_inductive ? "  right inductive " : "  NOT right inductive")
           << (nd.ruling ? nd.ruling->to_string() : "") << (nd.deletable ? "" : "  (deletion not algebraic)") << '\n';
    }
  }
  o.text = text.str();
  o.svg = render_weave(m);
  return o;
}

std::vector<Scalar> symbolic_z(const BraidWord& beta) {
  std::vector<Scalar> z;
  for (int k = 1; k <= beta.length(); ++k) z.push_back(Scalar::var(zvar(k)));
  return z;
}

Output cmd_cluster(const Options& opt, const BraidWord& beta) {
  Morphism m = build_right_simplifying(beta, selected_ruling(opt, beta));
  ClusterSeed seed = cluster_seed(m);
  Output o;
  o.j = json{{"braid", braid_json(beta)},
             {"s_variables", scalars_json(seed.s_vars)},
             {"cluster_variables", scalars_json(seed.cluster_vars)},
             {"covers", seed.covers},
             {"polynomial", seed.is_polynomial()}};
  std::ostringstream text, csv;
  csv << "index,s,A\n";
  for (std::size_t t = 0; t < seed.cluster_vars.size(); ++t) {
    text << "A_" << t + 1 << " = " << seed.cluster_vars[t].to_string() << '\n';
    csv << t + 1 << ',' << csv_field(seed.s_vars[t].to_string()) << ',' << csv_field(seed.cluster_vars[t].to_string())
        << '\n';
  }
  o.text = text.str();
  o.csv = csv.str();
  return o;
}

Output cmd_svars(const Options& opt, const BraidWord& beta) {
  NormalRuling rho = selected_ruling(opt, beta);
  SRForm sr = a_to_sr(rho, symbolic_z(beta), true);
  std::vector<Scalar> s;
  std::vector<int> at;
  for (int k = 0; k < beta.length(); ++k) {
    if (rho.labels[static_cast<std::size_t>(k)] != Label::Switch) continue;
    s.push_back(sr.values[static_cast<std::size_t>(k)]);
    at.push_back(k + 1);
  }
  Output o;
  o.j = json{{"braid", braid_json(beta)}, {"ruling", rho.to_string()}, {"letters", at}, {"s_variables", scalars_json(s)}};
  std::ostringstream text, csv;
  csv << "index,letter,s\n";
  for (std::size_t t = 0; t < s.size(); ++t) {
    text << "s_" << t + 1 << " = " << s[t].to_string() << "   (letter " << at[t] << ")\n";
    csv << t + 1 << ',' << at[t] << ',' << csv_field(s[t].to_string()) << '\n';
  }
  o.text = text.str();
  o.csv = csv.str();
  return o;
}

Output cmd_fmap(const Options& opt, const BraidWord& beta) {
  Morphism m = build_right_simplifying(beta, selected_ruling(opt, beta));
  auto params = chart_parameters(m);
  auto f = f_map(m, params);
  std::vector<Scalar> coords;
  for (std::size_t k = 0; k < f.size(); ++k) coords.push_back(Scalar::var(Var{'c', static_cast<int>(k) + 1}));
  auto inv = f_map_inverse(m, coords);
  Output o;
  o.j = json{{"braid", braid_json(beta)},
             {"parameters", scalars_json(params)},
             {"f", scalars_json(f)},
             {"coordinates", scalars_json(coords)},
             {"f_inverse", scalars_json(inv)}};
  o.text = "f(" + join(params) + ") = (" + join(f) + ")\nf^-1(" + join(coords) + ") = (" + join(inv) + ")\n";
  return o;
}

Output cmd_count(const Options& opt, const BraidWord& beta) {
  const auto bf = brute_force_count(beta, opt.field, opt.budget);
  const auto rc = ruling_point_count(beta, opt.field);
  const auto dc = deodhar_point_count(beta, opt.field);
  Output o;
  o.j = json{{"braid", braid_json(beta)}, {"q", opt.field}, {"brute_force", bf}, {"by_rulings", rc}, {"by_deodhar", dc}};
  o.text = "q = " + std::to_string(opt.field) + "\nbrute force  " + std::to_string(bf) + "\nby rulings   " +
           std::to_string(rc) + "\nby Deodhar   " + std::to_string(dc) + "\n";
  o.csv = "q,brute_force,by_rulings,by_deodhar\n" + std::to_string(opt.field) + "," + std::to_string(bf) + "," +
          std::to_string(rc) + "," + std::to_string(dc) + "\n";
  return o;
}

Output cmd_verify(const Options& opt, const BraidWord& beta) {
  CountReport r = verify_decomposition(beta, opt.field, opt.budget);
  Output o;
  o.j = report_json(r);
  std::ostringstream text;
  text << "braid " << beta.to_string() << " over F_" << r.q << "\n";
  text << "brute force " << r.brute_force << ", by rulings " << r.by_rulings << ", by Deodhar " << r.by_deodhar << "\n";
  text << "ruling      points  expected\n";
  for (const auto& rho : enumerate_rulings(beta)) {
    auto it = r.piece_sizes.find(rho.to_string());
    text << rho.to_string() << std::string(rho.to_string().size() < 12 ? 12 - rho.to_string().size() : 1, ' ')
         << (it == r.piece_sizes.end() ? 0 : it->second) << "  " << piece_size(rho.departures(), rho.switches(), r.q)
         << '\n';
  }
  text << "partition " << (r.partition_ok ? "ok" : "FAILED") << '\n';
  if (r.witness) text << "witness: " << r.witness->reason << '\n';
  o.text = text.str();
  return o;
}

Output cmd_render(const Options& opt, const BraidWord& beta) {
  Output o;
  NormalRuling rho = selected_ruling(opt, beta);
  if (opt.kind == "ruling") {
    o.svg = render_ruling(rho);
  } else if (opt.kind == "weave") {
    o.svg = render_weave(build_right_simplifying(beta, rho));
  } else {
    throw UsageError("--kind must be weave or ruling");
  }
  return o;
}

// Randomized round-trip checks over F_7.
Output cmd_selftest(const Options& opt, const BraidWord&) {
  std::mt19937_64 rng(opt.seed);
  const std::uint32_t p = 7;
  const std::vector<std::pair<std::string, int>> braids{
      {"1,1,1", 2}, {"1,1,1,1", 2}, {"1,2,1", 3}, {"1,1,2,2,1,1,2,2", 3}, {"2,1,1,2,2,1,2", 3}, {"1,2,1,2,1,2,2,1,2", 3}};
  int checks = 0, failures = 0;
  std::ostringstream text;
  for (const auto& [word, n] : braids) {
    BraidWord beta = parse_braid(word, n);
    for (const auto& rho : enumerate_rulings(beta)) {
      for (int it = 0; it < 20; ++it) {
        std::vector<Scalar> a;
        for (int k = 0; k < beta.length(); ++k) a.push_back(Scalar::mod(static_cast<std::int64_t>(rng() % p), p));
        try {
          auto sr = a_to_sr(rho, a, it % 2 == 1);
          ++checks;
          if (sr_to_a(rho, sr.values, it % 2 == 1) != a) {
            ++failures;
            text << "round trip failed on " << word << " ruling " << rho.to_string() << '\n';
          }
        } catch (const DomainError&) {
          // a is not in the A-form domain of rho
        }
      }
    }
  }
  text << checks << " round trips, " << failures << " failures (seed " << opt.seed << ")\n";
  Output o;
  o.j = json{{"checks", checks}, {"failures", failures}, {"seed", opt.seed}};
  o.text = text.str();
  if (failures) throw DomainError(text.str());
  return o;
}

const std::vector<Command>& commands() {
  static const std::vector<Command> table{
      {"demazure", "Demazure product of the braid", {"json", "text"}, "text", true, cmd_demazure},
      {"rulings", "Normal rulings of the (-1)-closure", {"json", "text", "csv", "svg"}, "text", true, cmd_rulings},
      {"deodhar", "Distinguished sequences ending at w0", {"json", "text", "csv"}, "text", true, cmd_deodhar},
      {"weave", "Right inductive weave of a ruling", {"json", "text", "svg"}, "text", true, cmd_weave},
      {"cluster", "Cluster variables of the initial seed", {"json", "text", "csv"}, "text", true, cmd_cluster},
      {"svars", "s-variables from the framed SR-form", {"json", "text", "csv"}, "text", true, cmd_svars},
      {"fmap", "Chart to SR-form coordinate change", {"json", "text"}, "text", true, cmd_fmap},
      {"count", "F_q point counts", {"json", "text", "csv"}, "text", true, cmd_count},
      {"verify", "Check the ruling decomposition over F_q", {"json", "text"}, "json", true, cmd_verify},
      {"render", "SVG of a weave or ruling", {"svg"}, "svg", true, cmd_render},
      {"selftest", "", {"json", "text"}, "text", false, cmd_selftest},
  };
  return table;
}

void emit(const Output& o, const std::string& format, const Options& opt, std::ostream& out) {
  std::string body;
  if (format == "json") body = o.j.dump(2) + "\n";
  if (format == "text") body = o.text;
  if (format == "csv") body = o.csv;
  if (format == "svg") body = o.svg;
  if (opt.out.empty()) {
    out << body;
    return;
  }
  std::ofstream f(opt.out, std::ios::binary);
  if (!f) throw UsageError("cannot write " + opt.out);
  f << body;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Braid variety decompositions, cluster variables and point counts", "braidvar"};
  app.require_subcommand(1);
  app.fallthrough();
  std::optional<int> ruling_index;
  app.add_option("--braid", opt.braid, "Braid word, e.g. 1,1,2,2");
  app.add_option("--strands", opt.strands, "Strand count (default: max index + 1)")->check(CLI::NonNegativeNumber);
  app.add_option("--field", opt.field, "Prime q for point counts")->check(CLI::PositiveNumber);
  app.add_option("--ruling-index", ruling_index, "Ruling by enumeration index (default: maximal)");
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "csv", "text", "svg"}));
  app.add_option("--out", opt.out, "Write output to a file");
  app.add_option("--budget", opt.budget, "Work budget (points or search nodes)");
  app.add_option("--seed", opt.seed, "Seed for selftest");

  std::map<CLI::App*, const Command*> subs;
  for (const auto& c : commands()) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    if (c.help.empty()) sub->group("");
    if (c.name == "weave") sub->add_flag("--decompose", opt.decompose, "Run the cycle decomposability search");
    if (c.name == "render") sub->add_option("--kind", opt.kind, "weave or ruling")->check(CLI::IsMember({"weave", "ruling"}));
    subs[sub] = &c;
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  opt.ruling_index = ruling_index;

  const Command* cmd = nullptr;
  for (auto* s : app.get_subcommands()) cmd = subs[s];
  try {
    if (const char* env = std::getenv("BRAIDVAR_BUDGET")) {
      try {
        opt.budget = std::stoull(env);
      } catch (const std::exception&) {
        throw UsageError(std::string("BRAIDVAR_BUDGET is not a number: ") + env);
      }
    }
    const std::string format = opt.format.empty() ? cmd->default_format : opt.format;
    if (!cmd->formats.count(format)) throw UsageError(cmd->name + " does not support --format " + format);
    if (!is_prime(opt.field)) throw UsageError("--field must be prime");
    BraidWord beta;
    if (cmd->needs_braid) {
      if (opt.braid.empty()) throw UsageError("--braid is required");
      try {
        beta = parse_braid(opt.braid, opt.strands);
      } catch (const ParseError& e) {
        throw UsageError(e.what());
      }
    }
    Output o = cmd->body(opt, beta);
    emit(o, format, opt, out);
    if (cmd->name == "verify" && !o.j.at("partition_ok").get<bool>()) return kDomainError;
    return kOk;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const BudgetExceeded& e) {
    err << "budget exhausted: " << e.what() << '\n';
    return kBudgetExhausted;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace braidvar::cli

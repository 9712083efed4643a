#include "json_io.hpp"

#include "braidvar/errors.hpp"
#include "braidvar/rational.hpp"

namespace braidvar::cli {

namespace {

MoveKind move_kind_from_name(const std::string& s) {
  for (MoveKind k : {MoveKind::Distant, MoveKind::Hexavalent, MoveKind::Trivalent, MoveKind::Cup})
    if (move_kind_name(k) == s) return k;
  throw ParseError("unknown move kind: " + s);
}

}  // namespace

json braid_json(const BraidWord& b) { return json{{"strands", b.n}, {"letters", b.letters}}; }

BraidWord braid_from_json(const json& j) {
  return BraidWord(j.at("strands").get<int>(), j.at("letters").get<std::vector<int>>());
}

json ruling_json(const NormalRuling& r) {
  return json{{"braid", braid_json(r.beta)},
              {"labels", r.to_string()},
              {"switches", r.switches()},
              {"returns", r.returns()},
              {"departures", r.departures()}};
}

NormalRuling ruling_from_json(const json& j) {
  return parse_ruling(braid_from_json(j.at("braid")), j.at("labels").get<std::string>());
}

json sequence_json(const DistinguishedSequence& s) {
  json v = json::array();
  for (const auto& p : s.v) v.push_back(p.one_line());
  std::vector<int> cases;
  for (auto c : s.cases) cases.push_back(static_cast<int>(c));
  auto sh = shape(s);
  return json{{"permutations", v}, {"cases", cases}, {"t", sh.t}, {"c", sh.c}};
}

json morphism_json(const Morphism& m) {
  json layers = json::array();
  for (const auto& l : m.layers) layers.push_back(l.letters);
  json moves = json::array();
  for (const auto& mv : m.moves) moves.push_back(json{{"kind", move_kind_name(mv.kind)}, {"pos", mv.pos}});
  return json{{"strands", m.source().n}, {"layers", layers}, {"moves", moves}};
}

Morphism morphism_from_json(const json& j) {
  const int n = j.at("strands").get<int>();
  BraidWord source(n, j.at("layers").at(0).get<std::vector<int>>());
  std::vector<BraidMove> moves;
  for (const auto& mv : j.at("moves"))
    moves.push_back(BraidMove{move_kind_from_name(mv.at("kind").get<std::string>()), mv.at("pos").get<int>()});
  Morphism m = Morphism::from_moves(source, moves);
  for (std::size_t k = 0; k < m.layers.size(); ++k)
    if (m.layers[k].letters != j.at("layers").at(k).get<std::vector<int>>())
      throw ParseError("layer " + std::to_string(k + 1) + " does not match its moves");
  return m;
}

json report_json(const CountReport& r) {
  json j{{"braid", braid_json(r.beta)},
         {"q", r.q},
         {"brute_force", r.brute_force},
         {"by_rulings", r.by_rulings},
         {"by_deodhar", r.by_deodhar},
         {"partition_ok", r.partition_ok},
         {"piece_sizes", r.piece_sizes}};
  if (r.witness) j["witness"] = json{{"point", r.witness->point}, {"reason", r.witness->reason}};
  return j;
}

CountReport report_from_json(const json& j) {
  CountReport r;
  r.beta = braid_from_json(j.at("braid"));
  r.q = j.at("q").get<std::uint32_t>();
  r.brute_force = j.at("brute_force").get<std::uint64_t>();
  r.by_rulings = j.at("by_rulings").get<std::uint64_t>();
  r.by_deodhar = j.at("by_deodhar").get<std::uint64_t>();
  r.partition_ok = j.at("partition_ok").get<bool>();
  r.piece_sizes = j.at("piece_sizes").get<std::map<std::string, std::uint64_t>>();
  if (j.contains("witness"))
    r.witness = Witness{j["witness"].at("point").get<std::vector<std::uint32_t>>(),
                        j["witness"].at("reason").get<std::string>()};
  return r;
}

json scalars_json(const std::vector<Scalar>& v) {
  json a = json::array();
  for (const auto& s : v) a.push_back(s.to_string());
  return a;
}

std::vector<Scalar> scalars_from_json(const json& j) {
  std::vector<Scalar> out;
  for (const auto& s : j) out.emplace_back(parse_rational(s.get<std::string>()));
  return out;
}

}  // namespace braidvar::cli

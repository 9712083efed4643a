#include "braidvar/weave.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

#include "braidvar/errors.hpp"
#include "fp_points.hpp"

namespace braidvar {

// ---------------------------------------------------------------- Morphism

Morphism Morphism::identity(const BraidWord& b) { return Morphism{{b}, {}}; }

Morphism Morphism::from_moves(const BraidWord& source, const std::vector<BraidMove>& moves) {
  Morphism m{{source}, moves};
  for (const auto& mv : moves) m.layers.push_back(apply_move(m.layers.back(), mv));
  return m;
}

int Morphism::trivalent_count() const {
  return static_cast<int>(std::count_if(moves.begin(), moves.end(), [](const BraidMove& m) { return m.kind == MoveKind::Trivalent; }));
}

int Morphism::cup_count() const {
  return static_cast<int>(std::count_if(moves.begin(), moves.end(), [](const BraidMove& m) { return m.kind == MoveKind::Cup; }));
}

std::vector<int> Morphism::trivalent_indices() const {
  std::vector<int> out;
  for (std::size_t k = 0; k < moves.size(); ++k)
    if (moves[k].kind == MoveKind::Trivalent) out.push_back(static_cast<int>(k));
  return out;
}

bool Morphism::is_valid() const {
  if (layers.size() != moves.size() + 1) return false;
  for (std::size_t k = 0; k < moves.size(); ++k) {
    try {
      if (apply_move(layers[k], moves[k]) != layers[k + 1]) return false;
    } catch (const DomainError&) {
      return false;
    }
  }
  return true;
}

std::string Morphism::to_string() const {
  std::string s = "[" + layers.front().to_string() + "]";
  for (std::size_t k = 0; k < moves.size(); ++k)
    s += " -" + move_kind_name(moves[k].kind) + "@" + std::to_string(moves[k].pos) + "-> [" + layers[k + 1].to_string() + "]";
  return s;
}

// ------------------------------------------------------ unipotent pushing

namespace {

// X <- B_i(z) X, rows i and i+1.
void left_braid(SquareMatrix& X, int i, const Scalar& z) {
  const int n = X.size();
  for (int c = 1; c <= n; ++c) {
    Scalar a = X(i, c);
    Scalar b = X(i + 1, c);
    X(i, c) = b;
    X(i + 1, c) = b.is_zero() ? a : a + z * b;
  }
}

// X <- X B_i(w)^{-1}, with B(w)^{-1} = [[-w, 1], [1, 0]].
void right_braid_inverse(SquareMatrix& X, int i, const Scalar& w) {
  const int n = X.size();
  for (int r = 1; r <= n; ++r) {
    Scalar a = X(r, i);
    Scalar b = X(r, i + 1);
    X(r, i) = a.is_zero() ? b : b - w * a;
    X(r, i + 1) = a;
  }
}

bool is_identity(const SquareMatrix& V) {
  for (int r = 1; r <= V.size(); ++r)
    for (int c = 1; c <= V.size(); ++c) {
      if (r == c ? !V(r, c).is_one() : !V(r, c).is_zero()) return false;
    }
  return true;
}

}  // namespace

Scalar push_through_letter(SquareMatrix& V, int i, const Scalar& z) {
  if (is_identity(V)) return z;
  Scalar w = (V(i, i + 1) + z * V(i + 1, i + 1)) / V(i, i);
  left_braid(V, i, z);
  right_braid_inverse(V, i, w);
  return w;
}

Scalar pull_through_letter(SquareMatrix& V, int i, const Scalar& w) {
  if (is_identity(V)) return w;
  Scalar z = (w * V(i, i) - V(i, i + 1)) / V(i + 1, i + 1);
  left_braid(V, i, z);
  right_braid_inverse(V, i, w);
  return z;
}

// -------------------------------------------------------- value stepping

namespace {

struct ValueLayer {
  BraidWord word;
  std::vector<Scalar> z;
};

std::size_t ix(int pos) { return static_cast<std::size_t>(pos - 1); }

SquareMatrix trivalent_v(int n, int i, const Scalar& y) {
  SquareMatrix V = SquareMatrix::identity(n);
  V(i, i) = -y.inverse();
  V(i, i + 1) = Scalar(1L);
  V(i + 1, i + 1) = y;
  return V;
}

SquareMatrix cup_v(int n, int i, const Scalar& x) {
  SquareMatrix V = SquareMatrix::identity(n);
  V(i, i + 1) = x;
  return V;
}

// Forward step; `layer` is the 1-based index of the layer the move acts on.
// Returns the chart parameter consumed by a trivalent or cup move.
std::optional<Scalar> step_forward(ValueLayer& s, const BraidMove& mv, int layer, std::optional<DashedData>* dashed) {
  const int p = mv.pos;
  const int n = s.word.n;
  BraidWord next = apply_move(s.word, mv);
  auto& z = s.z;
  std::optional<Scalar> param;
  switch (mv.kind) {
    case MoveKind::Distant:
      std::swap(z[ix(p)], z[ix(p + 1)]);
      break;
    case MoveKind::Hexavalent: {
      bool up = hexavalent_is_up(s.word, p);
      Scalar z1 = z[ix(p)], z2 = z[ix(p + 1)], z3 = z[ix(p + 2)];
      z[ix(p)] = z3;
      z[ix(p + 1)] = up ? z2 - z1 * z3 : z2 + z1 * z3;
      z[ix(p + 2)] = z1;
      break;
    }
    case MoveKind::Trivalent: {
      const int i = s.word[p];
      Scalar x = z[ix(p)], y = z[ix(p + 1)];
      if (y.is_zero()) throw TrivalentNeedsUnit(layer, p);
      z[ix(p)] = x + y.inverse();
      z.erase(z.begin() + static_cast<std::ptrdiff_t>(p));
      SquareMatrix V = trivalent_v(n, i, y);
      for (int k = p + 1; k <= next.length(); ++k) z[ix(k)] = push_through_letter(V, next[k], z[ix(k)]);
      if (dashed) *dashed = DashedData{MoveKind::Trivalent, -y, -y.inverse(), y};
      param = y;
      break;
    }
    case MoveKind::Cup: {
      const int i = s.word[p];
      Scalar x = z[ix(p)], y = z[ix(p + 1)];
      if (!y.is_zero()) throw CupNeedsZero(layer, p);
      z.erase(z.begin() + static_cast<std::ptrdiff_t>(p - 1), z.begin() + static_cast<std::ptrdiff_t>(p + 1));
      SquareMatrix V = cup_v(n, i, x);
      for (int k = p; k <= next.length(); ++k) z[ix(k)] = push_through_letter(V, next[k], z[ix(k)]);
      if (dashed) *dashed = DashedData{MoveKind::Cup, x, Scalar(1L), Scalar(1L)};
      param = x;
      break;
    }
  }
  s.word = std::move(next);
  return param;
}

// Backward step: `after` holds the values of the layer produced by mv from
// `before`; returns the values of `before`.
std::vector<Scalar> step_backward(const BraidWord& before, const BraidWord& after, const std::vector<Scalar>& za,
                                  const BraidMove& mv, const Scalar* param, std::optional<DashedData>* dashed) {
  const int p = mv.pos;
  const int n = before.n;
  std::vector<Scalar> z = za;
  switch (mv.kind) {
    case MoveKind::Distant:
      std::swap(z[ix(p)], z[ix(p + 1)]);
      break;
    case MoveKind::Hexavalent: {
      bool up = hexavalent_is_up(before, p);
      Scalar a = za[ix(p)], b = za[ix(p + 1)], c = za[ix(p + 2)];
      z[ix(p)] = c;
      z[ix(p + 1)] = up ? b + c * a : b - c * a;
      z[ix(p + 2)] = a;
      break;
    }
    case MoveKind::Trivalent: {
      const Scalar& y = *param;
      if (y.is_zero()) throw DomainError("trivalent chart parameter must be invertible");
      const int i = before[p];
      SquareMatrix V = trivalent_v(n, i, y);
      std::vector<Scalar> out(z.begin(), z.begin() + static_cast<std::ptrdiff_t>(p - 1));
      out.push_back(za[ix(p)] - y.inverse());
      out.push_back(y);
      for (int k = p + 1; k <= after.length(); ++k) out.push_back(pull_through_letter(V, after[k], za[ix(k)]));
      z = std::move(out);
      if (dashed) *dashed = DashedData{MoveKind::Trivalent, -y, -y.inverse(), y};
      break;
    }
    case MoveKind::Cup: {
      const Scalar& x = *param;
      const int i = before[p];
      SquareMatrix V = cup_v(n, i, x);
      std::vector<Scalar> out(z.begin(), z.begin() + static_cast<std::ptrdiff_t>(p - 1));
      out.push_back(x);
      out.push_back(Scalar(0L));
      for (int k = p; k <= after.length(); ++k) out.push_back(pull_through_letter(V, after[k], za[ix(k)]));
      z = std::move(out);
      if (dashed) *dashed = DashedData{MoveKind::Cup, x, Scalar(1L), Scalar(1L)};
      break;
    }
  }
  return z;
}

using Decide = std::function<Label(int letter, const BraidWord& cur, int prefix)>;
using OnMove = std::function<void(const BraidWord& cur, const BraidMove& mv)>;

Morphism walk_right_inductive(const BraidWord& beta, const Decide& decide, const OnMove& on_move) {
  const int n = beta.n;
  std::vector<BraidMove> moves;
  BraidWord cur = beta;
  int p = 0;
  Permutation v = Permutation::identity(n);
  auto apply = [&](const BraidMove& mv) {
    if (on_move) on_move(cur, mv);
    moves.push_back(mv);
    cur = apply_move(cur, mv);
  };
  for (int j = 1; j <= beta.length(); ++j) {
    const int i = beta[j];
    if (!v.right_descent(i)) {
      ++p;
      v = v.times_s(i);
      continue;
    }
    BraidWord prefix(n, std::vector<int>(cur.letters.begin(), cur.letters.begin() + p));
    BraidWord target = *reduced_word_ending_with(v, i);
    for (const auto& mv : braid_move_path(prefix, target)) apply(mv);
    Label l = decide(j, cur, p);
    if (l == Label::Switch) {
      apply(BraidMove{MoveKind::Trivalent, p});
    } else if (l == Label::Departure) {
      apply(BraidMove{MoveKind::Cup, p});
      --p;
      v = v.times_s(i);
    } else {
      throw DomainError("letter " + std::to_string(j) + " is a descent and cannot be a return");
    }
  }
  if (v != Permutation::longest(n)) throw DomainError("walk does not end at w_0");
  for (const auto& mv : braid_move_path(cur, half_twist(n))) apply(mv);
  return Morphism::from_moves(beta, moves);
}

}  // namespace

Morphism build_right_simplifying(const BraidWord& beta, const NormalRuling& rho) {
  if (rho.beta != beta || !is_valid_ruling(rho)) throw DomainError("invalid ruling " + rho.to_string() + " for " + beta.to_string());
  return walk_right_inductive(
      beta, [&](int j, const BraidWord&, int) { return rho.labels[static_cast<std::size_t>(j - 1)]; }, nullptr);
}

MonodromyAssignment propagate_forward(const Morphism& m, const std::vector<Scalar>& top_z) {
  if (static_cast<int>(top_z.size()) != m.source().length()) throw DomainError("need one value per letter of the source");
  MonodromyAssignment out;
  ValueLayer s{m.source(), top_z};
  out.z.push_back(s.z);
  std::vector<Scalar> forward_params;
  for (std::size_t k = 0; k < m.moves.size(); ++k) {
    std::optional<DashedData> d;
    auto param = step_forward(s, m.moves[k], static_cast<int>(k) + 1, &d);
    if (param) forward_params.push_back(*param);
    out.dashed.push_back(d);
    out.z.push_back(s.z);
  }
  out.parameters.assign(forward_params.rbegin(), forward_params.rend());
  return out;
}

MonodromyAssignment chart_embed_full(const Morphism& m, const std::vector<Scalar>& params) {
  const int needed = m.trivalent_count() + m.cup_count();
  if (static_cast<int>(params.size()) != needed)
    throw DomainError("chart needs " + std::to_string(needed) + " parameters, got " + std::to_string(params.size()));
  MonodromyAssignment out;
  out.parameters = params;
  out.z.assign(m.layers.size(), {});
  out.dashed.assign(m.moves.size(), std::nullopt);
  out.z.back().assign(static_cast<std::size_t>(m.target().length()), Scalar(0L));
  std::size_t next_param = 0;
  for (std::size_t k = m.moves.size(); k-- > 0;) {
    const BraidMove& mv = m.moves[k];
    const Scalar* param = nullptr;
    if (mv.kind == MoveKind::Trivalent || mv.kind == MoveKind::Cup) param = &params[next_param++];
    out.z[k] = step_backward(m.layers[k], m.layers[k + 1], out.z[k + 1], mv, param, &out.dashed[k]);
  }
  return out;
}

std::vector<Scalar> chart_embed(const Morphism& m, const std::vector<Scalar>& params) {
  return chart_embed_full(m, params).z.front();
}

std::vector<Scalar> chart_parameters(const Morphism& m) {
  std::vector<Scalar> out;
  int y = 0, x = 0;
  for (std::size_t k = m.moves.size(); k-- > 0;) {
    if (m.moves[k].kind == MoveKind::Trivalent) out.push_back(Scalar::var(yvar(++y)));
    if (m.moves[k].kind == MoveKind::Cup) out.push_back(Scalar::var(xvar(++x)));
  }
  return out;
}

NormalRuling classify_point(const BraidWord& beta, const std::vector<Scalar>& z) {
  require_demazure_w0(beta);
  if (static_cast<int>(z.size()) != beta.length()) throw DomainError("need one value per letter");
  ValueLayer s{beta, z};
  NormalRuling rho{beta, std::vector<Label>(static_cast<std::size_t>(beta.length()), Label::Return)};
  int layer = 1;
  try {
    walk_right_inductive(
        beta,
        [&](int j, const BraidWord&, int p) {
          Label l = s.z[ix(p + 1)].is_zero() ? Label::Departure : Label::Switch;
          rho.labels[static_cast<std::size_t>(j - 1)] = l;
          return l;
        },
        [&](const BraidWord&, const BraidMove& mv) { step_forward(s, mv, layer++, nullptr); });
  } catch (const DomainError&) {
    throw DomainError("point is not in X(" + beta.to_string() + ")");
  }
  for (const auto& v : s.z)
    if (!v.is_zero()) throw DomainError("point is not in X(" + beta.to_string() + ")");
  return rho;
}

// ---------------------------------------------------------- Lusztig cycles

namespace {

std::vector<int> propagate_weights(const BraidWord& before, const std::vector<int>& w, const BraidMove& mv) {
  const int p = mv.pos;
  std::vector<int> out = w;
  auto at = [&w](int pos) { return w[ix(pos)]; };
  switch (mv.kind) {
    case MoveKind::Distant:
      std::swap(out[ix(p)], out[ix(p + 1)]);
      break;
    case MoveKind::Hexavalent: {
      int e1 = at(p), e2 = at(p + 1), e3 = at(p + 2);
      int mn = std::min(e1, e3);
      out[ix(p)] = e2 + e3 - mn;
      out[ix(p + 1)] = mn;
      out[ix(p + 2)] = e1 + e2 - mn;
      break;
    }
    case MoveKind::Trivalent:
      out[ix(p)] = std::min(at(p), at(p + 1));
      out.erase(out.begin() + static_cast<std::ptrdiff_t>(p));
      break;
    case MoveKind::Cup:
      out.erase(out.begin() + static_cast<std::ptrdiff_t>(p - 1), out.begin() + static_cast<std::ptrdiff_t>(p + 1));
      break;
  }
  (void)before;
  return out;
}

}  // namespace

std::vector<LusztigCycle> lusztig_cycles(const Morphism& m) {
  std::vector<LusztigCycle> out;
  for (int t : m.trivalent_indices()) {
    LusztigCycle c;
    c.origin = t;
    for (std::size_t k = 0; k < m.layers.size(); ++k) c.weights.emplace_back(static_cast<std::size_t>(m.layers[k].length()), 0);
    c.weights[static_cast<std::size_t>(t) + 1][ix(m.moves[static_cast<std::size_t>(t)].pos)] = 1;
    for (std::size_t k = static_cast<std::size_t>(t) + 1; k < m.moves.size(); ++k)
      c.weights[k + 1] = propagate_weights(m.layers[k], c.weights[k], m.moves[k]);
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<std::vector<int>> cover_exponents(const Morphism& m, const std::vector<LusztigCycle>& cycles) {
  const std::size_t T = cycles.size();
  std::vector<std::vector<int>> e(T, std::vector<int>(T, 0));
  for (std::size_t a = 0; a < T; ++a) {
    const int layer = cycles[a].origin;
    const int pos = m.moves[static_cast<std::size_t>(layer)].pos;
    for (std::size_t b = 0; b < T; ++b) e[a][b] = cycles[b].weights[static_cast<std::size_t>(layer)][ix(pos)];
  }
  return e;
}

// ----------------------------------------------------------------- Y-trees

int YTree::support_size() const {
  int s = 0;
  for (const auto& f : flags) s += static_cast<int>(f.size());
  return s;
}

namespace {

struct LocalOption {
  std::vector<int> in;   // offsets among the move's input letters
  std::vector<int> out;  // offsets among its output letters
};

int input_count(MoveKind k) { return k == MoveKind::Hexavalent ? 3 : 2; }
int output_count(MoveKind k) {
  switch (k) {
    case MoveKind::Distant: return 2;
    case MoveKind::Hexavalent: return 3;
    case MoveKind::Trivalent: return 1;
    case MoveKind::Cup: return 0;
  }
  return 0;
}

const std::vector<LocalOption>& local_options(MoveKind k) {
  static const std::vector<LocalOption> distant{{{}, {}}, {{0}, {1}}, {{1}, {0}}};
  static const std::vector<LocalOption> hexavalent{{{}, {}},      {{0}, {2}},     {{2}, {0}},
                                                   {{1}, {1}},    {{1}, {0, 2}},  {{0, 2}, {1}}};
  static const std::vector<LocalOption> trivalent{{{}, {}}, {{}, {0}}, {{0}, {}}, {{1}, {}}};
  static const std::vector<LocalOption> cup{{{}, {}}};
  switch (k) {
    case MoveKind::Distant: return distant;
    case MoveKind::Hexavalent: return hexavalent;
    case MoveKind::Trivalent: return trivalent;
    case MoveKind::Cup: return cup;
  }
  return cup;
}

// Splits flags of a layer into (untouched prefix, local offsets, untouched
// suffix) relative to a move.
void split_flags(const std::vector<int>& flags, const BraidMove& mv, std::vector<int>& before, std::vector<int>& local,
                 std::vector<int>& after) {
  const int width = input_count(mv.kind);
  for (int f : flags) {
    if (f < mv.pos) {
      before.push_back(f);
    } else if (f < mv.pos + width) {
      local.push_back(f - mv.pos);
    } else {
      after.push_back(f);
    }
  }
}

std::vector<std::vector<int>> next_flag_sets(const std::vector<int>& flags, const BraidMove& mv) {
  std::vector<int> before, local, after;
  split_flags(flags, mv, before, local, after);
  const int shift = output_count(mv.kind) - input_count(mv.kind);
  std::vector<std::vector<int>> out;
  for (const auto& opt : local_options(mv.kind)) {
    if (opt.in != local) continue;
    std::vector<int> next = before;
    for (int o : opt.out) next.push_back(mv.pos + o);
    for (int a : after) next.push_back(a + shift);
    out.push_back(next);
  }
  return out;
}

const LocalOption* matching_option(const std::vector<int>& in_flags, const std::vector<int>& out_flags, const BraidMove& mv) {
  std::vector<int> before, local, after;
  split_flags(in_flags, mv, before, local, after);
  const int shift = output_count(mv.kind) - input_count(mv.kind);
  for (const auto& opt : local_options(mv.kind)) {
    if (opt.in != local) continue;
    std::vector<int> next = before;
    for (int o : opt.out) next.push_back(mv.pos + o);
    for (int a : after) next.push_back(a + shift);
    if (next == out_flags) return &opt;
  }
  return nullptr;
}

// Union-find over occurrence and vertex nodes.
struct Dsu {
  std::vector<int> parent;
  int add() {
    parent.push_back(static_cast<int>(parent.size()));
    return parent.back();
  }
  int find(int a) { return parent[static_cast<std::size_t>(a)] == a ? a : parent[static_cast<std::size_t>(a)] = find(parent[static_cast<std::size_t>(a)]); }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<std::size_t>(a)] = b;
    return true;
  }
};

bool is_connected_tree(const Morphism& m, const YTree& y) {
  Dsu dsu;
  std::map<std::pair<int, int>, int> node;
  for (std::size_t k = 0; k < y.flags.size(); ++k)
    for (int f : y.flags[k]) node[{static_cast<int>(k), f}] = dsu.add();
  if (node.empty()) return false;
  for (std::size_t k = 0; k < m.moves.size(); ++k) {
    const BraidMove& mv = m.moves[k];
    std::vector<int> before, local, after;
    split_flags(y.flags[k], mv, before, local, after);
    const int shift = output_count(mv.kind) - input_count(mv.kind);
    auto link = [&](int a, int b) { return dsu.unite(a, b); };
    for (int f : before)
      if (!link(node.at({static_cast<int>(k), f}), node.at({static_cast<int>(k) + 1, f}))) return false;
    for (int f : after)
      if (!link(node.at({static_cast<int>(k), f}), node.at({static_cast<int>(k) + 1, f + shift}))) return false;
    std::vector<int> outs;
    for (int f : y.flags[k + 1])
      if (f >= mv.pos && f < mv.pos + output_count(mv.kind)) outs.push_back(f);
    if (local.empty() && outs.empty()) continue;
    int vtx = dsu.add();
    for (int o : local)
      if (!link(node.at({static_cast<int>(k), mv.pos + o}), vtx)) return false;
    for (int f : outs)
      if (!link(node.at({static_cast<int>(k) + 1, f}), vtx)) return false;
  }
  int root = dsu.find(node.begin()->second);
  for (const auto& [key, id] : node)
    if (dsu.find(id) != root) return false;
  return true;
}

}  // namespace

bool is_y_tree(const Morphism& m, const YTree& y) {
  if (y.flags.size() != m.layers.size()) return false;
  if (!y.flags.front().empty() || !y.flags.back().empty()) return false;
  for (std::size_t k = 0; k < y.flags.size(); ++k) {
    const auto& f = y.flags[k];
    if (!std::is_sorted(f.begin(), f.end()) || std::adjacent_find(f.begin(), f.end()) != f.end()) return false;
    for (int pos : f)
      if (pos < 1 || pos > m.layers[k].length()) return false;
  }
  for (std::size_t k = 0; k < m.moves.size(); ++k)
    if (!matching_option(y.flags[k], y.flags[k + 1], m.moves[k])) return false;
  return is_connected_tree(m, y);
}

std::vector<YTree> find_y_trees(const Morphism& m) {
  std::vector<YTree> out;
  YTree cur;
  cur.flags.push_back({});
  std::function<void(std::size_t)> dfs = [&](std::size_t k) {
    if (k == m.moves.size()) {
      if (cur.flags.back().empty() && cur.support_size() > 0 && is_connected_tree(m, cur)) out.push_back(cur);
      return;
    }
    for (auto& next : next_flag_sets(cur.flags[k], m.moves[k])) {
      cur.flags.push_back(next);
      dfs(k + 1);
      cur.flags.pop_back();
    }
  };
  dfs(0);
  return out;
}

Morphism delete_cycle(const Morphism& m, const YTree& y) {
  if (!is_y_tree(m, y)) throw DomainError("not a Y-tree of the morphism");
  std::vector<BraidMove> moves;
  for (std::size_t k = 0; k < m.moves.size(); ++k) {
    const BraidMove& mv = m.moves[k];
    const LocalOption* opt = matching_option(y.flags[k], y.flags[k + 1], mv);
    const auto& fl = y.flags[k];
    const int shift = static_cast<int>(std::count_if(fl.begin(), fl.end(), [&](int f) { return f < mv.pos; }));
    const int np = mv.pos - shift;
    const bool quiet = opt->in.empty() && opt->out.empty();
    if (quiet) {
      moves.push_back(BraidMove{mv.kind, np});
      continue;
    }
    switch (mv.kind) {
      case MoveKind::Distant:
        break;  // a flagged strand passes through: identity
      case MoveKind::Hexavalent:
        if (opt->in == std::vector<int>{1} && opt->out == std::vector<int>{0, 2}) {
          moves.push_back(BraidMove{MoveKind::Trivalent, np});
        } else if ((opt->in == std::vector<int>{0} && opt->out == std::vector<int>{2}) ||
                   (opt->in == std::vector<int>{2} && opt->out == std::vector<int>{0})) {
          break;
        } else {
          throw DomainError("deleting this Y-tree at a hexavalent move is not a simplifying move");
        }
        break;
      case MoveKind::Trivalent:
        if (opt->out == std::vector<int>{0}) moves.push_back(BraidMove{MoveKind::Cup, np});
        break;
      case MoveKind::Cup:
        break;
    }
  }
  Morphism out = Morphism::from_moves(m.source(), moves);
  if (out.target() != m.target()) throw DomainError("cycle deletion changed the target braid");
  return out;
}

// ------------------------------------------------------ right inductivity

std::optional<NormalRuling> right_inductive_ruling(const Morphism& m) {
  const BraidWord& beta = m.source();
  const int r = beta.length();
  // Letter ids: 1..r for source letters, negative for produced letters.
  std::vector<int> ids(static_cast<std::size_t>(r));
  std::iota(ids.begin(), ids.end(), 1);
  int fresh = 0;
  int last_consumed = 0;
  NormalRuling rho{beta, std::vector<Label>(static_cast<std::size_t>(r), Label::Return)};
  // Position of the next merge's right input (as an id), for each move.
  std::vector<int> next_merge_id(m.moves.size(), 0);
  {
    // Simulate ids first to learn right-input ids of merges.
    std::vector<int> sim = ids;
    int f = 0;
    std::vector<int> merge_id(m.moves.size(), 0);
    for (std::size_t k = 0; k < m.moves.size(); ++k) {
      const BraidMove& mv = m.moves[k];
      const int p = mv.pos;
      switch (mv.kind) {
        case MoveKind::Distant: std::swap(sim[ix(p)], sim[ix(p + 1)]); break;
        case MoveKind::Hexavalent:
          for (int o = 0; o < 3; ++o) sim[ix(p + o)] = --f;
          break;
        case MoveKind::Trivalent:
          merge_id[k] = sim[ix(p + 1)];
          sim[ix(p)] = --f;
          sim.erase(sim.begin() + static_cast<std::ptrdiff_t>(p));
          break;
        case MoveKind::Cup:
          merge_id[k] = sim[ix(p + 1)];
          sim.erase(sim.begin() + static_cast<std::ptrdiff_t>(p - 1), sim.begin() + static_cast<std::ptrdiff_t>(p + 1));
          break;
      }
    }
    int upcoming = 0;
    for (std::size_t k = m.moves.size(); k-- > 0;) {
      next_merge_id[k] = upcoming;
      if (merge_id[k] != 0) upcoming = merge_id[k];
    }
  }
  for (std::size_t k = 0; k < m.moves.size(); ++k) {
    const BraidMove& mv = m.moves[k];
    const BraidWord& w = m.layers[k];
    const int p = mv.pos;
    switch (mv.kind) {
      case MoveKind::Distant:
      case MoveKind::Hexavalent: {
        const int width = mv.kind == MoveKind::Distant ? 2 : 3;
        const int target = next_merge_id[k];
        if (target != 0) {
          auto it = std::find(ids.begin(), ids.end(), target);
          if (it == ids.end()) return std::nullopt;
          const int tpos = static_cast<int>(it - ids.begin()) + 1;
          if (p + width - 1 >= tpos) return std::nullopt;
        }
        if (mv.kind == MoveKind::Distant) {
          std::swap(ids[ix(p)], ids[ix(p + 1)]);
        } else {
          for (int o = 0; o < 3; ++o) ids[ix(p + o)] = --fresh;
        }
        break;
      }
      case MoveKind::Trivalent:
      case MoveKind::Cup: {
        const int right = ids[ix(p + 1)];
        if (right <= last_consumed) return std::nullopt;
        // Everything from the right input on is the untouched source suffix.
        for (int q = p + 1; q <= w.length(); ++q)
          if (ids[ix(q)] != right + (q - p - 1)) return std::nullopt;
        if (ids.back() != r) return std::nullopt;
        BraidWord prefix(w.n, std::vector<int>(w.letters.begin(), w.letters.begin() + p));
        if (!is_reduced(prefix)) return std::nullopt;
        last_consumed = right;
        rho.labels[static_cast<std::size_t>(right - 1)] = mv.kind == MoveKind::Trivalent ? Label::Switch : Label::Departure;
        if (mv.kind == MoveKind::Trivalent) {
          ids[ix(p)] = --fresh;
          ids.erase(ids.begin() + static_cast<std::ptrdiff_t>(p));
        } else {
          ids.erase(ids.begin() + static_cast<std::ptrdiff_t>(p - 1), ids.begin() + static_cast<std::ptrdiff_t>(p + 1));
        }
        break;
      }
    }
  }
  if (!is_valid_ruling(rho)) return std::nullopt;
  return rho;
}

// ------------------------------------------------------- decomposability

std::string decomposability_name(Decomposability d) {
  switch (d) {
    case Decomposability::Decomposable: return "decomposable";
    case Decomposability::NotFound: return "not-found";
    case Decomposability::Unknown: return "unknown";
  }
  return "?";
}

std::vector<std::vector<std::uint32_t>> chart_image(const Morphism& m, std::uint32_t q) {
  if (!is_prime(q)) throw DomainError(std::to_string(q) + " is not prime");
  // Parameter kinds in backward execution order.
  std::vector<bool> is_unit;
  for (std::size_t k = m.moves.size(); k-- > 0;) {
    if (m.moves[k].kind == MoveKind::Trivalent) is_unit.push_back(true);
    if (m.moves[k].kind == MoveKind::Cup) is_unit.push_back(false);
  }
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> digits(is_unit.size(), 0);
  for (std::size_t a = 0; a < digits.size(); ++a) digits[a] = is_unit[a] ? 1 : 0;
  while (true) {
    std::vector<Scalar> params;
    for (auto d : digits) params.push_back(Scalar::mod(d, q));
    auto z = chart_embed(m, params);
    std::vector<std::uint32_t> pt;
    for (const auto& s : z) pt.push_back(residue_of(s, q));
    out.push_back(std::move(pt));
    std::size_t a = 0;
    for (; a < digits.size(); ++a) {
      if (++digits[a] < q) break;
      digits[a] = is_unit[a] ? 1 : 0;
    }
    if (a == digits.size()) break;
  }
  return out;
}

DecompositionSearch is_cycle_decomposable(const BraidWord& beta, std::uint64_t budget, std::uint32_t q) {
  DecompositionSearch out;
  out.q = q;
  NormalRuling top = maximal_ruling(beta);
  DeletionNode root;
  root.morphism = build_right_simplifying(beta, top);
  root.right_inductive = true;
  root.ruling = top;
  out.nodes.push_back(root);
  std::set<std::string> seen{root.morphism.to_string()};
  bool exhausted = false;
  for (std::size_t head = 0; head < out.nodes.size() && !exhausted; ++head) {
    auto ys = find_y_trees(out.nodes[head].morphism);
    if (head == 0) out.root_y_trees = static_cast<int>(ys.size());
    for (std::size_t a = 0; a < ys.size(); ++a) {
      if (++out.explored > budget) {
        exhausted = true;
        break;
      }
      DeletionNode child;
      child.parent = static_cast<int>(head);
      child.y_tree = static_cast<int>(a);
      try {
        child.morphism = delete_cycle(out.nodes[head].morphism, ys[a]);
      } catch (const DomainError&) {
        continue;
      }
      if (!seen.insert(child.morphism.to_string()).second) continue;
      child.ruling = right_inductive_ruling(child.morphism);
      child.right_inductive = child.ruling.has_value();
      if (!child.right_inductive) out.non_right_inductive_reached = true;
      out.nodes.push_back(std::move(child));
    }
  }
  if (exhausted) {
    out.status = Decomposability::Unknown;
    return out;
  }

  // Exact cover of X(beta)(F_q) by chart images.
  std::unordered_map<std::uint64_t, int> index;
  detail::enumerate_variety_points(beta, q, budget * 1000, [&](const detail::Point& z) {
    index.emplace(detail::encode_point(z, q), static_cast<int>(index.size()));
  });
  const int total = static_cast<int>(index.size());
  std::vector<std::vector<int>> images;
  for (const auto& node : out.nodes) {
    std::vector<int> img;
    for (const auto& pt : chart_image(node.morphism, q)) {
      auto it = index.find(detail::encode_point(pt, q));
      if (it == index.end()) throw DomainError("chart point outside X(beta): internal inconsistency");
      img.push_back(it->second);
    }
    std::sort(img.begin(), img.end());
    if (std::adjacent_find(img.begin(), img.end()) != img.end()) throw DomainError("chart is not injective over F_q");
    images.push_back(std::move(img));
  }
  std::vector<int> owner(static_cast<std::size_t>(total), -1);
  std::vector<int> chosen;
  std::uint64_t steps = 0;
  std::function<bool(int)> cover = [&](int covered) -> bool {
    if (++steps > budget) throw BudgetExceeded("exact cover search");
    if (covered == total) return true;
    int first = static_cast<int>(std::find(owner.begin(), owner.end(), -1) - owner.begin());
    if (chosen.empty()) {
      // A decomposing tuple starts at the root morphism.
      if (!std::binary_search(images[0].begin(), images[0].end(), first)) first = images[0].front();
    }
    for (std::size_t c = 0; c < images.size(); ++c) {
      if (chosen.empty() && c != 0) break;
      if (std::find(chosen.begin(), chosen.end(), static_cast<int>(c)) != chosen.end()) continue;
      const auto& img = images[c];
      if (!std::binary_search(img.begin(), img.end(), first)) continue;
      bool free = std::all_of(img.begin(), img.end(), [&](int pt) { return owner[static_cast<std::size_t>(pt)] == -1; });
      if (!free) continue;
      for (int pt : img) owner[static_cast<std::size_t>(pt)] = static_cast<int>(c);
      chosen.push_back(static_cast<int>(c));
      if (cover(covered + static_cast<int>(img.size()))) return true;
      chosen.pop_back();
      for (int pt : img) owner[static_cast<std::size_t>(pt)] = -1;
    }
    return false;
  };
  try {
    if (cover(0)) {
      out.status = Decomposability::Decomposable;
      out.decomposing = chosen;
      std::sort(out.decomposing.begin(), out.decomposing.end());
    } else {
      out.status = Decomposability::NotFound;
    }
  } catch (const BudgetExceeded&) {
    out.status = Decomposability::Unknown;
  }
  return out;
}

}  // namespace braidvar

#include "braidvar/mcs.hpp"

#include <algorithm>
#include <sstream>

#include "braidvar/errors.hpp"

namespace braidvar {

namespace {

int swap_strand(int j, int i) {
  if (j == i) return i + 1;
  if (j == i + 1) return i;
  return j;
}

bool is_decoration(const Atom& a) { return std::holds_alternative<Handleslide>(a) || std::holds_alternative<MarkedPoint>(a); }

bool blocks(const Atom& a, int i) {
  const auto* h = std::get_if<Handleslide>(&a);
  return h && h->i == i && h->j == i + 1;
}

}  // namespace

// ---------------------------------------------------------------- MCSState

BraidWord MCSState::braid() const {
  std::vector<int> gens;
  for (const auto& a : atoms)
    if (const auto* c = std::get_if<Crossing>(&a)) gens.push_back(c->i);
  return BraidWord(n, gens);
}

bool MCSState::is_valid() const {
  for (const auto& a : atoms) {
    if (const auto* c = std::get_if<Crossing>(&a)) {
      if (c->i < 1 || c->i >= n) return false;
    } else if (const auto* h = std::get_if<Handleslide>(&a)) {
      if (h->i < 1 || h->i >= h->j || h->j > n) return false;
    } else if (const auto* m = std::get_if<MarkedPoint>(&a)) {
      if (m->i < 1 || m->i > n || m->t.is_zero()) return false;
    } else {
      return false;
    }
  }
  return true;
}

std::string MCSState::dump() const {
  std::ostringstream os;
  for (const auto& a : atoms) {
    if (const auto* c = std::get_if<Crossing>(&a)) {
      os << "X " << c->i << "\n";
    } else if (const auto* h = std::get_if<Handleslide>(&a)) {
      os << "H " << h->i << " " << h->j << " " << h->a.to_string() << "\n";
    } else if (const auto* m = std::get_if<MarkedPoint>(&a)) {
      os << "M " << m->i << " " << m->t.to_string() << "\n";
    }
  }
  return os.str();
}

MCSState a_form(const BraidWord& beta, const std::vector<Scalar>& values, bool framed) {
  if (static_cast<int>(values.size()) != beta.length()) throw DomainError("need one handleslide value per crossing");
  MCSState s{beta.n, {}};
  for (int k = 1; k <= beta.length(); ++k) {
    const int i = beta[k];
    s.atoms.emplace_back(Handleslide{i, i + 1, values[static_cast<std::size_t>(k - 1)]});
    s.atoms.emplace_back(Crossing{i});
    if (framed) s.atoms.emplace_back(MarkedPoint{i, Scalar(-1L)});
  }
  return s;
}

SquareMatrix mcs_monodromy(const MCSState& s) { return compose(s.atoms, s.n); }

// ------------------------------------------------------------- local rules

const std::vector<std::string>& rule_names() {
  static const std::vector<std::string> names{"merge",           "chain",           "cochain",
                                              "commute",         "slide-past-point", "point-past-slide",
                                              "points",          "slide-past-crossing", "point-past-crossing"};
  return names;
}

std::optional<RuleApplication> swap_rule(const Atom& left, const Atom& right) {
  const auto* hl = std::get_if<Handleslide>(&left);
  const auto* ml = std::get_if<MarkedPoint>(&left);
  const auto* hr = std::get_if<Handleslide>(&right);
  const auto* mr = std::get_if<MarkedPoint>(&right);
  const auto* xr = std::get_if<Crossing>(&right);
  if (hl && hr) {
    const int a = hl->i, b = hl->j, c = hr->i, d = hr->j;
    if (a == c && b == d) return RuleApplication{"merge", {Handleslide{a, b, hl->a + hr->a}}};
    if (b == c) return RuleApplication{"chain", {*hr, *hl, Handleslide{a, d, -(hl->a * hr->a)}}};
    if (d == a) return RuleApplication{"cochain", {*hr, *hl, Handleslide{c, b, hl->a * hr->a}}};
    return RuleApplication{"commute", {*hr, *hl}};
  }
  if (hl && mr) {
    Scalar x = hl->a;
    if (mr->i == hl->i) x = x * mr->t;
    if (mr->i == hl->j) x = x / mr->t;
    return RuleApplication{"slide-past-point", {*mr, Handleslide{hl->i, hl->j, x}}};
  }
  if (ml && hr) {
    Scalar x = hr->a;
    if (ml->i == hr->i) x = x / ml->t;
    if (ml->i == hr->j) x = x * ml->t;
    return RuleApplication{"point-past-slide", {Handleslide{hr->i, hr->j, x}, *ml}};
  }
  if (ml && mr) {
    if (ml->i == mr->i) return RuleApplication{"points", {MarkedPoint{ml->i, ml->t * mr->t}}};
    return RuleApplication{"points", {*mr, *ml}};
  }
  if (hl && xr) {
    if (blocks(left, xr->i)) return std::nullopt;
    return RuleApplication{"slide-past-crossing", {*xr, Handleslide{swap_strand(hl->i, xr->i), swap_strand(hl->j, xr->i), hl->a}}};
  }
  if (ml && xr) return RuleApplication{"point-past-crossing", {*xr, MarkedPoint{swap_strand(ml->i, xr->i), ml->t}}};
  return std::nullopt;
}

namespace {

// Moves the handleslide `x` (between the crossing strands of sigma_i) left
// through `rest`, returning the images of the passed atoms in `rest`.
void pull_block_left(Handleslide& x, std::vector<Atom>& rest) {
  std::vector<Atom> out;
  // Walk rest from right to left; atoms already passed sit in `out`.
  for (std::size_t k = rest.size(); k-- > 0;) {
    auto app = swap_rule(rest[k], x);
    if (!app) throw DomainError("no local rule moves this decoration");
    std::vector<Atom>& rep = app->replacement;
    if (app->rule == "merge") {
      x = std::get<Handleslide>(rep.front());
      continue;
    }
    x = std::get<Handleslide>(rep.front());
    out.insert(out.begin(), rep.begin() + 1, rep.end());
  }
  rest = std::move(out);
}

// Rewrites the decorations `pending`, sitting immediately left of crossing
// sigma_i, as [block] + rest with block the only handleslide between the
// crossing strands. Returns the block (value 0 if there was none).
Handleslide gather_block(int i, const std::vector<Atom>& pending, std::vector<Atom>& rest) {
  Handleslide block{i, i + 1, Scalar(0L)};
  rest.clear();
  for (const auto& a : pending) {
    if (blocks(a, i)) {
      Handleslide x = std::get<Handleslide>(a);
      pull_block_left(x, rest);
      block.a = block.a + x.a;
    } else {
      rest.push_back(a);
    }
  }
  return block;
}

std::vector<Atom> through_crossing(const std::vector<Atom>& rest, int i) {
  std::vector<Atom> out;
  for (const auto& a : rest) {
    auto app = swap_rule(a, Crossing{i});
    if (!app) throw DomainError("decoration cannot pass the crossing");
    out.push_back(app->replacement.back());
  }
  return out;
}

// Moves every decoration in `pending` right past `fixed` (a marked point).
std::vector<Atom> through_point(const std::vector<Atom>& pending, const MarkedPoint& fixed) {
  std::vector<Atom> out;
  for (const auto& a : pending) {
    auto app = swap_rule(a, fixed);
    if (!app) throw DomainError("decoration cannot pass the marked point");
    out.push_back(app->replacement.back());
  }
  return out;
}

// Canonical word for a product of handleslides: columns 2..n left to right.
std::vector<Atom> canonical_handleslides(const std::vector<Atom>& pending, int n) {
  if (pending.empty()) return {};
  SquareMatrix U = compose(pending, n);
  if (!U.is_unipotent_upper()) throw DomainError("pending handleslides are not unipotent");
  std::vector<Atom> out;
  for (int b = 2; b <= n; ++b)
    for (int a = 1; a < b; ++a)
      if (!U(a, b).is_zero()) out.emplace_back(Handleslide{a, b, U(a, b)});
  return out;
}

enum class SweepMode { FromA, FromSR };

struct SweepResult {
  std::vector<Scalar> a;
  std::vector<Scalar> sr;
  MCSState state;
};

SweepResult sweep(int n, const std::vector<int>& letters, const std::vector<Label>& labels, const std::vector<Scalar>& given,
                  SweepMode mode, bool framed) {
  SweepResult res;
  res.state.n = n;
  std::vector<Atom> pending;
  for (std::size_t k = 0; k < letters.size(); ++k) {
    const int i = letters[k];
    std::vector<Atom> rest;
    Handleslide block = gather_block(i, pending, rest);
    Scalar a, w;
    if (mode == SweepMode::FromA) {
      a = given[k];
      w = block.a + a;
    } else {
      w = given[k];
      a = w - block.a;
    }
    // Redo with the A-mark appended so that the rest reflects the full block.
    std::vector<Atom> with_mark = pending;
    with_mark.emplace_back(Handleslide{i, i + 1, a});
    block = gather_block(i, with_mark, rest);
    res.a.push_back(a);
    res.sr.push_back(w);
    rest = through_crossing(rest, i);
    const Label l = labels[k];
    res.state.atoms.emplace_back(Handleslide{i, i + 1, w});
    res.state.atoms.emplace_back(Crossing{i});
    if (l == Label::Switch) {
      if (w.is_zero()) throw DomainError("switch at letter " + std::to_string(k + 1) + " meets a zero handleslide");
      res.state.atoms.emplace_back(Handleslide{i, i + 1, -w.inverse()});
      rest.insert(rest.begin(), Handleslide{i, i + 1, w.inverse()});
    } else if (l == Label::Departure) {
      if (!w.is_zero()) throw DomainError("departure at letter " + std::to_string(k + 1) + " meets a nonzero handleslide");
    }
    if (framed) {
      MarkedPoint mp{i, Scalar(-1L)};
      rest = through_point(rest, mp);
      res.state.atoms.emplace_back(mp);
    }
    pending = canonical_handleslides(rest, n);
  }
  return res;
}

std::vector<Label> require_labels(const NormalRuling& rho, std::size_t count) {
  if (!is_valid_ruling(rho)) throw DomainError("invalid ruling " + rho.to_string());
  if (rho.labels.size() != count) throw DomainError("need one value per letter");
  return rho.labels;
}

}  // namespace

MCSState push_right(const MCSState& s, std::size_t upto, bool drop_at_end) {
  if (!s.is_valid()) throw DomainError("invalid MCS state");
  upto = std::min(upto, s.atoms.size());
  MCSState out{s.n, {}};
  std::vector<Atom> pending;
  for (std::size_t k = 0; k < upto; ++k) {
    const Atom& a = s.atoms[k];
    if (is_decoration(a)) {
      pending.push_back(a);
      continue;
    }
    const int i = std::get<Crossing>(a).i;
    std::vector<Atom> rest;
    const bool has_block = std::any_of(pending.begin(), pending.end(), [i](const Atom& p) { return blocks(p, i); });
    Handleslide block = gather_block(i, pending, rest);
    if (has_block) out.atoms.emplace_back(block);
    out.atoms.push_back(a);
    pending = through_crossing(rest, i);
  }
  const bool at_end = upto == s.atoms.size();
  if (!(drop_at_end && at_end)) out.atoms.insert(out.atoms.end(), pending.begin(), pending.end());
  out.atoms.insert(out.atoms.end(), s.atoms.begin() + static_cast<std::ptrdiff_t>(upto), s.atoms.end());
  return out;
}

Scalar SRForm::switch_inverse(int letter) const {
  if (ruling.labels.at(static_cast<std::size_t>(letter - 1)) != Label::Switch) throw DomainError("letter is not a switch");
  return -values[static_cast<std::size_t>(letter - 1)].inverse();
}

SRForm a_to_sr(const NormalRuling& rho, const std::vector<Scalar>& a_values, bool framed) {
  auto labels = require_labels(rho, a_values.size());
  auto res = sweep(rho.beta.n, rho.beta.letters, labels, a_values, SweepMode::FromA, framed);
  return SRForm{rho, res.sr, res.state};
}

std::vector<Scalar> sr_to_a(const NormalRuling& rho, const std::vector<Scalar>& sr_values, bool framed) {
  auto labels = require_labels(rho, sr_values.size());
  for (std::size_t k = 0; k < labels.size(); ++k)
    if (labels[k] == Label::Departure && !sr_values[k].is_zero()) throw DomainError("SR value at a departure must be 0");
  return sweep(rho.beta.n, rho.beta.letters, labels, sr_values, SweepMode::FromSR, framed).a;
}

// ------------------------------------------------------------------- f-map

namespace {

struct FMapSetup {
  NormalRuling rho;
  int prefix = 0;
};

FMapSetup fmap_setup(const Morphism& m) {
  auto rho = right_inductive_ruling(m);
  if (!rho) throw DomainError("morphism is not right inductive");
  const BraidWord& beta = m.source();
  const int prefix = binomial2(beta.n);
  if (beta.length() < prefix) throw DomainError("braid is shorter than the half twist");
  BraidWord head(beta.n, std::vector<int>(beta.letters.begin(), beta.letters.begin() + prefix));
  if (word_permutation(head) != Permutation::longest(beta.n) || !is_reduced(head))
    throw DomainError("f-map needs a braid starting with a reduced word of w_0");
  return {*rho, prefix};
}

// Lower unitriangular L with A = L U, U upper triangular.
SquareMatrix lower_lu_factor(const SquareMatrix& A) {
  const int n = A.size();
  SquareMatrix L = SquareMatrix::identity(n);
  SquareMatrix U = A;
  for (int c = 1; c <= n; ++c) {
    if (U(c, c).is_zero()) throw DomainError("point is outside the chart of the f-map (vanishing leading minor)");
    for (int r = c + 1; r <= n; ++r) {
      Scalar f = U(r, c) / U(c, c);
      if (f.is_zero()) continue;
      L(r, c) = f;
      for (int k = c; k <= n; ++k) U(r, k) = U(r, k) - f * U(c, k);
    }
  }
  return L;
}

// Solves B_{d_m}(z_m) ... B_{d_1}(z_1) = G for a reduced word d.
std::vector<Scalar> peel_reduced_word(const std::vector<int>& d, SquareMatrix G) {
  const int n = G.size();
  const std::size_t m = d.size();
  std::vector<Scalar> z(m);
  for (std::size_t k = m; k-- > 0;) {
    const int i = d[k];
    // P' = P_{d_{k-1}} ... P_{d_1}; its inverse is its transpose.
    SquareMatrix Pinv = SquareMatrix::identity(n);
    for (std::size_t j = 0; j < k; ++j) Pinv = Pinv * permutation_matrix(d[j], n);
    // H(z) = B_i(z)^{-1} G P'^{-1} = H0 + z H1.
    SquareMatrix Binv0 = SquareMatrix::identity(n), Binv1(n);
    Binv0(i, i) = Scalar(0L);
    Binv0(i, i + 1) = Scalar(1L);
    Binv0(i + 1, i) = Scalar(1L);
    Binv0(i + 1, i + 1) = Scalar(0L);
    Binv1(i, i) = Scalar(-1L);
    SquareMatrix H0 = Binv0 * G * Pinv;
    SquareMatrix H1 = Binv1 * G * Pinv;
    std::optional<Scalar> sol;
    for (int r = 1; r <= n && !sol; ++r)
      for (int c = r + 1; c <= n && !sol; ++c)
        if (!H1(r, c).is_zero()) sol = -H0(r, c) / H1(r, c);
    if (!sol) throw DomainError("half-twist prefix is not determined by the remaining letters");
    z[k] = *sol;
    SquareMatrix H = Binv0 * G;
    SquareMatrix H1G = Binv1 * G;
    for (int r = 1; r <= n; ++r)
      for (int c = 1; c <= n; ++c) H(r, c) = H(r, c) + *sol * H1G(r, c);
    SquareMatrix check = H * Pinv;
    for (int r = 1; r <= n; ++r) {
      if (!check(r, r).is_one()) throw DomainError("half-twist prefix has no solution");
      for (int c = r + 1; c <= n; ++c)
        if (!check(r, c).is_zero()) throw DomainError("half-twist prefix has no solution");
    }
    G = H;
  }
  return z;
}

}  // namespace

std::vector<Scalar> f_map(const Morphism& m, const std::vector<Scalar>& params) {
  FMapSetup st = fmap_setup(m);
  auto z = chart_embed(m, params);
  auto sr = a_to_sr(st.rho, z);
  std::vector<Scalar> out;
  for (std::size_t k = static_cast<std::size_t>(st.prefix); k < sr.values.size(); ++k)
    if (st.rho.labels[k] != Label::Departure) out.push_back(sr.values[k]);
  return out;
}

std::vector<Scalar> f_map_inverse(const Morphism& m, const std::vector<Scalar>& coords) {
  FMapSetup st = fmap_setup(m);
  const BraidWord& beta = m.source();
  const std::size_t r = static_cast<std::size_t>(beta.length());
  const std::size_t pre = static_cast<std::size_t>(st.prefix);
  std::vector<int> tail_letters(beta.letters.begin() + st.prefix, beta.letters.end());
  std::vector<Label> tail_labels(st.rho.labels.begin() + st.prefix, st.rho.labels.end());
  std::vector<Scalar> tail_sr;
  std::size_t next = 0;
  for (std::size_t k = pre; k < r; ++k) {
    if (st.rho.labels[k] == Label::Departure) {
      tail_sr.emplace_back(0L);
    } else {
      if (next >= coords.size()) throw DomainError("too few f-map coordinates");
      tail_sr.push_back(coords[next++]);
    }
  }
  if (next != coords.size()) throw DomainError("too many f-map coordinates");
  // Prefix letters are returns that leave nothing pending, so the tail sweep
  // starts from an empty region.
  auto tail = sweep(beta.n, tail_letters, tail_labels, tail_sr, SweepMode::FromSR, false);
  SquareMatrix M = compose_letters(tail_letters, tail.a, beta.n);
  SquareMatrix L = lower_lu_factor(M.inverse());
  SquareMatrix G = L * permutation_matrix_of(Permutation::longest(beta.n).one_line());
  std::vector<int> head(beta.letters.begin(), beta.letters.begin() + st.prefix);
  std::vector<Scalar> z = peel_reduced_word(head, G);
  z.insert(z.end(), tail.a.begin(), tail.a.end());
  return propagate_forward(m, z).parameters;
}

}  // namespace braidvar

#include "braidvar/cluster.hpp"

#include "braidvar/errors.hpp"
#include "braidvar/matrix.hpp"

namespace braidvar {

namespace {

std::size_t ix(int pos) { return static_cast<std::size_t>(pos - 1); }

std::vector<Scalar> symbolic_top(const Morphism& m) {
  std::vector<Scalar> z;
  for (int k = 1; k <= m.source().length(); ++k) z.push_back(Scalar::var(zvar(k)));
  return z;
}

// Pushes V (sitting left of the letters from position `from` on) through the
// framed letters of `word`: V <- chi(u) B(z) V B(w)^{-1} chi(u)^{-1}.
void push_framed(SquareMatrix V, const BraidWord& word, std::vector<FramedLetter>& letters, int from) {
  const int n = word.n;
  for (int k = from; k <= word.length(); ++k) {
    const int i = word[k];
    FramedLetter& l = letters[ix(k)];
    Scalar w = (V(i, i + 1) + l.z * V(i + 1, i + 1)) / V(i, i);
    SquareMatrix chi = framing_matrix(i, l.u, n);
    V = chi * braid_matrix(i, l.z, n) * V * braid_matrix(i, w, n).inverse() * chi.inverse();
    l.z = w;
  }
}

void framed_hexavalent(const BraidWord& before, const BraidWord& after, std::vector<FramedLetter>& letters, int p) {
  const int n = before.n;
  std::vector<Atom> old_word, unit_word;
  for (int o = 0; o < 3; ++o) {
    const FramedLetter& l = letters[ix(p + o)];
    old_word.emplace_back(Letter{before[p + o], l.z});
    old_word.emplace_back(Scaling{before[p + o], l.u});
  }
  auto [d_old, pure] = push_diagonal_left(old_word, n);
  // Unframed hexavalent on the pure letters.
  const bool up = hexavalent_is_up(before, p);
  const Scalar &z1 = pure[0].z, &z2 = pure[1].z, &z3 = pure[2].z;
  std::vector<Scalar> next{z3, up ? z2 - z1 * z3 : z2 + z1 * z3, z1};
  // New framings (u2 u3, 1, u1 u2); compute the rescaling of each new letter.
  const Scalar &u1 = letters[ix(p)].u, &u2 = letters[ix(p + 1)].u, &u3 = letters[ix(p + 2)].u;
  std::vector<Scalar> u_new{u2 * u3, Scalar(1L), u1 * u2};
  for (int o = 0; o < 3; ++o) {
    unit_word.emplace_back(Letter{after[p + o], Scalar(1L)});
    unit_word.emplace_back(Scaling{after[p + o], u_new[static_cast<std::size_t>(o)]});
  }
  auto [d_new, scale] = push_diagonal_left(unit_word, n);
  if (d_new != d_old) throw DomainError("framed hexavalent move does not preserve the diagonal");
  for (int o = 0; o < 3; ++o) {
    letters[ix(p + o)] = FramedLetter{next[static_cast<std::size_t>(o)] / scale[static_cast<std::size_t>(o)].z,
                                      u_new[static_cast<std::size_t>(o)]};
  }
}

}  // namespace

FramedPass framed_forward(const Morphism& m, const std::vector<Scalar>& top_z) {
  if (static_cast<int>(top_z.size()) != m.source().length()) throw DomainError("need one value per letter of the source");
  FramedPass out;
  std::vector<FramedLetter> cur;
  for (const auto& z : top_z) cur.push_back(FramedLetter{z, Scalar(1L)});
  out.layers.push_back(cur);
  for (std::size_t k = 0; k < m.moves.size(); ++k) {
    const BraidMove& mv = m.moves[k];
    const BraidWord& before = m.layers[k];
    const BraidWord& after = m.layers[k + 1];
    const int p = mv.pos;
    const int n = before.n;
    switch (mv.kind) {
      case MoveKind::Distant:
        std::swap(cur[ix(p)], cur[ix(p + 1)]);
        break;
      case MoveKind::Hexavalent:
        framed_hexavalent(before, after, cur, p);
        break;
      case MoveKind::Trivalent: {
        const int i = before[p];
        FramedLetter L = cur[ix(p)], R = cur[ix(p + 1)];
        if (R.z.is_zero()) throw TrivalentNeedsUnit(static_cast<int>(k) + 1, p);
        out.s.push_back(R.z);
        FramedLetter O{L.z - (L.u * L.u * R.z).inverse(), L.u * R.u * R.z};
        out.u_out.push_back(O.u);
        cur[ix(p)] = O;
        cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(p));
        SquareMatrix V = handleslide_matrix(i, i + 1, -(R.u * R.u * R.z).inverse(), n);
        push_framed(V, after, cur, p + 1);
        break;
      }
      case MoveKind::Cup: {
        const int i = before[p];
        FramedLetter L = cur[ix(p)], R = cur[ix(p + 1)];
        if (!R.z.is_zero()) throw CupNeedsZero(static_cast<int>(k) + 1, p);
        SquareMatrix V = SquareMatrix::identity(n);
        V(i, i) = -(L.u / R.u);
        V(i + 1, i + 1) = -(R.u / L.u);
        V = V * handleslide_matrix(i, i + 1, L.z, n);
        cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(p - 1), cur.begin() + static_cast<std::ptrdiff_t>(p + 1));
        push_framed(V, after, cur, p);
        break;
      }
    }
    out.layers.push_back(cur);
  }
  return out;
}

std::vector<Scalar> s_variables(const Morphism& m) { return s_variables(m, symbolic_top(m)); }

std::vector<Scalar> s_variables(const Morphism& m, const std::vector<Scalar>& top_z) { return framed_forward(m, top_z).s; }

std::vector<Scalar> cluster_variables(const Morphism& m) { return cluster_variables(m, symbolic_top(m)); }

std::vector<Scalar> cluster_variables(const Morphism& m, const std::vector<Scalar>& top_z) {
  auto s = s_variables(m, top_z);
  auto covers = cover_exponents(m, lusztig_cycles(m));
  std::vector<Scalar> A;
  for (std::size_t t = 0; t < s.size(); ++t) {
    Scalar a = s[t];
    for (std::size_t c = 0; c < t; ++c)
      if (covers[t][c] > 0) a = a * A[c].pow(covers[t][c]);
    A.push_back(a);
  }
  return A;
}

std::vector<Scalar> cluster_via_u(const Morphism& m) { return cluster_via_u(m, symbolic_top(m)); }

std::vector<Scalar> cluster_via_u(const Morphism& m, const std::vector<Scalar>& top_z) {
  return framed_forward(m, top_z).u_out;
}

bool ClusterSeed::is_polynomial() const {
  for (const auto& a : cluster_vars)
    if (!a.is_rational() || !a.rational().is_polynomial()) return false;
  return true;
}

ClusterSeed cluster_seed(const Morphism& m) {
  ClusterSeed seed;
  seed.morphism = m;
  seed.s_vars = s_variables(m);
  seed.cluster_vars = cluster_variables(m);
  seed.covers = cover_exponents(m, lusztig_cycles(m));
  return seed;
}

}  // namespace braidvar

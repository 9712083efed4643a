#include "braidvar/braid.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <sstream>

#include "braidvar/errors.hpp"

namespace braidvar {

Permutation::Permutation(std::vector<int> one_line) : w_(std::move(one_line)) {
  std::vector<bool> seen(w_.size() + 1, false);
  for (int x : w_) {
    if (x < 1 || x > n() || seen[static_cast<std::size_t>(x)]) throw DomainError("not a permutation");
    seen[static_cast<std::size_t>(x)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) w[static_cast<std::size_t>(j)] = j + 1;
  return Permutation(w);
}

Permutation Permutation::longest(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) w[static_cast<std::size_t>(j)] = n - j;
  return Permutation(w);
}

int Permutation::length() const {
  int inv = 0;
  for (std::size_t a = 0; a < w_.size(); ++a)
    for (std::size_t b = a + 1; b < w_.size(); ++b)
      if (w_[a] > w_[b]) ++inv;
  return inv;
}

bool Permutation::left_descent(int i) const {
  int pi = 0, pj = 0;
  for (int j = 1; j <= n(); ++j) {
    if ((*this)(j) == i) pi = j;
    if ((*this)(j) == i + 1) pj = j;
  }
  return pi > pj;
}

Permutation Permutation::times_s(int i) const {
  Permutation r = *this;
  std::swap(r.w_[static_cast<std::size_t>(i - 1)], r.w_[static_cast<std::size_t>(i)]);
  return r;
}

Permutation Permutation::s_times(int i) const {
  Permutation r = *this;
  for (int& x : r.w_) {
    if (x == i) {
      x = i + 1;
    } else if (x == i + 1) {
      x = i;
    }
  }
  return r;
}

std::string Permutation::to_string() const {
  std::string s = "[";
  for (std::size_t j = 0; j < w_.size(); ++j) {
    if (j) s += ",";
    s += std::to_string(w_[j]);
  }
  return s + "]";
}

BraidWord::BraidWord(int strands, std::vector<int> gens) : n(strands), letters(std::move(gens)) {
  if (n < 1) throw DomainError("strand count must be positive");
  for (int g : letters)
    if (g < 1 || g > n - 1) throw DomainError("generator " + std::to_string(g) + " out of range for " + std::to_string(n) + " strands");
}

std::string BraidWord::to_string() const {
  std::string s;
  for (std::size_t k = 0; k < letters.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(letters[k]);
  }
  return s;
}

BraidWord parse_braid(const std::string& text, int strands) {
  std::vector<int> gens;
  std::string tok;
  auto flush = [&] {
    if (tok.empty()) return;
    for (char c : tok)
      if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("bad braid letter '" + tok + "'");
    gens.push_back(std::stoi(tok));
    tok.clear();
  };
  for (char c : text) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      flush();
    } else {
      tok += c;
    }
  }
  flush();
  int mx = 0;
  for (int g : gens) {
    if (g < 1) throw ParseError("braid letters must be positive");
    mx = std::max(mx, g);
  }
  if (strands <= 0) strands = mx + 1;
  return BraidWord(strands, gens);
}

Permutation demazure_product(const BraidWord& b) {
  Permutation d = Permutation::identity(b.n);
  for (int i : b.letters)
    if (!d.right_descent(i)) d = d.times_s(i);
  return d;
}

Permutation word_permutation(const BraidWord& b) {
  Permutation d = Permutation::identity(b.n);
  for (int i : b.letters) d = d.times_s(i);
  return d;
}

bool is_reduced(const BraidWord& b) { return demazure_product(b).length() == b.length(); }

int binomial2(int n) { return n * (n - 1) / 2; }

BraidWord half_twist(int n) {
  std::vector<int> w;
  for (int k = 1; k < n; ++k)
    for (int i = k; i >= 1; --i) w.push_back(i);
  return BraidWord(n, w);
}

BraidWord canonical_reduced_word(const Permutation& w) {
  std::vector<int> word;
  Permutation v = w;
  while (v.length() > 0) {
    for (int j = 1; j < v.n(); ++j) {
      if (v.left_descent(j)) {
        word.push_back(j);
        v = v.s_times(j);
        break;
      }
    }
  }
  return BraidWord(w.n(), word);
}

std::optional<BraidWord> reduced_word_ending_with(const Permutation& v, int i) {
  if (!v.right_descent(i)) return std::nullopt;
  BraidWord w = canonical_reduced_word(v.times_s(i));
  w.letters.push_back(i);
  return w;
}

std::string move_kind_name(MoveKind k) {
  switch (k) {
    case MoveKind::Distant: return "distant";
    case MoveKind::Hexavalent: return "hexavalent";
    case MoveKind::Trivalent: return "trivalent";
    case MoveKind::Cup: return "cup";
  }
  return "?";
}

bool hexavalent_is_up(const BraidWord& w, int pos) { return w[pos + 1] == w[pos] + 1; }

BraidWord apply_move(const BraidWord& w, const BraidMove& m) {
  const int p = m.pos;
  auto need = [&](int k) {
    if (p < 1 || p + k - 1 > w.length()) throw DomainError("move position out of range");
  };
  BraidWord r = w;
  auto& L = r.letters;
  auto idx = [](int pos) { return static_cast<std::size_t>(pos - 1); };
  switch (m.kind) {
    case MoveKind::Distant:
      need(2);
      if (std::abs(w[p] - w[p + 1]) < 2) throw DomainError("distant move on adjacent generators");
      std::swap(L[idx(p)], L[idx(p + 1)]);
      break;
    case MoveKind::Hexavalent: {
      need(3);
      int a = w[p], b = w[p + 1], c = w[p + 2];
      if (a != c || std::abs(a - b) != 1) throw DomainError("hexavalent move needs sigma_i sigma_j sigma_i with |i-j| = 1");
      L[idx(p)] = b;
      L[idx(p + 1)] = a;
      L[idx(p + 2)] = b;
      break;
    }
    case MoveKind::Trivalent:
    case MoveKind::Cup:
      need(2);
      if (w[p] != w[p + 1]) throw DomainError(move_kind_name(m.kind) + " move needs two equal letters");
      if (m.kind == MoveKind::Trivalent) {
        L.erase(L.begin() + static_cast<std::ptrdiff_t>(p));
      } else {
        L.erase(L.begin() + static_cast<std::ptrdiff_t>(p - 1), L.begin() + static_cast<std::ptrdiff_t>(p + 1));
      }
      break;
  }
  return r;
}

std::vector<BraidMove> braid_move_path(const BraidWord& from, const BraidWord& to) {
  if (from.n != to.n || from.length() != to.length() || !is_reduced(from) || !is_reduced(to) ||
      word_permutation(from) != word_permutation(to))
    throw DomainError("braid_move_path needs two reduced words of the same permutation");
  using Key = std::vector<int>;
  std::map<Key, std::pair<Key, BraidMove>> parent;
  std::deque<Key> queue{from.letters};
  parent.emplace(from.letters, std::make_pair(Key{}, BraidMove{MoveKind::Distant, 0}));
  while (!queue.empty()) {
    Key cur = queue.front();
    queue.pop_front();
    if (cur == to.letters) break;
    BraidWord w(from.n, cur);
    for (int p = 1; p <= w.length(); ++p) {
      for (MoveKind k : {MoveKind::Distant, MoveKind::Hexavalent}) {
        BraidMove mv{k, p};
        BraidWord nxt;
        try {
          nxt = apply_move(w, mv);
        } catch (const DomainError&) {
          continue;
        }
        if (parent.count(nxt.letters)) continue;
        parent.emplace(nxt.letters, std::make_pair(cur, mv));
        queue.push_back(nxt.letters);
      }
    }
  }
  std::vector<BraidMove> path;
  Key k = to.letters;
  while (k != from.letters) {
    const auto& [prev, mv] = parent.at(k);
    path.push_back(mv);
    k = prev;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace braidvar

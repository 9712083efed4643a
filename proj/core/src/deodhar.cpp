#include "braidvar/deodhar.hpp"

#include <functional>

#include "braidvar/errors.hpp"

namespace braidvar {

std::vector<DistinguishedSequence> enumerate_distinguished(const BraidWord& beta, const Permutation& u) {
  if (u.n() != beta.n) throw DomainError("permutation size does not match strand count");
  std::vector<DistinguishedSequence> out;
  DistinguishedSequence cur{beta, {Permutation::identity(beta.n)}, {}};
  const int r = beta.length();
  std::function<void(int)> dfs = [&](int k) {
    const Permutation& v = cur.v.back();
    if (k == r) {
      if (v == u) out.push_back(cur);
      return;
    }
    int i = beta[k + 1];
    auto step = [&](StepCase c, const Permutation& next) {
      cur.v.push_back(next);
      cur.cases.push_back(c);
      dfs(k + 1);
      cur.v.pop_back();
      cur.cases.pop_back();
    };
    if (!v.right_descent(i)) {
      step(StepCase::Vert, v.times_s(i));
    } else {
      Permutation vs = v.times_s(i);
      step(StepCase::Tor, v);
      step(StepCase::Cup, vs);
    }
  };
  dfs(0);
  return out;
}

bool is_valid_sequence(const DistinguishedSequence& s) {
  const int r = s.beta.length();
  if (static_cast<int>(s.v.size()) != r + 1 || static_cast<int>(s.cases.size()) != r) return false;
  if (s.v[0] != Permutation::identity(s.beta.n)) return false;
  for (int k = 1; k <= r; ++k) {
    const Permutation& prev = s.v[static_cast<std::size_t>(k - 1)];
    const Permutation& cur = s.v[static_cast<std::size_t>(k)];
    int i = s.beta[k];
    StepCase expect;
    if (cur == prev && cur.right_descent(i)) {
      expect = StepCase::Tor;
    } else if (cur == prev.times_s(i) && cur.length() < prev.length()) {
      expect = StepCase::Cup;
    } else if (cur == prev.times_s(i) && cur.length() > prev.length()) {
      expect = StepCase::Vert;
    } else {
      return false;
    }
    if (s.cases[static_cast<std::size_t>(k - 1)] != expect) return false;
  }
  return true;
}

PieceShape shape(const DistinguishedSequence& s) {
  PieceShape p;
  for (StepCase c : s.cases) {
    if (c == StepCase::Tor) ++p.t;
    if (c == StepCase::Cup) ++p.c;
  }
  return p;
}

DistinguishedSequence ruling_to_sequence(const NormalRuling& r) {
  if (!is_valid_ruling(r)) throw DomainError("invalid ruling " + r.to_string());
  DistinguishedSequence s{r.beta, {Permutation::identity(r.beta.n)}, {}};
  for (int k = 1; k <= r.beta.length(); ++k) {
    const Permutation& v = s.v.back();
    switch (r.labels[static_cast<std::size_t>(k - 1)]) {
      case Label::Switch:
        s.cases.push_back(StepCase::Tor);
        s.v.push_back(v);
        break;
      case Label::Departure:
        s.cases.push_back(StepCase::Cup);
        s.v.push_back(v.times_s(r.beta[k]));
        break;
      case Label::Return:
        s.cases.push_back(StepCase::Vert);
        s.v.push_back(v.times_s(r.beta[k]));
        break;
    }
  }
  return s;
}

NormalRuling sequence_to_ruling(const DistinguishedSequence& s) {
  if (!is_valid_sequence(s) || s.v.back() != Permutation::longest(s.beta.n))
    throw DomainError("sequence is not a distinguished sequence ending at w_0");
  NormalRuling r{s.beta, {}};
  for (StepCase c : s.cases) {
    r.labels.push_back(c == StepCase::Tor ? Label::Switch : c == StepCase::Cup ? Label::Departure : Label::Return);
  }
  return r;
}

std::uint64_t deodhar_point_count(const BraidWord& beta, std::uint64_t q) {
  if (q < 2) throw DomainError("q must be at least 2");
  std::uint64_t total = 0;
  for (const auto& s : enumerate_distinguished(beta, Permutation::longest(beta.n))) {
    PieceShape p = shape(s);
    total += piece_size(p.c, p.t, q);
  }
  return total;
}

}  // namespace braidvar

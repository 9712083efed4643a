#include "braidvar/ruling.hpp"

#include <algorithm>
#include <functional>

#include "braidvar/errors.hpp"

namespace braidvar {

char label_char(Label l) {
  switch (l) {
    case Label::Return: return 'R';
    case Label::Switch: return 'S';
    case Label::Departure: return 'D';
  }
  return '?';
}

Label label_from_char(char c) {
  switch (c) {
    case 'R': return Label::Return;
    case 'S': return Label::Switch;
    case 'D': return Label::Departure;
    default: throw ParseError(std::string("bad ruling label '") + c + "'");
  }
}

int NormalRuling::switches() const { return static_cast<int>(std::count(labels.begin(), labels.end(), Label::Switch)); }

int NormalRuling::departures() const {
  return static_cast<int>(std::count(labels.begin(), labels.end(), Label::Departure));
}

int NormalRuling::returns() const { return static_cast<int>(std::count(labels.begin(), labels.end(), Label::Return)); }

std::string NormalRuling::to_string() const {
  std::string s;
  for (Label l : labels) s += label_char(l);
  return s;
}

NormalRuling parse_ruling(const BraidWord& beta, const std::string& labels) {
  if (static_cast<int>(labels.size()) != beta.length()) throw ParseError("ruling length does not match braid length");
  NormalRuling r{beta, {}};
  for (char c : labels) r.labels.push_back(label_from_char(c));
  return r;
}

bool is_valid_ruling(const NormalRuling& r) {
  if (static_cast<int>(r.labels.size()) != r.beta.length()) return false;
  Permutation v = Permutation::identity(r.beta.n);
  for (int k = 1; k <= r.beta.length(); ++k) {
    int i = r.beta[k];
    bool down = v.right_descent(i);
    switch (r.labels[static_cast<std::size_t>(k - 1)]) {
      case Label::Return:
        if (down) return false;
        v = v.times_s(i);
        break;
      case Label::Switch:
        if (!down) return false;
        break;
      case Label::Departure:
        if (!down) return false;
        v = v.times_s(i);
        break;
    }
  }
  return v == Permutation::longest(r.beta.n);
}

void require_demazure_w0(const BraidWord& beta) {
  if (demazure_product(beta) != Permutation::longest(beta.n))
    throw DomainError("Demazure product of " + beta.to_string() + " is not w_0");
}

std::vector<NormalRuling> enumerate_rulings(const BraidWord& beta) {
  require_demazure_w0(beta);
  const int r = beta.length();
  const int top = binomial2(beta.n);
  std::vector<NormalRuling> out;
  std::vector<Label> cur;
  std::function<void(int, const Permutation&)> dfs = [&](int k, const Permutation& v) {
    if (top - v.length() > r - k) return;
    if (k == r) {
      out.push_back(NormalRuling{beta, cur});
      return;
    }
    int i = beta[k + 1];
    if (!v.right_descent(i)) {
      cur.push_back(Label::Return);
      dfs(k + 1, v.times_s(i));
      cur.pop_back();
      return;
    }
    cur.push_back(Label::Switch);
    dfs(k + 1, v);
    cur.back() = Label::Departure;
    dfs(k + 1, v.times_s(i));
    cur.pop_back();
  };
  dfs(0, Permutation::identity(beta.n));
  return out;
}

NormalRuling maximal_ruling(const BraidWord& beta) {
  require_demazure_w0(beta);
  NormalRuling r{beta, {}};
  Permutation v = Permutation::identity(beta.n);
  for (int i : beta.letters) {
    if (v.right_descent(i)) {
      r.labels.push_back(Label::Switch);
    } else {
      r.labels.push_back(Label::Return);
      v = v.times_s(i);
    }
  }
  return r;
}

std::uint64_t piece_size(int departures, int switches, std::uint64_t q) {
  std::uint64_t acc = 1;
  auto mul = [&acc](std::uint64_t f) {
    if (__builtin_mul_overflow(acc, f, &acc)) throw DomainError("point count overflows 64 bits");
  };
  for (int k = 0; k < departures; ++k) mul(q);
  for (int k = 0; k < switches; ++k) mul(q - 1);
  return acc;
}

std::uint64_t ruling_point_count(const BraidWord& beta, std::uint64_t q) {
  if (q < 2) throw DomainError("q must be at least 2");
  std::uint64_t total = 0;
  for (const auto& r : enumerate_rulings(beta)) total += piece_size(r.departures(), r.switches(), q);
  return total;
}

}  // namespace braidvar

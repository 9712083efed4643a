#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "braidvar/braid.hpp"
#include "braidvar/rational.hpp"
#include "braidvar/scalar.hpp"

namespace braidvar::test {

inline Scalar v(const std::string& name) { return Scalar::var(Var::parse(name)); }
inline Scalar expr(const std::string& text) { return Scalar(parse_rational(text)); }

inline std::vector<Scalar> zs(int r) {
  std::vector<Scalar> out;
  for (int k = 1; k <= r; ++k) out.push_back(Scalar::var(zvar(k)));
  return out;
}

inline std::vector<Scalar> ys(int r) {
  std::vector<Scalar> out;
  for (int k = 1; k <= r; ++k) out.push_back(Scalar::var(yvar(k)));
  return out;
}

struct NamedBraid {
  std::string name;
  std::string word;
  int strands;
};

// Braids whose Demazure product is the half twist.
inline const std::vector<NamedBraid>& braid_set() {
  static const std::vector<NamedBraid> set{
      {"s1^3", "1,1,1", 2},
      {"s1^4", "1,1,1,1", 2},
      {"s1^5", "1,1,1,1,1", 2},
      {"Delta3", "1,2,1", 3},
      {"(s1^2 s2^2)^2", "1,1,2,2,1,1,2,2", 3},
      {"s2 s1^2 s2^2 s1 s2", "2,1,1,2,2,1,2", 3},
      {"Delta3 (s2 s1 s2)^2", "1,2,1,2,1,2,2,1,2", 3},
  };
  return set;
}

inline BraidWord braid_of(const NamedBraid& b) { return parse_braid(b.word, b.strands); }

// Hand-rolled generators for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  // A reduced word of w_0 followed by `extra` random letters, so delta = w_0
  // and the word starts with a half twist.
  BraidWord half_twist_braid(int n, int extra) {
    BraidWord b = half_twist(n);
    for (int k = 0; k < extra; ++k) b.letters.push_back(uniform(1, n - 1));
    return b;
  }

  // Random positive word, kept only if delta = w_0.
  BraidWord w0_braid(int n, int min_len, int max_len) {
    while (true) {
      BraidWord b(n, {});
      const int len = uniform(min_len, max_len);
      for (int k = 0; k < len; ++k) b.letters.push_back(uniform(1, n - 1));
      if (demazure_product(b) == Permutation::longest(n)) return b;
    }
  }

  std::vector<Scalar> residues(int r, std::uint32_t p) {
    std::vector<Scalar> out;
    for (int k = 0; k < r; ++k) out.push_back(Scalar::mod(uniform(0, static_cast<int>(p) - 1), p));
    return out;
  }

  std::vector<Scalar> units(int r, std::uint32_t p) {
    std::vector<Scalar> out;
    for (int k = 0; k < r; ++k) out.push_back(Scalar::mod(uniform(1, static_cast<int>(p) - 1), p));
    return out;
  }

  // Small random polynomial in z1..z3 with coefficients in [-3, 3].
  Scalar polynomial() {
    Scalar acc(0L);
    const int terms = uniform(0, 4);
    for (int t = 0; t < terms; ++t) {
      Scalar m(static_cast<long>(uniform(-3, 3)));
      for (int k = 1; k <= 3; ++k) m = m * Scalar::var(zvar(k)).pow(uniform(0, 2));
      acc = acc + m;
    }
    return acc;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace braidvar::test

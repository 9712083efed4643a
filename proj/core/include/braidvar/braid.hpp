#pragma once

#include <optional>
#include <string>
#include <vector>

namespace braidvar {

// Permutation of {1..n} in one-line notation.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> one_line);
  static Permutation identity(int n);
  static Permutation longest(int n);  // w_0

  int n() const { return static_cast<int>(w_.size()); }
  int operator()(int j) const { return w_[static_cast<std::size_t>(j - 1)]; }
  const std::vector<int>& one_line() const { return w_; }

  int length() const;  // inversion count
  bool right_descent(int i) const { return (*this)(i) > (*this)(i + 1); }  // l(w s_i) < l(w)
  bool left_descent(int i) const;                                        // l(s_i w) < l(w)
  Permutation times_s(int i) const;                                      // w s_i
  Permutation s_times(int i) const;                                      // s_i w

  std::string to_string() const;

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.w_ == b.w_; }
  friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }
  friend bool operator<(const Permutation& a, const Permutation& b) { return a.w_ < b.w_; }

 private:
  std::vector<int> w_;
};

// Positive braid word sigma_{i_1} ... sigma_{i_r} on n strands.
struct BraidWord {
  int n = 1;
  std::vector<int> letters;

  BraidWord() = default;
  BraidWord(int strands, std::vector<int> gens);

  int length() const { return static_cast<int>(letters.size()); }
  int operator[](int pos) const { return letters[static_cast<std::size_t>(pos - 1)]; }  // 1-based
  std::string to_string() const;

  friend bool operator==(const BraidWord& a, const BraidWord& b) { return a.n == b.n && a.letters == b.letters; }
  friend bool operator!=(const BraidWord& a, const BraidWord& b) { return !(a == b); }
};

// Parses "1,1,2,2" or "1 1 2 2"; strands <= 0 means max index + 1.
BraidWord parse_braid(const std::string& text, int strands = 0);

Permutation demazure_product(const BraidWord& b);
Permutation word_permutation(const BraidWord& b);  // ordinary product s_{i_1} ... s_{i_r}
bool is_reduced(const BraidWord& b);
BraidWord half_twist(int n);
int binomial2(int n);

// Lexicographically minimal reduced word of w.
BraidWord canonical_reduced_word(const Permutation& w);
// Reduced word of v ending in sigma_i when l(v s_i) < l(v).
std::optional<BraidWord> reduced_word_ending_with(const Permutation& v, int i);

enum class MoveKind { Distant, Hexavalent, Trivalent, Cup };

// A braid move acting on letters pos, pos+1 (and pos+2 for hexavalent),
// positions 1-based.
struct BraidMove {
  MoveKind kind;
  int pos;

  friend bool operator==(const BraidMove& a, const BraidMove& b) { return a.kind == b.kind && a.pos == b.pos; }
};

std::string move_kind_name(MoveKind k);
// True if the letters at pos read sigma_i sigma_{i+1} sigma_i.
bool hexavalent_is_up(const BraidWord& w, int pos);
// Throws DomainError if the move does not apply.
BraidWord apply_move(const BraidWord& w, const BraidMove& m);

// Shortest sequence of hexavalent/distant moves rewriting `from` into `to`
// (breadth-first over the reduced-word graph).
std::vector<BraidMove> braid_move_path(const BraidWord& from, const BraidWord& to);

}  // namespace braidvar

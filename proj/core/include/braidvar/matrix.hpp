#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "braidvar/scalar.hpp"

namespace braidvar {

// Dense n x n matrix over Scalar. Indices are 1-based in the public API to
// match strand numbering.
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(int n);  // zero matrix
  static SquareMatrix identity(int n);
  static SquareMatrix diagonal(const std::vector<Scalar>& d);

  int size() const { return n_; }
  const Scalar& operator()(int i, int j) const { return a_[static_cast<std::size_t>((i - 1) * n_ + (j - 1))]; }
  Scalar& operator()(int i, int j) { return a_[static_cast<std::size_t>((i - 1) * n_ + (j - 1))]; }

  SquareMatrix operator*(const SquareMatrix& o) const;
  SquareMatrix inverse() const;  // Gauss-Jordan; DomainError if singular

  bool is_upper_triangular() const;
  bool is_diagonal() const;
  bool is_unipotent_upper() const;

  std::string to_string() const;

  friend bool operator==(const SquareMatrix& a, const SquareMatrix& b);
  friend bool operator!=(const SquareMatrix& a, const SquareMatrix& b) { return !(a == b); }

 private:
  int n_ = 0;
  std::vector<Scalar> a_;
};

// Generator matrices.
SquareMatrix braid_matrix(int i, const Scalar& z, int n);         // B_i(z)
SquareMatrix permutation_matrix(int i, int n);                    // P_i
SquareMatrix handleslide_matrix(int i, int j, const Scalar& a, int n);  // S_{i,j}(a) = I + a E_ij
SquareMatrix marked_point_matrix(int i, const Scalar& t, int n);  // D_i(t)
SquareMatrix chi_matrix(int i, int k, const Scalar& a, const Scalar& b, int n);  // chi_{i,k}(a,b)
SquareMatrix framing_matrix(int i, const Scalar& u, int n);       // chi_i(u) = chi_{i,i+1}(-1/u, u)
SquareMatrix permutation_matrix_of(const std::vector<int>& one_line);  // e_j -> e_{w(j)}

// Monodromy atoms, listed left to right along a front.
struct Crossing {
  int i;
};
struct Handleslide {
  int i, j;
  Scalar a;
};
struct MarkedPoint {
  int i;
  Scalar t;
};
struct Letter {
  int i;
  Scalar z;
};
struct Scaling {
  int i;
  Scalar u;
};
using Atom = std::variant<Crossing, Handleslide, MarkedPoint, Letter, Scaling>;

SquareMatrix atom_matrix(const Atom& atom, int n);

// Reversed-order product: the word a_1 ... a_r maps to M(a_r) ... M(a_1).
// Every monodromy product in the library goes through this function.
SquareMatrix compose(const std::vector<Atom>& word, int n);
SquareMatrix compose_letters(const std::vector<int>& gens, const std::vector<Scalar>& z, int n);

// Rewrites a word of Letter/MarkedPoint/Scaling atoms as D * (pure letters)
// with the same monodromy. The returned letters are in the input order.
std::pair<SquareMatrix, std::vector<Letter>> push_diagonal_left(const std::vector<Atom>& word, int n);

}  // namespace braidvar

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "braidvar/braid.hpp"
#include "braidvar/matrix.hpp"
#include "braidvar/ruling.hpp"
#include "braidvar/scalar.hpp"

namespace braidvar {

// A morphism in the braid category: braid words beta_1 .. beta_q, each
// obtained from the previous one by a single positioned move.
struct Morphism {
  std::vector<BraidWord> layers;
  std::vector<BraidMove> moves;  // moves[k] maps layers[k] to layers[k+1]

  static Morphism identity(const BraidWord& b);
  static Morphism from_moves(const BraidWord& source, const std::vector<BraidMove>& moves);

  const BraidWord& source() const { return layers.front(); }
  const BraidWord& target() const { return layers.back(); }
  int trivalent_count() const;
  int cup_count() const;
  std::vector<int> trivalent_indices() const;  // indices into moves

  // Every move applies to its layer and yields the next one.
  bool is_valid() const;
  std::string to_string() const;

  friend bool operator==(const Morphism& a, const Morphism& b) { return a.layers == b.layers && a.moves == b.moves; }
};

// Dashed data left behind by a trivalent or cup move. Trivalent: handleslide
// -y and marked points t1 = -1/y, t2 = y. Cup: handleslide x, t1 = t2 = 1.
struct DashedData {
  MoveKind kind;
  Scalar handleslide;
  Scalar t1;
  Scalar t2;

  friend bool operator==(const DashedData& a, const DashedData& b) {
    return a.kind == b.kind && a.handleslide == b.handleslide && a.t1 == b.t1 && a.t2 == b.t2;
  }
};

struct MonodromyAssignment {
  std::vector<std::vector<Scalar>> z;  // z[k][m]: value of letter m+1 in layer k+1
  std::vector<std::optional<DashedData>> dashed;  // one entry per move
  // Chart parameters as recovered by the forward pass, indexed in backward
  // execution order (the last trivalent or cup of the morphism comes first).
  std::vector<Scalar> parameters;
};

// Processes beta left to right, rewriting the processed prefix with
// hexavalent/distant moves before each trivalent (switch) or cup (departure).
// The final word is normalized to the half twist.
Morphism build_right_simplifying(const BraidWord& beta, const NormalRuling& rho);

// Forward trivial-monodromy pass. Throws TrivalentNeedsUnit / CupNeedsZero.
MonodromyAssignment propagate_forward(const Morphism& m, const std::vector<Scalar>& top_z);

// Backward pass from the all-zero bottom layer. One parameter per trivalent
// or cup, consumed in backward execution order; trivalent parameters must be
// invertible.
MonodromyAssignment chart_embed_full(const Morphism& m, const std::vector<Scalar>& params);
std::vector<Scalar> chart_embed(const Morphism& m, const std::vector<Scalar>& params);

// Symbolic parameters y1.., x1.. in backward execution order.
std::vector<Scalar> chart_parameters(const Morphism& m);

// Greedy right-inductive classification of a point of X(beta).
NormalRuling classify_point(const BraidWord& beta, const std::vector<Scalar>& z);

// One step of the unipotent push used by the forward pass: given an upper
// triangular V sitting left of the letter sigma_i(z), returns the new value
// w and replaces V with the matrix emerging on the right.
Scalar push_through_letter(SquareMatrix& V, int i, const Scalar& z);
// Inverse: given the emerging value w, recovers z and updates V likewise.
Scalar pull_through_letter(SquareMatrix& V, int i, const Scalar& w);

struct LusztigCycle {
  int origin = 0;  // index into Morphism::moves of the trivalent move
  std::vector<std::vector<int>> weights;  // weights[k][m] on layer k+1, letter m+1
};

std::vector<LusztigCycle> lusztig_cycles(const Morphism& m);

// covers[t][t'] = gamma_{t'} at the left input of trivalent t, indexed by
// trivalent order.
std::vector<std::vector<int>> cover_exponents(const Morphism& m, const std::vector<LusztigCycle>& cycles);

// Flagged letter positions (1-based) per layer.
struct YTree {
  std::vector<std::vector<int>> flags;

  int support_size() const;
  friend bool operator==(const YTree& a, const YTree& b) { return a.flags == b.flags; }
};

// Checks local models, empty first/last layers, connectivity and acyclicity.
bool is_y_tree(const Morphism& m, const YTree& y);
std::vector<YTree> find_y_trees(const Morphism& m);
// Smooths the flagged letters. Throws DomainError if y is not a Y-tree or if
// its deletion is not expressible by simplifying moves.
Morphism delete_cycle(const Morphism& m, const YTree& y);

// Right-inductive check; on success returns the underlying ruling.
std::optional<NormalRuling> right_inductive_ruling(const Morphism& m);
inline bool is_right_inductive(const Morphism& m) { return right_inductive_ruling(m).has_value(); }

enum class Decomposability { Decomposable, NotFound, Unknown };
std::string decomposability_name(Decomposability d);

struct DeletionNode {
  Morphism morphism;
  int parent = -1;
  int y_tree = -1;  // index into find_y_trees(parent morphism)
  bool right_inductive = false;
  std::optional<NormalRuling> ruling;
  bool deletable = true;  // false when delete_cycle rejected this branch
};

struct DecompositionSearch {
  Decomposability status = Decomposability::NotFound;
  int root_y_trees = 0;
  std::vector<DeletionNode> nodes;  // nodes[0] is the root
  std::vector<int> decomposing;     // node indices whose charts tile X(beta)(F_q)
  bool non_right_inductive_reached = false;
  std::uint64_t explored = 0;
  std::uint64_t q = 0;
};

// Deletion-tree search from the right-inductive morphism of the maximal
// ruling. Charts are compared over F_q.
DecompositionSearch is_cycle_decomposable(const BraidWord& beta, std::uint64_t budget = 100000, std::uint32_t q = 3);

// All points of the chart of m over F_q as residue vectors (layer-1 values).
std::vector<std::vector<std::uint32_t>> chart_image(const Morphism& m, std::uint32_t q);

}  // namespace braidvar

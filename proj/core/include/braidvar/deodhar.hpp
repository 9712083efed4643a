#pragma once

#include <cstdint>
#include <vector>

#include "braidvar/braid.hpp"
#include "braidvar/ruling.hpp"

namespace braidvar {

// Step types of a distinguished sequence: (1) stay with a descent,
// (2) multiply with length going down, (3) multiply with length going up.
enum class StepCase { Tor = 1, Cup = 2, Vert = 3 };

struct DistinguishedSequence {
  BraidWord beta;
  std::vector<Permutation> v;  // v_0 .. v_r
  std::vector<StepCase> cases;

  friend bool operator==(const DistinguishedSequence& a, const DistinguishedSequence& b) {
    return a.beta == b.beta && a.v == b.v && a.cases == b.cases;
  }
};

struct PieceShape {
  int t = 0;  // case (1) count, (C^*)-factors
  int c = 0;  // case (2) count, C-factors
};

// Depth-first, branch order (3) < (1) < (2).
std::vector<DistinguishedSequence> enumerate_distinguished(const BraidWord& beta, const Permutation& u);
bool is_valid_sequence(const DistinguishedSequence& s);
PieceShape shape(const DistinguishedSequence& s);

DistinguishedSequence ruling_to_sequence(const NormalRuling& r);
NormalRuling sequence_to_ruling(const DistinguishedSequence& s);

// Sum over sequences ending at w_0 of q^c (q-1)^t.
std::uint64_t deodhar_point_count(const BraidWord& beta, std::uint64_t q);

}  // namespace braidvar

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "braidvar/braid.hpp"

namespace braidvar {

enum class Label { Return, Switch, Departure };

char label_char(Label l);
Label label_from_char(char c);

// Normal ruling of the (-1)-closure of beta*Delta, encoded as a labeling of
// the letters of beta.
struct NormalRuling {
  BraidWord beta;
  std::vector<Label> labels;

  int switches() const;
  int departures() const;
  int returns() const;
  std::string to_string() const;  // e.g. "RSS"

  friend bool operator==(const NormalRuling& a, const NormalRuling& b) {
    return a.beta == b.beta && a.labels == b.labels;
  }
};

NormalRuling parse_ruling(const BraidWord& beta, const std::string& labels);

// Walks the labeling from e; returns true iff every step is admissible and
// the walk ends at w_0.
bool is_valid_ruling(const NormalRuling& r);

// Throws DomainError unless delta(beta) = w_0.
void require_demazure_w0(const BraidWord& beta);

// Depth-first, branch order Return < Switch < Departure.
std::vector<NormalRuling> enumerate_rulings(const BraidWord& beta);
NormalRuling maximal_ruling(const BraidWord& beta);

// Sum over rulings of q^d (q-1)^s.
std::uint64_t ruling_point_count(const BraidWord& beta, std::uint64_t q);

// q^d (q-1)^s for a single ruling.
std::uint64_t piece_size(int departures, int switches, std::uint64_t q);

}  // namespace braidvar

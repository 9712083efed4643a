#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "braidvar/braid.hpp"
#include "braidvar/matrix.hpp"
#include "braidvar/ruling.hpp"
#include "braidvar/scalar.hpp"
#include "braidvar/weave.hpp"

namespace braidvar {

// A braid word decorated with handleslide marks and marked points, stored as
// one left-to-right list of Crossing, Handleslide and MarkedPoint atoms.
struct MCSState {
  int n = 1;
  std::vector<Atom> atoms;

  BraidWord braid() const;
  // Handleslides have 1 <= i < j <= n, marked points sit on a strand and
  // carry an invertible value, no Letter or Scaling atoms.
  bool is_valid() const;
  // One line per atom, e.g. "H 1 2 z1", "X 1", "M 2 -1".
  std::string dump() const;
};

// A-form: one handleslide between the crossing strands immediately left of
// every crossing. Framed adds a marked point -1 on strand i right of each
// crossing sigma_i.
MCSState a_form(const BraidWord& beta, const std::vector<Scalar>& values, bool framed = false);

SquareMatrix mcs_monodromy(const MCSState& s);

// Local rewrite moving `left` past `right`. The result starts with the image
// of `right`, continues with the image of `left` (absent after a merge), and
// may end with one generated handleslide. Monodromy is preserved.
struct RuleApplication {
  std::string rule;
  std::vector<Atom> replacement;
};
std::optional<RuleApplication> swap_rule(const Atom& left, const Atom& right);
const std::vector<std::string>& rule_names();

// Moves every decoration left of atom index `upto` to the right of all
// crossings left of `upto`. A handleslide between the strands of a crossing
// stops immediately left of it and absorbs the others of its kind. With
// `drop_at_end` decorations pushed past the last atom are removed.
MCSState push_right(const MCSState& s, std::size_t upto, bool drop_at_end = false);

// SR-form data: one value per letter. Returns carry their mark, switches the
// mark r on their left (the mark -1/r sits on their right), departures 0.
struct SRForm {
  NormalRuling ruling;
  std::vector<Scalar> values;
  MCSState state;

  Scalar switch_inverse(int letter) const;  // -1/r at a switch
};

// Left-to-right sweep turning A-form values into SR-form values for rho.
// Throws DomainError when a switch meets 0 or a departure meets a nonzero
// value.
SRForm a_to_sr(const NormalRuling& rho, const std::vector<Scalar>& a_values, bool framed = false);
// Inverse sweep.
std::vector<Scalar> sr_to_a(const NormalRuling& rho, const std::vector<Scalar>& sr_values, bool framed = false);

// Coordinate change from the chart of a right inductive morphism to SR-form
// coordinates of its ruling: values at switches and at returns past the
// initial half-twist prefix, in letter order. The source braid must start
// with a reduced word of w_0.
std::vector<Scalar> f_map(const Morphism& m, const std::vector<Scalar>& params);
std::vector<Scalar> f_map_inverse(const Morphism& m, const std::vector<Scalar>& coords);

}  // namespace braidvar

#pragma once

#include <vector>

#include "braidvar/scalar.hpp"
#include "braidvar/weave.hpp"

namespace braidvar {

// Letter value and framing u of one letter of a framed layer.
struct FramedLetter {
  Scalar z;
  Scalar u;
};

struct FramedPass {
  std::vector<std::vector<FramedLetter>> layers;  // one entry per morphism layer
  std::vector<Scalar> s;                          // right input value at each trivalent
  std::vector<Scalar> u_out;                      // framing of each trivalent output
};

// Framed forward pass from top values z with all top framings 1. Throws
// TrivalentNeedsUnit / CupNeedsZero like the unframed pass.
FramedPass framed_forward(const Morphism& m, const std::vector<Scalar>& top_z);

// Symbolic z1..zr when top_z is omitted.
std::vector<Scalar> s_variables(const Morphism& m);
std::vector<Scalar> s_variables(const Morphism& m, const std::vector<Scalar>& top_z);

// A_t = s_t * prod A_{t'}^{gamma_{t'}} over earlier trivalents t', in
// trivalent order.
std::vector<Scalar> cluster_variables(const Morphism& m);
std::vector<Scalar> cluster_variables(const Morphism& m, const std::vector<Scalar>& top_z);

// Cluster variables read off as the framing of each trivalent output.
std::vector<Scalar> cluster_via_u(const Morphism& m);
std::vector<Scalar> cluster_via_u(const Morphism& m, const std::vector<Scalar>& top_z);

struct ClusterSeed {
  Morphism morphism;
  std::vector<Scalar> s_vars;
  std::vector<Scalar> cluster_vars;
  std::vector<std::vector<int>> covers;  // covers[t][t'] = exponent of A_{t'} in A_t

  // Every cluster variable is a polynomial in the z's.
  bool is_polynomial() const;
};

ClusterSeed cluster_seed(const Morphism& m);

}  // namespace braidvar

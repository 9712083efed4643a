#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "braidvar/braid.hpp"
#include "braidvar/weave.hpp"

namespace braidvar {

inline constexpr std::uint64_t kDefaultPointBudget = 100000000;

// #{z in F_q^r : B_beta(z) w_0 upper triangular}. Throws DomainError unless
// delta(beta) = w_0 and q is prime, BudgetExceeded when q^r > budget.
std::uint64_t brute_force_count(const BraidWord& beta, std::uint32_t q, std::uint64_t budget = kDefaultPointBudget);

// All points of X(beta)(F_q) as residue vectors, odometer order.
std::vector<std::vector<std::uint32_t>> variety_points(const BraidWord& beta, std::uint32_t q,
                                                       std::uint64_t budget = kDefaultPointBudget);

struct Witness {
  std::vector<std::uint32_t> point;
  std::string reason;
};

struct CountReport {
  BraidWord beta;
  std::uint32_t q = 0;
  std::uint64_t brute_force = 0;
  std::uint64_t by_rulings = 0;
  std::uint64_t by_deodhar = 0;
  bool partition_ok = false;
  std::map<std::string, std::uint64_t> piece_sizes;  // ruling labels -> observed fiber size
  std::optional<Witness> witness;                    // first mismatch found
};

// Classifies every point of X(beta)(F_q), compares each fiber with
// q^d (q-1)^s and with the chart image of the ruling's right inductive
// morphism.
CountReport verify_decomposition(const BraidWord& beta, std::uint32_t q, std::uint64_t budget = kDefaultPointBudget);

// Rulings met by the chart of an arbitrary simplifying morphism.
struct ChartStrata {
  std::map<std::string, std::uint64_t> hits;  // ruling labels -> chart points classified there
  std::uint64_t chart_size = 0;
  bool single_stratum = false;  // chart lies in one fiber and fills it
  std::optional<Witness> witness;
};

ChartStrata chart_strata(const Morphism& m, std::uint32_t q);

}  // namespace braidvar

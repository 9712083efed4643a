#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "braidvar/braid.hpp"

namespace braidvar::detail {

using Point = std::vector<std::uint32_t>;

// Visits every z in F_p^r with B_beta(z) w_0 upper triangular, in odometer
// order (first coordinate slowest). Throws BudgetExceeded when p^r > budget.
std::uint64_t enumerate_variety_points(const BraidWord& beta, std::uint32_t p, std::uint64_t budget,
                                       const std::function<void(const Point&)>& visit);

// Mixed-radix index of a point, first coordinate most significant.
std::uint64_t encode_point(const Point& z, std::uint32_t p);

}  // namespace braidvar::detail

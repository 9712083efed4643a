#include "fp_points.hpp"

#include <array>

#include "braidvar/errors.hpp"
#include "braidvar/scalar.hpp"

namespace braidvar::detail {

namespace {

constexpr int kMaxStrands = 8;
using Row = std::array<std::uint32_t, kMaxStrands>;
using Mat = std::array<Row, kMaxStrands>;

}  // namespace

std::uint64_t enumerate_variety_points(const BraidWord& beta, std::uint32_t p, std::uint64_t budget,
                                       const std::function<void(const Point&)>& visit) {
  const int n = beta.n;
  const int r = beta.length();
  if (n > kMaxStrands) throw DomainError("brute force supports at most 8 strands");
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  std::uint64_t total = 1;
  for (int k = 0; k < r; ++k) {
    if (__builtin_mul_overflow(total, static_cast<std::uint64_t>(p), &total) || total > budget)
      throw BudgetExceeded("F_" + std::to_string(p) + "^" + std::to_string(r) + " exceeds the point budget of " +
                           std::to_string(budget));
  }
  // stack[k] = B_{i_k}(z_k) ... B_{i_1}(z_1)
  std::vector<Mat> stack(static_cast<std::size_t>(r) + 1);
  Mat& id = stack[0];
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) id[a][b] = a == b ? 1 : 0;
  Point z(static_cast<std::size_t>(r), 0);
  std::uint64_t count = 0;
  auto apply = [&](int k) {
    // Left multiplication by B_i(z): row i <- row i+1, row i+1 <- row i + z row i+1.
    const Mat& prev = stack[static_cast<std::size_t>(k - 1)];
    Mat& cur = stack[static_cast<std::size_t>(k)];
    cur = prev;
    int i = beta[k] - 1;
    std::uint64_t zz = z[static_cast<std::size_t>(k - 1)];
    for (int c = 0; c < n; ++c) {
      cur[i][c] = prev[i + 1][c];
      cur[i + 1][c] = static_cast<std::uint32_t>((prev[i][c] + zz * prev[i + 1][c]) % p);
    }
  };
  auto accept = [&](const Mat& m) {
    // (M w_0)(a, b) = M(a, n+1-b); lower entries must vanish.
    for (int a = 0; a < n; ++a)
      for (int c = 0; c < n; ++c)
        if (a + c > n - 1 && m[a][c] != 0) return false;
    return true;
  };
  std::function<void(int)> rec = [&](int k) {
    if (k > r) {
      if (accept(stack[static_cast<std::size_t>(r)])) {
        ++count;
        if (visit) visit(z);
      }
      return;
    }
    for (std::uint32_t v = 0; v < p; ++v) {
      z[static_cast<std::size_t>(k - 1)] = v;
      apply(k);
      rec(k + 1);
    }
  };
  rec(1);
  return count;
}

std::uint64_t encode_point(const Point& z, std::uint32_t p) {
  std::uint64_t code = 0;
  for (std::uint32_t v : z) code = code * p + v;
  return code;
}

}  // namespace braidvar::detail

#include "p2leaf/leaf_formula.hpp"

#include <string>
#include <vector>

#include "p2leaf/error.hpp"

namespace p2leaf {

std::uint64_t leaf_recursive(std::uint64_t n) noexcept {
  if (n <= 1) return 0;
  if (n <= 18) return n / 2 + 1;
  const std::uint64_t k = (n - 18 + 16) / 17;  // steps of 17 back into 2..18
  const std::uint64_t base = n - 17 * k;
  return base / 2 + 1 + 8 * k;
}

std::uint64_t leaf_closed(std::uint64_t n) noexcept {
  if (n <= 1) return 0;
  if (n <= 18) return n / 2 + 1;
  if (n <= 35) return (n + 1) / 2;
  const std::uint64_t q = n / 17;
  const std::uint64_t r = n % 17;
  // For r < 2 the base of the recursion is 17 + r, not r: L(17) = 9, L(18) = 10.
  if (r < 2) return 8 * q + 1 + r;
  return 8 * q + r / 2 + 1;
}

std::uint64_t upper_bound_k(std::uint64_t n, std::uint64_t k) {
  if (k < 1 || k >= n) {
    throw Error(ErrorCode::DomainError,
                "upper_bound_k needs 1 <= k < n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
  }
  return leaf_closed(n - k) + (k + 1) / 2;
}

std::optional<std::uint64_t> first_formula_mismatch(std::uint64_t limit) {
  std::vector<std::uint64_t> table(limit + 1);
  for (std::uint64_t n = 0; n <= limit; ++n) {
    if (n <= 1) {
      table[n] = 0;
    } else if (n <= 18) {
      table[n] = n / 2 + 1;
    } else {
      table[n] = table[n - 17] + 8;
    }
  }
  for (std::uint64_t n = 0; n <= limit; ++n) {
    const std::uint64_t l = table[n];
    if (leaf_recursive(n) != l || leaf_closed(n) != l) return n;
    // Below n = 3 the jump from L(1) = 0 to L(2) = 2 is a convention, not a step.
    if (n >= 3) {
      const std::uint64_t prev = table[n - 1];
      if (l < prev || l - prev > 1) return n;
    }
    if (n >= 4 && l > table[n - 2] + 1) return n;
  }
  return std::nullopt;
}

}  // namespace p2leaf

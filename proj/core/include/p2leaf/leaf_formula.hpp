#pragma once

#include <cstdint>
#include <optional>

namespace p2leaf {

/// Maximum number of leaves of an induced subtree with n tiles in a P2
/// tiling: 0 for n <= 1, floor(n/2)+1 up to n = 18, then L(n-17)+8.
std::uint64_t leaf_recursive(std::uint64_t n) noexcept;

/// Closed form of the same function (four cases split at 1, 18 and 35).
std::uint64_t leaf_closed(std::uint64_t n) noexcept;

/// L(n-k) + ceil(k/2), an upper bound on L(n). Throws DomainError unless 1 <= k < n.
std::uint64_t upper_bound_k(std::uint64_t n, std::uint64_t k);

/// First n in [0, limit] where the recursion and the closed form disagree,
/// a step L(n)-L(n-1) leaves {0,1} (n >= 3), or L(n) > L(n-2)+1 (n >= 4).
/// The recursion is evaluated independently here as a table.
std::optional<std::uint64_t> first_formula_mismatch(std::uint64_t limit);

inline bool check_equivalence(std::uint64_t limit) { return !first_formula_mismatch(limit).has_value(); }

}  // namespace p2leaf

#pragma once

// Exhaustive ground truth for tests: integer programs and Graver bases by
// enumeration over a box, and cutting stock by enumerating cutting patterns.
// Exponential by design.

#include "nfold/core.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace nfold {

/// Every coordinate ranges over [0, bound] (solve) or [-bound, bound] (Graver).
struct BoxBound {
  explicit BoxBound(std::int64_t b) : bound(b) { require(b >= 0, "BoxBound: bound must be nonnegative"); }
  std::int64_t bound;
};

/// Lexicographically first minimizer of c x over { x in [0,bound]^cols : M x = b }.
std::optional<std::pair<IntVec, Integer>> brute_force_solve(const IntMatrix& M, const IntVec& b,
                                                            const IntVec& c, BoxBound box);

/// The ⊑-minimal nonzero kernel vectors with every |v_i| <= bound, in
/// CanonicalOrder.
std::vector<IntVec> brute_force_graver(const IntMatrix& M, BoxBound box);

/// Smallest number of rolls of width u that can be cut into the demanded
/// pieces, by search over multisets of cutting patterns.
std::int64_t brute_force_min_rolls(const std::vector<std::int64_t>& widths,
                                   const std::vector<std::int64_t>& demands, std::int64_t u);

}  // namespace nfold

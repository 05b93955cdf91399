#pragma once

// Augmentation along Graver directions: improving directions for directed
// costs, long step lengths, the greedy optimization loop, and its
// cost-scaling variant.

#include "nfold/core.hpp"
#include "nfold/graver.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace nfold {

/// One move x <- x - step * direction.
struct AugmentStep {
  IntVec direction;
  Integer step;
  Integer improvement;  // step * (c . direction) for the costs in force
};

struct AugmentOptions {
  /// Worker threads for the scan over the basis. 1 scans inline.
  unsigned threads = 1;
  /// When set, every move is appended here.
  std::vector<AugmentStep>* trace = nullptr;
};

/// First g in canonical order with x - g >= 0 and c1 . g+ - c2 . g- > 0.
std::optional<IntVec> directed_improving_direction(const GraverBasis& G, const IntVec& x,
                                                   const IntVec& c1, const IntVec& c2);

/// max { l >= 1 : x - l g >= 0 }, or nullopt when g has no positive entry
/// (every l works). Requires x - g >= 0.
std::optional<Integer> max_step(const IntVec& x, const IntVec& g);

/// Greedy augmentation from the feasible point x: repeatedly take the move
/// (g, max_step) with the largest improvement. Returns Unbounded when an
/// improving g has no positive entry, otherwise the Optimal point reached.
SolveOutcome optimize(const IntMatrix& M, const GraverBasis& G, const IntVec& x, const IntVec& c,
                      const AugmentOptions& options = {});

/// Same contract as optimize, reached through cost scaling: the greedy loop
/// runs with costs floor(c / 2^k) for k from the top bit of max|c| down to 0,
/// each level warm-started from the previous one.
SolveOutcome optimize_scaled(const IntMatrix& M, const GraverBasis& G, const IntVec& x,
                             const IntVec& c, const AugmentOptions& options = {});

}  // namespace nfold

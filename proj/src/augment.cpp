#include "nfold/augment.hpp"

#include "scan.hpp"

namespace nfold {

std::optional<IntVec> directed_improving_direction(const GraverBasis& G, const IntVec& x,
                                                   const IntVec& c1, const IntVec& c2) {
  require(x.size() == G.matrix_cols() && c1.size() == x.size() && c2.size() == x.size(),
          "directed_improving_direction: length mismatch");
  require(is_nonnegative(x), "directed_improving_direction: x must be nonnegative");
  const detail::SparseBasis S(G);
  for (std::size_t e = 0; e < S.size(); ++e) {
    if (S.directed_value(e, c1, c2) <= 0) continue;
    const std::optional<Integer> room = S.max_step(e, x);
    if (room && *room == 0) continue;
    return G[e];
  }
  return std::nullopt;
}

std::optional<Integer> max_step(const IntVec& x, const IntVec& g) {
  require(x.size() == g.size(), "max_step: length mismatch");
  require(is_nonnegative(x), "max_step: x must be nonnegative");
  require(is_nonnegative(IntVec(x - g)), "max_step: x - g must be nonnegative");
  std::optional<Integer> best;
  for (Index i = 0; i < g.size(); ++i) {
    if (g(i) <= 0) continue;
    Integer l = x(i) / g(i);
    if (!best || l < *best) best = std::move(l);
  }
  return best;
}

namespace {

void check_inputs(const IntMatrix& M, const GraverBasis& G, const IntVec& x, const IntVec& c) {
  require(M.cols() == G.matrix_cols(), "optimize: basis and matrix differ in column count");
  require(x.size() == M.cols() && c.size() == M.cols(), "optimize: length mismatch");
  require(is_nonnegative(x), "optimize: x must be nonnegative");
  if (G.matrix() == M) return;
  for (const IntVec& g : G)
    require(is_zero(IntVec(M * g)), "optimize: basis element outside the kernel of M");
}

struct Run {
  IntVec x;
  bool unbounded = false;
};

// Greedy long-step loop for the directed costs (c1, c2), starting at x.
Run greedy(const detail::SparseBasis& S, IntVec x, const IntVec& c1, const IntVec& c2,
           const AugmentOptions& options) {
  std::vector<Integer> value(S.size());
  for (std::size_t e = 0; e < S.size(); ++e) value[e] = S.directed_value(e, c1, c2);

  for (std::size_t e = 0; e < S.size(); ++e)
    if (value[e] > 0 && !S.has_positive(e)) return {std::move(x), true};

  for (;;) {
    struct Move {
      Integer improvement;
      Integer step;
      bool operator<(const Move& o) const { return improvement < o.improvement; }
    };
    const auto best = detail::best_candidate<Move>(
        S.size(), options.threads, [&](std::size_t e) -> std::optional<Move> {
          if (value[e] <= 0) return std::nullopt;
          std::optional<Integer> room = S.max_step(e, x);
          if (!room || *room == 0) return std::nullopt;
          return Move{*room * value[e], *room};
        });
    if (!best) return {std::move(x), false};
    const auto& [e, move] = *best;
    S.apply(e, x, move.step);
    if (options.trace) options.trace->push_back({S.dense(e), move.step, move.improvement});
  }
}

SolveOutcome finish(Run run, const IntVec& c) {
  if (run.unbounded) return Unbounded{};
  Integer objective = dot(c, run.x);
  return Optimal{std::move(run.x), std::move(objective)};
}

}  // namespace

SolveOutcome optimize(const IntMatrix& M, const GraverBasis& G, const IntVec& x, const IntVec& c,
                      const AugmentOptions& options) {
  check_inputs(M, G, x, c);
  const detail::SparseBasis S(G);
  return finish(greedy(S, x, c, c, options), c);
}

SolveOutcome optimize_scaled(const IntMatrix& M, const GraverBasis& G, const IntVec& x,
                             const IntVec& c, const AugmentOptions& options) {
  check_inputs(M, G, x, c);
  const detail::SparseBasis S(G);
  Integer top(0);
  for (Index i = 0; i < c.size(); ++i) top = std::max(top, Integer(abs(c(i))));
  unsigned level = 0;
  while (top > 1) {
    top >>= 1;
    ++level;
  }
  IntVec current = x;
  for (unsigned k = level; k > 0; --k) {
    const Integer scale = Integer(1) << k;
    IntVec ck(c.size());
    for (Index i = 0; i < c.size(); ++i) {
      ck(i) = c(i) / scale;
      if (c(i) < 0 && ck(i) * scale != c(i)) ck(i) -= 1;  // floor
    }
    // A ray that improves the truncated costs says nothing about c; only the
    // last level decides unboundedness.
    Run run = greedy(S, std::move(current), ck, ck, options);
    current = std::move(run.x);
  }
  return finish(greedy(S, std::move(current), c, c, options), c);
}

}  // namespace nfold

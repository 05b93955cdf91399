#pragma once

// Sparse view of a Graver basis and a deterministic parallel arg-max over
// its elements. Shared by the augmentation loop and Phase I.

#include "nfold/core.hpp"
#include "nfold/graver.hpp"

#include <optional>
#include <thread>
#include <utility>
#include <vector>

namespace nfold::detail {

struct Entry {
  Index index;
  Integer value;
};

class SparseBasis {
public:
  explicit SparseBasis(const GraverBasis& G) : basis_(&G) {
    supports_.reserve(G.size());
    for (const IntVec& g : G) {
      std::vector<Entry> s;
      for (Index i = 0; i < g.size(); ++i)
        if (g(i) != 0) s.push_back({i, g(i)});
      supports_.push_back(std::move(s));
    }
  }

  std::size_t size() const { return supports_.size(); }
  const std::vector<Entry>& support(std::size_t e) const { return supports_[e]; }
  const IntVec& dense(std::size_t e) const { return (*basis_)[e]; }

  Integer dot(std::size_t e, const IntVec& c) const {
    Integer total(0);
    for (const Entry& t : supports_[e]) total += c(t.index) * t.value;
    return total;
  }

  /// c1 . g+ - c2 . g-
  Integer directed_value(std::size_t e, const IntVec& c1, const IntVec& c2) const {
    Integer total(0);
    for (const Entry& t : supports_[e]) {
      if (t.value > 0) total += c1(t.index) * t.value;
      else total += c2(t.index) * t.value;
    }
    return total;
  }

  bool has_positive(std::size_t e) const {
    for (const Entry& t : supports_[e])
      if (t.value > 0) return true;
    return false;
  }

  /// Largest l with x - l g >= lower on the support of g; nullopt when g has
  /// no positive entry. Returns 0 when even l = 1 leaves the region.
  std::optional<Integer> max_step(std::size_t e, const IntVec& x, const IntVec* lower = nullptr) const {
    std::optional<Integer> best;
    for (const Entry& t : supports_[e]) {
      if (t.value <= 0) continue;
      Integer room = x(t.index);
      if (lower) room -= (*lower)(t.index);
      if (room < t.value) return Integer(0);
      Integer l = room / t.value;
      if (!best || l < *best) best = std::move(l);
    }
    return best;
  }

  void apply(std::size_t e, IntVec& x, const Integer& step) const {
    for (const Entry& t : supports_[e]) x(t.index) -= step * t.value;
  }

private:
  const GraverBasis* basis_;
  std::vector<std::vector<Entry>> supports_;
};

/// Index with the largest score from `score(e)` (nullopt = not a candidate);
/// ties go to the smallest index. Scores are compared with operator<.
template <typename Score, typename Eval>
std::optional<std::pair<std::size_t, Score>> best_candidate(std::size_t count, unsigned threads,
                                                            Eval&& score) {
  using Result = std::optional<std::pair<std::size_t, Score>>;
  auto scan = [&](std::size_t from, std::size_t to) {
    Result best;
    for (std::size_t e = from; e < to; ++e) {
      std::optional<Score> s = score(e);
      if (!s) continue;
      if (!best || best->second < *s) best.emplace(e, std::move(*s));
    }
    return best;
  };
  if (threads <= 1 || count < 1024) return scan(0, count);
  std::vector<Result> partial(threads);
  std::vector<std::thread> pool;
  const std::size_t chunk = (count + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const std::size_t from = std::min(count, t * chunk);
    const std::size_t to = std::min(count, from + chunk);
    pool.emplace_back([&, t, from, to] { partial[t] = scan(from, to); });
  }
  for (std::thread& th : pool) th.join();
  Result best;
  for (Result& r : partial) {
    if (!r) continue;
    if (!best || best->second < r->second) best = std::move(r);
  }
  return best;
}

}  // namespace nfold::detail

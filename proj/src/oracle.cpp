#include "nfold/oracle.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <map>

namespace nfold {

namespace {

using Row = std::vector<std::int64_t>;

std::int64_t small(const Integer& x) {
  require(abs(x) < (Integer(1) << 40), "oracle: entry too large for enumeration");
  return x.convert_to<std::int64_t>();
}

// Depth-first enumeration of x in [lo, hi]^cols with M x = rhs, pruned by
// the range each row can still reach. visit(x) sees points in lexicographic
// order.
class BoxSearch {
public:
  BoxSearch(const IntMatrix& M, const IntVec& rhs, std::int64_t lo, std::int64_t hi)
      : rows_(M.rows()), cols_(M.cols()), lo_(lo), hi_(hi) {
    a_.assign(static_cast<std::size_t>(rows_), Row(static_cast<std::size_t>(cols_)));
    for (Index i = 0; i < rows_; ++i) {
      rhs_.push_back(small(rhs(i)));
      for (Index j = 0; j < cols_; ++j) a_[i][j] = small(M(i, j));
    }
    // suffix ranges: smallest and largest value of sum_{k >= j} a_ik x_k
    sufmin_.assign(static_cast<std::size_t>(rows_), Row(static_cast<std::size_t>(cols_ + 1), 0));
    sufmax_ = sufmin_;
    for (Index i = 0; i < rows_; ++i) {
      for (Index j = cols_ - 1; j >= 0; --j) {
        const std::int64_t p = a_[i][j] * lo_, q = a_[i][j] * hi_;
        sufmin_[i][j] = sufmin_[i][j + 1] + std::min(p, q);
        sufmax_[i][j] = sufmax_[i][j + 1] + std::max(p, q);
      }
    }
  }

  void run(const std::function<void(const Row&)>& visit) {
    Row x(static_cast<std::size_t>(cols_), 0);
    Row partial(static_cast<std::size_t>(rows_), 0);
    descend(0, x, partial, visit);
  }

private:
  Index rows_, cols_;
  std::int64_t lo_, hi_;
  std::vector<Row> a_;
  Row rhs_;
  std::vector<Row> sufmin_, sufmax_;

  bool reachable(const Row& partial, Index next) const {
    for (Index i = 0; i < rows_; ++i) {
      const std::int64_t need = rhs_[i] - partial[i];
      if (need < sufmin_[i][next] || need > sufmax_[i][next]) return false;
    }
    return true;
  }

  void descend(Index j, Row& x, Row& partial, const std::function<void(const Row&)>& visit) {
    if (!reachable(partial, j)) return;
    if (j == cols_) {
      visit(x);
      return;
    }
    for (std::int64_t v = lo_; v <= hi_; ++v) {
      x[j] = v;
      for (Index i = 0; i < rows_; ++i) partial[i] += a_[i][j] * v;
      descend(j + 1, x, partial, visit);
      for (Index i = 0; i < rows_; ++i) partial[i] -= a_[i][j] * v;
    }
    x[j] = 0;
  }
};

IntVec to_vec(const Row& x) {
  IntVec v(static_cast<Index>(x.size()));
  for (std::size_t i = 0; i < x.size(); ++i) v(static_cast<Index>(i)) = x[i];
  return v;
}

bool leq_conformal(const Row& u, const Row& v) {
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] > 0 && (v[i] < u[i])) return false;
    if (u[i] < 0 && (v[i] > u[i])) return false;
  }
  return true;
}

}  // namespace

std::optional<std::pair<IntVec, Integer>> brute_force_solve(const IntMatrix& M, const IntVec& b,
                                                            const IntVec& c, BoxBound box) {
  require(b.size() == M.rows() && c.size() == M.cols(), "brute_force_solve: length mismatch");
  Row cost;
  for (Index j = 0; j < c.size(); ++j) cost.push_back(small(c(j)));
  std::optional<Row> best;
  std::int64_t best_value = 0;
  BoxSearch(M, b, 0, box.bound).run([&](const Row& x) {
    std::int64_t value = 0;
    for (std::size_t j = 0; j < x.size(); ++j) value += cost[j] * x[j];
    if (!best || value < best_value) {
      best = x;
      best_value = value;
    }
  });
  if (!best) return std::nullopt;
  return std::make_pair(to_vec(*best), Integer(best_value));
}

std::vector<IntVec> brute_force_graver(const IntMatrix& M, BoxBound box) {
  std::vector<Row> kernel;
  BoxSearch(M, zeros(M.rows()), -box.bound, box.bound).run([&](const Row& x) {
    if (std::any_of(x.begin(), x.end(), [](std::int64_t v) { return v != 0; })) kernel.push_back(x);
  });
  std::vector<IntVec> minimal;
  for (std::size_t e = 0; e < kernel.size(); ++e) {
    bool reducible = false;
    for (std::size_t f = 0; f < kernel.size() && !reducible; ++f)
      reducible = f != e && leq_conformal(kernel[f], kernel[e]);
    if (!reducible) minimal.push_back(to_vec(kernel[e]));
  }
  std::sort(minimal.begin(), minimal.end(), CanonicalOrder{});
  return minimal;
}

std::int64_t brute_force_min_rolls(const std::vector<std::int64_t>& widths,
                                   const std::vector<std::int64_t>& demands, std::int64_t u) {
  require(widths.size() == demands.size(), "brute_force_min_rolls: one demand per width");
  const std::size_t t = widths.size();
  // All nonempty patterns y with w . y <= u.
  std::vector<Row> patterns;
  Row y(t, 0);
  std::function<void(std::size_t, std::int64_t)> grow = [&](std::size_t j, std::int64_t room) {
    if (j == t) {
      if (std::any_of(y.begin(), y.end(), [](std::int64_t v) { return v > 0; })) patterns.push_back(y);
      return;
    }
    for (std::int64_t k = 0; k * widths[j] <= room; ++k) {
      y[j] = k;
      grow(j + 1, room - k * widths[j]);
    }
    y[j] = 0;
  };
  grow(0, u);

  // Breadth-first over remaining demand: each roll removes one pattern.
  std::map<Row, std::int64_t> rolls;
  std::deque<Row> queue;
  rolls[demands] = 0;
  queue.push_back(demands);
  while (!queue.empty()) {
    const Row state = queue.front();
    queue.pop_front();
    const std::int64_t used = rolls[state];
    if (std::all_of(state.begin(), state.end(), [](std::int64_t v) { return v == 0; })) return used;
    for (const Row& p : patterns) {
      Row next(t);
      for (std::size_t j = 0; j < t; ++j) next[j] = std::max<std::int64_t>(0, state[j] - p[j]);
      if (rolls.emplace(next, used + 1).second) queue.push_back(next);
    }
  }
  return std::numeric_limits<std::int64_t>::max();  // some demanded width exceeds u
}

}  // namespace nfold

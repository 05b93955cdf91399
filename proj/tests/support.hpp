#pragma once

// Instance generators and independent checks shared by the unit tests and
// the acceptance runner.

#include "nfold/core.hpp"
#include "nfold/encoders.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace nfold::testing {

using Rng = std::mt19937_64;

inline std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline IntMatrix random_matrix(Rng& rng, Index rows, Index cols, std::int64_t lo, std::int64_t hi) {
  IntMatrix M(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) M(i, j) = uniform(rng, lo, hi);
  return M;
}

inline IntVec random_vec(Rng& rng, Index size, std::int64_t lo, std::int64_t hi) {
  IntVec v(size);
  for (Index i = 0; i < size; ++i) v(i) = uniform(rng, lo, hi);
  return v;
}

inline std::set<std::string> as_set(const std::vector<IntVec>& vs) {
  std::set<std::string> out;
  for (const IntVec& v : vs) out.insert(to_string(v));
  return out;
}

/// The twelve elements of G([1 1], I_2)^(4).
inline std::vector<IntVec> example2_four_fold() {
  const std::vector<IntVec> rows = {
      make_vec({1, -1, -1, 1, 0, 0, 0, 0}), make_vec({1, -1, 0, 0, -1, 1, 0, 0}),
      make_vec({1, -1, 0, 0, 0, 0, -1, 1}), make_vec({0, 0, 1, -1, -1, 1, 0, 0}),
      make_vec({0, 0, 1, -1, 0, 0, -1, 1}), make_vec({0, 0, 0, 0, 1, -1, -1, 1}),
  };
  std::vector<IntVec> out;
  for (const IntVec& v : rows) {
    out.push_back(v);
    out.push_back(-v);
  }
  return out;
}

inline IntMatrix example1_matrix() {
  return make_matrix({
      {1, 1, 1, 0, 0, 0, 0, 0, 0},
      {0, 0, 0, 1, 1, 1, 0, 0, 0},
      {0, 0, 0, 0, 0, 0, 1, 1, 1},
      {1, 0, 0, 1, 0, 0, 1, 0, 0},
      {0, 1, 0, 0, 1, 0, 0, 1, 0},
      {0, 0, 1, 0, 0, 1, 0, 0, 1},
  });
}

/// B = I_q, q <= 3, r <= 2, n <= 3, A in [-2,2], b from a random x in
/// [0,3], c in [-5,5]. Every feasible point lies in [0, max b0].
struct SmallInstance {
  NFoldInstance instance;
  std::int64_t box = 0;
};

inline SmallInstance random_small_instance(Rng& rng) {
  SmallInstance out;
  NFoldInstance& inst = out.instance;
  const Index q = uniform(rng, 1, 3), r = uniform(rng, 1, 2);
  inst.n = uniform(rng, 1, 3);
  inst.A = random_matrix(rng, r, q, -2, 2);
  inst.B = identity(q);
  const IntVec x = random_vec(rng, inst.n * q, 0, 3);
  inst.b = inst.matrix() * x;
  inst.c = random_vec(rng, inst.n * q, -5, 5);
  for (Index i = 0; i < q; ++i) out.box = std::max(out.box, inst.b(i).convert_to<std::int64_t>());
  return out;
}

inline std::vector<SmallInstance> small_suite(std::uint64_t seed, int count) {
  Rng rng(seed);
  std::vector<SmallInstance> suite;
  for (int i = 0; i < count; ++i) suite.push_back(random_small_instance(rng));
  return suite;
}

/// 3 x 3 x l tables (l <= 3) whose margins come from a random table with
/// entries <= 3; costs in [-5,5].
inline ThreeWayInstance random_three_way(Rng& rng) {
  ThreeWayInstance tp;
  tp.r = 3;
  tp.s = 3;
  tp.l = uniform(rng, 1, 3);
  IntArray table;
  for (Index i = 0; i < tp.r * tp.s * tp.l; ++i) {
    table.push_back(uniform(rng, 0, 3));
    tp.cost.push_back(uniform(rng, -5, 5));
  }
  const std::vector<Index> shape = {tp.r, tp.s, tp.l};
  tp.u = line_sums(table, shape, 2);
  tp.v = line_sums(table, shape, 1);
  tp.w = line_sums(table, shape, 0);
  return tp;
}

/// Minimum cost over all r x s x l nonnegative tables with the given line
/// sums, by enumeration with remaining-margin bounds. nullopt when none.
inline std::optional<Integer> enumerate_tables(const ThreeWayInstance& tp) {
  const Index r = tp.r, s = tp.s, l = tp.l;
  auto at = [](const IntArray& a, Index i) { return a[static_cast<std::size_t>(i)].convert_to<std::int64_t>(); };
  std::vector<std::int64_t> u(static_cast<std::size_t>(r * s)), v(static_cast<std::size_t>(r * l)),
      w(static_cast<std::size_t>(s * l));
  for (Index i = 0; i < r * s; ++i) u[i] = at(tp.u, i);
  for (Index i = 0; i < r * l; ++i) v[i] = at(tp.v, i);
  for (Index i = 0; i < s * l; ++i) w[i] = at(tp.w, i);
  std::optional<std::int64_t> best;
  std::function<void(Index, std::int64_t)> fill = [&](Index cell, std::int64_t cost) {
    if (cell == r * s * l) {
      if (!best || cost < *best) best = cost;
      return;
    }
    const Index i = cell / (s * l), j = (cell / l) % s, k = cell % l;
    std::int64_t& ru = u[i * s + j];
    std::int64_t& rv = v[i * l + k];
    std::int64_t& rw = w[j * l + k];
    std::int64_t lo = 0, hi = std::min({ru, rv, rw});
    // the last cell of a line takes whatever its margin has left
    if (k == l - 1) lo = std::max(lo, ru);
    if (j == s - 1) lo = std::max(lo, rv);
    if (i == r - 1) lo = std::max(lo, rw);
    const std::int64_t c = at(tp.cost, cell);
    for (std::int64_t x = lo; x <= hi; ++x) {
      ru -= x;
      rv -= x;
      rw -= x;
      fill(cell + 1, cost + c * x);
      ru += x;
      rv += x;
      rw += x;
    }
  };
  fill(0, 0);
  if (!best) return std::nullopt;
  return Integer(*best);
}

struct CutStockCase {
  std::vector<std::int64_t> widths, demands;
  std::int64_t stock = 1;
  CuttingStockInstance instance() const {
    IntArray w(widths.begin(), widths.end()), n(demands.begin(), demands.end());
    return CuttingStockInstance(w, n, Integer(stock));
  }
};

/// t <= 2 widths, stock width <= 9, demands <= 5.
inline CutStockCase random_cutstock(Rng& rng) {
  CutStockCase cs;
  cs.stock = uniform(rng, 1, 9);
  const Index t = uniform(rng, 1, 2);
  for (Index j = 0; j < t; ++j) {
    cs.widths.push_back(uniform(rng, 1, cs.stock));
    cs.demands.push_back(uniform(rng, 0, 5));
  }
  return cs;
}

/// An instance whose only nonnegative kernel directions are the block copies
/// of one positive vector h, with negative cost along every copy. Negating c
/// makes it bounded.
inline NFoldInstance random_ray_instance(Rng& rng) {
  const Index q = uniform(rng, 2, 3);
  IntVec h = random_vec(rng, q, 1, 3);
  // rows h_{i+1} e_1 - h_1 e_{i+1}: kernel spanned by h
  IntMatrix A = IntMatrix::Zero(q - 1, q);
  for (Index i = 0; i + 1 < q; ++i) {
    A(i, 0) = h(i + 1);
    A(i, i + 1) = -h(0);
  }
  NFoldInstance inst;
  inst.A = A;
  inst.B = IntMatrix(1, q);
  const IntVec mix = random_vec(rng, q - 1, -2, 2);
  inst.B.row(0) = mix.transpose() * A;
  inst.n = uniform(rng, 1, 3);
  const IntVec x = random_vec(rng, inst.n * q, 0, 3);
  inst.b = inst.matrix() * x;
  inst.c = random_vec(rng, inst.n * q, -3, 3);
  for (Index k = 0; k < inst.n; ++k) {
    const Integer target = -1 - uniform(rng, 0, 3);
    while (dot(inst.c.segment(k * q, q), h) > target) inst.c(k * q) -= 1;
  }
  return inst;
}

}  // namespace nfold::testing

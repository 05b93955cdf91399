#include "nfold/encoders.hpp"
#include "nfold/oracle.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace nfold;
using namespace nfold::testing;

namespace {

IntArray ints(std::initializer_list<long long> v) { return IntArray(v.begin(), v.end()); }

}  // namespace

TEST_CASE("line-sum matrices") {
  CHECK(line_sum_matrix({3, 3}) == example1_matrix());
  CHECK(line_sum_matrix({2, 2}) == make_matrix({{1, 1, 0, 0}, {0, 0, 1, 1}, {1, 0, 1, 0}, {0, 1, 0, 1}}));
  CHECK(line_sum_matrix({2}) == make_matrix({{1, 1}}));
  CHECK(line_sum_matrix({2, 2, 2}).rows() == 12);
}

TEST_CASE("3-way encoding of a 3 x 3 table") {
  Rng rng(61);
  const ThreeWayInstance tp = random_three_way(rng);
  const TableEncoding enc = encode_3way(tp);
  CHECK(enc.instance.A == example1_matrix());
  CHECK(enc.instance.B == identity(9));
  CHECK(enc.instance.n == tp.l);
  CHECK(enc.shape == std::vector<Index>{3, 3, tp.l});
}

TEST_CASE("table round trip") {
  Rng rng(62);
  for (int trial = 0; trial < 20; ++trial) {
    const ThreeWayInstance tp = random_three_way(rng);
    const TableEncoding enc = encode_3way(tp);
    IntArray table;
    for (Index i = 0; i < 9 * tp.l; ++i) table.push_back(uniform(rng, -9, 9));
    CHECK(enc.decode(enc.encode_point(table)) == table);
    // a table meets its own margins exactly when its encoding satisfies the system
    const std::vector<Index> shape = {3, 3, tp.l};
    ThreeWayInstance own = tp;
    own.u = line_sums(table, shape, 2);
    own.v = line_sums(table, shape, 1);
    own.w = line_sums(table, shape, 0);
    const TableEncoding e2 = encode_3way(own);
    CHECK(e2.instance.matrix() * e2.encode_point(table) == e2.instance.b);
  }
}

TEST_CASE("3-way tables against enumeration") {
  Rng rng(63);
  for (int trial = 0; trial < 6; ++trial) {
    const ThreeWayInstance tp = random_three_way(rng);
    const TableEncoding enc = encode_3way(tp);
    const SolveOutcome out = solve(enc.instance);
    const auto best = enumerate_tables(tp);
    REQUIRE(best.has_value());
    REQUIRE(is_optimal(out));
    CHECK(std::get<Optimal>(out).objective == *best);
    const IntArray table = enc.decode(std::get<Optimal>(out).x);
    CHECK(line_sums(table, enc.shape, 2) == tp.u);
    CHECK(line_sums(table, enc.shape, 1) == tp.v);
    CHECK(line_sums(table, enc.shape, 0) == tp.w);
  }
}

TEST_CASE("d-way encodings") {
  Rng rng(64);
  const ThreeWayInstance tp = random_three_way(rng);
  DWayInstance d;
  d.dims = {3, 3};
  d.l = tp.l;
  d.cost = tp.cost;
  d.margins = {tp.w, tp.v, tp.u};
  CHECK(encode_dway(d).instance == encode_3way(tp).instance);

  DWayInstance one;
  one.dims = {2};
  one.l = 3;
  one.cost = ints({1, 2, 3, 4, 5, 6});
  // table rows (1,0,2) and (0,3,1): layer totals and per-row long sums
  one.margins = {ints({1, 3, 3}), ints({3, 4})};
  const TableEncoding e = encode_dway(one);
  CHECK(e.instance.A == make_matrix({{1, 1}}));
  CHECK(to_string(e.instance.b) == "3 4 1 3 3");
}

TEST_CASE("4-way long tables") {
  Rng rng(65);
  for (int trial = 0; trial < 3; ++trial) {
    DWayInstance tp;
    tp.dims = {2, 2, 2};
    tp.l = 2;
    IntArray table;
    for (int i = 0; i < 16; ++i) {
      table.push_back(uniform(rng, 0, 2));
      tp.cost.push_back(uniform(rng, -3, 3));
    }
    const std::vector<Index> shape = {2, 2, 2, 2};
    for (Index a = 0; a < 4; ++a) tp.margins.push_back(line_sums(table, shape, a));
    const TableEncoding enc = encode_dway(tp);
    const SolveOutcome out = solve(enc.instance);
    REQUIRE(is_optimal(out));
    const IntArray best = enc.decode(std::get<Optimal>(out).x);
    for (Index a = 0; a < 4; ++a) CHECK(line_sums(best, shape, a) == tp.margins[static_cast<std::size_t>(a)]);
    const auto oracle = brute_force_solve(enc.instance.matrix(), enc.instance.b, enc.instance.c, BoxBound(2 * 2));
    REQUIRE(oracle.has_value());
    CHECK(std::get<Optimal>(out).objective == oracle->second);
  }
}

TEST_CASE("shipment") {
  ShipmentInstance sp;
  sp.weights = ints({2});
  sp.counts = ints({3});
  sp.capacities = ints({4, 4});
  sp.costs = ints({1, 1});
  const PackingEncoding enc = encode_shipment(sp);
  CHECK(to_string(enc.instance.b) == "3 2 4 4");
  const SolveOutcome out = solve_packing(enc);
  REQUIRE(is_optimal(out));
  CHECK(std::get<Optimal>(out).objective == 3);
  const Loading load = enc.decode(std::get<Optimal>(out).x);
  CHECK(load.items[0][0] + load.items[1][0] == 3);
  for (std::size_t k = 0; k < 2; ++k) CHECK(2 * load.items[k][0] + load.slack[k] == 4);

  ShipmentInstance none = sp;
  none.counts = ints({0});
  const PackingEncoding e0 = encode_shipment(none);
  const SolveOutcome zero = solve_packing(e0);
  REQUIRE(is_optimal(zero));
  CHECK(std::get<Optimal>(zero).objective == 0);
  CHECK(e0.decode(std::get<Optimal>(zero).x).slack == ints({4, 4}));

  ShipmentInstance heavy = sp;
  heavy.counts = ints({5});
  const PackingEncoding short_enc = encode_shipment(heavy);
  CHECK(short_enc.capacity_shortfall);
  CHECK(is_infeasible(solve_packing(short_enc)));
}

TEST_CASE("shipment conservation on random instances") {
  Rng rng(66);
  for (int trial = 0; trial < 8; ++trial) {
    ShipmentInstance sp;
    const Index t = uniform(rng, 1, 2), v = uniform(rng, 1, 3);
    for (Index j = 0; j < t; ++j) {
      sp.weights.push_back(uniform(rng, 1, 3));
      sp.counts.push_back(uniform(rng, 0, 3));
    }
    for (Index k = 0; k < v; ++k) sp.capacities.push_back(uniform(rng, 0, 8));
    for (Index i = 0; i < t * v; ++i) sp.costs.push_back(uniform(rng, -3, 5));
    const PackingEncoding enc = encode_shipment(sp);
    const SolveOutcome out = solve_packing(enc);
    Integer total = 0;
    for (const Integer& u : sp.capacities) total += u;
    const Integer demand = enc.instance.b(t);  // leftover capacity
    if (!is_optimal(out)) continue;
    CHECK(demand >= 0);
    const Loading load = enc.decode(std::get<Optimal>(out).x);
    for (Index j = 0; j < t; ++j) {
      Integer shipped = 0;
      for (Index k = 0; k < v; ++k) shipped += load.items[k][j];
      CHECK(shipped == sp.counts[j]);
    }
    for (Index k = 0; k < v; ++k) {
      Integer used = load.slack[k];
      for (Index j = 0; j < t; ++j) used += sp.weights[j] * load.items[k][j];
      CHECK(used == sp.capacities[k]);
    }
    const auto oracle = brute_force_solve(enc.instance.matrix(), enc.instance.b, enc.instance.c, BoxBound(8));
    REQUIRE(oracle.has_value());
    CHECK(std::get<Optimal>(out).objective == oracle->second);
  }
}

TEST_CASE("cutting stock encodings") {
  const CuttingStockInstance one(ints({3}), ints({5}), 7);
  CHECK(is_optimal(solve_packing(encode_cutting_stock(one, 3))));
  CHECK(is_infeasible(solve_packing(encode_cutting_stock(one, 2))));
  const CuttingStockInstance empty(ints({3}), ints({0}), 7);
  const PackingEncoding e = encode_cutting_stock(empty, 2);
  const SolveOutcome out = solve_packing(e);
  REQUIRE(is_optimal(out));
  CHECK(e.decode(std::get<Optimal>(out).x).slack == ints({7, 7}));
  CHECK(encode_cutting_stock(empty, 2).instance.c == make_vec({3, 1, 3, 1}));
  CHECK_THROWS_AS(CuttingStockInstance(ints({8}), ints({1}), 7), ContractViolation);
  CHECK_THROWS_AS(encode_cutting_stock(one, 0), ContractViolation);
}

TEST_CASE("minimum rolls") {
  const CuttingStockInstance cs(ints({3, 5}), ints({4, 2}), 7);
  CHECK(min_rolls(cs).rolls == 4);
  CHECK(min_rolls(CuttingStockInstance(ints({3}), ints({2}), 7)).rolls == 1);
  CHECK(min_rolls(CuttingStockInstance(ints({3, 2}), ints({0, 0}), 7)).rolls == 0);

  Rng rng(67);
  for (int trial = 0; trial < 15; ++trial) {
    const CutStockCase c = random_cutstock(rng);
    const MinRolls got = min_rolls(c.instance());
    CHECK(got.rolls == brute_force_min_rolls(c.widths, c.demands, c.stock));
    // monotone along the search: feasible counts never sit below infeasible ones
    for (const RollProbe& a : got.probes)
      for (const RollProbe& b : got.probes)
        if (a.feasible && !b.feasible) CHECK(a.rolls > b.rolls);
    for (const RollProbe& p : got.probes) CHECK(p.feasible == (p.rolls >= got.rolls));
  }
}

#include "nfold/encoders.hpp"

#include "nfold/lattice.hpp"

#include <numeric>

namespace nfold {

namespace {

Index product(const std::vector<Index>& dims) {
  return std::accumulate(dims.begin(), dims.end(), Index{1}, std::multiplies<>());
}

std::vector<Index> without(const std::vector<Index>& dims, Index axis) {
  std::vector<Index> rest;
  for (Index a = 0; a < static_cast<Index>(dims.size()); ++a)
    if (a != axis) rest.push_back(dims[static_cast<std::size_t>(a)]);
  return rest;
}

// Row-major coordinates of `flat` in `dims`.
std::vector<Index> unravel(Index flat, const std::vector<Index>& dims) {
  std::vector<Index> coords(dims.size());
  for (std::size_t a = dims.size(); a-- > 0;) {
    coords[a] = flat % dims[a];
    flat /= dims[a];
  }
  return coords;
}

// Row-major index of `coords` with `axis` dropped.
Index ravel_without(const std::vector<Index>& coords, const std::vector<Index>& dims, Index axis) {
  Index flat = 0;
  for (std::size_t a = 0; a < dims.size(); ++a) {
    if (static_cast<Index>(a) == axis) continue;
    flat = flat * dims[a] + coords[a];
  }
  return flat;
}

void require_size(const IntArray& a, Index size, const char* what) {
  require(static_cast<Index>(a.size()) == size, what);
}

}  // namespace

// ---------------------------------------------------------------------------
// tables

void ThreeWayInstance::validate() const {
  require(r >= 1 && s >= 1 && l >= 1, "ThreeWayInstance: dimensions must be positive");
  require_size(cost, r * s * l, "ThreeWayInstance: cost must be r x s x l");
  require_size(u, r * s, "ThreeWayInstance: u must be r x s");
  require_size(v, r * l, "ThreeWayInstance: v must be r x l");
  require_size(w, s * l, "ThreeWayInstance: w must be s x l");
}

void DWayInstance::validate() const {
  require(!dims.empty(), "DWayInstance: need d >= 2");
  for (Index m : dims) require(m >= 1, "DWayInstance: dimensions must be positive");
  require(l >= 1, "DWayInstance: l must be positive");
  std::vector<Index> shape = dims;
  shape.push_back(l);
  require_size(cost, product(shape), "DWayInstance: cost shape differs from the table");
  require(static_cast<Index>(margins.size()) == d(), "DWayInstance: one margin array per axis");
  for (Index a = 0; a < d(); ++a)
    require_size(margins[static_cast<std::size_t>(a)], product(without(shape, a)),
                 "DWayInstance: margin shape differs from the other axes");
}

IntMatrix line_sum_matrix(const std::vector<Index>& dims) {
  require(!dims.empty(), "line_sum_matrix: need at least one axis");
  const Index q = product(dims);
  const Index k = static_cast<Index>(dims.size());
  Index rows = 0;
  for (Index a = 0; a < k; ++a) rows += product(without(dims, a));
  IntMatrix M = IntMatrix::Zero(rows, q);
  Index offset = 0;
  for (Index a = k - 1; a >= 0; --a) {
    for (Index cell = 0; cell < q; ++cell)
      M(offset + ravel_without(unravel(cell, dims), dims, a), cell) = 1;
    offset += product(without(dims, a));
  }
  return M;
}

IntArray line_sums(const IntArray& table, const std::vector<Index>& shape, Index axis) {
  require_size(table, product(shape), "line_sums: table shape mismatch");
  require(axis >= 0 && axis < static_cast<Index>(shape.size()), "line_sums: axis out of range");
  IntArray sums(static_cast<std::size_t>(product(without(shape, axis))), Integer(0));
  for (Index cell = 0; cell < static_cast<Index>(table.size()); ++cell)
    sums[static_cast<std::size_t>(ravel_without(unravel(cell, shape), shape, axis))] +=
        table[static_cast<std::size_t>(cell)];
  return sums;
}

TableEncoding encode_dway(const DWayInstance& tp) {
  tp.validate();
  const std::vector<Index>& dims = tp.dims;
  const Index q = product(dims);
  const Index l = tp.l;
  const Index k = static_cast<Index>(dims.size());

  TableEncoding enc;
  enc.shape = dims;
  enc.shape.push_back(l);
  NFoldInstance& inst = enc.instance;
  inst.A = line_sum_matrix(dims);
  inst.B = identity(q);
  inst.n = l;
  const Index r = inst.A.rows();
  inst.b = zeros(q + l * r);
  const IntArray& long_sums = tp.margins[static_cast<std::size_t>(k)];
  for (Index cell = 0; cell < q; ++cell) inst.b(cell) = long_sums[static_cast<std::size_t>(cell)];
  for (Index layer = 0; layer < l; ++layer) {
    Index row = q + layer * r;
    for (Index a = k - 1; a >= 0; --a) {
      const IntArray& m = tp.margins[static_cast<std::size_t>(a)];
      const Index count = product(without(dims, a));
      for (Index rest = 0; rest < count; ++rest)
        inst.b(row++) = m[static_cast<std::size_t>(rest * l + layer)];
    }
  }
  inst.c = zeros(l * q);
  for (Index layer = 0; layer < l; ++layer)
    for (Index cell = 0; cell < q; ++cell)
      inst.c(layer * q + cell) = tp.cost[static_cast<std::size_t>(cell * l + layer)];
  return enc;
}

TableEncoding encode_3way(const ThreeWayInstance& tp) {
  tp.validate();
  DWayInstance d;
  d.dims = {tp.r, tp.s};
  d.l = tp.l;
  d.cost = tp.cost;
  d.margins = {tp.w, tp.v, tp.u};
  return encode_dway(d);
}

IntArray TableEncoding::decode(const IntVec& x) const {
  const Index l = shape.back();
  const Index q = product(shape) / l;
  require(x.size() == q * l, "TableEncoding::decode: length mismatch");
  IntArray table(static_cast<std::size_t>(q * l));
  for (Index layer = 0; layer < l; ++layer)
    for (Index cell = 0; cell < q; ++cell)
      table[static_cast<std::size_t>(cell * l + layer)] = x(layer * q + cell);
  return table;
}

IntVec TableEncoding::encode_point(const IntArray& table) const {
  const Index l = shape.back();
  const Index q = product(shape) / l;
  require_size(table, q * l, "TableEncoding::encode_point: shape mismatch");
  IntVec x(q * l);
  for (Index layer = 0; layer < l; ++layer)
    for (Index cell = 0; cell < q; ++cell)
      x(layer * q + cell) = table[static_cast<std::size_t>(cell * l + layer)];
  return x;
}

// ---------------------------------------------------------------------------
// packing

void ShipmentInstance::validate() const {
  require(types() >= 1 && vessels() >= 1, "ShipmentInstance: need at least one type and one vessel");
  require_size(counts, types(), "ShipmentInstance: one count per type");
  require_size(costs, types() * vessels(), "ShipmentInstance: costs must be types x vessels");
  for (const Integer& w : weights) require(w > 0, "ShipmentInstance: weights must be positive");
  for (const Integer& n : counts) require(n >= 0, "ShipmentInstance: counts must be nonnegative");
  for (const Integer& u : capacities) require(u >= 0, "ShipmentInstance: capacities must be nonnegative");
}

namespace {

// A = (w, 1), B = I over `bins` bins of the given capacities.
NFoldInstance packing_instance(const IntArray& weights, const IntArray& counts,
                               const IntArray& capacities) {
  const Index t = static_cast<Index>(weights.size());
  const Index q = t + 1;
  const Index n = static_cast<Index>(capacities.size());
  NFoldInstance inst;
  inst.A = IntMatrix(1, q);
  for (Index j = 0; j < t; ++j) inst.A(0, j) = weights[static_cast<std::size_t>(j)];
  inst.A(0, t) = 1;
  inst.B = identity(q);
  inst.n = n;
  inst.b = zeros(q + n);
  Integer slack(0);
  for (const Integer& u : capacities) slack += u;
  for (Index j = 0; j < t; ++j) {
    inst.b(j) = counts[static_cast<std::size_t>(j)];
    slack -= counts[static_cast<std::size_t>(j)] * weights[static_cast<std::size_t>(j)];
  }
  inst.b(t) = slack;
  for (Index k = 0; k < n; ++k) inst.b(q + k) = capacities[static_cast<std::size_t>(k)];
  inst.c = zeros(n * q);
  return inst;
}

}  // namespace

PackingEncoding encode_shipment(const ShipmentInstance& sp) {
  sp.validate();
  PackingEncoding enc;
  enc.instance = packing_instance(sp.weights, sp.counts, sp.capacities);
  const Index t = sp.types(), q = t + 1;
  for (Index k = 0; k < sp.vessels(); ++k)
    for (Index j = 0; j < t; ++j)
      enc.instance.c(k * q + j) = sp.costs[static_cast<std::size_t>(j * sp.vessels() + k)];
  enc.capacity_shortfall = enc.instance.b(t) < 0;
  return enc;
}

Loading PackingEncoding::decode(const IntVec& x) const {
  const Index q = instance.q(), t = q - 1, n = instance.n;
  require(x.size() == n * q, "PackingEncoding::decode: length mismatch");
  Loading out;
  for (Index k = 0; k < n; ++k) {
    IntArray items(static_cast<std::size_t>(t));
    for (Index j = 0; j < t; ++j) items[static_cast<std::size_t>(j)] = x(k * q + j);
    out.items.push_back(std::move(items));
    out.slack.push_back(x(k * q + t));
  }
  return out;
}

CuttingStockInstance::CuttingStockInstance(IntArray w, IntArray n, Integer u)
    : widths(std::move(w)), demands(std::move(n)), stock_width(std::move(u)) {
  require(!widths.empty(), "CuttingStockInstance: need at least one width");
  require(widths.size() == demands.size(), "CuttingStockInstance: one demand per width");
  require(stock_width > 0, "CuttingStockInstance: stock width must be positive");
  for (const Integer& x : widths)
    require(x > 0 && x <= stock_width, "CuttingStockInstance: widths must lie in 1..stock width");
  for (const Integer& x : demands) require(x >= 0, "CuttingStockInstance: demands must be nonnegative");
}

Integer CuttingStockInstance::lower_bound() const {
  Integer total(0);
  for (std::size_t j = 0; j < widths.size(); ++j) total += demands[j] * widths[j];
  return -floor_div(-total, stock_width);
}

Integer CuttingStockInstance::upper_bound() const {
  Integer total(0);
  for (std::size_t j = 0; j < widths.size(); ++j) {
    const Integer per_roll = stock_width / widths[j];
    total += -floor_div(-demands[j], per_roll);
  }
  return total;
}

PackingEncoding encode_cutting_stock(const CuttingStockInstance& cs, Index rolls) {
  require(rolls >= 1, "encode_cutting_stock: rolls must be positive");
  PackingEncoding enc;
  enc.instance = packing_instance(cs.widths, cs.demands,
                                  IntArray(static_cast<std::size_t>(rolls), cs.stock_width));
  const Index t = cs.types(), q = t + 1;
  for (Index k = 0; k < rolls; ++k) {
    for (Index j = 0; j < t; ++j) enc.instance.c(k * q + j) = cs.widths[static_cast<std::size_t>(j)];
    enc.instance.c(k * q + t) = 1;
  }
  enc.capacity_shortfall = enc.instance.b(t) < 0;
  return enc;
}

SolveOutcome solve_packing(const PackingEncoding& enc, const SolveOptions& options) {
  if (enc.capacity_shortfall) return Infeasible{};
  return solve(enc.instance, options);
}

MinRolls min_rolls(const CuttingStockInstance& cs, const SolveOptions& options) {
  MinRolls result;
  Index lo = cs.lower_bound().convert_to<Index>();
  Index hi = cs.upper_bound().convert_to<Index>();
  while (lo < hi) {
    const Index mid = lo + (hi - lo) / 2;
    const bool feasible = is_optimal(solve_packing(encode_cutting_stock(cs, mid), options));
    result.probes.push_back({mid, feasible});
    if (feasible) hi = mid;
    else lo = mid + 1;
  }
  result.rolls = lo;
  return result;
}

}  // namespace nfold

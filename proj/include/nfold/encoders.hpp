#pragma once

// Encodings of long transportation, shipment, and cutting-stock problems as
// n-fold programs, with decode maps back to natural coordinates.
//
// Arrays are flat and row-major over their declared shape (last index
// fastest).

#include "nfold/core.hpp"
#include "nfold/solve.hpp"

#include <optional>
#include <vector>

namespace nfold {

using IntArray = std::vector<Integer>;

// ---------------------------------------------------------------------------
// multiway transportation

/// r x s x l tables with prescribed line sums.
struct ThreeWayInstance {
  Index r = 1, s = 1, l = 1;
  IntArray cost;  // r x s x l
  IntArray u;     // r x s, sums over k
  IntArray v;     // r x l, sums over j
  IntArray w;     // s x l, sums over i
  void validate() const;
};

/// m_1 x .. x m_{d-1} x l tables with all line sums prescribed.
struct DWayInstance {
  std::vector<Index> dims;  // m_1 .. m_{d-1}
  Index l = 1;
  IntArray cost;                 // m_1 x .. x m_{d-1} x l
  std::vector<IntArray> margins;  // margins[a]: sums over axis a, shaped by the other axes
  Index d() const { return static_cast<Index>(dims.size()) + 1; }
  void validate() const;
};

/// An encoded table problem. Layer k of the table is block k of x.
struct TableEncoding {
  NFoldInstance instance;
  std::vector<Index> shape;  // full table shape, long axis last
  IntArray decode(const IntVec& x) const;
  IntVec encode_point(const IntArray& table) const;
};

/// The line-sum equations of m_1 x .. x m_k arrays: one family per axis, in
/// decreasing axis order, each indexed row-major by the remaining axes. For
/// two axes these are the row sums followed by the column sums.
IntMatrix line_sum_matrix(const std::vector<Index>& dims);

TableEncoding encode_3way(const ThreeWayInstance& tp);
TableEncoding encode_dway(const DWayInstance& tp);

/// Sums of `table` (shape `shape`) over `axis`, shaped by the other axes.
IntArray line_sums(const IntArray& table, const std::vector<Index>& shape, Index axis);

// ---------------------------------------------------------------------------
// packing

struct ShipmentInstance {
  IntArray weights;     // w_1..w_t, positive
  IntArray counts;      // n_1..n_t
  IntArray capacities;  // u_1..u_v
  IntArray costs;       // t x v, cost of one item of type j on vessel k
  Index types() const { return static_cast<Index>(weights.size()); }
  Index vessels() const { return static_cast<Index>(capacities.size()); }
  void validate() const;
};

/// Per bin (vessel or roll): item counts by type and the unused capacity.
struct Loading {
  std::vector<IntArray> items;  // bins x types
  IntArray slack;               // bins
};

struct PackingEncoding {
  NFoldInstance instance;
  /// Total demand exceeds total capacity: no solve is needed.
  bool capacity_shortfall = false;
  Loading decode(const IntVec& x) const;
};

PackingEncoding encode_shipment(const ShipmentInstance& sp);

struct CuttingStockInstance {
  IntArray widths;   // w_1..w_t, 1 <= w_j <= stock_width
  IntArray demands;  // n_1..n_t
  Integer stock_width;
  CuttingStockInstance(IntArray widths, IntArray demands, Integer stock_width);
  Index types() const { return static_cast<Index>(widths.size()); }
  /// ceil(sum n_j w_j / u)
  Integer lower_bound() const;
  /// sum ceil(n_j / floor(u / w_j)), always feasible.
  Integer upper_bound() const;
};

PackingEncoding encode_cutting_stock(const CuttingStockInstance& cs, Index rolls);

/// Solves an encoded packing problem, short-circuiting capacity shortfalls.
SolveOutcome solve_packing(const PackingEncoding& enc, const SolveOptions& options = {});

struct RollProbe {
  Index rolls;
  bool feasible;
};

struct MinRolls {
  Index rolls = 0;
  std::vector<RollProbe> probes;  // in the order they ran
};

/// Smallest roll count whose encoding is feasible, by binary search between
/// lower_bound and upper_bound.
MinRolls min_rolls(const CuttingStockInstance& cs, const SolveOptions& options = {});

}  // namespace nfold

#pragma once

// Exact column-style Hermite reduction. Supplies kernel lattice bases and
// integer (not necessarily nonnegative) solutions of M z = b.

#include "nfold/core.hpp"

#include <optional>
#include <vector>

namespace nfold {

/// M * U == H with U unimodular and H in column echelon form: column k < rank
/// has its leading nonzero (positive) entry in row pivot_rows[k], pivot rows
/// strictly increase, entries left of a pivot are reduced modulo it, and
/// columns rank.. of H are zero.
struct ColumnEchelon {
  IntMatrix H;
  IntMatrix U;
  Index rank = 0;
  std::vector<Index> pivot_rows;
};

ColumnEchelon column_echelon(const IntMatrix& M);

/// Some z in Z^cols with M z = b, or nullopt if the lattice system has no
/// integer solution.
std::optional<IntVec> integer_solution(const IntMatrix& M, const IntVec& b);

/// Integer solution from a precomputed echelon form of M.
std::optional<IntVec> integer_solution(const ColumnEchelon& echelon, const IntVec& b);

/// Floor division for exact integers.
Integer floor_div(const Integer& a, const Integer& b);

}  // namespace nfold

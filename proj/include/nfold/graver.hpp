#pragma once

// Graver bases: the ⊑-minimal nonzero vectors of the kernel lattice
// L(M) = { x in Z^n : M x = 0 }, plus conformal reduction and decomposition
// against a computed basis.

#include "nfold/core.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace nfold {

/// Negation-closed set of pairwise ⊑-incomparable kernel vectors, held in
/// CanonicalOrder. Remembers the matrix that generated it.
class GraverBasis {
public:
  GraverBasis() = default;

  /// Sorts and deduplicates `elements`; does not check minimality.
  GraverBasis(IntMatrix matrix, std::vector<IntVec> elements);

  const std::vector<IntVec>& elements() const { return elements_; }
  const IntMatrix& matrix() const { return matrix_; }
  Index matrix_cols() const { return matrix_.cols(); }

  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }
  const IntVec& operator[](std::size_t i) const { return elements_[i]; }

  bool contains(const IntVec& v) const;

  /// Largest absolute entry over all elements (0 for an empty basis).
  Integer max_abs_entry() const;

private:
  IntMatrix matrix_;
  std::vector<IntVec> elements_;
};

class GraverBudgetExceeded : public std::runtime_error {
public:
  explicit GraverBudgetExceeded(std::size_t limit);
};

struct GraverOptions {
  /// Abort with GraverBudgetExceeded once the working set grows past this
  /// many vectors. Zero means unlimited.
  std::size_t max_elements = 0;

  /// Optional box: keep only Graver elements g with |g_i| <= box[i] for every
  /// i where box[i] >= 0. The result is then a test set for every program
  /// whose feasible region fits in a box of those widths, not a full basis.
  IntVec box;
};

/// Generators of the kernel lattice of M; empty when the lattice is {0}.
std::vector<IntVec> kernel_lattice_basis(const IntMatrix& M);

GraverBasis graver_basis(const IntMatrix& M, const GraverOptions& options = {});

/// Subtracts basis elements conformal to v until none is left.
IntVec conformal_normal_form(IntVec v, const GraverBasis& G);

/// Basis elements g_1.. (with repetition) with sum v and every g_i ⊑ v.
/// Throws ContractViolation when v is not in the kernel of G's matrix.
std::vector<IntVec> conformal_decompose(const IntVec& v, const GraverBasis& G);

}  // namespace nfold

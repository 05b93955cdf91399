#pragma once

// Block structure of n-fold Graver bases: the type of a block vector, the
// embedding maps between block counts, the Graver complexity g(A,B), and
// G([A,B]^(n)) assembled from G([A,B]^(g)) once n exceeds g.

#include "nfold/core.hpp"
#include "nfold/graver.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace nfold {

/// Number of nonzero blocks.
Index type_of(const BlockVector& x);

/// y in Z^(n q) with y^(k_t) = x^t and zero blocks elsewhere. `indices` are
/// 1-based, strictly increasing, at most n, one per block of x.
IntVec embed(const BlockVector& x, const std::vector<Index>& indices, Index n);

struct GraverComplexity {
  enum class Certificate { Formula, DirectStabilization };
  Index value = 1;
  Certificate certified_by = Certificate::Formula;
};

const char* certificate_name(GraverComplexity::Certificate c);

/// Raised when the formula and the direct computation disagree.
class ComplexityMismatch : public std::logic_error {
public:
  ComplexityMismatch(Index formula, Index direct);
};

struct ComplexityOptions {
  /// Also compute G([A,B]^(m)) directly for m = 1..g+1 and confirm that the
  /// largest type seen is g.
  bool verify = false;
  /// Budget for each Graver computation involved (0 = unlimited).
  std::size_t max_elements = 0;
};

/// g(A,B): the largest 1-norm of a nonnegative element of G(B Γ), where the
/// columns of Γ are the elements of G(A). 1 when G(A) is empty.
GraverComplexity graver_complexity(const IntMatrix& A, const IntMatrix& B,
                                   const ComplexityOptions& options = {});

/// Largest type over G([A,B]^(m)) for m = 1..upto, computed directly.
Index max_type_direct(const IntMatrix& A, const IntMatrix& B, Index upto,
                      std::size_t max_elements = 0);

/// The union over all increasing index tuples of embed applied to the
/// elements of `base` (a Graver basis of an m-fold matrix with block size q),
/// as a basis of `target` (the n-fold matrix, n >= m).
GraverBasis union_of_embeddings(const GraverBasis& base, Index q, const IntMatrix& target);

struct NFoldGraverOptions {
  /// Known g(A,B); computed when absent.
  std::optional<Index> complexity;
  std::size_t max_elements = 0;
};

/// G([A,B]^(n)): direct completion when n <= g(A,B), otherwise the union of
/// embeddings of G([A,B]^(g)).
GraverBasis nfold_graver_basis(const IntMatrix& A, const IntMatrix& B, Index n,
                               const NFoldGraverOptions& options = {});

}  // namespace nfold

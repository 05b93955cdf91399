#pragma once

// End-to-end n-fold solver: Phase I finds a feasible point or proves there
// is none, Phase II augments it to an optimum or detects unboundedness.

#include "nfold/augment.hpp"
#include "nfold/core.hpp"
#include "nfold/graver.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

namespace nfold {

/// The auxiliary program for [A,B]^(n) x = b: every block gains slack pairs
/// for the B rows and the A rows, A' = (A, 0, 0, I_r, -I_r) and
/// B' = (B, I_s, -I_s, 0, 0), with cost 1 on slacks and 0 on x.
struct AuxiliaryProgram {
  NFoldInstance instance;
  /// x = 0; block 1 B-slacks carry (b0)+ and (b0)-; block k A-slacks carry
  /// (b^k)+ and (b^k)-.
  IntVec initial;
  /// Position of original variable i in the auxiliary layout.
  std::vector<Index> original_var_index;
};

AuxiliaryProgram auxiliary_instance(const IntMatrix& A, const IntMatrix& B, Index n, const IntVec& b);

enum class PhaseOne {
  /// Start from any integer solution of [A,B]^(n) z = b and drive the total
  /// negativity to zero by Graver moves of the original matrix.
  Relaxation,
  /// Optimize the auxiliary program from its written-down start.
  Auxiliary,
};

struct SolveOptions {
  PhaseOne phase_one = PhaseOne::Relaxation;
  /// When every variable is bounded by an equality row with coefficients of
  /// one sign, use Graver elements that fit the bounding box only.
  bool truncate = true;
  /// Phase II through optimize_scaled instead of optimize.
  bool scaled = false;
  unsigned threads = 1;
  /// Budget per Graver computation (0 = unlimited).
  std::size_t max_elements = 0;
  /// Budget for computing g(A,B); past it the n-fold basis is computed by
  /// direct completion instead.
  std::size_t complexity_budget = 100000;
  /// Phase II moves are appended here when set.
  std::vector<AugmentStep>* trace = nullptr;
};

struct SolveStats {
  std::size_t graver_size = 0;            // test set used in Phase II
  std::optional<Index> graver_complexity;  // when the n-fold route computed it
  bool truncated = false;
  std::size_t augmentation_steps = 0;
  std::size_t phase1_steps = 0;
  double wall_ms = 0;
};

struct SolveReport {
  SolveOutcome outcome;
  SolveStats stats;
};

/// A feasible x >= 0 of [A,B]^(n) x = b via the auxiliary program, or
/// nullopt when its optimum is positive.
std::optional<IntVec> find_feasible(const IntMatrix& A, const IntMatrix& B, Index n, const IntVec& b,
                                    const SolveOptions& options = {});

SolveReport solve_report(const NFoldInstance& instance, const SolveOptions& options = {});

inline SolveOutcome solve(const NFoldInstance& instance, const SolveOptions& options = {}) {
  return solve_report(instance, options).outcome;
}

/// Upper bounds on x_i over { x >= lower : M x = b } implied by rows whose
/// coefficients share one sign; nullopt where no such row covers i.
std::vector<std::optional<Integer>> implied_upper_bounds(const IntMatrix& M, const IntVec& b,
                                                         const IntVec& lower);

/// G([A,B]^(n)) through a process-wide cache keyed by (A, B, n).
std::shared_ptr<const GraverBasis> cached_nfold_graver_basis(const IntMatrix& A, const IntMatrix& B, Index n,
                                             const SolveOptions& options = {},
                                             std::optional<Index>* complexity = nullptr);

void clear_graver_cache();

}  // namespace nfold

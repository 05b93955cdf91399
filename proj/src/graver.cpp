#include "nfold/graver.hpp"

#include "completion.hpp"
#include "nfold/lattice.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace nfold {

GraverBasis::GraverBasis(IntMatrix matrix, std::vector<IntVec> elements)
    : matrix_(std::move(matrix)), elements_(std::move(elements)) {
  for (const IntVec& e : elements_)
    require(e.size() == matrix_.cols(), "GraverBasis: element length differs from matrix columns");
  std::sort(elements_.begin(), elements_.end(), CanonicalOrder{});
  elements_.erase(std::unique(elements_.begin(), elements_.end(), vec_equal), elements_.end());
}

bool GraverBasis::contains(const IntVec& v) const {
  return std::binary_search(elements_.begin(), elements_.end(), v, CanonicalOrder{});
}

Integer GraverBasis::max_abs_entry() const {
  Integer best(0);
  for (const IntVec& e : elements_)
    for (Index i = 0; i < e.size(); ++i) best = std::max(best, Integer(abs(e(i))));
  return best;
}

GraverBudgetExceeded::GraverBudgetExceeded(std::size_t limit)
    : std::runtime_error("Graver completion exceeded its budget of " + std::to_string(limit) +
                         " vectors") {}

std::vector<IntVec> kernel_lattice_basis(const IntMatrix& M) {
  const ColumnEchelon e = column_echelon(M);
  std::vector<IntVec> basis;
  for (Index k = e.rank; k < M.cols(); ++k) basis.emplace_back(e.U.col(k));
  return basis;
}

namespace {

template <typename Scalar>
std::vector<IntVec> run_completion(const IntMatrix& generators, const std::vector<Index>& pivots,
                                   bool unit_pivots, std::size_t budget, const IntVec& box) {
  using Vec = std::vector<Scalar>;
  Vec bounds;
  for (Index i = 0; i < box.size(); ++i) {
    if constexpr (std::is_same_v<Scalar, Integer>) {
      bounds.push_back(box(i) < 0 ? Integer(-1) : box(i));
    } else {
      constexpr std::int64_t top = std::numeric_limits<std::int64_t>::max();
      bounds.push_back(box(i) < 0 ? -1 : box(i) > top ? top : box(i).template convert_to<std::int64_t>());
    }
  }
  std::vector<Vec> gens;
  for (Index k = 0; k < generators.cols(); ++k) {
    Vec v(static_cast<std::size_t>(generators.rows()));
    for (Index i = 0; i < generators.rows(); ++i) {
      if constexpr (std::is_same_v<Scalar, Integer>) {
        v[static_cast<std::size_t>(i)] = generators(i, k);
      } else {
        const Integer& x = generators(i, k);
        if (x > std::numeric_limits<std::int64_t>::max() / 4 ||
            x < -(std::numeric_limits<std::int64_t>::max() / 4))
          throw detail::ArithmeticOverflow{};
        v[static_cast<std::size_t>(i)] = x.template convert_to<std::int64_t>();
      }
    }
    gens.push_back(std::move(v));
  }
  detail::LiftingCompletion<Scalar> engine(generators.rows(), budget, std::move(bounds));
  std::vector<Vec> raw = engine.run(gens, pivots, unit_pivots);
  std::vector<IntVec> out;
  out.reserve(raw.size());
  for (const Vec& v : raw) {
    IntVec x(static_cast<Index>(v.size()));
    for (std::size_t i = 0; i < v.size(); ++i) x(static_cast<Index>(i)) = Integer(v[i]);
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace

GraverBasis graver_basis(const IntMatrix& M, const GraverOptions& options) {
  require(options.box.size() == 0 || options.box.size() == M.cols(),
          "graver_basis: box length differs from matrix columns");
  const std::vector<IntVec> kernel = kernel_lattice_basis(M);
  if (kernel.empty()) return GraverBasis(M, {});

  // Put the generators in column echelon form over the coordinates: the
  // pivot coordinates then carry an injective projection of the lattice.
  IntMatrix gens(M.cols(), static_cast<Index>(kernel.size()));
  for (std::size_t k = 0; k < kernel.size(); ++k) gens.col(static_cast<Index>(k)) = kernel[k];
  const ColumnEchelon e = column_echelon(gens);
  IntMatrix basis = e.H.leftCols(e.rank);
  bool unit_pivots = true;
  for (Index k = 0; k < e.rank; ++k)
    if (basis(e.pivot_rows[static_cast<std::size_t>(k)], k) != 1) unit_pivots = false;

  std::vector<IntVec> elements;
  try {
    elements = run_completion<std::int64_t>(basis, e.pivot_rows, unit_pivots, options.max_elements,
                                                  options.box);
  } catch (const detail::ArithmeticOverflow&) {
    elements = run_completion<Integer>(basis, e.pivot_rows, unit_pivots, options.max_elements,
                                                  options.box);
  }
  return GraverBasis(M, std::move(elements));
}

namespace {

// Largest k with k*g ⊑ v, assuming g ⊑ v and g != 0.
Integer conformal_multiple(const IntVec& g, const IntVec& v) {
  Integer factor(-1);
  for (Index i = 0; i < g.size(); ++i) {
    if (g(i) == 0) continue;
    Integer ratio = v(i) / g(i);
    if (factor < 0 || ratio < factor) factor = ratio;
  }
  return factor;
}

}  // namespace

IntVec conformal_normal_form(IntVec v, const GraverBasis& G) {
  require(v.size() == G.matrix_cols(), "conformal_normal_form: length mismatch");
  for (const IntVec& g : G) {
    if (is_zero(v)) break;
    if (!conformal_leq(g, v)) continue;
    v -= conformal_multiple(g, v) * g;
  }
  return v;
}

std::vector<IntVec> conformal_decompose(const IntVec& v, const GraverBasis& G) {
  require(v.size() == G.matrix_cols(), "conformal_decompose: length mismatch");
  require(is_zero(G.matrix() * v), "conformal_decompose: vector is not in the kernel");
  std::vector<IntVec> parts;
  IntVec rest = v;
  for (const IntVec& g : G) {
    if (is_zero(rest)) break;
    if (!conformal_leq(g, rest)) continue;
    const Integer k = conformal_multiple(g, rest);
    for (Integer t = 0; t < k; ++t) parts.push_back(g);
    rest -= k * g;
  }
  require(is_zero(rest), "conformal_decompose: basis does not span the kernel conformally");
  return parts;
}

}  // namespace nfold

#include "nfold/nfold.hpp"

#include <algorithm>
#include <string>

namespace nfold {

Index type_of(const BlockVector& x) {
  Index count = 0;
  for (Index k = 0; k < x.blocks(); ++k)
    if (!is_zero(IntVec(x.block(k)))) ++count;
  return count;
}

IntVec embed(const BlockVector& x, const std::vector<Index>& indices, Index n) {
  require(static_cast<Index>(indices.size()) == x.blocks(), "embed: one index per block required");
  const Index q = x.block_size();
  IntVec y = zeros(n * q);
  Index previous = 0;
  for (std::size_t t = 0; t < indices.size(); ++t) {
    const Index k = indices[t];
    require(k > previous && k <= n, "embed: indices must be strictly increasing within 1..n");
    y.segment((k - 1) * q, q) = x.block(static_cast<Index>(t));
    previous = k;
  }
  return y;
}

const char* certificate_name(GraverComplexity::Certificate c) {
  return c == GraverComplexity::Certificate::Formula ? "formula" : "direct-stabilization";
}

ComplexityMismatch::ComplexityMismatch(Index formula, Index direct)
    : std::logic_error("Graver complexity mismatch: formula gives " + std::to_string(formula) +
                       ", direct stabilization gives " + std::to_string(direct)) {}

Index max_type_direct(const IntMatrix& A, const IntMatrix& B, Index upto,
                      std::size_t max_elements) {
  require(A.cols() == B.cols(), "max_type_direct: A and B need the same column count");
  Index best = 0;
  GraverOptions opts;
  opts.max_elements = max_elements;
  for (Index m = 1; m <= upto; ++m) {
    const GraverBasis G = graver_basis(nfold_matrix(A, B, m), opts);
    for (const IntVec& g : G) best = std::max(best, type_of(BlockVector(g, m, A.cols())));
  }
  return best;
}

GraverComplexity graver_complexity(const IntMatrix& A, const IntMatrix& B,
                                   const ComplexityOptions& options) {
  require(A.cols() == B.cols(), "graver_complexity: A and B need the same column count");
  GraverOptions opts;
  opts.max_elements = options.max_elements;
  const GraverBasis GA = graver_basis(A, opts);
  GraverComplexity result;
  if (!GA.empty()) {
    IntMatrix gamma(A.cols(), static_cast<Index>(GA.size()));
    for (std::size_t k = 0; k < GA.size(); ++k) gamma.col(static_cast<Index>(k)) = GA[k];
    const GraverBasis H = graver_basis(IntMatrix(B * gamma), opts);
    Integer best(1);
    for (const IntVec& h : H)
      if (is_nonnegative(h)) best = std::max(best, l1_norm(h));
    result.value = best.convert_to<Index>();
  }
  if (options.verify) {
    const Index direct = GA.empty() ? 1 : max_type_direct(A, B, result.value + 1, options.max_elements);
    if (direct != result.value) throw ComplexityMismatch(result.value, direct);
    result.certified_by = GraverComplexity::Certificate::DirectStabilization;
  }
  return result;
}

namespace {

// Calls visit(tuple) for every strictly increasing tuple of t values in 1..n.
template <typename Visit>
void for_each_tuple(Index t, Index n, Visit&& visit) {
  std::vector<Index> tuple(static_cast<std::size_t>(t));
  for (Index i = 0; i < t; ++i) tuple[static_cast<std::size_t>(i)] = i + 1;
  for (;;) {
    visit(tuple);
    Index i = t - 1;
    while (i >= 0 && tuple[static_cast<std::size_t>(i)] == n - t + i + 1) --i;
    if (i < 0) return;
    ++tuple[static_cast<std::size_t>(i)];
    for (Index j = i + 1; j < t; ++j)
      tuple[static_cast<std::size_t>(j)] = tuple[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace

GraverBasis union_of_embeddings(const GraverBasis& base, Index q, const IntMatrix& target) {
  require(q >= 1 && base.matrix_cols() % q == 0, "union_of_embeddings: block size mismatch");
  require(target.cols() % q == 0, "union_of_embeddings: target block size mismatch");
  const Index m = base.matrix_cols() / q;
  const Index n = target.cols() / q;
  require(n >= m, "union_of_embeddings: target has fewer blocks than the base");

  // Embedding x over all m-tuples hits the same vectors as embedding its
  // nonzero blocks over all t-tuples, and distinct compressed vectors give
  // distinct images, so no deduplication of the output is needed.
  std::vector<IntVec> compressed;
  for (const IntVec& g : base) {
    const BlockVector x(g, m, q);
    std::vector<IntVec> blocks;
    for (Index k = 0; k < m; ++k)
      if (!is_zero(IntVec(x.block(k)))) blocks.emplace_back(x.block(k));
    IntVec c(static_cast<Index>(blocks.size()) * q);
    for (std::size_t t = 0; t < blocks.size(); ++t) c.segment(static_cast<Index>(t) * q, q) = blocks[t];
    compressed.push_back(std::move(c));
  }
  std::sort(compressed.begin(), compressed.end(), CanonicalOrder{});
  compressed.erase(std::unique(compressed.begin(), compressed.end(), vec_equal), compressed.end());

  std::vector<IntVec> out;
  for (const IntVec& c : compressed) {
    const Index t = c.size() / q;
    const BlockVector x(c, t, q);
    for_each_tuple(t, n, [&](const std::vector<Index>& tuple) { out.push_back(embed(x, tuple, n)); });
  }
  return GraverBasis(target, std::move(out));
}

GraverBasis nfold_graver_basis(const IntMatrix& A, const IntMatrix& B, Index n,
                               const NFoldGraverOptions& options) {
  require(A.cols() == B.cols(), "nfold_graver_basis: A and B need the same column count");
  require(n >= 1, "nfold_graver_basis: n must be positive");
  Index g = 0;
  if (options.complexity) {
    g = *options.complexity;
  } else {
    ComplexityOptions copts;
    copts.max_elements = options.max_elements;
    g = graver_complexity(A, B, copts).value;
  }
  GraverOptions gopts;
  gopts.max_elements = options.max_elements;
  const IntMatrix M = nfold_matrix(A, B, n);
  if (n <= g) return graver_basis(M, gopts);
  return union_of_embeddings(graver_basis(nfold_matrix(A, B, g), gopts), A.cols(), M);
}

}  // namespace nfold

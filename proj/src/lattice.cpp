#include "nfold/lattice.hpp"

namespace nfold {

Integer floor_div(const Integer& a, const Integer& b) {
  require(b != 0, "floor_div: division by zero");
  Integer q = a / b;  // truncates toward zero
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

namespace {

void swap_columns(IntMatrix& H, IntMatrix& U, Index a, Index b) {
  if (a == b) return;
  H.col(a).swap(H.col(b));
  U.col(a).swap(U.col(b));
}

// col_dst -= factor * col_src on H and U together.
void axpy_columns(IntMatrix& H, IntMatrix& U, Index dst, Index src, const Integer& factor) {
  if (factor == 0) return;
  for (Index i = 0; i < H.rows(); ++i) H(i, dst) -= factor * H(i, src);
  for (Index i = 0; i < U.rows(); ++i) U(i, dst) -= factor * U(i, src);
}

void negate_column(IntMatrix& H, IntMatrix& U, Index c) {
  H.col(c) = -H.col(c);
  U.col(c) = -U.col(c);
}

}  // namespace

ColumnEchelon column_echelon(const IntMatrix& M) {
  ColumnEchelon e;
  e.H = M;
  e.U = identity(M.cols());
  IntMatrix& H = e.H;
  IntMatrix& U = e.U;
  const Index cols = M.cols();
  Index p = 0;
  for (Index row = 0; row < M.rows() && p < cols; ++row) {
    // Euclid across columns p.. until only column p is nonzero in this row.
    for (;;) {
      Index best = -1;
      for (Index j = p; j < cols; ++j) {
        if (H(row, j) == 0) continue;
        if (best < 0 || abs(H(row, j)) < abs(H(row, best))) best = j;
      }
      if (best < 0) break;
      swap_columns(H, U, p, best);
      bool done = true;
      for (Index j = p + 1; j < cols; ++j) {
        if (H(row, j) == 0) continue;
        axpy_columns(H, U, j, p, floor_div(H(row, j), H(row, p)));
        if (H(row, j) != 0) done = false;
      }
      if (done) break;
    }
    if (H(row, p) == 0) continue;
    if (H(row, p) < 0) negate_column(H, U, p);
    for (Index l = 0; l < p; ++l)
      axpy_columns(H, U, l, p, floor_div(H(row, l), H(row, p)));
    e.pivot_rows.push_back(row);
    ++p;
  }
  e.rank = p;
  return e;
}

std::optional<IntVec> integer_solution(const ColumnEchelon& e, const IntVec& b) {
  require(b.size() == e.H.rows(), "integer_solution: right-hand side length mismatch");
  IntVec y = zeros(e.H.cols());
  for (Index k = 0; k < e.rank; ++k) {
    const Index row = e.pivot_rows[static_cast<std::size_t>(k)];
    Integer rest = b(row);
    for (Index l = 0; l < k; ++l) rest -= e.H(row, l) * y(l);
    if (rest % e.H(row, k) != 0) return std::nullopt;
    y(k) = rest / e.H(row, k);
  }
  IntVec check = e.H * y;
  if (!vec_equal(check, b)) return std::nullopt;
  return IntVec(e.U * y);
}

std::optional<IntVec> integer_solution(const IntMatrix& M, const IntVec& b) {
  return integer_solution(column_echelon(M), b);
}

}  // namespace nfold

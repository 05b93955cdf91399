#include "nfold/core.hpp"

#include <sstream>

namespace nfold {

IntVec make_vec(std::initializer_list<long long> entries) {
  IntVec v(static_cast<Index>(entries.size()));
  Index i = 0;
  for (long long e : entries) v(i++) = Integer(e);
  return v;
}

IntMatrix make_matrix(std::initializer_list<std::initializer_list<long long>> rows) {
  const Index r = static_cast<Index>(rows.size());
  const Index c = r == 0 ? 0 : static_cast<Index>(rows.begin()->size());
  IntMatrix M(r, c);
  Index i = 0;
  for (const auto& row : rows) {
    require(static_cast<Index>(row.size()) == c, "make_matrix: ragged rows");
    Index j = 0;
    for (long long e : row) M(i, j++) = Integer(e);
    ++i;
  }
  return M;
}

IntMatrix identity(Index size) {
  IntMatrix I = IntMatrix::Constant(size, size, Integer(0));
  for (Index i = 0; i < size; ++i) I(i, i) = 1;
  return I;
}

IntVec zeros(Index size) { return IntVec::Constant(size, Integer(0)); }

bool vec_equal(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) return false;
  for (Index i = 0; i < a.size(); ++i)
    if (a(i) != b(i)) return false;
  return true;
}

IntMatrix nfold_matrix(const IntMatrix& A, const IntMatrix& B, Index n) {
  require(A.cols() == B.cols(), "nfold_matrix: A and B must have the same column count");
  require(n >= 1, "nfold_matrix: n must be positive");
  const Index r = A.rows();
  const Index s = B.rows();
  const Index q = A.cols();
  IntMatrix M = IntMatrix::Constant(s + n * r, n * q, Integer(0));
  for (Index k = 0; k < n; ++k) {
    M.block(0, k * q, s, q) = B;
    M.block(s + k * r, k * q, r, q) = A;
  }
  return M;
}

BlockVector::BlockVector(IntVec flat, Index n, Index q)
    : flat_(std::move(flat)), n_(n), q_(q) {
  require(n >= 0 && q >= 0 && flat_.size() == n * q,
          "BlockVector: flat length must equal n * q");
}

void NFoldInstance::validate() const {
  require(q() >= 1, "instance: q must be at least 1");
  require(B.cols() == q(), "instance: A and B must have the same column count");
  require(n >= 1, "instance: n must be positive");
  require(b.size() == s() + n * r(), "instance: b must have length s + n r");
  require(c.size() == n * q(), "instance: c must have length n q");
}

bool NFoldInstance::operator==(const NFoldInstance& other) const {
  return A.rows() == other.A.rows() && A.cols() == other.A.cols() &&
         B.rows() == other.B.rows() && B.cols() == other.B.cols() && A == other.A &&
         B == other.B && n == other.n && vec_equal(b, other.b) && vec_equal(c, other.c);
}

const char* status_name(const SolveOutcome& o) {
  if (is_optimal(o)) return "optimal";
  if (is_unbounded(o)) return "unbounded";
  return "infeasible";
}

std::string to_string(const IntVec& v) {
  std::ostringstream out;
  for (Index i = 0; i < v.size(); ++i) {
    if (i) out << ' ';
    out << v(i);
  }
  return out.str();
}

}  // namespace nfold

#pragma once

// Exact integer vectors and matrices, the conformal order, and n-fold
// matrix assembly. Every other module builds on these types.

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <Eigen/Core>

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace nfold {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Index = Eigen::Index;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using IntVec = Vector<Integer>;
using IntMatrix = Matrix<Integer>;

/// Raised when a caller breaks an operation's precondition (dimension
/// mismatch, malformed index tuple, vector outside the kernel, ...).
class ContractViolation : public std::invalid_argument {
public:
  explicit ContractViolation(const std::string& what)
      : std::invalid_argument(what) {}
};

inline void require(bool condition, const char* what) {
  if (!condition) throw ContractViolation(what);
}

// ---------------------------------------------------------------------------
// construction helpers

IntVec make_vec(std::initializer_list<long long> entries);
IntMatrix make_matrix(std::initializer_list<std::initializer_list<long long>> rows);
IntMatrix identity(Index size);
IntVec zeros(Index size);

// ---------------------------------------------------------------------------
// sign split and the conformal order

template <typename Derived>
auto positive_part(const Eigen::MatrixBase<Derived>& v) {
  using Scalar = typename Derived::Scalar;
  return v.cwiseMax(Scalar(0)).eval();
}

template <typename Derived>
auto negative_part(const Eigen::MatrixBase<Derived>& v) {
  using Scalar = typename Derived::Scalar;
  return (-v).cwiseMax(Scalar(0)).eval();
}

/// u ⊑ v: same closed orthant and |u_i| <= |v_i| for every coordinate.
template <typename DerivedU, typename DerivedV>
bool conformal_leq(const Eigen::MatrixBase<DerivedU>& u,
                   const Eigen::MatrixBase<DerivedV>& v) {
  require(u.size() == v.size(), "conformal_leq: length mismatch");
  using Scalar = typename DerivedU::Scalar;
  for (Index i = 0; i < u.size(); ++i) {
    const Scalar& ui = u(i);
    const Scalar& vi = v(i);
    if (ui > 0) {
      if (vi < ui) return false;
    } else if (ui < 0) {
      if (vi > ui) return false;
    }
  }
  return true;
}

template <typename Derived>
bool is_nonnegative(const Eigen::MatrixBase<Derived>& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (v(i) < 0) return false;
  return true;
}

template <typename Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (v(i) != 0) return false;
  return true;
}

template <typename Derived>
auto l1_norm(const Eigen::MatrixBase<Derived>& v) {
  using Scalar = typename Derived::Scalar;
  using std::abs;
  Scalar total(0);
  for (Index i = 0; i < v.size(); ++i) total += abs(v(i));
  return total;
}

/// Exact dot product; Eigen's dot() works too but this avoids the
/// conjugation machinery for a type that has none.
template <typename DerivedA, typename DerivedB>
auto dot(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  require(a.size() == b.size(), "dot: length mismatch");
  using Scalar = typename DerivedA::Scalar;
  Scalar total(0);
  for (Index i = 0; i < a.size(); ++i) total += a(i) * b(i);
  return total;
}

/// Canonical total order on vectors of equal length: lexicographically
/// larger vectors come first, so a positive-leading element precedes its
/// negation.
struct CanonicalOrder {
  template <typename DerivedA, typename DerivedB>
  bool operator()(const Eigen::MatrixBase<DerivedA>& a,
                  const Eigen::MatrixBase<DerivedB>& b) const {
    const Index len = std::min(a.size(), b.size());
    for (Index i = 0; i < len; ++i) {
      if (a(i) != b(i)) return a(i) > b(i);
    }
    return a.size() < b.size();
  }
};

bool vec_equal(const IntVec& a, const IntVec& b);

// ---------------------------------------------------------------------------
// n-fold structure

/// (s + n r) x (n q) matrix: n copies of B side by side on top, n copies of
/// A on the block diagonal below.
IntMatrix nfold_matrix(const IntMatrix& A, const IntMatrix& B, Index n);

/// Flat vector of n blocks of q entries. Blocks are addressed 0-based.
class BlockVector {
public:
  BlockVector(IntVec flat, Index n, Index q);

  Index blocks() const { return n_; }
  Index block_size() const { return q_; }
  const IntVec& flat() const { return flat_; }

  auto block(Index k) const { return flat_.segment(k * q_, q_); }
  auto block(Index k) { return flat_.segment(k * q_, q_); }

private:
  IntVec flat_;
  Index n_;
  Index q_;
};

/// min { c x : [A,B]^(n) x = b, x >= 0 integer }.
struct NFoldInstance {
  IntMatrix A;  // r x q
  IntMatrix B;  // s x q
  Index n = 1;
  IntVec b;     // (b0 in Z^s, b1..bn in Z^r)
  IntVec c;     // (c1..cn in Z^q)

  Index q() const { return A.cols(); }
  Index r() const { return A.rows(); }
  Index s() const { return B.rows(); }

  /// Throws ContractViolation unless every dimension is consistent.
  void validate() const;

  IntMatrix matrix() const { return nfold_matrix(A, B, n); }

  auto b0() const { return b.head(s()); }
  auto b_block(Index k) const { return b.segment(s() + k * r(), r()); }
  auto c_block(Index k) const { return c.segment(k * q(), q()); }

  bool operator==(const NFoldInstance& other) const;
};

// ---------------------------------------------------------------------------
// outcomes

struct Infeasible {};
struct Unbounded {};
struct Optimal {
  IntVec x;
  Integer objective;
};

using SolveOutcome = std::variant<Infeasible, Unbounded, Optimal>;

inline bool is_optimal(const SolveOutcome& o) { return std::holds_alternative<Optimal>(o); }
inline bool is_infeasible(const SolveOutcome& o) { return std::holds_alternative<Infeasible>(o); }
inline bool is_unbounded(const SolveOutcome& o) { return std::holds_alternative<Unbounded>(o); }
const char* status_name(const SolveOutcome& o);

// ---------------------------------------------------------------------------
// formatting

std::string to_string(const IntVec& v);

}  // namespace nfold

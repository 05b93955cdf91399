#include "nfold/core.hpp"

#include <doctest.h>

#include <algorithm>

using namespace nfold;

TEST_CASE("sign split") {
  CHECK(to_string(positive_part(make_vec({1, -2, 0}))) == "1 0 0");
  CHECK(to_string(negative_part(make_vec({1, -2, 0}))) == "0 2 0");
  CHECK(to_string(positive_part(make_vec({0, 0}))) == "0 0");
  CHECK(to_string(negative_part(make_vec({0, 0}))) == "0 0");
  const IntVec g = make_vec({1, -1, -1, 1});
  CHECK(to_string(positive_part(g)) == "1 0 0 1");
  CHECK(to_string(negative_part(g)) == "0 1 1 0");
  CHECK(vec_equal(positive_part(g) - negative_part(g), g));
}

TEST_CASE("conformal order") {
  CHECK(conformal_leq(make_vec({1, -1}), make_vec({2, -1})));
  CHECK_FALSE(conformal_leq(make_vec({1, -1}), make_vec({1, 1})));
  CHECK(conformal_leq(make_vec({1, -1, -1, 1}), make_vec({2, -2, -2, 2})));
  CHECK_FALSE(conformal_leq(make_vec({2, -2, -2, 2}), make_vec({1, -1, -1, 1})));
  CHECK(conformal_leq(zeros(3), make_vec({-4, 0, 7})));
  CHECK_THROWS_AS(conformal_leq(make_vec({1}), make_vec({1, 2})), ContractViolation);
}

TEST_CASE("canonical order puts the positive-leading sign first") {
  std::vector<IntVec> vs = {make_vec({-1, 1}), make_vec({0, 1}), make_vec({1, -1}), make_vec({0, -1})};
  std::sort(vs.begin(), vs.end(), CanonicalOrder{});
  CHECK(to_string(vs[0]) == "1 -1");
  CHECK(to_string(vs[1]) == "0 1");
  CHECK(to_string(vs[2]) == "0 -1");
  CHECK(to_string(vs[3]) == "-1 1");
}

TEST_CASE("n-fold matrix") {
  const IntMatrix A = make_matrix({{1, 1}});
  const IntMatrix B = identity(2);
  CHECK(nfold_matrix(A, B, 2) == make_matrix({{1, 0, 1, 0}, {0, 1, 0, 1}, {1, 1, 0, 0}, {0, 0, 1, 1}}));
  CHECK(nfold_matrix(A, B, 4) == make_matrix({
                                     {1, 0, 1, 0, 1, 0, 1, 0},
                                     {0, 1, 0, 1, 0, 1, 0, 1},
                                     {1, 1, 0, 0, 0, 0, 0, 0},
                                     {0, 0, 1, 1, 0, 0, 0, 0},
                                     {0, 0, 0, 0, 1, 1, 0, 0},
                                     {0, 0, 0, 0, 0, 0, 1, 1},
                                 }));
  const IntMatrix A2 = make_matrix({{2, -1, 3}}), B2 = make_matrix({{0, 1, 1}, {5, 0, -2}});
  CHECK(nfold_matrix(A2, B2, 1) == make_matrix({{0, 1, 1}, {5, 0, -2}, {2, -1, 3}}));
  CHECK_THROWS_AS(nfold_matrix(A, identity(3), 2), ContractViolation);
}

TEST_CASE("n-fold matrix dimensions") {
  for (Index n = 1; n <= 5; ++n) {
    const IntMatrix M = nfold_matrix(make_matrix({{1, 2, 3}, {0, 1, 0}}), make_matrix({{1, 1, 1}}), n);
    CHECK(M.rows() == 1 + 2 * n);
    CHECK(M.cols() == 3 * n);
  }
}

TEST_CASE("block vectors") {
  BlockVector x(make_vec({1, 2, 3, 4, 5, 6}), 3, 2);
  CHECK(x.blocks() == 3);
  CHECK(x.block_size() == 2);
  CHECK(to_string(IntVec(x.block(1))) == "3 4");
  x.block(2)(0) = 9;
  CHECK(to_string(x.flat()) == "1 2 3 4 9 6");
  CHECK_THROWS_AS(BlockVector(make_vec({1, 2, 3}), 2, 2), ContractViolation);
}

TEST_CASE("instance validation") {
  NFoldInstance inst;
  inst.A = make_matrix({{1, 1}});
  inst.B = identity(2);
  inst.n = 2;
  inst.b = make_vec({1, 1, 1, 1});
  inst.c = make_vec({1, 2, 4, 3});
  CHECK_NOTHROW(inst.validate());
  CHECK(to_string(IntVec(inst.b0())) == "1 1");
  CHECK(to_string(IntVec(inst.c_block(1))) == "4 3");
  NFoldInstance bad = inst;
  bad.b = make_vec({1, 1, 1});
  CHECK_THROWS_AS(bad.validate(), ContractViolation);
  bad = inst;
  bad.c = make_vec({1, 2, 4});
  CHECK_THROWS_AS(bad.validate(), ContractViolation);
  bad = inst;
  bad.B = identity(3);
  CHECK_THROWS_AS(bad.validate(), ContractViolation);
}

TEST_CASE("exact arithmetic beyond 64 bits") {
  const Integer big = Integer(1) << 100;
  const IntVec v = make_vec({1, 1});
  IntVec w(2);
  w << big, -big;
  CHECK(dot(v, w) == 0);
  CHECK(l1_norm(w) == big * 2);
  CHECK(to_string(positive_part(w)) == big.str() + " 0");
}

TEST_CASE("outcome names") {
  CHECK(std::string(status_name(SolveOutcome{Infeasible{}})) == "infeasible");
  CHECK(std::string(status_name(SolveOutcome{Unbounded{}})) == "unbounded");
  CHECK(std::string(status_name(SolveOutcome{Optimal{zeros(1), 0}})) == "optimal");
}

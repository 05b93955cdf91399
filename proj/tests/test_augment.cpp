#include "nfold/augment.hpp"
#include "nfold/graver.hpp"
#include "nfold/oracle.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace nfold;
using namespace nfold::testing;

namespace {

const IntMatrix kM = make_matrix({{1, 0, 1, 0}, {0, 1, 0, 1}, {1, 1, 0, 0}, {0, 0, 1, 1}});

}  // namespace

TEST_CASE("directed improving direction") {
  const GraverBasis G = graver_basis(kM);
  const IntVec c = make_vec({3, 1, 1, 0});
  auto g = directed_improving_direction(G, make_vec({1, 0, 0, 1}), c, c);
  REQUIRE(g.has_value());
  CHECK(to_string(*g) == "1 -1 -1 1");
  CHECK_FALSE(directed_improving_direction(G, zeros(4), c, c).has_value());
  CHECK_FALSE(directed_improving_direction(G, make_vec({1, 0, 0, 1}), zeros(4), zeros(4)).has_value());
  // separate costs for the two sign parts: c1 . g+ - c2 . g- with g = (1,-1,-1,1)
  CHECK(directed_improving_direction(G, make_vec({1, 0, 0, 1}), make_vec({1, 0, 0, 1}), make_vec({0, 5, 5, 0})) ==
        std::nullopt);
  CHECK(directed_improving_direction(G, make_vec({1, 0, 0, 1}), make_vec({5, 0, 0, 0}), make_vec({0, 1, 1, 0}))
            .has_value());
}

TEST_CASE("step length") {
  CHECK(max_step(make_vec({5, 0, 0, 5}), make_vec({1, -1, -1, 1})) == Integer(5));
  CHECK(max_step(make_vec({0, 3, 3, 0}), make_vec({-1, 1, 1, -1})) == Integer(3));
  CHECK(max_step(make_vec({7, 4}), make_vec({2, 1})) == Integer(3));
  CHECK_FALSE(max_step(make_vec({2, 2}), make_vec({-1, -1})).has_value());
  CHECK_THROWS_AS(max_step(make_vec({0, 0}), make_vec({1, 0})), ContractViolation);
}

TEST_CASE("optimize examples") {
  const GraverBasis G = graver_basis(kM);
  const IntVec c = make_vec({1, 2, 4, 3});
  for (bool scaled : {false, true}) {
    auto run = scaled ? optimize_scaled : optimize;
    const SolveOutcome out = run(kM, G, make_vec({0, 1, 1, 0}), c, {});
    REQUIRE(is_optimal(out));
    CHECK(to_string(std::get<Optimal>(out).x) == "1 0 0 1");
    CHECK(std::get<Optimal>(out).objective == 4);

    const SolveOutcome same = run(kM, G, make_vec({0, 1, 1, 0}), zeros(4), {});
    REQUIRE(is_optimal(same));
    CHECK(to_string(std::get<Optimal>(same).x) == "0 1 1 0");
    CHECK(std::get<Optimal>(same).objective == 0);

    const IntMatrix Z = IntMatrix::Zero(2, 1);
    const GraverBasis unit(Z, {make_vec({1}), make_vec({-1})});
    CHECK(is_unbounded(run(Z, unit, make_vec({0}), make_vec({-1}), {})));
  }
}

TEST_CASE("optimize rejects foreign test sets") {
  const GraverBasis wrong(make_matrix({{1, 1, 1, 1}}), {make_vec({1, -1, 0, 0})});
  CHECK_THROWS_AS(optimize(kM, wrong, make_vec({0, 1, 1, 0}), make_vec({1, 2, 4, 3})), ContractViolation);
}

TEST_CASE("every move strictly improves and the end point is Graver-optimal") {
  Rng rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    const Index q = uniform(rng, 2, 3);
    const IntMatrix A = random_matrix(rng, 1, q, -2, 2);
    const IntMatrix M = nfold_matrix(A, identity(q), 2);
    const GraverBasis G = graver_basis(M);
    const IntVec x0 = random_vec(rng, M.cols(), 0, 3);
    const IntVec c = random_vec(rng, M.cols(), -5, 5);
    for (bool scaled : {false, true}) {
      std::vector<AugmentStep> trace;
      const SolveOutcome out = (scaled ? optimize_scaled : optimize)(M, G, x0, c, {.trace = &trace});
      REQUIRE(is_optimal(out));  // B = I bounds everything
      const Optimal& opt = std::get<Optimal>(out);
      IntVec x = x0;
      Integer value = dot(c, x);
      for (const AugmentStep& s : trace) {
        x -= s.step * s.direction;
        CHECK(is_nonnegative(x));
        const Integer next = dot(c, x);
        if (!scaled) CHECK(next < value);
        CHECK(s.improvement > 0);
        value = next;
      }
      CHECK(vec_equal(x, opt.x));
      CHECK(value == opt.objective);
      CHECK(M * opt.x == M * x0);
      for (const IntVec& g : G)
        if (is_nonnegative(IntVec(opt.x - g))) CHECK(dot(c, g) <= 0);
      // the optimum matches enumeration
      const auto best = brute_force_solve(M, M * x0, c, BoxBound(6));
      REQUIRE(best.has_value());
      CHECK(best->second == opt.objective);
    }
  }
}

TEST_CASE("a single-bit cost gives the same iterates with and without scaling") {
  Rng rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    const IntMatrix M = nfold_matrix(random_matrix(rng, 1, 3, -2, 2), identity(3), 2);
    const GraverBasis G = graver_basis(M);
    const IntVec x0 = random_vec(rng, M.cols(), 0, 3);
    const IntVec c = random_vec(rng, M.cols(), 0, 1);
    std::vector<AugmentStep> plain, scaled;
    const SolveOutcome a = optimize(M, G, x0, c, {.trace = &plain});
    const SolveOutcome b = optimize_scaled(M, G, x0, c, {.trace = &scaled});
    REQUIRE(plain.size() == scaled.size());
    for (std::size_t i = 0; i < plain.size(); ++i) {
      CHECK(vec_equal(plain[i].direction, scaled[i].direction));
      CHECK(plain[i].step == scaled[i].step);
    }
    CHECK(vec_equal(std::get<Optimal>(a).x, std::get<Optimal>(b).x));
  }
}

TEST_CASE("threaded scans reproduce the single-threaded run") {
  Rng rng(43);
  const IntMatrix M = nfold_matrix(make_matrix({{1, 2, -1}}), identity(3), 6);
  const GraverBasis G = graver_basis(M);
  REQUIRE(G.size() >= 1024);
  for (int trial = 0; trial < 5; ++trial) {
    const IntVec x0 = random_vec(rng, M.cols(), 0, 3);
    const IntVec c = random_vec(rng, M.cols(), -5, 5);
    std::vector<AugmentStep> one, many;
    const SolveOutcome a = optimize(M, G, x0, c, {.threads = 1, .trace = &one});
    const SolveOutcome b = optimize(M, G, x0, c, {.threads = 4, .trace = &many});
    REQUIRE(one.size() == many.size());
    for (std::size_t i = 0; i < one.size(); ++i) CHECK(vec_equal(one[i].direction, many[i].direction));
    CHECK(std::get<Optimal>(a).objective == std::get<Optimal>(b).objective);
  }
}

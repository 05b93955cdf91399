#include "nfold/solve.hpp"

#include "nfold/lattice.hpp"
#include "nfold/nfold.hpp"
#include "scan.hpp"

#include <chrono>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace nfold {

AuxiliaryProgram auxiliary_instance(const IntMatrix& A, const IntMatrix& B, Index n, const IntVec& b) {
  require(A.cols() == B.cols(), "auxiliary_instance: A and B need the same column count");
  require(n >= 1, "auxiliary_instance: n must be positive");
  const Index q = A.cols(), r = A.rows(), s = B.rows();
  require(b.size() == s + n * r, "auxiliary_instance: b has the wrong length");
  const Index width = q + 2 * s + 2 * r;

  AuxiliaryProgram aux;
  NFoldInstance& inst = aux.instance;
  inst.A = IntMatrix::Zero(r, width);
  inst.A.leftCols(q) = A;
  inst.A.block(0, q + 2 * s, r, r) = identity(r);
  inst.A.block(0, q + 2 * s + r, r, r) = -identity(r);
  inst.B = IntMatrix::Zero(s, width);
  inst.B.leftCols(q) = B;
  inst.B.block(0, q, s, s) = identity(s);
  inst.B.block(0, q + s, s, s) = -identity(s);
  inst.n = n;
  inst.b = b;
  inst.c = zeros(n * width);
  for (Index k = 0; k < n; ++k) inst.c.segment(k * width + q, width - q).setConstant(Integer(1));

  aux.initial = zeros(n * width);
  aux.initial.segment(q, s) = positive_part(IntVec(b.head(s)));
  aux.initial.segment(q + s, s) = negative_part(IntVec(b.head(s)));
  for (Index k = 0; k < n; ++k) {
    const IntVec bk = b.segment(s + k * r, r);
    aux.initial.segment(k * width + q + 2 * s, r) = positive_part(bk);
    aux.initial.segment(k * width + q + 2 * s + r, r) = negative_part(bk);
  }
  for (Index k = 0; k < n; ++k)
    for (Index j = 0; j < q; ++j) aux.original_var_index.push_back(k * width + j);
  return aux;
}

// ---------------------------------------------------------------------------
// cache

namespace {

std::string key_of(const IntMatrix& A, const IntMatrix& B, Index n) {
  std::ostringstream out;
  auto put = [&](const IntMatrix& M) {
    out << M.rows() << 'x' << M.cols() << ':';
    for (Index i = 0; i < M.rows(); ++i)
      for (Index j = 0; j < M.cols(); ++j) out << M(i, j) << ',';
    out << ';';
  };
  put(A);
  put(B);
  out << n;
  return out.str();
}

struct Cache {
  std::mutex mutex;
  std::map<std::string, std::shared_ptr<const GraverBasis>> bases;
  std::map<std::string, std::optional<Index>> complexity;  // nullopt: over budget
};

Cache& cache() {
  static Cache c;
  return c;
}

std::optional<Index> cached_complexity(const IntMatrix& A, const IntMatrix& B,
                                       const SolveOptions& options) {
  const std::string key = key_of(A, B, 0);
  {
    std::lock_guard<std::mutex> lock(cache().mutex);
    auto it = cache().complexity.find(key);
    if (it != cache().complexity.end()) return it->second;
  }
  std::optional<Index> g;
  try {
    ComplexityOptions copts;
    copts.max_elements = options.complexity_budget;
    g = graver_complexity(A, B, copts).value;
  } catch (const GraverBudgetExceeded&) {
  }
  std::lock_guard<std::mutex> lock(cache().mutex);
  cache().complexity.emplace(key, g);
  return g;
}

}  // namespace

std::shared_ptr<const GraverBasis> cached_nfold_graver_basis(const IntMatrix& A, const IntMatrix& B,
                                                             Index n, const SolveOptions& options,
                                                             std::optional<Index>* complexity) {
  const std::optional<Index> g = cached_complexity(A, B, options);
  if (complexity) *complexity = g;
  const std::string key = key_of(A, B, n);
  {
    std::lock_guard<std::mutex> lock(cache().mutex);
    auto it = cache().bases.find(key);
    if (it != cache().bases.end()) return it->second;
  }
  std::shared_ptr<const GraverBasis> basis;
  if (g) {
    NFoldGraverOptions nopts;
    nopts.complexity = *g;
    nopts.max_elements = options.max_elements;
    basis = std::make_shared<const GraverBasis>(nfold_graver_basis(A, B, n, nopts));
  } else {
    GraverOptions gopts;
    gopts.max_elements = options.max_elements;
    basis = std::make_shared<const GraverBasis>(graver_basis(nfold_matrix(A, B, n), gopts));
  }
  std::lock_guard<std::mutex> lock(cache().mutex);
  return cache().bases.emplace(key, basis).first->second;
}

void clear_graver_cache() {
  std::lock_guard<std::mutex> lock(cache().mutex);
  cache().bases.clear();
  cache().complexity.clear();
}

// ---------------------------------------------------------------------------
// Phase I

std::vector<std::optional<Integer>> implied_upper_bounds(const IntMatrix& M, const IntVec& b,
                                                         const IntVec& lower) {
  require(b.size() == M.rows() && lower.size() == M.cols(), "implied_upper_bounds: length mismatch");
  std::vector<std::optional<Integer>> upper(static_cast<std::size_t>(M.cols()));
  for (Index row = 0; row < M.rows(); ++row) {
    bool any_pos = false, any_neg = false;
    for (Index j = 0; j < M.cols(); ++j) {
      any_pos = any_pos || M(row, j) > 0;
      any_neg = any_neg || M(row, j) < 0;
    }
    if (any_pos == any_neg) continue;  // mixed signs or a zero row
    const int sign = any_pos ? 1 : -1;
    Integer base = sign * b(row);
    for (Index j = 0; j < M.cols(); ++j) base -= sign * M(row, j) * lower(j);
    for (Index j = 0; j < M.cols(); ++j) {
      const Integer a = sign * M(row, j);
      if (a == 0) continue;
      Integer h = floor_div(base + a * lower(j), a);
      auto& slot = upper[static_cast<std::size_t>(j)];
      if (!slot || h < *slot) slot = std::move(h);
    }
  }
  return upper;
}

namespace {

Integer negativity(const IntVec& x) {
  Integer total(0);
  for (Index i = 0; i < x.size(); ++i)
    if (x(i) < 0) total -= x(i);
  return total;
}

struct PhaseOneRun {
  IntVec x;
  std::size_t steps = 0;
};

// Minimizes the total negativity over { y in x + L : y >= lower } with moves
// from S, each taken with its best step length.
PhaseOneRun reduce_negativity(const detail::SparseBasis& S, IntVec x, const IntVec& lower,
                              unsigned threads) {
  PhaseOneRun run;
  auto neg = [](const Integer& v) { return v < 0 ? Integer(-v) : Integer(0); };
  for (;;) {
    if (negativity(x) == 0) break;
    struct Move {
      Integer decrease;
      Integer step;
      bool operator<(const Move& o) const { return decrease < o.decrease; }
    };
    const auto best = detail::best_candidate<Move>(
        S.size(), threads, [&](std::size_t e) -> std::optional<Move> {
          const auto& sup = S.support(e);
          bool helps = false;
          for (const detail::Entry& t : sup)
            if (t.value < 0 && x(t.index) < 0) helps = true;
          if (!helps) return std::nullopt;
          const std::optional<Integer> room = S.max_step(e, x, &lower);
          if (room && *room == 0) return std::nullopt;
          // The change in negativity is convex piecewise linear in the step,
          // so some breakpoint (rounded) or an end of the range is optimal.
          std::vector<Integer> candidates{Integer(1)};
          if (room) candidates.push_back(*room);
          for (const detail::Entry& t : sup) {
            const Integer f = floor_div(x(t.index), t.value);
            candidates.push_back(f);
            candidates.push_back(f + 1);
          }
          std::optional<Move> pick;
          for (const Integer& l : candidates) {
            if (l < 1 || (room && l > *room)) continue;
            Integer decrease(0);
            for (const detail::Entry& t : sup)
              decrease += neg(x(t.index)) - neg(x(t.index) - l * t.value);
            if (decrease <= 0) continue;
            if (!pick || pick->decrease < decrease || (pick->decrease == decrease && l < pick->step))
              pick = Move{decrease, l};
          }
          return pick;
        });
    if (!best) break;
    S.apply(best->first, x, best->second.step);
    ++run.steps;
  }
  run.x = std::move(x);
  return run;
}

IntVec lower_of(const IntVec& z) { return z.cwiseMin(Integer(0)).eval(); }

bool all_bounded(const std::vector<std::optional<Integer>>& upper) {
  for (const auto& u : upper)
    if (!u) return false;
  return true;
}

IntVec box_widths(const std::vector<std::optional<Integer>>& upper, const IntVec& lower) {
  IntVec w(lower.size());
  for (Index i = 0; i < lower.size(); ++i) w(i) = *upper[static_cast<std::size_t>(i)] - lower(i);
  return w;
}

}  // namespace

std::optional<IntVec> find_feasible(const IntMatrix& A, const IntMatrix& B, Index n, const IntVec& b,
                                    const SolveOptions& options) {
  const AuxiliaryProgram aux = auxiliary_instance(A, B, n, b);
  const NFoldInstance& inst = aux.instance;
  const auto G = cached_nfold_graver_basis(inst.A, inst.B, n, options);
  AugmentOptions aopts;
  aopts.threads = options.threads;
  const SolveOutcome out = optimize(inst.matrix(), *G, aux.initial, inst.c, aopts);
  // The auxiliary objective is bounded below by zero.
  if (!is_optimal(out)) throw std::logic_error("find_feasible: auxiliary program not optimal");
  const Optimal& opt = std::get<Optimal>(out);
  if (opt.objective != 0) return std::nullopt;
  IntVec x(static_cast<Index>(aux.original_var_index.size()));
  for (std::size_t i = 0; i < aux.original_var_index.size(); ++i)
    x(static_cast<Index>(i)) = opt.x(aux.original_var_index[i]);
  return x;
}

SolveReport solve_report(const NFoldInstance& instance, const SolveOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  instance.validate();
  SolveReport report{Infeasible{}, {}};
  auto done = [&](SolveOutcome outcome) {
    report.outcome = std::move(outcome);
    report.stats.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
  };

  const IntMatrix M = instance.matrix();
  const IntVec& b = instance.b;
  const ColumnEchelon echelon = column_echelon(M);
  const std::optional<IntVec> z = integer_solution(echelon, b);
  if (!z) return done(Infeasible{});

  const auto upper = implied_upper_bounds(M, b, zeros(M.cols()));
  const bool boxed = options.truncate && all_bounded(upper);
  for (const auto& u : upper)
    if (u && *u < 0) return done(Infeasible{});

  // Phase II test set: the box-truncated basis when every variable is
  // bounded, otherwise the full n-fold basis.
  std::shared_ptr<const GraverBasis> G;
  if (boxed) {
    GraverOptions gopts;
    gopts.max_elements = options.max_elements;
    gopts.box = box_widths(upper, zeros(M.cols()));
    G = std::make_shared<const GraverBasis>(graver_basis(M, gopts));
    report.stats.truncated = true;
  } else {
    G = cached_nfold_graver_basis(instance.A, instance.B, instance.n, options,
                                  &report.stats.graver_complexity);
  }
  report.stats.graver_size = G->size();

  IntVec x;
  if (options.phase_one == PhaseOne::Auxiliary) {
    std::optional<IntVec> found = find_feasible(instance.A, instance.B, instance.n, b, options);
    if (!found) return done(Infeasible{});
    x = std::move(*found);
  } else {
    const detail::SparseBasis S(*G);
    PhaseOneRun run = reduce_negativity(S, *z, lower_of(*z), options.threads);
    report.stats.phase1_steps += run.steps;
    if (negativity(run.x) != 0 && boxed) {
      // The Phase II basis only covers moves inside [0, u]; finish with one
      // wide enough for the region the current point lives in.
      const IntVec lower = lower_of(run.x);
      GraverOptions gopts;
      gopts.max_elements = options.max_elements;
      gopts.box = box_widths(implied_upper_bounds(M, b, lower), lower);
      const GraverBasis wide = graver_basis(M, gopts);
      const detail::SparseBasis W(wide);
      PhaseOneRun more = reduce_negativity(W, std::move(run.x), lower, options.threads);
      report.stats.phase1_steps += more.steps;
      run.x = std::move(more.x);
    }
    if (negativity(run.x) != 0) return done(Infeasible{});
    x = std::move(run.x);
  }

  std::vector<AugmentStep> steps;
  AugmentOptions aopts;
  aopts.threads = options.threads;
  aopts.trace = &steps;
  SolveOutcome out = options.scaled ? optimize_scaled(M, *G, x, instance.c, aopts)
                                    : optimize(M, *G, x, instance.c, aopts);
  report.stats.augmentation_steps = steps.size();
  if (options.trace) options.trace->insert(options.trace->end(), steps.begin(), steps.end());
  if (const Optimal* opt = std::get_if<Optimal>(&out)) {
    if (!vec_equal(IntVec(M * opt->x), b) || !is_nonnegative(opt->x))
      throw std::logic_error("solve: optimum fails the constraints");
  }
  return done(std::move(out));
}

}  // namespace nfold

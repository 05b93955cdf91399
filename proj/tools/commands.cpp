#include "commands.hpp"

#include "cli_io.hpp"
#include "nfold/nfold.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

namespace nfold::cli {

namespace {

class CommandError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

std::string located(const std::string& path, const FormatError& e) {
  return path + (e.line > 0 ? ":" + std::to_string(e.line) : std::string()) + ": " + e.what();
}

Document load_document(const std::string& path) {
  try {
    return read_document(path);
  } catch (const FormatError& e) {
    throw CommandError(located(path, e));
  }
}

// Runs `decode` on a loaded document, attaching the path to format errors.
template <typename Decode>
auto decode_file(const std::string& path, Decode&& decode) {
  const Document doc = load_document(path);
  try {
    return decode(doc);
  } catch (const FormatError& e) {
    throw CommandError(located(path, e));
  }
}

IntMatrix load_grid(const std::string& path) {
  try {
    return read_grid(path);
  } catch (const FormatError& e) {
    throw CommandError(located(path, e));
  }
}

int exit_code(const SolveOutcome& outcome) {
  if (is_optimal(outcome)) return kOk;
  if (is_infeasible(outcome)) return kInfeasible;
  return kUnbounded;
}

void emit(const Json& j, const Common& common, std::ostream& out) {
  if (common.out_path) {
    std::ofstream file(*common.out_path);
    if (!file) throw CommandError("cannot write " + *common.out_path);
    file << j.dump(2) << '\n';
  } else {
    out << j.dump(2) << '\n';
  }
}

int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kError;
}

SolveOptions solve_options(const Common& common) {
  SolveOptions opts;
  opts.threads = std::max(1u, common.threads);
  return opts;
}

std::optional<GraverComplexity> maybe_verify(const IntMatrix& A, const IntMatrix& B, const Common& common) {
  if (!common.verify_complexity) return std::nullopt;
  return graver_complexity(A, B, {.verify = true});
}

// Row-major flat array as nested JSON arrays of the given shape.
Json nested_json(const IntArray& flat, const std::vector<Index>& shape, std::size_t axis = 0,
                 std::size_t offset = 0) {
  Json out = Json::array();
  std::size_t stride = 1;
  for (std::size_t a = axis + 1; a < shape.size(); ++a) stride *= static_cast<std::size_t>(shape[a]);
  for (Index i = 0; i < shape[axis]; ++i) {
    const std::size_t at = offset + static_cast<std::size_t>(i) * stride;
    out.push_back(axis + 1 == shape.size() ? Json(flat[at].str()) : nested_json(flat, shape, axis + 1, at));
  }
  return out;
}

Json array_json(const IntArray& a) { return nested_json(a, {static_cast<Index>(a.size())}); }

Json loading_json(const Loading& loading, const char* bin_name) {
  Json bins = Json::array();
  for (std::size_t k = 0; k < loading.items.size(); ++k)
    bins.push_back({{bin_name, k + 1}, {"items", array_json(loading.items[k])}, {"slack", loading.slack[k].str()}});
  return bins;
}

int encode_table(const TableEncoding& enc, bool solve, const Common& common, std::ostream& out) {
  if (!solve) {
    emit(instance_json(enc.instance), common, out);
    return kOk;
  }
  const SolveReport report = solve_report(enc.instance, solve_options(common));
  Json j;
  j["instance"] = instance_json(enc.instance);
  j["solution"] = solution_json(report, enc.instance.q());
  if (const Optimal* opt = std::get_if<Optimal>(&report.outcome))
    j["decoded"] = {{"table", nested_json(enc.decode(opt->x), enc.shape)}};
  emit(j, common, out);
  return exit_code(report.outcome);
}

int encode_packing(const PackingEncoding& enc, bool solve, const char* bin_name, const Common& common,
                   std::ostream& out) {
  if (!solve) {
    emit(instance_json(enc.instance), common, out);
    return kOk;
  }
  SolveReport report;
  if (enc.capacity_shortfall) report.outcome = Infeasible{};
  else report = solve_report(enc.instance, solve_options(common));
  Json j;
  j["instance"] = instance_json(enc.instance);
  j["solution"] = solution_json(report, enc.instance.q());
  if (const Optimal* opt = std::get_if<Optimal>(&report.outcome))
    j["decoded"] = {{"bins", loading_json(enc.decode(opt->x), bin_name)}};
  emit(j, common, out);
  return exit_code(report.outcome);
}

int encode_cutstock(const CutStockRequest& req, bool solve, const Common& common, std::ostream& out) {
  const CuttingStockInstance& cs = req.instance;
  if (!solve || req.rolls) {
    // Without a requested roll count, encode the count that always suffices.
    const Index rolls = req.rolls ? *req.rolls : std::max<Index>(1, cs.upper_bound().convert_to<Index>());
    return encode_packing(encode_cutting_stock(cs, rolls), solve, "roll", common, out);
  }
  const SolveOptions opts = solve_options(common);
  const MinRolls best = min_rolls(cs, opts);
  Json j;
  j["min_rolls"] = best.rolls;
  Json probes = Json::array();
  for (const RollProbe& p : best.probes) probes.push_back({{"rolls", p.rolls}, {"feasible", p.feasible}});
  j["probes"] = probes;
  if (best.rolls == 0) {
    j["instance"] = nullptr;
    j["cuts"] = Json::array();
    emit(j, common, out);
    return kOk;
  }
  const PackingEncoding enc = encode_cutting_stock(cs, best.rolls);
  const SolveReport report = solve_report(enc.instance, opts);
  j["instance"] = instance_json(enc.instance);
  j["solution"] = solution_json(report, enc.instance.q());
  if (const Optimal* opt = std::get_if<Optimal>(&report.outcome)) {
    const Loading loading = enc.decode(opt->x);
    Json cuts = Json::array();
    for (std::size_t k = 0; k < loading.items.size(); ++k) {
      Json pieces = Json::array();
      for (std::size_t t = 0; t < loading.items[k].size(); ++t)
        for (Integer c = 0; c < loading.items[k][t]; ++c) pieces.push_back(cs.widths[t].str());
      cuts.push_back({{"roll", k + 1}, {"pieces", pieces}, {"waste", loading.slack[k].str()}});
    }
    j["cuts"] = cuts;
  }
  emit(j, common, out);
  return exit_code(report.outcome);
}

}  // namespace

int cmd_solve(const std::string& instance_path, const Common& common, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const NFoldInstance inst = decode_file(instance_path, [](const Document& d) { return instance_from(d); });
    maybe_verify(inst.A, inst.B, common);
    const SolveReport report = solve_report(inst, solve_options(common));
    emit(solution_json(report, inst.q()), common, out);
    return exit_code(report.outcome);
  });
}

int cmd_graver(const std::string& a_path, const std::string& b_path, long n, const Common& common,
               std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (n < 1) throw CommandError("n must be positive");
    const IntMatrix A = load_grid(a_path);
    const IntMatrix B = load_grid(b_path);
    if (A.cols() != B.cols()) throw CommandError("A and B need the same column count");
    GraverComplexity g = graver_complexity(A, B, {.verify = common.verify_complexity});
    const GraverBasis basis = nfold_graver_basis(A, B, n, {.complexity = g.value});
    std::ostringstream text;
    for (const IntVec& v : basis.elements()) text << to_string(v) << '\n';
    text << "# cardinality " << basis.size() << ", graver complexity " << g.value << '\n';
    if (common.out_path) {
      std::ofstream file(*common.out_path);
      if (!file) throw CommandError("cannot write " + *common.out_path);
      file << text.str();
    } else {
      out << text.str();
    }
    return kOk;
  });
}

int cmd_encode(const std::string& kind, const std::string& input_path, bool solve, const Common& common,
               std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (kind == "3way")
      return encode_table(encode_3way(decode_file(input_path, three_way_from)), solve, common, out);
    if (kind == "dway")
      return encode_table(encode_dway(decode_file(input_path, dway_from)), solve, common, out);
    if (kind == "shipment")
      return encode_packing(encode_shipment(decode_file(input_path, shipment_from)), solve, "vessel", common, out);
    if (kind == "cutstock") return encode_cutstock(decode_file(input_path, cutstock_from), solve, common, out);
    throw CommandError("unknown encoder '" + kind + "' (expected 3way, dway, shipment or cutstock)");
  });
}

int cmd_check(const std::string& instance_path, const std::string& solution_path, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&] {
    const NFoldInstance inst = decode_file(instance_path, [](const Document& d) { return instance_from(d); });
    const Solution sol = decode_file(solution_path, [](const Document& d) { return solution_from(d); });
    if (sol.status != "optimal") {
      out << "pass: status " << sol.status << " carries no point to verify\n";
      return kOk;
    }
    if (sol.x.size() != inst.n * inst.q())
      throw CommandError(solution_path + ": x has " + std::to_string(sol.x.size()) + " entries, expected " +
                         std::to_string(inst.n * inst.q()));
    const IntMatrix M = inst.matrix();
    const IntVec lhs = M * sol.x;
    for (Index i = 0; i < M.rows(); ++i) {
      if (lhs(i) != inst.b(i)) {
        out << "fail: equation " << i << ": " << lhs(i).str() << " != " << inst.b(i).str() << '\n';
        return kCheckFailed;
      }
    }
    for (Index j = 0; j < sol.x.size(); ++j) {
      if (sol.x(j) < 0) {
        out << "fail: variable " << j << " is negative (" << sol.x(j).str() << ")\n";
        return kCheckFailed;
      }
    }
    const Integer value = dot(inst.c, sol.x);
    if (value != sol.objective) {
      out << "fail: objective " << sol.objective.str() << " but c.x = " << value.str() << '\n';
      return kCheckFailed;
    }
    out << "pass\n";
    return kOk;
  });
}

int cmd_complexity(const std::string& a_path, const std::string& b_path, const Common& common,
                   std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const IntMatrix A = load_grid(a_path);
    const IntMatrix B = load_grid(b_path);
    if (A.cols() != B.cols()) throw CommandError("A and B need the same column count");
    const GraverComplexity g = graver_complexity(A, B, {.verify = common.verify_complexity});
    out << g.value << "  # " << certificate_name(g.certified_by) << '\n';
    return kOk;
  });
}

}  // namespace nfold::cli

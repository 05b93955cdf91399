#include "commands.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  using namespace nfold::cli;
  CLI::App app{"Exact solver for generalized n-fold integer programs"};
  app.require_subcommand(1);

  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", common.out_path, "Write the result to this file instead of stdout");
    sub->add_option("--threads", common.threads, "Worker threads for augmentation scans")
        ->check(CLI::PositiveNumber);
    sub->add_flag("--verify-complexity", common.verify_complexity,
                  "Cross-check g(A,B) by direct computation of the m-fold Graver bases");
  };

  std::string instance, solution, a_path, b_path, kind, input;
  long n = 0;
  bool solve = false;

  auto* solve_cmd = app.add_subcommand("solve", "Solve an instance file");
  solve_cmd->add_option("instance", instance, "Instance file")->required();
  add_common(solve_cmd);

  auto* graver_cmd = app.add_subcommand("graver", "List the Graver basis of [A,B]^(n)");
  graver_cmd->add_option("A", a_path, "Matrix file for A")->required();
  graver_cmd->add_option("B", b_path, "Matrix file for B")->required();
  graver_cmd->add_option("n", n, "Number of blocks")->required();
  add_common(graver_cmd);

  auto* encode_cmd = app.add_subcommand("encode", "Encode a transportation or packing problem");
  encode_cmd->add_option("kind", kind, "3way, dway, shipment or cutstock")
      ->required()
      ->check(CLI::IsMember({"3way", "dway", "shipment", "cutstock"}));
  encode_cmd->add_option("input", input, "Problem file")->required();
  encode_cmd->add_flag("--solve", solve, "Also solve and decode the result");
  add_common(encode_cmd);

  auto* check_cmd = app.add_subcommand("check", "Verify a solution file against an instance file");
  check_cmd->add_option("instance", instance, "Instance file")->required();
  check_cmd->add_option("solution", solution, "Solution file")->required();

  auto* complexity_cmd = app.add_subcommand("complexity", "Print the Graver complexity g(A,B)");
  complexity_cmd->add_option("A", a_path, "Matrix file for A")->required();
  complexity_cmd->add_option("B", b_path, "Matrix file for B")->required();
  add_common(complexity_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kError;
  }

  if (*solve_cmd) return cmd_solve(instance, common, std::cout, std::cerr);
  if (*graver_cmd) return cmd_graver(a_path, b_path, n, common, std::cout, std::cerr);
  if (*encode_cmd) return cmd_encode(kind, input, solve, common, std::cout, std::cerr);
  if (*check_cmd) return cmd_check(instance, solution, std::cout, std::cerr);
  return cmd_complexity(a_path, b_path, common, std::cout, std::cerr);
}

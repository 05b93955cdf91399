#pragma once

// File formats of the command-line tool. JSON documents carry integers as
// decimal strings; matrix files for `graver` are whitespace grids.

#include "nfold/core.hpp"
#include "nfold/encoders.hpp"
#include "nfold/solve.hpp"

#include <json.hpp>

#include <map>
#include <stdexcept>
#include <string>

namespace nfold::cli {

using Json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

/// A malformed input. `line` is 0 when unknown.
class FormatError : public std::runtime_error {
public:
  FormatError(std::size_t line, const std::string& what)
      : std::runtime_error(what), line(line) {}
  std::size_t line;
};

/// Parsed JSON plus the line where every value starts, keyed by JSON pointer.
struct Document {
  Json root;
  std::map<std::string, std::size_t> lines;

  /// Line of `pointer` or of its closest recorded ancestor.
  std::size_t line_of(std::string pointer) const;
  [[noreturn]] void fail(const std::string& pointer, const std::string& what) const;
};

Document parse_document(const std::string& text);
Document read_document(const std::string& path);

Integer parse_integer(const std::string& text);

// Decoders report problems through Document::fail. `at` is the JSON pointer
// of the value being read.
Integer integer_at(const Document& doc, const std::string& at);
IntVec vector_at(const Document& doc, const std::string& at);
IntMatrix matrix_at(const Document& doc, const std::string& at);
Index count_at(const Document& doc, const std::string& at);

Json to_json(const Integer& v);
Json to_json(const IntVec& v);
Json to_json(const IntMatrix& M);
/// Flat vector as an array of `q`-entry blocks.
Json blocks_json(const IntVec& v, Index q);

Json instance_json(const NFoldInstance& inst);
NFoldInstance instance_from(const Document& doc, const std::string& at = "");

Json solution_json(const SolveReport& report, Index q);

struct Solution {
  std::string status;
  IntVec x;  // flat, empty unless optimal
  Integer objective;
};
Solution solution_from(const Document& doc, const std::string& at = "");

/// Whitespace grid, one matrix row per line; '#' starts a comment.
IntMatrix parse_grid(const std::string& text);
IntMatrix read_grid(const std::string& path);

std::string read_file(const std::string& path);

ThreeWayInstance three_way_from(const Document& doc);
DWayInstance dway_from(const Document& doc);
ShipmentInstance shipment_from(const Document& doc);
struct CutStockRequest {
  CuttingStockInstance instance;
  std::optional<Index> rolls;
};
CutStockRequest cutstock_from(const Document& doc);

}  // namespace nfold::cli

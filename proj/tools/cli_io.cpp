#include "cli_io.hpp"

#include <fstream>
#include <iterator>
#include <sstream>

namespace nfold::cli {

namespace {

// Forward iterator over a buffer that counts the newlines it steps over, so
// parser callbacks can tell which line they are on.
struct CountingIterator {
  using iterator_category = std::forward_iterator_tag;
  using value_type = char;
  using difference_type = std::ptrdiff_t;
  using pointer = const char*;
  using reference = const char&;

  const char* at = nullptr;
  std::size_t* line = nullptr;

  reference operator*() const { return *at; }
  CountingIterator& operator++() {
    if (*at == '\n') ++*line;
    ++at;
    return *this;
  }
  CountingIterator operator++(int) {
    CountingIterator old = *this;
    ++*this;
    return old;
  }
  bool operator==(const CountingIterator& o) const { return at == o.at; }
  bool operator!=(const CountingIterator& o) const { return at != o.at; }
};

std::string escape_token(const std::string& key) {
  std::string out;
  for (char ch : key) {
    if (ch == '~') out += "~0";
    else if (ch == '/') out += "~1";
    else out += ch;
  }
  return out;
}

const Json& node(const Document& doc, const std::string& at) {
  const Json::json_pointer ptr(at);
  if (!doc.root.contains(ptr)) doc.fail(at, "missing value");
  return doc.root.at(ptr);
}

std::string child(const std::string& at, const std::string& key) { return at + "/" + escape_token(key); }
std::string child(const std::string& at, std::size_t index) { return at + "/" + std::to_string(index); }

const Json& array_node(const Document& doc, const std::string& at) {
  const Json& j = node(doc, at);
  if (!j.is_array()) doc.fail(at, "expected an array");
  return j;
}

// Nested arrays of the given shape, flattened row-major.
void read_nested(const Document& doc, const std::string& at, const std::vector<Index>& shape,
                 std::size_t axis, IntArray& out) {
  if (axis == shape.size()) {
    out.push_back(integer_at(doc, at));
    return;
  }
  const Json& j = array_node(doc, at);
  if (static_cast<Index>(j.size()) != shape[axis])
    doc.fail(at, "expected " + std::to_string(shape[axis]) + " entries, found " + std::to_string(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) read_nested(doc, child(at, i), shape, axis + 1, out);
}

IntArray nested_at(const Document& doc, const std::string& at, const std::vector<Index>& shape) {
  IntArray out;
  read_nested(doc, at, shape, 0, out);
  return out;
}

IntArray list_at(const Document& doc, const std::string& at) {
  const Json& j = array_node(doc, at);
  return nested_at(doc, at, {static_cast<Index>(j.size())});
}

void check_version(const Document& doc, const std::string& at) {
  const std::string key = child(at, "schema_version");
  if (!doc.root.contains(Json::json_pointer(key))) return;
  if (count_at(doc, key) != kSchemaVersion)
    doc.fail(key, "unsupported schema version (expected " + std::to_string(kSchemaVersion) + ")");
}

template <typename Build>
auto guarded(const Document& doc, const std::string& at, Build&& build) {
  try {
    return build();
  } catch (const ContractViolation& e) {
    doc.fail(at, e.what());
  }
}

}  // namespace

std::size_t Document::line_of(std::string pointer) const {
  for (;;) {
    auto it = lines.find(pointer);
    if (it != lines.end()) return it->second;
    if (pointer.empty()) return 0;
    pointer.erase(pointer.rfind('/'));
  }
}

void Document::fail(const std::string& pointer, const std::string& what) const {
  throw FormatError(line_of(pointer), (pointer.empty() ? std::string("/") : pointer) + ": " + what);
}

Document parse_document(const std::string& text) {
  Document doc;
  std::size_t line = 1;
  struct Frame {
    bool array;
    std::size_t index;
    std::string key;
    std::string path;
  };
  std::vector<Frame> stack;
  auto element_path = [&]() -> std::string {
    if (stack.empty()) return "";
    Frame& f = stack.back();
    if (f.array) return child(f.path, f.index++);
    return child(f.path, f.key);
  };
  auto callback = [&](int, Json::parse_event_t event, Json& parsed) {
    switch (event) {
      case Json::parse_event_t::key:
        stack.back().key = parsed.get<std::string>();
        break;
      case Json::parse_event_t::object_start:
      case Json::parse_event_t::array_start: {
        std::string path = element_path();
        doc.lines[path] = line;
        stack.push_back({event == Json::parse_event_t::array_start, 0, "", path});
        break;
      }
      case Json::parse_event_t::object_end:
      case Json::parse_event_t::array_end:
        stack.pop_back();
        break;
      case Json::parse_event_t::value:
        doc.lines[element_path()] = line;
        break;
    }
    return true;
  };
  CountingIterator first{text.data(), &line};
  CountingIterator last{text.data() + text.size(), &line};
  try {
    doc.root = Json::parse(first, last, callback);
  } catch (const Json::parse_error& e) {
    const std::size_t upto = std::min<std::size_t>(e.byte, text.size());
    const std::size_t at_line =
        1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(upto), '\n'));
    throw FormatError(at_line, std::string("invalid JSON: ") + e.what());
  }
  return doc;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Document read_document(const std::string& path) { return parse_document(read_file(path)); }

Integer parse_integer(const std::string& text) {
  std::size_t start = (!text.empty() && text[0] == '-') ? 1 : 0;
  if (start == text.size()) throw std::invalid_argument("empty integer");
  for (std::size_t i = start; i < text.size(); ++i)
    if (text[i] < '0' || text[i] > '9') throw std::invalid_argument("not a decimal integer: " + text);
  return Integer(text);
}

Integer integer_at(const Document& doc, const std::string& at) {
  const Json& j = node(doc, at);
  if (j.is_string()) {
    try {
      return parse_integer(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      doc.fail(at, e.what());
    }
  }
  if (j.is_number_integer()) return j.is_number_unsigned() ? Integer(j.get<std::uint64_t>()) : Integer(j.get<std::int64_t>());
  doc.fail(at, "expected a decimal integer string");
}

IntVec vector_at(const Document& doc, const std::string& at) {
  const IntArray a = list_at(doc, at);
  IntVec v(static_cast<Index>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i) v(static_cast<Index>(i)) = a[i];
  return v;
}

IntMatrix matrix_at(const Document& doc, const std::string& at) {
  const Json& j = array_node(doc, at);
  if (j.empty()) doc.fail(at, "a matrix needs at least one row");
  const std::string first = child(at, std::size_t{0});
  const Index cols = static_cast<Index>(array_node(doc, first).size());
  const IntArray flat = nested_at(doc, at, {static_cast<Index>(j.size()), cols});
  IntMatrix M(static_cast<Index>(j.size()), cols);
  for (Index i = 0; i < M.rows(); ++i)
    for (Index k = 0; k < cols; ++k) M(i, k) = flat[static_cast<std::size_t>(i * cols + k)];
  return M;
}

Index count_at(const Document& doc, const std::string& at) {
  const Integer v = integer_at(doc, at);
  if (v < 0 || v > Integer(1) << 31) doc.fail(at, "expected a nonnegative count");
  return v.convert_to<Index>();
}

Json to_json(const Integer& v) { return v.str(); }

Json to_json(const IntVec& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(v(i).str());
  return out;
}

Json to_json(const IntMatrix& M) {
  Json out = Json::array();
  for (Index i = 0; i < M.rows(); ++i) out.push_back(to_json(IntVec(M.row(i).transpose())));
  return out;
}

Json blocks_json(const IntVec& v, Index q) {
  Json out = Json::array();
  for (Index k = 0; q > 0 && k < v.size() / q; ++k) out.push_back(to_json(IntVec(v.segment(k * q, q))));
  return out;
}

Json instance_json(const NFoldInstance& inst) {
  Json out;
  out["schema_version"] = kSchemaVersion;
  out["A"] = to_json(inst.A);
  out["B"] = to_json(inst.B);
  out["n"] = inst.n;
  Json blocks = Json::array();
  for (Index k = 0; k < inst.n; ++k) blocks.push_back(to_json(IntVec(inst.b_block(k))));
  out["b"] = {{"b0", to_json(IntVec(inst.b0()))}, {"blocks", blocks}};
  out["c"] = blocks_json(inst.c, inst.q());
  return out;
}

NFoldInstance instance_from(const Document& doc, const std::string& at) {
  check_version(doc, at);
  NFoldInstance inst;
  inst.A = matrix_at(doc, child(at, "A"));
  inst.B = matrix_at(doc, child(at, "B"));
  if (inst.A.cols() != inst.B.cols()) doc.fail(child(at, "B"), "A and B need the same column count");
  inst.n = count_at(doc, child(at, "n"));
  if (inst.n < 1) doc.fail(child(at, "n"), "n must be positive");
  const Index q = inst.q(), r = inst.r(), s = inst.s(), n = inst.n;

  const std::string b = child(at, "b");
  const IntVec b0 = vector_at(doc, child(b, "b0"));
  if (b0.size() != s) doc.fail(child(b, "b0"), "b0 needs one entry per row of B");
  const IntArray bk = nested_at(doc, child(b, "blocks"), {n, r});
  inst.b = IntVec(s + n * r);
  inst.b.head(s) = b0;
  for (std::size_t i = 0; i < bk.size(); ++i) inst.b(s + static_cast<Index>(i)) = bk[i];

  const IntArray c = nested_at(doc, child(at, "c"), {n, q});
  inst.c = IntVec(n * q);
  for (std::size_t i = 0; i < c.size(); ++i) inst.c(static_cast<Index>(i)) = c[i];
  guarded(doc, at, [&] {
    inst.validate();
    return 0;
  });
  return inst;
}

Json solution_json(const SolveReport& report, Index q) {
  Json out;
  out["schema_version"] = kSchemaVersion;
  out["status"] = status_name(report.outcome);
  if (const Optimal* opt = std::get_if<Optimal>(&report.outcome)) {
    out["x"] = blocks_json(opt->x, q);
    out["objective"] = opt->objective.str();
  }
  const SolveStats& st = report.stats;
  Json stats;
  stats["graver_size"] = st.graver_size;
  stats["graver_complexity"] = st.graver_complexity ? Json(*st.graver_complexity) : Json(nullptr);
  stats["truncated_test_set"] = st.truncated;
  stats["augmentation_steps"] = st.augmentation_steps;
  stats["phase1_steps"] = st.phase1_steps;
  stats["wall_ms"] = st.wall_ms;
  out["stats"] = stats;
  return out;
}

Solution solution_from(const Document& doc, const std::string& at) {
  check_version(doc, at);
  Solution sol;
  const std::string status_at = child(at, "status");
  const Json& status = node(doc, status_at);
  if (!status.is_string()) doc.fail(status_at, "expected a status string");
  sol.status = status.get<std::string>();
  if (sol.status != "optimal" && sol.status != "infeasible" && sol.status != "unbounded")
    doc.fail(status_at, "unknown status '" + sol.status + "'");
  const bool has_x = doc.root.contains(Json::json_pointer(child(at, "x")));
  const bool has_obj = doc.root.contains(Json::json_pointer(child(at, "objective")));
  if ((sol.status == "optimal") != has_x || has_x != has_obj)
    doc.fail(at, "x and objective must be present exactly when the status is optimal");
  if (!has_x) return sol;
  const std::string x_at = child(at, "x");
  const Json& blocks = array_node(doc, x_at);
  IntArray flat;
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    const IntArray block = list_at(doc, child(x_at, k));
    flat.insert(flat.end(), block.begin(), block.end());
  }
  sol.x = IntVec(static_cast<Index>(flat.size()));
  for (std::size_t i = 0; i < flat.size(); ++i) sol.x(static_cast<Index>(i)) = flat[i];
  sol.objective = integer_at(doc, child(at, "objective"));
  return sol;
}

IntMatrix parse_grid(const std::string& text) {
  std::vector<std::vector<Integer>> rows;
  std::istringstream in(text);
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream cells(raw);
    std::vector<Integer> row;
    std::string cell;
    while (cells >> cell) {
      try {
        row.push_back(parse_integer(cell));
      } catch (const std::invalid_argument& e) {
        throw FormatError(line, e.what());
      }
    }
    if (row.empty()) continue;
    if (!rows.empty() && row.size() != rows.front().size())
      throw FormatError(line, "row has " + std::to_string(row.size()) + " entries, expected " +
                                  std::to_string(rows.front().size()));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw FormatError(0, "matrix file has no rows");
  IntMatrix M(static_cast<Index>(rows.size()), static_cast<Index>(rows.front().size()));
  for (Index i = 0; i < M.rows(); ++i)
    for (Index j = 0; j < M.cols(); ++j) M(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return M;
}

IntMatrix read_grid(const std::string& path) { return parse_grid(read_file(path)); }

ThreeWayInstance three_way_from(const Document& doc) {
  check_version(doc, "");
  ThreeWayInstance tp;
  tp.r = count_at(doc, "/r");
  tp.s = count_at(doc, "/s");
  tp.l = count_at(doc, "/l");
  if (tp.r < 1 || tp.s < 1 || tp.l < 1) doc.fail("", "r, s and l must be positive");
  tp.cost = nested_at(doc, "/cost", {tp.r, tp.s, tp.l});
  tp.u = nested_at(doc, "/u", {tp.r, tp.s});
  tp.v = nested_at(doc, "/v", {tp.r, tp.l});
  tp.w = nested_at(doc, "/w", {tp.s, tp.l});
  return tp;
}

DWayInstance dway_from(const Document& doc) {
  check_version(doc, "");
  DWayInstance tp;
  const Json& dims = array_node(doc, "/dims");
  if (dims.empty()) doc.fail("/dims", "need at least one fixed dimension");
  for (std::size_t a = 0; a < dims.size(); ++a) {
    tp.dims.push_back(count_at(doc, child("/dims", a)));
    if (tp.dims.back() < 1) doc.fail(child("/dims", a), "dimensions must be positive");
  }
  tp.l = count_at(doc, "/l");
  if (tp.l < 1) doc.fail("/l", "l must be positive");
  std::vector<Index> shape = tp.dims;
  shape.push_back(tp.l);
  tp.cost = nested_at(doc, "/cost", shape);
  const Json& margins = array_node(doc, "/margins");
  if (margins.size() != shape.size()) doc.fail("/margins", "need one margin array per axis");
  for (std::size_t a = 0; a < shape.size(); ++a) {
    std::vector<Index> rest;
    for (std::size_t b = 0; b < shape.size(); ++b)
      if (b != a) rest.push_back(shape[b]);
    tp.margins.push_back(nested_at(doc, child("/margins", a), rest));
  }
  return tp;
}

ShipmentInstance shipment_from(const Document& doc) {
  check_version(doc, "");
  ShipmentInstance sp;
  sp.weights = list_at(doc, "/weights");
  sp.counts = list_at(doc, "/counts");
  sp.capacities = list_at(doc, "/capacities");
  sp.costs = nested_at(doc, "/costs", {sp.types(), sp.vessels()});
  guarded(doc, "", [&] {
    sp.validate();
    return 0;
  });
  return sp;
}

CutStockRequest cutstock_from(const Document& doc) {
  check_version(doc, "");
  IntArray widths = list_at(doc, "/widths");
  IntArray demands = list_at(doc, "/demands");
  Integer u = integer_at(doc, "/stock_width");
  std::optional<Index> rolls;
  if (doc.root.contains("rolls")) {
    rolls = count_at(doc, "/rolls");
    if (*rolls < 1) doc.fail("/rolls", "rolls must be positive");
  }
  return guarded(doc, "", [&] {
    return CutStockRequest{CuttingStockInstance(std::move(widths), std::move(demands), std::move(u)), rolls};
  });
}

}  // namespace nfold::cli

#include "maxmin/io/instance.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>

namespace maxmin::io {

using nlohmann::json;

ParseError::ParseError(std::string field, std::size_t line, const std::string& message)
    : Error((line > 0 ? "line " + std::to_string(line) + ": " : std::string()) +
            (field.empty() ? std::string() : field + ": ") + message),
      field_(std::move(field)),
      line_(line) {}

namespace {

std::size_t line_of_offset(const std::string& text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + std::size_t(std::count(text.begin(), text.begin() + std::ptrdiff_t(offset), '\n'));
}

/// Line of the first occurrence of "key", or 0.
std::size_t line_of_key(const std::string& text, const std::string& key) {
  const auto pos = text.find('"' + key + '"');
  return pos == std::string::npos ? 0 : line_of_offset(text, pos);
}

class Reader {
 public:
  explicit Reader(const std::string& text) : text_(text) {}

  Tick tick(const json& node, const std::string& field, const std::string& key, Tick top) const {
    if (!node.is_number_integer())
      throw ParseError(field, line_of_key(text_, key), "expected an integer, got " + std::string(node.type_name()));
    const auto v = node.get<long long>();
    if (v < 0 || v > top)
      throw ParseError(field, line_of_key(text_, key),
                       "tick " + std::to_string(v) + " outside [0, " + std::to_string(top) + "]");
    return Tick(v);
  }

  std::vector<Tick> ticks(const json& node, const std::string& key, Tick top) const {
    if (!node.is_array()) throw ParseError(key, line_of_key(text_, key), "expected an array of integers");
    std::vector<Tick> out;
    for (std::size_t k = 0; k < node.size(); ++k)
      out.push_back(tick(node[k], key + "[" + std::to_string(k + 1) + "]", key, top));
    return out;
  }

  std::size_t line(const std::string& key) const { return line_of_key(text_, key); }

 private:
  const std::string& text_;
};

}  // namespace

Box<Tick> Instance::box() const {
  const Index n = matrix.size();
  return {lower.value_or(Vector<Tick>::bottom(n, top)), upper.value_or(Vector<Tick>::unit(n, top))};
}

Instance parse_instance(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("", line_of_offset(text, e.byte), "malformed JSON");
  }
  if (!doc.is_object()) throw ParseError("", 1, "instance must be a JSON object");
  const Reader reader(text);

  static const std::vector<std::string> known = {"top", "matrix", "lower", "upper", "vector", "b"};
  for (const auto& [key, value] : doc.items())
    if (std::find(known.begin(), known.end(), key) == known.end())
      throw ParseError(key, reader.line(key), "unknown field");

  if (!doc.contains("top")) throw ParseError("top", 0, "missing required field");
  const auto& top_node = doc["top"];
  if (!top_node.is_number_integer() || top_node.get<long long>() <= 0 ||
      top_node.get<long long>() > std::numeric_limits<Tick>::max() / 8)
    throw ParseError("top", reader.line("top"), "expected a positive integer");

  Instance inst;
  inst.top = top_node.get<Tick>();

  if (!doc.contains("matrix")) throw ParseError("matrix", 0, "missing required field");
  const auto& rows = doc["matrix"];
  if (!rows.is_array() || rows.empty())
    throw ParseError("matrix", reader.line("matrix"), "expected a non-empty array of rows");
  const Index n = Index(rows.size());
  MatrixStorage<Tick> entries(n, n);
  for (Index i = 0; i < n; ++i) {
    const std::string row_field = "matrix[" + std::to_string(i + 1) + "]";
    const auto& row = rows[std::size_t(i)];
    if (!row.is_array()) throw ParseError(row_field, reader.line("matrix"), "expected an array");
    if (Index(row.size()) != n)
      throw ParseError(row_field, reader.line("matrix"),
                       "matrix is not square: " + std::to_string(n) + " rows but row " + std::to_string(i + 1) +
                           " has " + std::to_string(row.size()) + " entries");
    const auto values = reader.ticks(row, "matrix", inst.top);
    for (Index j = 0; j < n; ++j) entries(i, j) = values[std::size_t(j)];
  }
  inst.matrix = Matrix<Tick>(inst.top, std::move(entries));

  auto vector_field = [&](const char* key) -> std::optional<Vector<Tick>> {
    if (!doc.contains(key)) return std::nullopt;
    auto values = reader.ticks(doc[key], key, inst.top);
    if (Index(values.size()) != n)
      throw ParseError(key, reader.line(key),
                       "length " + std::to_string(values.size()) + " does not match matrix size " + std::to_string(n));
    return Vector<Tick>(inst.top, values);
  };
  inst.lower = vector_field("lower");
  inst.upper = vector_field("upper");
  inst.vector = vector_field("vector");
  inst.b = vector_field("b");
  if (inst.lower && inst.upper && !leq(*inst.lower, *inst.upper))
    throw ParseError("lower", reader.line("lower"), "lower bound exceeds upper bound");
  return inst;
}

Instance parse_instance(std::istream& in) {
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_instance(buffer.str());
}

Instance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("", 0, "cannot open " + path.string());
  return parse_instance(in);
}

json to_json(const Instance& inst) {
  json doc;
  doc["top"] = inst.top;
  json rows = json::array();
  for (Index i = 0; i < inst.size(); ++i) {
    json row = json::array();
    for (Index j = 0; j < inst.size(); ++j) row.push_back(inst.matrix(i, j));
    rows.push_back(std::move(row));
  }
  doc["matrix"] = std::move(rows);
  if (inst.lower) doc["lower"] = inst.lower->to_std();
  if (inst.upper) doc["upper"] = inst.upper->to_std();
  if (inst.vector) doc["vector"] = inst.vector->to_std();
  if (inst.b) doc["b"] = inst.b->to_std();
  return doc;
}

std::vector<Tick> parse_tick_list(const std::string& text) {
  std::string normalized = text;
  std::replace(normalized.begin(), normalized.end(), ',', ' ');
  std::istringstream in(normalized);
  std::vector<Tick> out;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size() || v < 0 || v > std::numeric_limits<Tick>::max())
      throw ParseError("", 0, "not a tick list: '" + text + "'");
    out.push_back(Tick(v));
  }
  if (out.empty()) throw ParseError("", 0, "empty tick list");
  return out;
}

}  // namespace maxmin::io

#pragma once

// Instance files: a JSON object
//
//   { "top": 10,
//     "matrix": [[4,4,4,5],[2,2,7,2],[3,8,3,3],[7,3,3,3]],
//     "lower": [2,3,2,4], "upper": [7,9,6,5],
//     "vector": [...], "b": [...] }
//
// Only "top" and "matrix" are required. All entries are integer ticks in
// [0, top]; vectors have the matrix dimension.

#include "maxmin/core.hpp"

#include <nlohmann/json.hpp>

#include <cstddef>
#include <filesystem>
#include <istream>
#include <optional>
#include <string>

namespace maxmin::io {

/// Malformed instance. `field` is a JSON path such as "matrix[2][3]";
/// `line` is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(std::string field, std::size_t line, const std::string& message);
  const std::string& field() const { return field_; }
  std::size_t line() const { return line_; }

 private:
  std::string field_;
  std::size_t line_;
};

struct Instance {
  Tick top{1};
  Matrix<Tick> matrix;
  std::optional<Vector<Tick>> lower;
  std::optional<Vector<Tick>> upper;
  std::optional<Vector<Tick>> vector;
  std::optional<Vector<Tick>> b;

  /// [lower, upper] with missing bounds taken from the full chain.
  Box<Tick> box() const;
  Index size() const { return matrix.size(); }
};

Instance parse_instance(const std::string& text);
Instance parse_instance(std::istream& in);
Instance load_instance(const std::filesystem::path& path);

nlohmann::json to_json(const Instance& instance);

/// Comma- or space-separated integer list, e.g. "5,6,6,5".
std::vector<Tick> parse_tick_list(const std::string& text);

}  // namespace maxmin::io

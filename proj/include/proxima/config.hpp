#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "proxima/cyclic_map.hpp"
#include "proxima/errors.hpp"

namespace proxima {

/// Malformed or schema-violating problem description. Syntax errors carry a
/// 1-based line and column; schema errors carry a JSON pointer instead.
class ConfigError : public UsageError {
 public:
  ConfigError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : UsageError(what), line_(line), column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

struct ProblemOptions {
  int density = 11;
  std::size_t depth = 32;
  double eta = 0.95;
  std::vector<Point> seeds;
  double gap_tol = 1e-9;
  double pair_tol = 1e-9;
  double sup_tol = 1e-12;
  double verify_tol = 1e-9;
  std::size_t max_iter = 10000;
  std::optional<std::string> trace_path;
  std::optional<double> dist;
};

struct Problem {
  std::string name;
  CyclicMap map;
  ProblemOptions options;
};

/// Accepts a JSON number or a string holding an integer, a decimal, a
/// fraction "p/q", or (for box bounds only) "inf" / "-inf".
double parse_number(const nlohmann::json& v, bool allow_infinite = false);

/// Comma-separated coordinates, e.g. "-1,-1/2".
Point parse_point_list(const Space& space, const std::string& text);

Problem parse_problem(const std::string& text, const std::string& name = "config");
Problem load_problem(const std::string& path);

/// Built-in problems. "paper-example": the two vertical segments x = ∓1,
/// |y| ≤ 1/2, with Ξ(x, y) = (x + 2, −y/2) on Ω and (x − 2, −y/3) on Δ.
Problem builtin_problem(const std::string& name);
std::vector<std::string> builtin_problem_names();

/// Canonical JSON form of a problem, with every number resolved to a double.
nlohmann::json problem_to_json(const Problem& p);

}  // namespace proxima

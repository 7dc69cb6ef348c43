#pragma once

// Problem files are line oriented:
//
//   # comment
//   even q1 q2
//   odd th
//   lagrangian: 1/2*v_q1^2 + q2*v_q1
//   constraint: p_q2
//   option seed 7
//
// Expressions use rationals `a/b`, identifiers, `+ - * ^` (nonnegative
// integer exponents) and parentheses. Products must be written with `*`;
// the factor order of odd variables is kept.

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "superlag/charts.hpp"
#include "superlag/superalgebra.hpp"

namespace superlag {

struct SourceText {
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;  // column of text[0]
};

struct ProblemFile {
  std::vector<std::string> even_names;
  std::vector<std::string> odd_names;
  SourceText lagrangian;
  std::vector<SourceText> constraints;
  std::map<std::string, std::string> options;
};

/// Parses an expression into the ring of `chart`. Errors carry line:column
/// positions relative to `line` and `column`.
Superfunction parse_expression(std::string_view text, const ChartPtr& chart, std::size_t line = 1,
                               std::size_t column = 1);

/// Parses a problem and checks every expression against the TM (Lagrangian)
/// or T*M (constraints) names. Throws ParseError / UnknownIdentifier.
ProblemFile parse_problem(std::string_view text);

/// Reads a file and calls parse_problem.
ProblemFile load_problem(const std::string& path);

PhaseSpace charts_for(const ProblemFile& file);

/// Option keys accepted in problem files.
inline constexpr const char* kOptionSeed = "seed";
inline constexpr const char* kOptionOracle = "oracle";

}  // namespace superlag

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "superlag/superalgebra.hpp"
#include "superlag/vector_field.hpp"

namespace superlag {

/// One term of a superfunction: coefficient and generator powers in chart order.
struct TermEntry {
  std::string coefficient;
  std::vector<std::pair<std::string, unsigned>> powers;
  bool operator==(const TermEntry&) const = default;
};

struct RenderedFunction {
  std::string text;
  std::vector<TermEntry> terms;
  bool operator==(const RenderedFunction&) const = default;
};

struct RenderedField {
  std::string text;
  /// Nonzero components keyed by generator name.
  std::vector<std::pair<std::string, RenderedFunction>> components;
  bool operator==(const RenderedField&) const = default;
};

RenderedFunction render(const Superfunction& f);
RenderedField render(const VectorField& x);

struct KernelReport {
  std::string space;
  bool decided = false;
  std::vector<RenderedField> fields;
  bool operator==(const KernelReport&) const = default;
};

struct ConstraintReport {
  RenderedFunction h;
  std::string parity;
  std::string origin;
  std::optional<RenderedFunction> c_h;
  std::string projectable;
  std::optional<RenderedFunction> preimage;
  std::string class_label;
  std::string kernel_test;
  std::string fixed_representative;
  std::optional<bool> gamma_independent;
  bool operator==(const ConstraintReport&) const = default;
};

struct ProjectionReport {
  RenderedFunction g;
  std::string projectable;
  std::optional<RenderedFunction> preimage;
  bool operator==(const ProjectionReport&) const = default;
};

struct CheckReport {
  std::string name;
  std::size_t ran = 0;
  std::size_t passed = 0;
  bool operator==(const CheckReport&) const = default;
};

struct OracleReport {
  unsigned trials = 0;
  std::size_t assertions = 0;
  std::size_t mismatches = 0;
  bool operator==(const OracleReport&) const = default;
};

struct AnalysisReport {
  std::string source;
  std::string status;  // ok, undecided, error
  std::optional<std::string> error;
  std::uint64_t seed = 0;
  std::vector<std::string> even_names;
  std::vector<std::string> odd_names;
  std::optional<RenderedFunction> lagrangian;
  std::string regular;
  std::vector<std::pair<std::string, RenderedFunction>> legendre;
  std::optional<RenderedFunction> energy;
  std::vector<std::string> hessian_labels;
  std::vector<std::vector<RenderedFunction>> hessian;
  std::vector<KernelReport> kernels;
  std::optional<RenderedField> sode;
  std::optional<std::string> constraint_note;
  std::vector<ConstraintReport> constraints;
  std::vector<ProjectionReport> projections;
  std::vector<CheckReport> checks;
  std::optional<OracleReport> oracle;
  bool operator==(const AnalysisReport&) const = default;
};

inline constexpr int kFormatVersion = 1;

std::string to_text(const AnalysisReport& report);
/// {"format_version": 1, "reports": [...]}, pretty printed.
std::string to_json(const std::vector<AnalysisReport>& reports);
/// Inverse of to_json. Throws Error on malformed input or an unknown version.
std::vector<AnalysisReport> reports_from_json(std::string_view text);

}  // namespace superlag

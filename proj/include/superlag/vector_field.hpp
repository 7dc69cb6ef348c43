#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "superlag/superalgebra.hpp"

namespace superlag {

/// A derivation X = sum_a X^a d/dx^a with components written on the left.
///
/// An ordinary field lives on one chart. A field along a morphism phi
/// (domain -> codomain pullback) maps domain functions into the codomain
/// algebra: X(f) = sum_a X^a phi*(df/dx^a), so that
/// X(fg) = X(f) phi*(g) + (-1)^{|X||f|} phi*(f) X(g).
class VectorField {
 public:
  /// Zero field on a chart.
  explicit VectorField(ChartPtr chart);
  /// Zero field along a morphism.
  explicit VectorField(AlgebraMorphism along);

  /// The coordinate field d/dx^index.
  static VectorField coordinate(ChartPtr chart, std::size_t index);

  const ChartPtr& domain() const { return domain_; }
  const ChartPtr& codomain() const { return codomain_; }
  const std::optional<AlgebraMorphism>& along() const { return along_; }
  bool is_ordinary() const { return !along_.has_value(); }

  std::size_t size() const { return components_.size(); }
  const Superfunction& component(std::size_t index) const { return components_.at(index); }
  const std::vector<Superfunction>& components() const { return components_; }
  void set_component(std::size_t index, Superfunction value);

  /// phi*(f), or f itself for an ordinary field.
  Superfunction pull(const Superfunction& f) const;
  Superfunction apply(const Superfunction& f) const;

  /// Even/odd when every component has parity |X| + |x^a|; nullopt otherwise.
  /// The zero field is even.
  std::optional<Parity> parity() const;
  bool is_zero() const;

  VectorField& operator+=(const VectorField& other);
  VectorField& operator-=(const VectorField& other);
  friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
  friend VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
  VectorField operator-() const;
  /// (f X)^a = f X^a.
  friend VectorField operator*(const Superfunction& f, const VectorField& x);
  bool operator==(const VectorField& other) const;

  /// `v_q1*d/dq1 - 2*q1*d/dv_q1`; zero renders as `0`.
  std::string to_string() const;

 private:
  ChartPtr domain_;
  ChartPtr codomain_;
  std::optional<AlgebraMorphism> along_;
  std::vector<Superfunction> components_;
};

/// Graded commutator [X, Y] = XY - (-1)^{|X||Y|} YX of homogeneous ordinary
/// fields on the same chart.
VectorField bracket(const VectorField& x, const VectorField& y);

}  // namespace superlag

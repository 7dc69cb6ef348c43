#pragma once

// Graded 1- and 2-forms in a single chart.
//
// Sign convention (bidegree signs: a function of parity s passes dx^a with
// (-1)^{s|a|}, two one-forms anticommute up to (-1)^{|a||b|}):
//
//   1-forms are written sum_a dx^a * c_a, coefficients to the right.
//   df = sum_a dx^a * (left df/dx^a).
//   i_X (dx^a * c) = X^a * c.
//   dx^a ^ dx^b = -(-1)^{|a||b|} dx^b ^ dx^a; dtheta ^ dtheta != 0.
//   i_X (dx^a ^ dx^b) = X^a dx^b - (-1)^{|a||b|} X^b dx^a.
//
// A 2-form is stored as the full matrix W_ab = w(d/dx^a, d/dx^b) with
// w(X, Y) = i_Y i_X w, which obeys W_ba = -(-1)^{|a||b|} W_ab. For a != b,
// W_ab is the coefficient of dx^a ^ dx^b; an odd diagonal entry W_aa is twice
// the coefficient of dx^a ^ dx^a.

#include <cstddef>
#include <string>
#include <vector>

#include "superlag/superalgebra.hpp"
#include "superlag/vector_field.hpp"

namespace superlag {

class OneForm {
 public:
  explicit OneForm(ChartPtr chart);

  const ChartPtr& chart() const { return chart_; }
  std::size_t size() const { return coefficients_.size(); }
  const Superfunction& coefficient(std::size_t index) const { return coefficients_.at(index); }
  void set_coefficient(std::size_t index, Superfunction value);

  OneForm& operator+=(const OneForm& other);
  OneForm& operator-=(const OneForm& other);
  friend OneForm operator+(OneForm a, const OneForm& b) { return a += b; }
  friend OneForm operator-(OneForm a, const OneForm& b) { return a -= b; }
  OneForm operator-() const;
  /// (sum dx^a c_a) * g = sum dx^a (c_a g).
  friend OneForm operator*(const OneForm& form, const Superfunction& g);
  /// f * (sum dx^a c_a) = sum dx^a sigma^{|a|}(f) c_a.
  friend OneForm operator*(const Superfunction& f, const OneForm& form);
  bool operator==(const OneForm& other) const;
  bool is_zero() const;

  /// `dq*(2*q) + dth*(zeta_th)`; zero renders as `0`.
  std::string to_string() const;

 private:
  ChartPtr chart_;
  std::vector<Superfunction> coefficients_;
};

class TwoForm {
 public:
  explicit TwoForm(ChartPtr chart);

  const ChartPtr& chart() const { return chart_; }
  std::size_t size() const { return chart_->size(); }

  /// W_ab = w(d/dx^a, d/dx^b).
  const Superfunction& entry(std::size_t a, std::size_t b) const { return entries_.at(a * size() + b); }
  /// Coefficient of dx^a ^ dx^b in the canonical expansion.
  Superfunction wedge_coefficient(std::size_t a, std::size_t b) const;
  /// Adds dx^a ^ dx^b * c.
  void add_wedge(std::size_t a, std::size_t b, const Superfunction& c);

  /// Checks W_ba = -(-1)^{|a||b|} W_ab entry by entry.
  bool is_graded_antisymmetric() const;

  TwoForm& operator+=(const TwoForm& other);
  TwoForm& operator-=(const TwoForm& other);
  friend TwoForm operator+(TwoForm a, const TwoForm& b) { return a += b; }
  friend TwoForm operator-(TwoForm a, const TwoForm& b) { return a -= b; }
  TwoForm operator-() const;
  bool operator==(const TwoForm& other) const;
  bool is_zero() const;

  /// `dq1∧dp_q1 - dth∧deta_th`, pairs a <= b.
  std::string to_string() const;

 private:
  Superfunction& at(std::size_t a, std::size_t b) { return entries_[a * size() + b]; }

  ChartPtr chart_;
  std::vector<Superfunction> entries_;
};

OneForm differential(const Superfunction& f);

/// d(sum dx^b c_b): W_xy = -d_y c_x + (-1)^{|x||y|} d_x c_y.
TwoForm exterior_derivative(const OneForm& alpha);

/// i_X alpha. For X along phi, the coefficients are pulled back: sum X^b phi*(c_b).
Superfunction interior(const VectorField& x, const OneForm& alpha);

/// i_X w = sum_b d(phi* x^b) * sum_e sigma^{|b|}(X^e) phi*(W_eb), a 1-form on
/// X's codomain chart (phi = identity for ordinary fields).
OneForm interior(const VectorField& x, const TwoForm& w);

/// w(X, Y) = i_Y i_X w for fields along the same morphism (or ordinary
/// fields on w's chart).
Superfunction evaluate(const TwoForm& w, const VectorField& x, const VectorField& y);

/// phi* w, a 2-form on phi's target chart.
TwoForm pullback(const TwoForm& w, const AlgebraMorphism& phi);

}  // namespace superlag

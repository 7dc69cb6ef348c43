#pragma once

// Natural charts for a configuration superspace with even coordinates q^i
// and odd coordinates theta^a:
//
//   M   : (q^i, theta^a)
//   TM  : (q^i, v_q^i, theta^a, zeta_theta^a)   |v| even, |zeta| odd
//   T*M : (q^i, p_q^i, theta^a, eta_theta^a)    |p| even, |eta| odd
//
// together with the canonical objects built from them: the inclusions
// tau*: M -> TM and pi*: M -> T*M, the total time derivative, the Liouville
// field, the vertical endomorphism and the canonical forms on T*M.

#include <cstddef>
#include <string>
#include <vector>

#include "superlag/forms.hpp"
#include "superlag/superalgebra.hpp"
#include "superlag/vector_field.hpp"

namespace superlag {

struct PhaseSpace {
  ChartPtr base;
  ChartPtr tangent;
  ChartPtr cotangent;
  AlgebraMorphism tau_star;  // M -> TM
  AlgebraMorphism pi_star;   // M -> T*M
  OneForm theta0;            // sum p dq + sum eta dtheta, on T*M
  TwoForm omega0;            // -d theta0 = sum dq^dp - sum deta^dtheta
  std::size_t even_count = 0;
  std::size_t odd_count = 0;

  std::size_t base_count() const { return even_count + odd_count; }
  /// Index of base coordinate k (M order: q's then theta's) in TM / T*M.
  std::size_t position_index(std::size_t k) const;
  /// Index of the velocity (TM) or momentum (T*M) paired with base coordinate k.
  std::size_t fiber_index(std::size_t k) const;
  /// TM indices of (v..., zeta...), in that order.
  std::vector<std::size_t> velocity_indices() const;

  /// Rewrites a TM function of base coordinates only as a T*M function.
  Superfunction base_to_cotangent(const Superfunction& f) const;
  /// Rewrites a T*M function of base coordinates only as a TM function.
  Superfunction base_to_tangent(const Superfunction& f) const;
};

/// Derived names are `v_`, `p_`, `zeta_`, `eta_` + base name. Throws on
/// duplicate or clashing names.
PhaseSpace make_charts(const std::vector<std::string>& base_evens,
                       const std::vector<std::string>& base_odds);

/// T = sum v^i d/dq^i + sum zeta^a d/dtheta^a, a field along tau.
VectorField total_time_derivative(const PhaseSpace& ps);

/// X^V = sum X^i d/dv^i + sum chi^a d/dzeta^a for X on M or along tau.
VectorField vertical_lift(const PhaseSpace& ps, const VectorField& x);

/// S(Y): base components of Y moved to the matching velocity slots.
VectorField vertical_endomorphism(const PhaseSpace& ps, const VectorField& y);

/// Delta = T^V.
VectorField liouville_field(const PhaseSpace& ps);

/// f^V = T(f), the function on TM on which vertical lifts act by
/// X^V(f^V) = tau*(X(f)).
Superfunction velocity_lift(const PhaseSpace& ps, const Superfunction& f);

/// beta o S for a 1-form on TM: (beta o S)_{q} = beta_{v}, (beta o S)_{theta} = beta_{zeta}.
OneForm compose_with_vertical_endomorphism(const PhaseSpace& ps, const OneForm& beta);

/// True if the TM field has zero base components.
bool is_vertical(const PhaseSpace& ps, const VectorField& y);

}  // namespace superlag

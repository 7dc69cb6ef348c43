#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "superlag/charts.hpp"
#include "superlag/forms.hpp"
#include "superlag/linear_solve.hpp"
#include "superlag/superalgebra.hpp"
#include "superlag/vector_field.hpp"
#include "superlag/verifier.hpp"

namespace superlag {

enum class Verdict { Yes, No, Undecided };
const char* to_string(Verdict v);

struct LagrangianProblem {
  PhaseSpace charts;
  Superfunction lagrangian;
  /// FL*: T*M -> TM, q -> q, theta -> theta, p -> dL/dv, eta -> -dL/dzeta.
  AlgebraMorphism fl_pullback;
  Superfunction energy;  // Delta(L) - L
  OneForm theta_L;       // dL o S
  TwoForm omega_L;       // -d theta_L
  /// TM indices of (v..., zeta...); rows and columns of the Hessian.
  std::vector<std::size_t> velocity;
  /// H(i, j) = d/du_i d/du_j L, left derivatives.
  RingMatrix hessian;
};

/// Builds every derived object of an even Lagrangian on TM. Throws
/// ParityError for odd or inhomogeneous L and InconsistentIdentity if
/// tau* != FL* o pi* or the Hessian is not graded symmetric.
LagrangianProblem build_problem(const PhaseSpace& charts, const Superfunction& lagrangian,
                                IdentityVerifier* verifier = nullptr);

/// Invertibility of the Hessian over the ring; Undecided when elimination
/// meets a pivot without a constant nonzero body.
Verdict is_regular(const LagrangianProblem& p);

enum class KernelSpace { OmegaL, FLStar, VerticalOmegaL };
const char* to_string(KernelSpace s);

struct KernelBasis {
  KernelSpace space = KernelSpace::OmegaL;
  bool decided = false;
  /// Homogeneous generators, one per free slot of the elimination, with a 1
  /// in that slot; sorted by slot.
  std::vector<VectorField> fields;
};

KernelBasis kernel_omega_L(const LagrangianProblem& p, IdentityVerifier* verifier = nullptr);
/// Vertical fields U with U(FL* y) = 0 for every momentum generator y.
KernelBasis kernel_FL_star(const LagrangianProblem& p, IdentityVerifier* verifier = nullptr);
/// Vertical part of ker omega_L.
KernelBasis vertical_kernel_omega_L(const LagrangianProblem& p, IdentityVerifier* verifier = nullptr);

/// The SODE of a regular Lagrangian: i_G omega_L = dE_L, G(q) = v, G(theta) = zeta.
/// Throws SingularLagrangian unless the problem is regular.
VectorField sode_field(const LagrangianProblem& p, IdentityVerifier* verifier = nullptr);

struct InteriorSolution {
  SolveStatus status = SolveStatus::Undecided;
  /// fixed + the particular solution (components of the unknowns with free
  /// columns set to zero). Present when Solved.
  std::optional<VectorField> field;
  /// Homogeneous solutions of parity `parity` with a 1 in a free slot of
  /// matching parity.
  std::vector<VectorField> kernel;
};

/// Solves i_X w = rhs for X = fixed + sum_{e in unknowns} x^e d/dx^e, with X
/// homogeneous of parity `parity`. Components of `fixed` at unknown slots are
/// ignored.
InteriorSolution solve_interior(const TwoForm& w, const VectorField& fixed,
                                const std::vector<std::size_t>& unknowns, Parity parity,
                                const OneForm& rhs);

}  // namespace superlag

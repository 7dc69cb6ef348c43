#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "superlag/lagrangian.hpp"
#include "superlag/linear_solve.hpp"
#include "superlag/verifier.hpp"

namespace superlag {

/// The time-evolution operator: an even field along FL with
/// K(q) = v, K(theta) = zeta, K(p) = dL/dq, K(eta) = -dL/dtheta.
struct TimeEvolutionOperator {
  const LagrangianProblem* problem = nullptr;
  VectorField field;  // along problem->fl_pullback
};

/// Builds K and checks i_K omega0 = dE_L and K o pi* = T; a failure throws
/// InconsistentIdentity.
TimeEvolutionOperator build_K(const LagrangianProblem& p, IdentityVerifier* verifier = nullptr);

/// K(h) for h on T*M, a function on TM.
Superfunction apply_K(const TimeEvolutionOperator& k, const Superfunction& h);

/// The field Y_h on T*M with i_{Y_h} omega0 = dh. Throws ParityError for
/// inhomogeneous h.
VectorField hamiltonian_field(const PhaseSpace& ps, const Superfunction& h,
                              IdentityVerifier* verifier = nullptr);

/// {h, k} = omega0(Y_h, Y_k).
Superfunction poisson(const PhaseSpace& ps, const Superfunction& h, const Superfunction& k);

/// R_L(Y): the vertical field on TM whose velocity components are the FL
/// pullbacks of Y's base components.
VectorField r_operator(const LagrangianProblem& p, const VectorField& y);

/// Momenta written as FL*(y_k) = sum_j M(k, j) u_j + b_k with M constant.
/// Rows run over T*M fibre generators in base order,
/// columns over TM velocity generators in base order.
struct AffineMomenta {
  std::vector<std::vector<Rational>> matrix;
  std::vector<Superfunction> offset;  // b_k on T*M (base coordinates only)
  /// For each pivot velocity column: u_c = sum_k solve[c][k] (y_k - b_k) - sum_f (...) u_f.
  std::vector<std::size_t> pivot_columns;
  std::vector<std::vector<Rational>> solve;
  /// Left null vectors of M: each gives the constraint sum_k lambda_k (y_k - b_k).
  std::vector<std::vector<Rational>> null_vectors;
};

/// Throws NotSupported when some momentum is not affine in the velocities
/// with constant coefficients.
AffineMomenta affine_momenta(const LagrangianProblem& p);

enum class ConstraintOrigin { Primary, User };
enum class KernelTest { InKernel, NotInKernel, Undecided };
enum class ClassLabel { First, Second, Undecided };
const char* to_string(ConstraintOrigin o);
const char* to_string(KernelTest k);
const char* to_string(ClassLabel c);

struct Projectability {
  Verdict verdict = Verdict::Undecided;
  /// FL*(H) = g, when a constructive preimage was found.
  std::optional<Superfunction> preimage;
};

struct ConstraintRecord {
  explicit ConstraintRecord(Superfunction function) : h(std::move(function)) {}

  Superfunction h;
  Parity parity = Parity::Even;
  ConstraintOrigin origin = ConstraintOrigin::Primary;
  std::optional<Superfunction> c_h;
  Projectability projectable;
  ClassLabel class_label = ClassLabel::Undecided;
  /// Some vertical completion of X_h lies in ker omega_L.
  KernelTest kernel_test = KernelTest::Undecided;
  /// The completion with zero vertical part lies in ker omega_L.
  KernelTest fixed_representative = KernelTest::Undecided;
  /// K(h) reproduced from random second-order fields and completions.
  std::optional<bool> gamma_independent;
};

/// Primary constraints from the affine momenta, each checked FL*(h) = 0.
std::vector<ConstraintRecord> primary_constraints(const LagrangianProblem& p,
                                                  IdentityVerifier* verifier = nullptr);

/// Wraps a user constraint; throws Error unless FL*(h) = 0 and h is homogeneous.
ConstraintRecord user_constraint(const LagrangianProblem& p, const Superfunction& h);

/// Sets C_h = K(h) and evaluates i_{X_h}[i_G omega_L - dE_L] + i_G d(FL* h)
/// for two random second-order fields G and random vertical parts of X_h.
void lagrangian_constraint(const TimeEvolutionOperator& k, ConstraintRecord& record, std::mt19937_64& rng,
                           IdentityVerifier* verifier = nullptr);

struct XhResult {
  explicit XhResult(VectorField x) : representative(std::move(x)) {}

  /// Base components FL*(Y_h base components), vertical part zero.
  VectorField representative;
  KernelTest verdict = KernelTest::Undecided;
  KernelTest fixed_verdict = KernelTest::Undecided;
  /// representative + V in ker omega_L, when one exists.
  std::optional<VectorField> completion;
};

/// Builds X_h and decides whether some vertical completion lies in
/// ker omega_L. Checks that S(X_h) lies in the vertical kernel of omega_L.
XhResult xh_field(const LagrangianProblem& p, const Superfunction& h, IdentityVerifier* verifier = nullptr);

/// g is FL-projectable iff every field of ker FL_* annihilates it. When the
/// momenta are affine, also tries a constructive preimage H.
Projectability is_projectable(const LagrangianProblem& p, const Superfunction& g,
                              IdentityVerifier* verifier = nullptr);

/// First class iff FL*{h, k} = 0 for every k of the set (k = h included).
/// Records the class/projectability agreement when both are decided.
void classify(const LagrangianProblem& p, std::vector<ConstraintRecord>& records,
              IdentityVerifier* verifier = nullptr);

/// Fills C_h, projectability, kernel test and class for each record.
void analyze_constraints(const LagrangianProblem& p, const TimeEvolutionOperator& k,
                         std::vector<ConstraintRecord>& records, std::mt19937_64& rng,
                         IdentityVerifier* verifier = nullptr);

/// Names under which the analysis records its checks.
namespace checks {
inline constexpr const char* kEvolutionForm = "i_K omega0 = dE_L";
inline constexpr const char* kSecondOrder = "K o pi* = T";
inline constexpr const char* kEnergyProjectable = "ker FL_* annihilates E_L";
inline constexpr const char* kKernelTest = "X_h kernel test <=> C_h projectable";
inline constexpr const char* kClassTest = "first class <=> C_h projectable";
inline constexpr const char* kGammaIndependence = "K(h) independent of G and X_h";
inline constexpr const char* kVerticalImage = "S(X_h) in Vker omega_L";
}  // namespace checks

}  // namespace superlag

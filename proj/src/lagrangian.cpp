#include "superlag/lagrangian.hpp"

#include <algorithm>
#include <utility>

#include "superlag/error.hpp"

namespace superlag {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes:
      return "yes";
    case Verdict::No:
      return "no";
    case Verdict::Undecided:
      return "undecided";
  }
  return "?";
}

const char* to_string(KernelSpace s) {
  switch (s) {
    case KernelSpace::OmegaL:
      return "ker omega_L";
    case KernelSpace::FLStar:
      return "ker FL_*";
    case KernelSpace::VerticalOmegaL:
      return "Vker omega_L";
  }
  return "?";
}

namespace {

AlgebraMorphism legendre_pullback(const PhaseSpace& ps, const Superfunction& l) {
  std::vector<Superfunction> images;
  for (const auto& g : ps.cotangent->generators()) {
    if (g.role == GeneratorRole::Position) {
      images.push_back(Superfunction::generator(ps.tangent, ps.position_index(g.base)));
      continue;
    }
    Superfunction d = l.left_partial(ps.fiber_index(g.base));
    images.push_back(is_odd(g.parity) ? -d : d);
  }
  return AlgebraMorphism(ps.cotangent, ps.tangent, std::move(images));
}

RingMatrix second_derivatives(const PhaseSpace& ps, const Superfunction& l,
                              const std::vector<std::size_t>& u) {
  RingMatrix h(ps.tangent, u.size(), u.size());
  for (std::size_t j = 0; j < u.size(); ++j) {
    const Superfunction dj = l.left_partial(u[j]);
    for (std::size_t i = 0; i < u.size(); ++i) h(i, j) = dj.left_partial(u[i]);
  }
  return h;
}

}  // namespace

LagrangianProblem build_problem(const PhaseSpace& charts, const Superfunction& lagrangian,
                                IdentityVerifier* verifier) {
  require_same_chart(lagrangian.chart(), charts.tangent, "Lagrangian");
  const auto parity = lagrangian.parity();
  if (!parity) throw ParityError("Lagrangian is inhomogeneous: " + lagrangian.to_string());
  if (*parity == Parity::Odd) {
    throw ParityError("odd Lagrangians are not supported: " + lagrangian.to_string());
  }

  const auto velocity = charts.velocity_indices();
  LagrangianProblem p{charts,
                      lagrangian,
                      legendre_pullback(charts, lagrangian),
                      liouville_field(charts).apply(lagrangian) - lagrangian,
                      compose_with_vertical_endomorphism(charts, differential(lagrangian)),
                      TwoForm(charts.tangent),
                      velocity,
                      second_derivatives(charts, lagrangian, velocity)};
  p.omega_L = -exterior_derivative(p.theta_L);

  const auto composed = p.fl_pullback.after(charts.pi_star);
  for (std::size_t k = 0; k < charts.base_count(); ++k) {
    require_identity(verifier, "tau* = FL* o pi*", composed.image(k), charts.tau_star.image(k));
  }
  for (std::size_t i = 0; i < velocity.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const int s = koszul_sign(charts.tangent->parity(velocity[i]), charts.tangent->parity(velocity[j]));
      require_identity(verifier, "hessian graded symmetry", p.hessian(j, i), s * p.hessian(i, j));
    }
  }
  return p;
}

Verdict is_regular(const LagrangianProblem& p) {
  const auto n = p.velocity.size();
  if (n == 0) return Verdict::Yes;
  const auto s = solve_linear(p.hessian, std::vector<Superfunction>(n, Superfunction(p.hessian.chart())));
  if (s.status != SolveStatus::Solved) return Verdict::Undecided;
  return s.free_columns.empty() ? Verdict::Yes : Verdict::No;
}

InteriorSolution solve_interior(const TwoForm& w, const VectorField& fixed,
                                const std::vector<std::size_t>& unknowns, Parity parity,
                                const OneForm& rhs) {
  const auto& chart = w.chart();
  require_same_chart(fixed.domain(), chart, "solve_interior");
  require_same_chart(rhs.chart(), chart, "solve_interior");
  if (!fixed.is_ordinary()) throw Error("solve_interior: field along a morphism");
  const auto n = chart->size();

  VectorField known = fixed;
  for (auto e : unknowns) known.set_component(e, Superfunction(chart));
  const OneForm residual = rhs - interior(known, w);

  RingMatrix c(chart, n, unknowns.size());
  std::vector<Parity> unknown_parity;
  for (std::size_t j = 0; j < unknowns.size(); ++j) {
    const auto e = unknowns[j];
    const Parity pe = parity + chart->parity(e);
    unknown_parity.push_back(pe);
    for (std::size_t b = 0; b < n; ++b) {
      // i_X w has dx^b-coefficient sum_e sigma^{|b|}(X^e) W_eb.
      const bool flip = is_odd(chart->parity(b)) && is_odd(pe);
      c(b, j) = flip ? -w.entry(e, b) : w.entry(e, b);
    }
  }
  std::vector<Superfunction> b;
  for (std::size_t i = 0; i < n; ++i) b.push_back(residual.coefficient(i));

  const auto s = solve_left_linear(c, b, unknown_parity);
  InteriorSolution out;
  out.status = s.status;
  if (s.status != SolveStatus::Solved) return out;

  VectorField x = known;
  for (std::size_t j = 0; j < unknowns.size(); ++j) x.set_component(unknowns[j], s.particular[j]);
  out.field = std::move(x);
  for (std::size_t k = 0; k < s.free_columns.size(); ++k) {
    const auto f = s.free_columns[k];
    if (is_odd(unknown_parity[f])) continue;
    VectorField v(chart);
    for (std::size_t j = 0; j < unknowns.size(); ++j) v.set_component(unknowns[j], s.nullspace[k][j]);
    out.kernel.push_back(std::move(v));
  }
  return out;
}

namespace {

std::size_t leading_slot(const VectorField& x) {
  for (std::size_t a = 0; a < x.size(); ++a) {
    if (x.component(a) == Superfunction::constant(x.domain(), 1)) return a;
  }
  return x.size();
}

void sort_basis(KernelBasis& k) {
  std::stable_sort(k.fields.begin(), k.fields.end(), [](const VectorField& a, const VectorField& b) {
    return leading_slot(a) < leading_slot(b);
  });
}

KernelBasis omega_kernel(const LagrangianProblem& p, const std::vector<std::size_t>& unknowns,
                         KernelSpace space, IdentityVerifier* verifier) {
  const auto& tm = p.charts.tangent;
  KernelBasis out;
  out.space = space;
  out.decided = true;
  for (Parity parity : {Parity::Even, Parity::Odd}) {
    auto s = solve_interior(p.omega_L, VectorField(tm), unknowns, parity, OneForm(tm));
    if (s.status != SolveStatus::Solved) {
      out.decided = false;
      out.fields.clear();
      return out;
    }
    for (auto& x : s.kernel) out.fields.push_back(std::move(x));
  }
  for (const auto& x : out.fields) require_identity(verifier, "kernel of omega_L", interior(x, p.omega_L), OneForm(tm));
  sort_basis(out);
  return out;
}

}  // namespace

KernelBasis kernel_omega_L(const LagrangianProblem& p, IdentityVerifier* verifier) {
  std::vector<std::size_t> all(p.charts.tangent->size());
  for (std::size_t a = 0; a < all.size(); ++a) all[a] = a;
  return omega_kernel(p, all, KernelSpace::OmegaL, verifier);
}

KernelBasis vertical_kernel_omega_L(const LagrangianProblem& p, IdentityVerifier* verifier) {
  return omega_kernel(p, p.velocity, KernelSpace::VerticalOmegaL, verifier);
}

KernelBasis kernel_FL_star(const LagrangianProblem& p, IdentityVerifier* verifier) {
  const auto& ps = p.charts;
  const auto& tm = ps.tangent;
  const auto n = p.velocity.size();
  KernelBasis out;
  out.space = KernelSpace::FLStar;
  out.decided = true;
  for (Parity parity : {Parity::Even, Parity::Odd}) {
    // sum_j U^j H(j, i) = 0 for every i.
    RingMatrix c(tm, n, n);
    std::vector<Parity> unknown_parity;
    for (std::size_t j = 0; j < n; ++j) {
      unknown_parity.push_back(parity + tm->parity(p.velocity[j]));
      for (std::size_t i = 0; i < n; ++i) c(i, j) = p.hessian(j, i);
    }
    const auto s = solve_left_linear(c, std::vector<Superfunction>(n, Superfunction(tm)), unknown_parity);
    if (s.status != SolveStatus::Solved) {
      out.decided = false;
      out.fields.clear();
      return out;
    }
    for (std::size_t k = 0; k < s.free_columns.size(); ++k) {
      if (is_odd(unknown_parity[s.free_columns[k]])) continue;
      VectorField u(tm);
      for (std::size_t j = 0; j < n; ++j) u.set_component(p.velocity[j], s.nullspace[k][j]);
      out.fields.push_back(std::move(u));
    }
  }
  for (const auto& u : out.fields) {
    for (std::size_t k = 0; k < ps.base_count(); ++k) {
      require_identity(verifier, "kernel of FL_*", u.apply(p.fl_pullback.image(ps.fiber_index(k))),
                       Superfunction(tm));
    }
  }
  sort_basis(out);
  return out;
}

VectorField sode_field(const LagrangianProblem& p, IdentityVerifier* verifier) {
  const auto& ps = p.charts;
  if (is_regular(p) != Verdict::Yes) {
    throw SingularLagrangian("Lagrangian is not regular; no unique second-order field");
  }
  VectorField fixed(ps.tangent);
  for (std::size_t k = 0; k < ps.base_count(); ++k) {
    fixed.set_component(ps.position_index(k), Superfunction::generator(ps.tangent, ps.fiber_index(k)));
  }
  const OneForm de = differential(p.energy);
  auto s = solve_interior(p.omega_L, fixed, p.velocity, Parity::Even, de);
  if (s.status != SolveStatus::Solved || !s.kernel.empty()) {
    throw SingularLagrangian("second-order field equations are not uniquely solvable");
  }
  require_identity(verifier, "i_G omega_L = dE_L", interior(*s.field, p.omega_L), de);
  return *s.field;
}

}  // namespace superlag

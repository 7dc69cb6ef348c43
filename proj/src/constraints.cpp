#include "superlag/constraints.hpp"

#include <utility>

#include "superlag/error.hpp"
#include "superlag/random.hpp"

namespace superlag {

const char* to_string(ConstraintOrigin o) { return o == ConstraintOrigin::Primary ? "primary" : "user"; }

const char* to_string(KernelTest k) {
  switch (k) {
    case KernelTest::InKernel:
      return "in-kernel";
    case KernelTest::NotInKernel:
      return "not-in-kernel";
    case KernelTest::Undecided:
      return "undecided";
  }
  return "?";
}

const char* to_string(ClassLabel c) {
  switch (c) {
    case ClassLabel::First:
      return "first";
    case ClassLabel::Second:
      return "second";
    case ClassLabel::Undecided:
      return "undecided";
  }
  return "?";
}

TimeEvolutionOperator build_K(const LagrangianProblem& p, IdentityVerifier* verifier) {
  const auto& ps = p.charts;
  const auto& l = p.lagrangian;
  TimeEvolutionOperator k{&p, VectorField(p.fl_pullback)};
  for (std::size_t b = 0; b < ps.base_count(); ++b) {
    const auto q = ps.position_index(b);
    const auto y = ps.fiber_index(b);
    k.field.set_component(q, Superfunction::generator(ps.tangent, y));
    const Superfunction dq = l.left_partial(q);
    k.field.set_component(y, b < ps.even_count ? dq : -dq);
  }

  require_identity(verifier, checks::kEvolutionForm, interior(k.field, ps.omega0), differential(p.energy));
  const auto t = total_time_derivative(ps);
  for (std::size_t b = 0; b < ps.base_count(); ++b) {
    require_identity(verifier, checks::kSecondOrder, k.field.apply(ps.pi_star.image(b)),
                     t.apply(Superfunction::generator(ps.base, b)));
  }
  return k;
}

Superfunction apply_K(const TimeEvolutionOperator& k, const Superfunction& h) { return k.field.apply(h); }

VectorField hamiltonian_field(const PhaseSpace& ps, const Superfunction& h, IdentityVerifier* verifier) {
  require_same_chart(h.chart(), ps.cotangent, "Hamiltonian field");
  if (!h.parity()) throw ParityError("Hamiltonian field of an inhomogeneous function: " + h.to_string());
  VectorField y(ps.cotangent);
  for (std::size_t b = 0; b < ps.base_count(); ++b) {
    const auto q = ps.position_index(b);
    const auto m = ps.fiber_index(b);
    if (b < ps.even_count) {
      y.set_component(q, h.left_partial(m));
      y.set_component(m, -h.left_partial(q));
    } else {
      y.set_component(m, -h.left_partial(q).parity_twist());
      y.set_component(q, -h.left_partial(m).parity_twist());
    }
  }
  require_identity(verifier, "i_Y omega0 = dh", interior(y, ps.omega0), differential(h));
  return y;
}

Superfunction poisson(const PhaseSpace& ps, const Superfunction& h, const Superfunction& k) {
  return evaluate(ps.omega0, hamiltonian_field(ps, h), hamiltonian_field(ps, k));
}

VectorField r_operator(const LagrangianProblem& p, const VectorField& y) {
  const auto& ps = p.charts;
  require_same_chart(y.domain(), ps.cotangent, "R_L");
  VectorField out(ps.tangent);
  for (std::size_t b = 0; b < ps.base_count(); ++b) {
    out.set_component(ps.fiber_index(b), p.fl_pullback.apply(y.component(ps.position_index(b))));
  }
  return out;
}

AffineMomenta affine_momenta(const LagrangianProblem& p) {
  const auto& ps = p.charts;
  const auto n = ps.base_count();
  AffineMomenta out;
  out.matrix.assign(n, std::vector<Rational>(n, 0));
  std::vector<int> velocity_slot(ps.tangent->size(), -1);
  for (std::size_t b = 0; b < n; ++b) velocity_slot[ps.fiber_index(b)] = static_cast<int>(b);

  for (std::size_t k = 0; k < n; ++k) {
    const Superfunction& y = p.fl_pullback.image(ps.fiber_index(k));
    Superfunction offset(ps.tangent);
    for (const auto& [m, c] : y.terms()) {
      std::uint32_t velocity_degree = 0;
      int slot = -1;
      for (std::size_t i = 0; i < m.exponents.size(); ++i) {
        if (m.exponents[i] != 0 && velocity_slot[i] >= 0) {
          velocity_degree += m.exponents[i];
          slot = velocity_slot[i];
        }
      }
      if (velocity_degree == 0) {
        offset.add_term(m, c);
      } else if (velocity_degree == 1 && m.total_degree() == 1) {
        out.matrix[k][static_cast<std::size_t>(slot)] += c;
      } else {
        throw NotSupported("momentum " + ps.cotangent->generator(ps.fiber_index(k)).name +
                           " is not affine in the velocities with constant coefficients: " + y.to_string());
      }
    }
    out.offset.push_back(ps.base_to_cotangent(offset));
  }

  // Row reduce [M | I].
  auto m = out.matrix;
  std::vector<std::vector<Rational>> e(n, std::vector<Rational>(n, 0));
  for (std::size_t k = 0; k < n; ++k) e[k][k] = 1;
  std::size_t row = 0;
  std::vector<std::size_t> pivot_row;
  for (std::size_t c = 0; c < n && row < n; ++c) {
    std::size_t r = row;
    while (r < n && m[r][c] == 0) ++r;
    if (r == n) continue;
    std::swap(m[r], m[row]);
    std::swap(e[r], e[row]);
    const Rational inv = 1 / m[row][c];
    for (auto& x : m[row]) x *= inv;
    for (auto& x : e[row]) x *= inv;
    for (std::size_t s = 0; s < n; ++s) {
      if (s == row || m[s][c] == 0) continue;
      const Rational f = m[s][c];
      for (std::size_t j = 0; j < n; ++j) {
        m[s][j] -= f * m[row][j];
        e[s][j] -= f * e[row][j];
      }
    }
    out.pivot_columns.push_back(c);
    pivot_row.push_back(row);
    ++row;
  }
  for (std::size_t i = 0; i < out.pivot_columns.size(); ++i) out.solve.push_back(e[pivot_row[i]]);
  for (std::size_t r = row; r < n; ++r) {
    auto lambda = e[r];
    for (const auto& x : lambda) {
      if (x != 0) {
        const Rational scale = 1 / x;
        for (auto& y : lambda) y *= scale;
        break;
      }
    }
    out.null_vectors.push_back(std::move(lambda));
  }
  return out;
}

namespace {

// sum_k lambda_k (y_k - b_k) on T*M.
Superfunction momentum_combination(const PhaseSpace& ps, const AffineMomenta& a,
                                   const std::vector<Rational>& lambda) {
  Superfunction h(ps.cotangent);
  for (std::size_t k = 0; k < lambda.size(); ++k) {
    if (lambda[k] == 0) continue;
    h += lambda[k] * (Superfunction::generator(ps.cotangent, ps.fiber_index(k)) - a.offset[k]);
  }
  return h;
}

}  // namespace

std::vector<ConstraintRecord> primary_constraints(const LagrangianProblem& p, IdentityVerifier* verifier) {
  const auto& ps = p.charts;
  const auto a = affine_momenta(p);
  std::vector<ConstraintRecord> out;
  for (const auto& lambda : a.null_vectors) {
    Superfunction h = momentum_combination(ps, a, lambda);
    const auto parity = h.parity();
    if (!parity) throw Error("primary constraint is inhomogeneous: " + h.to_string());
    require_identity(verifier, "FL* h = 0", p.fl_pullback.apply(h), Superfunction(ps.tangent));
    ConstraintRecord r(std::move(h));
    r.parity = *parity;
    r.origin = ConstraintOrigin::Primary;
    out.push_back(std::move(r));
  }
  return out;
}

ConstraintRecord user_constraint(const LagrangianProblem& p, const Superfunction& h) {
  require_same_chart(h.chart(), p.charts.cotangent, "constraint");
  const auto parity = h.parity();
  if (!parity) throw ParityError("constraint is inhomogeneous: " + h.to_string());
  const Superfunction pulled = p.fl_pullback.apply(h);
  if (!pulled.is_zero()) {
    throw Error("'" + h.to_string() + "' is not a constraint: FL* gives " + pulled.to_string());
  }
  ConstraintRecord r(h);
  r.parity = *parity;
  r.origin = ConstraintOrigin::User;
  return r;
}

namespace {

VectorField base_part_of_xh(const LagrangianProblem& p, const Superfunction& h, IdentityVerifier* verifier) {
  const auto& ps = p.charts;
  const auto y = hamiltonian_field(ps, h, verifier);
  VectorField x(ps.tangent);
  for (std::size_t b = 0; b < ps.base_count(); ++b) {
    const auto q = ps.position_index(b);
    x.set_component(q, p.fl_pullback.apply(y.component(q)));
  }
  return x;
}

VectorField random_sode(const PhaseSpace& ps, std::mt19937_64& rng) {
  VectorField g(ps.tangent);
  for (std::size_t b = 0; b < ps.base_count(); ++b) {
    const auto u = ps.fiber_index(b);
    g.set_component(ps.position_index(b), Superfunction::generator(ps.tangent, u));
    g.set_component(u, random_superfunction(ps.tangent, ps.tangent->parity(u), rng));
  }
  return g;
}

}  // namespace

void lagrangian_constraint(const TimeEvolutionOperator& k, ConstraintRecord& record, std::mt19937_64& rng,
                           IdentityVerifier* verifier) {
  const auto& p = *k.problem;
  const auto& ps = p.charts;
  record.c_h = apply_K(k, record.h);

  const VectorField base = base_part_of_xh(p, record.h, nullptr);
  const OneForm de = differential(p.energy);
  const OneForm dh = differential(p.fl_pullback.apply(record.h));
  bool all = true;
  for (int trial = 0; trial < 2; ++trial) {
    const VectorField gamma = random_sode(ps, rng);
    VectorField x = base;
    for (auto u : p.velocity) {
      x.set_component(u, random_superfunction(ps.tangent, record.parity + ps.tangent->parity(u), rng));
    }
    const Superfunction rhs = interior(x, interior(gamma, p.omega_L) - de) + interior(gamma, dh);
    const bool ok = verifier ? verifier->equal(checks::kGammaIndependence, rhs, *record.c_h) : rhs == *record.c_h;
    all = all && ok;
  }
  record.gamma_independent = all;
}

XhResult xh_field(const LagrangianProblem& p, const Superfunction& h, IdentityVerifier* verifier) {
  const auto& ps = p.charts;
  const auto parity = h.parity();
  if (!parity) throw ParityError("X_h of an inhomogeneous function: " + h.to_string());
  XhResult out(base_part_of_xh(p, h, verifier));

  const VectorField s = vertical_endomorphism(ps, out.representative);
  require_identity(verifier, checks::kVerticalImage, interior(s, p.omega_L), OneForm(ps.tangent));

  out.fixed_verdict =
      interior(out.representative, p.omega_L).is_zero() ? KernelTest::InKernel : KernelTest::NotInKernel;
  auto solved = solve_interior(p.omega_L, out.representative, p.velocity, *parity, OneForm(ps.tangent));
  switch (solved.status) {
    case SolveStatus::Solved:
      out.verdict = KernelTest::InKernel;
      out.completion = std::move(solved.field);
      require_identity(verifier, "X_h completion in ker omega_L", interior(*out.completion, p.omega_L),
                       OneForm(ps.tangent));
      break;
    case SolveStatus::Inconsistent:
      out.verdict = KernelTest::NotInKernel;
      break;
    case SolveStatus::Undecided:
      out.verdict = KernelTest::Undecided;
      break;
  }
  return out;
}

Projectability is_projectable(const LagrangianProblem& p, const Superfunction& g, IdentityVerifier* verifier) {
  const auto& ps = p.charts;
  require_same_chart(g.chart(), ps.tangent, "projectability");
  Projectability out;

  const auto kernel = kernel_FL_star(p, verifier);
  if (kernel.decided) {
    out.verdict = Verdict::Yes;
    for (const auto& u : kernel.fields) {
      if (!u.apply(g).is_zero()) {
        out.verdict = Verdict::No;
        break;
      }
    }
  }

  std::optional<AffineMomenta> a;
  try {
    a = affine_momenta(p);
  } catch (const NotSupported&) {
    return out;
  }
  std::vector<Superfunction> images;
  for (const auto& gen : ps.tangent->generators()) {
    if (gen.role == GeneratorRole::Position) {
      images.push_back(Superfunction::generator(ps.cotangent, ps.position_index(gen.base)));
    } else {
      images.push_back(Superfunction(ps.cotangent));
    }
  }
  for (std::size_t i = 0; i < a->pivot_columns.size(); ++i) {
    images[ps.fiber_index(a->pivot_columns[i])] = momentum_combination(ps, *a, a->solve[i]);
  }
  const Superfunction h = AlgebraMorphism(ps.tangent, ps.cotangent, std::move(images)).apply(g);
  if (p.fl_pullback.apply(h) == g) {
    if (out.verdict == Verdict::No) {
      throw InconsistentIdentity("constructive preimage of " + g.to_string() +
                                 " contradicts the kernel test");
    }
    out.verdict = Verdict::Yes;
    out.preimage = h;
  }
  return out;
}

void classify(const LagrangianProblem& p, std::vector<ConstraintRecord>& records, IdentityVerifier* verifier) {
  const auto& ps = p.charts;
  for (auto& r : records) {
    r.class_label = ClassLabel::First;
    for (const auto& other : records) {
      if (!p.fl_pullback.apply(poisson(ps, r.h, other.h)).is_zero()) {
        r.class_label = ClassLabel::Second;
        break;
      }
    }
    if (verifier && r.projectable.verdict != Verdict::Undecided) {
      verifier->record(checks::kClassTest,
                       (r.class_label == ClassLabel::First) == (r.projectable.verdict == Verdict::Yes));
    }
  }
}

void analyze_constraints(const LagrangianProblem& p, const TimeEvolutionOperator& k,
                         std::vector<ConstraintRecord>& records, std::mt19937_64& rng,
                         IdentityVerifier* verifier) {
  for (auto& r : records) {
    lagrangian_constraint(k, r, rng, verifier);
    r.projectable = is_projectable(p, *r.c_h, verifier);
    const auto xh = xh_field(p, r.h, verifier);
    r.kernel_test = xh.verdict;
    r.fixed_representative = xh.fixed_verdict;
    if (verifier && r.kernel_test != KernelTest::Undecided && r.projectable.verdict != Verdict::Undecided) {
      verifier->record(checks::kKernelTest,
                       (r.kernel_test == KernelTest::InKernel) == (r.projectable.verdict == Verdict::Yes));
    }
  }
  classify(p, records, verifier);
}

}  // namespace superlag

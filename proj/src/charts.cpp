#include "superlag/charts.hpp"

#include <cctype>
#include <set>

#include "superlag/error.hpp"

namespace superlag {

namespace {

bool valid_identifier(const std::string& name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) return false;
  for (char c : name) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

bool has_derived_prefix(const std::string& name) {
  for (const char* prefix : {"v_", "p_", "zeta_", "eta_"}) {
    if (name.rfind(prefix, 0) == 0) return true;
  }
  return false;
}

ChartPtr build_chart(ChartKind kind, const std::vector<std::string>& evens,
                     const std::vector<std::string>& odds, const char* even_prefix,
                     const char* odd_prefix) {
  std::vector<Generator> gens;
  const auto m = evens.size();
  const auto add = [&](std::string name, Parity parity, GeneratorRole role, std::size_t base) {
    gens.push_back(Generator{std::move(name), parity, 0, role, base});
  };
  for (std::size_t i = 0; i < m; ++i) add(evens[i], Parity::Even, GeneratorRole::Position, i);
  if (kind != ChartKind::Base) {
    for (std::size_t i = 0; i < m; ++i) add(even_prefix + evens[i], Parity::Even, GeneratorRole::Fiber, i);
  }
  for (std::size_t a = 0; a < odds.size(); ++a) add(odds[a], Parity::Odd, GeneratorRole::Position, m + a);
  if (kind != ChartKind::Base) {
    for (std::size_t a = 0; a < odds.size(); ++a) {
      add(odd_prefix + odds[a], Parity::Odd, GeneratorRole::Fiber, m + a);
    }
  }
  return std::make_shared<const Chart>(kind, std::move(gens));
}

AlgebraMorphism inclusion(const ChartPtr& base, const ChartPtr& target, const PhaseSpace& ps) {
  std::vector<Superfunction> images;
  for (std::size_t k = 0; k < base->size(); ++k) {
    images.push_back(Superfunction::generator(target, ps.position_index(k)));
  }
  return AlgebraMorphism(base, target, std::move(images));
}

}  // namespace

std::size_t PhaseSpace::position_index(std::size_t k) const {
  return k < even_count ? k : 2 * even_count + (k - even_count);
}

std::size_t PhaseSpace::fiber_index(std::size_t k) const {
  return k < even_count ? even_count + k : 2 * even_count + odd_count + (k - even_count);
}

std::vector<std::size_t> PhaseSpace::velocity_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < base_count(); ++k) out.push_back(fiber_index(k));
  return out;
}

namespace {

Superfunction transfer_base(const PhaseSpace& ps, const Superfunction& f, const ChartPtr& target) {
  const auto& source = f.chart();
  std::vector<Superfunction> images;
  for (std::size_t i = 0; i < source->size(); ++i) {
    const auto& g = source->generator(i);
    if (g.role == GeneratorRole::Position) {
      images.push_back(Superfunction::generator(target, ps.position_index(g.base)));
    } else {
      if (f.depends_on(i)) {
        throw Error("function '" + f.to_string() + "' depends on fibre coordinate " + g.name);
      }
      images.push_back(Superfunction(target));
    }
  }
  return AlgebraMorphism(source, target, std::move(images)).apply(f);
}

}  // namespace

Superfunction PhaseSpace::base_to_cotangent(const Superfunction& f) const {
  require_same_chart(f.chart(), tangent, "base_to_cotangent");
  return transfer_base(*this, f, cotangent);
}

Superfunction PhaseSpace::base_to_tangent(const Superfunction& f) const {
  require_same_chart(f.chart(), cotangent, "base_to_tangent");
  return transfer_base(*this, f, tangent);
}

PhaseSpace make_charts(const std::vector<std::string>& base_evens,
                       const std::vector<std::string>& base_odds) {
  std::set<std::string> seen;
  for (const auto* names : {&base_evens, &base_odds}) {
    for (const auto& name : *names) {
      if (!valid_identifier(name)) throw Error("invalid coordinate name '" + name + "'");
      if (has_derived_prefix(name)) {
        throw Error("coordinate name '" + name + "' uses a reserved prefix (v_, p_, zeta_, eta_)");
      }
      if (!seen.insert(name).second) throw Error("duplicate coordinate name '" + name + "'");
    }
  }
  auto base = build_chart(ChartKind::Base, base_evens, base_odds, "", "");
  auto tangent = build_chart(ChartKind::Tangent, base_evens, base_odds, "v_", "zeta_");
  auto cotangent = build_chart(ChartKind::Cotangent, base_evens, base_odds, "p_", "eta_");

  PhaseSpace ps{base,
                tangent,
                cotangent,
                AlgebraMorphism::identity(base),
                AlgebraMorphism::identity(base),
                OneForm(cotangent),
                TwoForm(cotangent),
                base_evens.size(),
                base_odds.size()};
  ps.tau_star = inclusion(base, tangent, ps);
  ps.pi_star = inclusion(base, cotangent, ps);

  // Theta0 = sum p dq + sum eta dtheta (coefficients on the left), i.e.
  // sum dq * p - sum dtheta * eta with coefficients on the right.
  for (std::size_t k = 0; k < ps.base_count(); ++k) {
    const auto q = ps.position_index(k);
    Superfunction momentum = Superfunction::generator(cotangent, ps.fiber_index(k));
    ps.theta0.set_coefficient(q, k < ps.even_count ? momentum : -momentum);
  }
  ps.omega0 = -exterior_derivative(ps.theta0);
  return ps;
}

VectorField total_time_derivative(const PhaseSpace& ps) {
  VectorField t(ps.tau_star);
  for (std::size_t k = 0; k < ps.base_count(); ++k) {
    t.set_component(k, Superfunction::generator(ps.tangent, ps.fiber_index(k)));
  }
  return t;
}

VectorField vertical_lift(const PhaseSpace& ps, const VectorField& x) {
  require_same_chart(x.domain(), ps.base, "vertical lift");
  VectorField out(ps.tangent);
  for (std::size_t k = 0; k < ps.base_count(); ++k) {
    const auto& c = x.component(k);
    if (c.is_zero()) continue;
    out.set_component(ps.fiber_index(k), x.is_ordinary() ? ps.tau_star.apply(c) : c);
  }
  return out;
}

VectorField vertical_endomorphism(const PhaseSpace& ps, const VectorField& y) {
  require_same_chart(y.domain(), ps.tangent, "vertical endomorphism");
  VectorField out(ps.tangent);
  for (std::size_t k = 0; k < ps.base_count(); ++k) {
    out.set_component(ps.fiber_index(k), y.component(ps.position_index(k)));
  }
  return out;
}

VectorField liouville_field(const PhaseSpace& ps) { return vertical_lift(ps, total_time_derivative(ps)); }

Superfunction velocity_lift(const PhaseSpace& ps, const Superfunction& f) {
  return total_time_derivative(ps).apply(f);
}

OneForm compose_with_vertical_endomorphism(const PhaseSpace& ps, const OneForm& beta) {
  require_same_chart(beta.chart(), ps.tangent, "composition with S");
  OneForm out(ps.tangent);
  for (std::size_t k = 0; k < ps.base_count(); ++k) {
    out.set_coefficient(ps.position_index(k), beta.coefficient(ps.fiber_index(k)));
  }
  return out;
}

bool is_vertical(const PhaseSpace& ps, const VectorField& y) {
  for (std::size_t k = 0; k < ps.base_count(); ++k) {
    if (!y.component(ps.position_index(k)).is_zero()) return false;
  }
  return true;
}

}  // namespace superlag

#include "superlag/vector_field.hpp"

#include <utility>

#include "superlag/error.hpp"

namespace superlag {

VectorField::VectorField(ChartPtr chart)
    : domain_(chart), codomain_(chart), components_(chart->size(), Superfunction(chart)) {}

VectorField::VectorField(AlgebraMorphism along)
    : domain_(along.source()),
      codomain_(along.target()),
      along_(std::move(along)),
      components_(domain_->size(), Superfunction(codomain_)) {}

VectorField VectorField::coordinate(ChartPtr chart, std::size_t index) {
  VectorField x(chart);
  x.set_component(index, Superfunction::constant(chart, 1));
  return x;
}

void VectorField::set_component(std::size_t index, Superfunction value) {
  require_same_chart(value.chart(), codomain_, "vector field component");
  components_.at(index) = std::move(value);
}

Superfunction VectorField::pull(const Superfunction& f) const {
  return along_ ? along_->apply(f) : f;
}

Superfunction VectorField::apply(const Superfunction& f) const {
  require_same_chart(f.chart(), domain_, "vector field application");
  Superfunction out(codomain_);
  for (std::size_t a = 0; a < components_.size(); ++a) {
    if (components_[a].is_zero() || !f.depends_on(a)) continue;
    out += components_[a] * pull(f.left_partial(a));
  }
  return out;
}

std::optional<Parity> VectorField::parity() const {
  std::optional<Parity> result;
  for (std::size_t a = 0; a < components_.size(); ++a) {
    if (components_[a].is_zero()) continue;
    const auto p = components_[a].parity();
    if (!p) return std::nullopt;
    const Parity field = *p + domain_->parity(a);
    if (!result) {
      result = field;
    } else if (*result != field) {
      return std::nullopt;
    }
  }
  return result.value_or(Parity::Even);
}

bool VectorField::is_zero() const {
  for (const auto& c : components_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

VectorField& VectorField::operator+=(const VectorField& other) {
  require_same_chart(domain_, other.domain_, "vector field sum");
  require_same_chart(codomain_, other.codomain_, "vector field sum");
  for (std::size_t a = 0; a < components_.size(); ++a) components_[a] += other.components_[a];
  return *this;
}

VectorField& VectorField::operator-=(const VectorField& other) {
  require_same_chart(domain_, other.domain_, "vector field difference");
  require_same_chart(codomain_, other.codomain_, "vector field difference");
  for (std::size_t a = 0; a < components_.size(); ++a) components_[a] -= other.components_[a];
  return *this;
}

VectorField VectorField::operator-() const {
  VectorField out(*this);
  for (auto& c : out.components_) c = -c;
  return out;
}

VectorField operator*(const Superfunction& f, const VectorField& x) {
  VectorField out(x);
  for (auto& c : out.components_) c = f * c;
  return out;
}

bool VectorField::operator==(const VectorField& other) const {
  require_same_chart(domain_, other.domain_, "vector field comparison");
  return components_ == other.components_;
}

std::string VectorField::to_string() const {
  std::string out;
  for (std::size_t a = 0; a < components_.size(); ++a) {
    const auto& c = components_[a];
    if (c.is_zero()) continue;
    const std::string basis = "d/d" + domain_->generator(a).name;
    std::string text = c.to_string();
    bool negative = false;
    std::string piece;
    if (c.terms().size() == 1) {
      if (text.front() == '-') {
        negative = true;
        text.erase(0, 1);
      }
      piece = (text == "1") ? basis : text + "*" + basis;
    } else {
      piece = "(" + text + ")*" + basis;
    }
    if (out.empty()) {
      out = negative ? "-" + piece : piece;
    } else {
      out += (negative ? " - " : " + ") + piece;
    }
  }
  return out.empty() ? "0" : out;
}

VectorField bracket(const VectorField& x, const VectorField& y) {
  if (!x.is_ordinary() || !y.is_ordinary()) throw Error("bracket needs ordinary vector fields");
  require_same_chart(x.domain(), y.domain(), "bracket");
  const auto px = x.parity();
  const auto py = y.parity();
  if (!px || !py) throw ParityError("bracket needs homogeneous vector fields");
  const int sign = koszul_sign(*px, *py);
  VectorField out(x.domain());
  for (std::size_t a = 0; a < x.size(); ++a) {
    Superfunction c = x.apply(y.component(a));
    Superfunction d = y.apply(x.component(a));
    out.set_component(a, sign > 0 ? c - d : c + d);
  }
  return out;
}

}  // namespace superlag

#include "superlag/forms.hpp"

#include <utility>

#include "superlag/error.hpp"

namespace superlag {

namespace {

Superfunction twist_if(bool odd, const Superfunction& f) { return odd ? f.parity_twist() : f; }

// Appends `basis` scaled by the right coefficient `c` to `out`.
void render_term(std::string& out, const std::string& basis, const Superfunction& c) {
  if (c.is_zero()) return;
  std::string text = c.to_string();
  bool negative = false;
  std::string piece;
  if (c.terms().size() == 1 && text.front() == '-') {
    negative = true;
    text.erase(0, 1);
  }
  if (text == "1") {
    piece = basis;
  } else {
    piece = basis + "*(" + text + ")";
  }
  if (out.empty()) {
    out = negative ? "-" + piece : piece;
  } else {
    out += (negative ? " - " : " + ") + piece;
  }
}

}  // namespace

OneForm::OneForm(ChartPtr chart) : chart_(chart), coefficients_(chart->size(), Superfunction(chart)) {}

void OneForm::set_coefficient(std::size_t index, Superfunction value) {
  require_same_chart(value.chart(), chart_, "one-form coefficient");
  coefficients_.at(index) = std::move(value);
}

OneForm& OneForm::operator+=(const OneForm& other) {
  require_same_chart(chart_, other.chart_, "one-form sum");
  for (std::size_t a = 0; a < size(); ++a) coefficients_[a] += other.coefficients_[a];
  return *this;
}

OneForm& OneForm::operator-=(const OneForm& other) {
  require_same_chart(chart_, other.chart_, "one-form difference");
  for (std::size_t a = 0; a < size(); ++a) coefficients_[a] -= other.coefficients_[a];
  return *this;
}

OneForm OneForm::operator-() const {
  OneForm out(*this);
  for (auto& c : out.coefficients_) c = -c;
  return out;
}

OneForm operator*(const OneForm& form, const Superfunction& g) {
  OneForm out(form);
  for (auto& c : out.coefficients_) c = c * g;
  return out;
}

OneForm operator*(const Superfunction& f, const OneForm& form) {
  OneForm out(form);
  for (std::size_t a = 0; a < out.size(); ++a) {
    out.coefficients_[a] = twist_if(is_odd(form.chart_->parity(a)), f) * out.coefficients_[a];
  }
  return out;
}

bool OneForm::operator==(const OneForm& other) const {
  require_same_chart(chart_, other.chart_, "one-form comparison");
  return coefficients_ == other.coefficients_;
}

bool OneForm::is_zero() const {
  for (const auto& c : coefficients_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

std::string OneForm::to_string() const {
  std::string out;
  for (std::size_t a = 0; a < size(); ++a) {
    render_term(out, "d" + chart_->generator(a).name, coefficients_[a]);
  }
  return out.empty() ? "0" : out;
}

TwoForm::TwoForm(ChartPtr chart)
    : chart_(chart), entries_(chart->size() * chart->size(), Superfunction(chart)) {}

Superfunction TwoForm::wedge_coefficient(std::size_t a, std::size_t b) const {
  if (a == b) return entry(a, a) * Rational(1, 2);
  return entry(a, b);
}

void TwoForm::add_wedge(std::size_t a, std::size_t b, const Superfunction& c) {
  require_same_chart(c.chart(), chart_, "two-form coefficient");
  const bool both_odd = is_odd(chart_->parity(a)) && is_odd(chart_->parity(b));
  if (a == b) {
    if (both_odd) at(a, a) += c * Rational(2);
    return;
  }
  at(a, b) += c;
  if (both_odd) {
    at(b, a) += c;
  } else {
    at(b, a) -= c;
  }
}

bool TwoForm::is_graded_antisymmetric() const {
  for (std::size_t a = 0; a < size(); ++a) {
    for (std::size_t b = a; b < size(); ++b) {
      const int s = koszul_sign(chart_->parity(a), chart_->parity(b));
      // W_ba + s W_ab == 0
      const Superfunction residual = s > 0 ? entry(b, a) + entry(a, b) : entry(b, a) - entry(a, b);
      if (!residual.is_zero()) return false;
    }
  }
  return true;
}

TwoForm& TwoForm::operator+=(const TwoForm& other) {
  require_same_chart(chart_, other.chart_, "two-form sum");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

TwoForm& TwoForm::operator-=(const TwoForm& other) {
  require_same_chart(chart_, other.chart_, "two-form difference");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

TwoForm TwoForm::operator-() const {
  TwoForm out(*this);
  for (auto& e : out.entries_) e = -e;
  return out;
}

bool TwoForm::operator==(const TwoForm& other) const {
  require_same_chart(chart_, other.chart_, "two-form comparison");
  return entries_ == other.entries_;
}

bool TwoForm::is_zero() const {
  for (const auto& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

std::string TwoForm::to_string() const {
  std::string out;
  for (std::size_t a = 0; a < size(); ++a) {
    for (std::size_t b = a; b < size(); ++b) {
      if (a == b && !is_odd(chart_->parity(a))) continue;
      const std::string basis = "d" + chart_->generator(a).name + "∧d" + chart_->generator(b).name;
      render_term(out, basis, wedge_coefficient(a, b));
    }
  }
  return out.empty() ? "0" : out;
}

OneForm differential(const Superfunction& f) {
  OneForm out(f.chart());
  for (std::size_t a = 0; a < out.size(); ++a) {
    if (f.depends_on(a)) out.set_coefficient(a, f.left_partial(a));
  }
  return out;
}

TwoForm exterior_derivative(const OneForm& alpha) {
  const auto& chart = alpha.chart();
  const auto n = chart->size();
  // dc_x, cached per coefficient
  std::vector<std::vector<Superfunction>> partials(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) partials[x].push_back(alpha.coefficient(x).left_partial(y));
  }
  TwoForm out(chart);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x; y < n; ++y) {
      const int s = koszul_sign(chart->parity(x), chart->parity(y));
      Superfunction w = -partials[x][y];
      if (s > 0) {
        w += partials[y][x];
      } else {
        w -= partials[y][x];
      }
      if (w.is_zero()) continue;
      if (x == y) {
        out.add_wedge(x, x, w * Rational(1, 2));
      } else {
        out.add_wedge(x, y, w);
      }
    }
  }
  return out;
}

Superfunction interior(const VectorField& x, const OneForm& alpha) {
  require_same_chart(x.domain(), alpha.chart(), "interior product");
  Superfunction out(x.codomain());
  for (std::size_t b = 0; b < alpha.size(); ++b) {
    if (x.component(b).is_zero() || alpha.coefficient(b).is_zero()) continue;
    out += x.component(b) * x.pull(alpha.coefficient(b));
  }
  return out;
}

OneForm interior(const VectorField& x, const TwoForm& w) {
  require_same_chart(x.domain(), w.chart(), "interior product");
  const auto& chart = w.chart();
  const auto n = chart->size();
  OneForm out(x.codomain());
  for (std::size_t b = 0; b < n; ++b) {
    const bool odd_b = is_odd(chart->parity(b));
    Superfunction coefficient(x.codomain());
    for (std::size_t e = 0; e < n; ++e) {
      if (x.component(e).is_zero() || w.entry(e, b).is_zero()) continue;
      coefficient += twist_if(odd_b, x.component(e)) * x.pull(w.entry(e, b));
    }
    if (coefficient.is_zero()) continue;
    if (x.is_ordinary()) {
      out.set_coefficient(b, out.coefficient(b) + coefficient);
    } else {
      out += differential(x.pull(Superfunction::generator(chart, b))) * coefficient;
    }
  }
  return out;
}

Superfunction evaluate(const TwoForm& w, const VectorField& x, const VectorField& y) {
  require_same_chart(x.domain(), w.chart(), "two-form evaluation");
  require_same_chart(y.domain(), w.chart(), "two-form evaluation");
  require_same_chart(x.codomain(), y.codomain(), "two-form evaluation");
  const auto& chart = w.chart();
  const auto n = chart->size();
  Superfunction out(x.codomain());
  for (std::size_t b = 0; b < n; ++b) {
    if (y.component(b).is_zero()) continue;
    const bool odd_b = is_odd(chart->parity(b));
    Superfunction coefficient(x.codomain());
    for (std::size_t e = 0; e < n; ++e) {
      if (x.component(e).is_zero() || w.entry(e, b).is_zero()) continue;
      coefficient += twist_if(odd_b, x.component(e)) * x.pull(w.entry(e, b));
    }
    out += y.component(b) * coefficient;
  }
  return out;
}

TwoForm pullback(const TwoForm& w, const AlgebraMorphism& phi) {
  require_same_chart(w.chart(), phi.source(), "two-form pullback");
  const auto& source = phi.source();
  const auto& target = phi.target();
  const auto n = source->size();
  const auto m = target->size();
  // jacobian[x][e] = d_x phi*(x^e)
  std::vector<std::vector<Superfunction>> jacobian(m);
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t e = 0; e < n; ++e) jacobian[x].push_back(phi.image(e).left_partial(x));
  }
  std::vector<Superfunction> pulled;
  pulled.reserve(n * n);
  for (std::size_t e = 0; e < n; ++e) {
    for (std::size_t b = 0; b < n; ++b) pulled.push_back(phi.apply(w.entry(e, b)));
  }
  TwoForm out(target);
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = x; y < m; ++y) {
      Superfunction value(target);
      for (std::size_t b = 0; b < n; ++b) {
        if (jacobian[y][b].is_zero()) continue;
        const bool odd_b = is_odd(source->parity(b));
        Superfunction inner(target);
        for (std::size_t e = 0; e < n; ++e) {
          if (jacobian[x][e].is_zero() || pulled[e * n + b].is_zero()) continue;
          inner += twist_if(odd_b, jacobian[x][e]) * pulled[e * n + b];
        }
        value += jacobian[y][b] * inner;
      }
      if (value.is_zero()) continue;
      if (x == y) {
        out.add_wedge(x, x, value * Rational(1, 2));
      } else {
        out.add_wedge(x, y, value);
      }
    }
  }
  return out;
}

}  // namespace superlag

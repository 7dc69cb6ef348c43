#include "superlag/superalgebra.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "superlag/error.hpp"

namespace superlag {

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

const char* to_string(Parity p) { return is_odd(p) ? "odd" : "even"; }

Chart::Chart(ChartKind kind, std::vector<Generator> generators)
    : kind_(kind), generators_(std::move(generators)) {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    generators_[i].index = i;
    if (!by_name_.emplace(generators_[i].name, i).second) {
      throw Error("duplicate generator name '" + generators_[i].name + "'");
    }
  }
}

std::optional<std::size_t> Chart::find(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

std::size_t Chart::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw Error("no generator named '" + std::string(name) + "' in chart");
}

std::uint32_t Monomial::total_degree() const {
  std::uint32_t d = 0;
  for (auto e : exponents) d += e;
  return d;
}

std::size_t Monomial::odd_degree(const Chart& chart) const {
  std::size_t d = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] != 0 && is_odd(chart.parity(i))) ++d;
  }
  return d;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  const auto da = a.total_degree();
  const auto db = b.total_degree();
  if (da != db) return da < db;
  for (std::size_t i = a.exponents.size(); i-- > 0;) {
    if (a.exponents[i] != b.exponents[i]) return a.exponents[i] > b.exponents[i];
  }
  return false;
}

void require_same_chart(const ChartPtr& a, const ChartPtr& b, const char* what) {
  if (a == b) return;
  if (a && b && a->size() == b->size() && a->kind() == b->kind()) {
    bool same = true;
    for (std::size_t i = 0; i < a->size() && same; ++i) {
      same = a->generator(i).name == b->generator(i).name &&
             a->generator(i).parity == b->generator(i).parity;
    }
    if (same) return;
  }
  throw ChartMismatch(std::string(what) + ": operands live on different charts");
}

std::optional<int> odd_product_sign(const Chart& chart, const Monomial& a, const Monomial& b) {
  // Count pairs (x in a, y in b) of odd factors with x > y.
  std::size_t a_above = 0;
  std::size_t inversions = 0;
  for (std::size_t i = chart.size(); i-- > 0;) {
    if (!is_odd(chart.parity(i))) continue;
    const bool in_a = a.exponents[i] != 0;
    const bool in_b = b.exponents[i] != 0;
    if (in_a && in_b) return std::nullopt;
    if (in_b) inversions += a_above;
    if (in_a) ++a_above;
  }
  return (inversions % 2 == 0) ? 1 : -1;
}

Superfunction::Superfunction(ChartPtr chart) : chart_(std::move(chart)) {}

Superfunction Superfunction::constant(ChartPtr chart, const Rational& value) {
  Superfunction f(chart);
  f.add_term(Monomial{std::vector<std::uint32_t>(chart->size(), 0)}, value);
  return f;
}

Superfunction Superfunction::generator(ChartPtr chart, std::size_t index) {
  Monomial m{std::vector<std::uint32_t>(chart->size(), 0)};
  m.exponents.at(index) = 1;
  Superfunction f(chart);
  f.add_term(m, 1);
  return f;
}

Superfunction Superfunction::generator(ChartPtr chart, std::string_view name) {
  const auto index = chart->index_of(name);
  return generator(std::move(chart), index);
}

Superfunction Superfunction::monomial(ChartPtr chart, Monomial m, const Rational& coefficient) {
  for (std::size_t i = 0; i < m.exponents.size(); ++i) {
    if (is_odd(chart->parity(i)) && m.exponents[i] > 1) return Superfunction(chart);
  }
  Superfunction f(chart);
  f.add_term(m, coefficient);
  return f;
}

void Superfunction::add_term(const Monomial& m, const Rational& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

bool Superfunction::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.total_degree() == 0);
}

Rational Superfunction::constant_term() const {
  if (terms_.empty()) return 0;
  const auto& [m, c] = *terms_.begin();
  return m.total_degree() == 0 ? c : Rational(0);
}

std::optional<Parity> Superfunction::parity() const {
  std::optional<Parity> result;
  for (const auto& [m, c] : terms_) {
    const Parity p = (m.odd_degree(*chart_) % 2 == 0) ? Parity::Even : Parity::Odd;
    if (!result) {
      result = p;
    } else if (*result != p) {
      return std::nullopt;
    }
  }
  return result.value_or(Parity::Even);
}

Superfunction Superfunction::even_part() const {
  Superfunction out(chart_);
  for (const auto& [m, c] : terms_) {
    if (m.odd_degree(*chart_) % 2 == 0) out.terms_.emplace_hint(out.terms_.end(), m, c);
  }
  return out;
}

Superfunction Superfunction::odd_part() const {
  Superfunction out(chart_);
  for (const auto& [m, c] : terms_) {
    if (m.odd_degree(*chart_) % 2 == 1) out.terms_.emplace_hint(out.terms_.end(), m, c);
  }
  return out;
}

Superfunction Superfunction::parity_twist() const {
  Superfunction out(*this);
  for (auto& [m, c] : out.terms_) {
    if (m.odd_degree(*chart_) % 2 == 1) c = -c;
  }
  return out;
}

bool Superfunction::depends_on(std::size_t index) const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [&](const auto& t) { return t.first.exponents[index] != 0; });
}

Superfunction Superfunction::operator-() const {
  Superfunction out(*this);
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Superfunction& Superfunction::operator+=(const Superfunction& other) {
  require_same_chart(chart_, other.chart_, "add");
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Superfunction& Superfunction::operator-=(const Superfunction& other) {
  require_same_chart(chart_, other.chart_, "sub");
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Superfunction& Superfunction::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= scalar;
  return *this;
}

Superfunction operator*(const Superfunction& a, const Superfunction& b) {
  require_same_chart(a.chart_, b.chart_, "mul");
  Superfunction out(a.chart_);
  const auto n = a.chart_->size();
  Monomial product{std::vector<std::uint32_t>(n, 0)};
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      const auto sign = odd_product_sign(*a.chart_, ma, mb);
      if (!sign) continue;
      for (std::size_t i = 0; i < n; ++i) product.exponents[i] = ma.exponents[i] + mb.exponents[i];
      Rational c = ca * cb;
      if (*sign < 0) c = -c;
      out.add_term(product, c);
    }
  }
  return out;
}

bool Superfunction::operator==(const Superfunction& other) const {
  require_same_chart(chart_, other.chart_, "compare");
  return terms_ == other.terms_;
}

Superfunction Superfunction::pow(unsigned exponent) const {
  Superfunction result = constant(chart_, 1);
  Superfunction base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Superfunction Superfunction::left_partial(std::size_t index) const {
  Superfunction out(chart_);
  const bool odd = is_odd(chart_->parity(index));
  for (const auto& [m, c] : terms_) {
    const auto e = m.exponents[index];
    if (e == 0) continue;
    Monomial reduced = m;
    reduced.exponents[index] = e - 1;
    if (!odd) {
      out.add_term(reduced, c * e);
      continue;
    }
    std::size_t before = 0;
    for (std::size_t i = 0; i < index; ++i) {
      if (m.exponents[i] != 0 && is_odd(chart_->parity(i))) ++before;
    }
    out.add_term(reduced, before % 2 == 0 ? Rational(c) : Rational(-c));
  }
  return out;
}

Superfunction Superfunction::body() const {
  Superfunction out(chart_);
  for (const auto& [m, c] : terms_) {
    if (m.odd_degree(*chart_) == 0) out.terms_.emplace_hint(out.terms_.end(), m, c);
  }
  return out;
}

Superfunction Superfunction::invert() const {
  const auto p = parity();
  if (!p || *p != Parity::Even) throw NotInvertible("cannot invert a non-even superfunction");
  const Superfunction b = body();
  if (b.is_zero()) throw NotInvertible("cannot invert: body is zero");
  if (!b.is_constant()) throw NotInvertible("cannot invert: body is not constant");
  const Rational c = b.constant_term();
  Superfunction inv_c = constant(chart_, 1 / c);
  // f = c (1 + n) with n nilpotent; 1/f = (1/c) sum_k (-n)^k.
  const Superfunction minus_n = constant(chart_, 1) - (*this) * Rational(1 / c);
  Superfunction sum = constant(chart_, 1);
  Superfunction power = constant(chart_, 1);
  for (;;) {
    power = power * minus_n;
    if (power.is_zero()) break;
    sum += power;
  }
  return sum * inv_c;
}

namespace {

std::string render_factors(const Chart& chart, const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.exponents.size(); ++i) {
    const auto e = m.exponents[i];
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += chart.generator(i).name;
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace

std::string Superfunction::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    const Rational magnitude = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const std::string factors = render_factors(*chart_, m);
    if (factors.empty()) {
      out += superlag::to_string(magnitude);
    } else if (magnitude == 1) {
      out += factors;
    } else {
      out += superlag::to_string(magnitude) + "*" + factors;
    }
  }
  return out;
}

AlgebraMorphism::AlgebraMorphism(ChartPtr source, ChartPtr target, std::vector<Superfunction> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (images_.size() != source_->size()) {
    throw Error("morphism needs one image per source generator");
  }
  for (std::size_t i = 0; i < images_.size(); ++i) {
    require_same_chart(images_[i].chart(), target_, "morphism image");
    if (images_[i].is_zero()) continue;
    const auto p = images_[i].parity();
    if (!p || *p != source_->parity(i)) {
      throw ParityError("morphism image of '" + source_->generator(i).name +
                        "' does not preserve parity: " + images_[i].to_string());
    }
  }
}

AlgebraMorphism AlgebraMorphism::identity(ChartPtr chart) {
  std::vector<Superfunction> images;
  images.reserve(chart->size());
  for (std::size_t i = 0; i < chart->size(); ++i) images.push_back(Superfunction::generator(chart, i));
  return AlgebraMorphism(chart, chart, std::move(images));
}

Superfunction AlgebraMorphism::apply(const Superfunction& f) const {
  require_same_chart(f.chart(), source_, "pullback");
  const auto n = source_->size();
  std::vector<std::vector<Superfunction>> powers(n);
  auto power_of = [&](std::size_t i, std::uint32_t e) -> const Superfunction& {
    auto& cache = powers[i];
    if (cache.empty()) {
      cache.push_back(Superfunction::constant(target_, 1));
    }
    while (cache.size() <= e) cache.push_back(cache.back() * images_[i]);
    return cache[e];
  };
  Superfunction out(target_);
  for (const auto& [m, c] : f.terms()) {
    Superfunction term = Superfunction::constant(target_, c);
    for (std::size_t i = 0; i < n && !term.is_zero(); ++i) {
      if (m.exponents[i] != 0) term = term * power_of(i, m.exponents[i]);
    }
    out += term;
  }
  return out;
}

AlgebraMorphism AlgebraMorphism::after(const AlgebraMorphism& inner) const {
  require_same_chart(inner.target_, source_, "compose");
  std::vector<Superfunction> images;
  images.reserve(inner.images_.size());
  for (const auto& img : inner.images_) images.push_back(apply(img));
  return AlgebraMorphism(inner.source_, target_, std::move(images));
}

}  // namespace superlag

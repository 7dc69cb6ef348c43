#pragma once

// Exact supercommutative polynomial ring over Q.
//
// A Superfunction is a finite sum of coefficient * monomial, where a monomial
// is a product of even generators (with exponents) and distinct odd
// generators. Odd factors are kept in ascending generator index order; the
// sign from reordering is folded into the coefficient, so two equal ring
// elements always have identical term maps.

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <gmpxx.h>

namespace superlag {

using Rational = mpq_class;

/// Renders a rational as `a` or `a/b`.
std::string to_string(const Rational& value);

enum class Parity : std::uint8_t { Even = 0, Odd = 1 };

constexpr Parity operator+(Parity a, Parity b) {
  return static_cast<Parity>(static_cast<std::uint8_t>(a) ^ static_cast<std::uint8_t>(b));
}
constexpr bool is_odd(Parity p) { return p == Parity::Odd; }
/// (-1)^{|a||b|}
constexpr int koszul_sign(Parity a, Parity b) { return (is_odd(a) && is_odd(b)) ? -1 : 1; }
const char* to_string(Parity p);

enum class ChartKind { Base, Tangent, Cotangent };

/// Whether a generator is a base coordinate (q, theta) or a fibre coordinate
/// (velocity/momentum).
enum class GeneratorRole { Position, Fiber };

struct Generator {
  std::string name;
  Parity parity = Parity::Even;
  std::size_t index = 0;  // position in the chart; strict total order
  GeneratorRole role = GeneratorRole::Position;
  std::size_t base = 0;  // index of the underlying base coordinate in M
};

class Chart {
 public:
  Chart(ChartKind kind, std::vector<Generator> generators);

  ChartKind kind() const { return kind_; }
  std::size_t size() const { return generators_.size(); }
  const Generator& generator(std::size_t index) const { return generators_.at(index); }
  const std::vector<Generator>& generators() const { return generators_; }
  Parity parity(std::size_t index) const { return generators_[index].parity; }

  std::optional<std::size_t> find(std::string_view name) const;
  /// Throws Error if the name is not a generator of this chart.
  std::size_t index_of(std::string_view name) const;

 private:
  ChartKind kind_;
  std::vector<Generator> generators_;
  std::unordered_map<std::string, std::size_t> by_name_;
};

using ChartPtr = std::shared_ptr<const Chart>;

/// Exponent vector over a chart's generators. Odd exponents are 0 or 1.
struct Monomial {
  std::vector<std::uint32_t> exponents;

  std::uint32_t total_degree() const;
  std::size_t odd_degree(const Chart& chart) const;
  bool operator==(const Monomial&) const = default;
};

/// Display order: ascending total degree, then the monomial with the larger
/// exponent at the highest-index differing generator comes first.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class Superfunction {
 public:
  using TermMap = std::map<Monomial, Rational, MonomialOrder>;

  /// The zero function on a chart.
  explicit Superfunction(ChartPtr chart);

  static Superfunction constant(ChartPtr chart, const Rational& value);
  static Superfunction generator(ChartPtr chart, std::size_t index);
  static Superfunction generator(ChartPtr chart, std::string_view name);
  /// Single term; the odd factors are taken in ascending index order.
  static Superfunction monomial(ChartPtr chart, Monomial m, const Rational& coefficient);

  const ChartPtr& chart() const { return chart_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Coefficient of the empty monomial.
  Rational constant_term() const;
  /// Even or odd when every term agrees, nullopt when inhomogeneous. Zero is even.
  std::optional<Parity> parity() const;
  Superfunction even_part() const;
  Superfunction odd_part() const;
  /// even_part - odd_part: the grading automorphism f -> (-1)^{|f|} f.
  Superfunction parity_twist() const;
  /// True if the function mentions generator `index`.
  bool depends_on(std::size_t index) const;

  Superfunction operator-() const;
  Superfunction& operator+=(const Superfunction& other);
  Superfunction& operator-=(const Superfunction& other);
  Superfunction& operator*=(const Rational& scalar);
  friend Superfunction operator+(Superfunction a, const Superfunction& b) { return a += b; }
  friend Superfunction operator-(Superfunction a, const Superfunction& b) { return a -= b; }
  friend Superfunction operator*(const Superfunction& a, const Superfunction& b);
  friend Superfunction operator*(Superfunction a, const Rational& s) { return a *= s; }
  friend Superfunction operator*(const Rational& s, Superfunction a) { return a *= s; }
  bool operator==(const Superfunction& other) const;

  Superfunction pow(unsigned exponent) const;

  /// Left derivative: anticommute the generator to the front, then strike it.
  Superfunction left_partial(std::size_t index) const;

  /// Sets every odd generator to zero.
  Superfunction body() const;
  /// Multiplicative inverse of an even element with nonzero constant body.
  /// Throws NotInvertible otherwise.
  Superfunction invert() const;

  /// Canonical text, e.g. `1/2*v_q1^2 + q2*v_q1`.
  std::string to_string() const;

  /// Adds coefficient * monomial, with the monomial already in normal form.
  void add_term(const Monomial& m, const Rational& coefficient);

 private:
  ChartPtr chart_;
  TermMap terms_;
};

/// Parity of the product of the generator-ordered odd factors a*b, or nullopt
/// when they share an odd generator.
std::optional<int> odd_product_sign(const Chart& chart, const Monomial& a, const Monomial& b);

/// Parity-preserving superalgebra homomorphism source -> target, determined
/// by the image of every source generator.
class AlgebraMorphism {
 public:
  AlgebraMorphism(ChartPtr source, ChartPtr target, std::vector<Superfunction> images);

  static AlgebraMorphism identity(ChartPtr chart);

  const ChartPtr& source() const { return source_; }
  const ChartPtr& target() const { return target_; }
  const Superfunction& image(std::size_t index) const { return images_.at(index); }
  const std::vector<Superfunction>& images() const { return images_; }

  Superfunction apply(const Superfunction& f) const;
  /// (this ∘ inner)*: first apply inner, then this. inner.target must equal source().
  AlgebraMorphism after(const AlgebraMorphism& inner) const;

 private:
  ChartPtr source_;
  ChartPtr target_;
  std::vector<Superfunction> images_;
};

/// Throws ChartMismatch unless both functions are on the same chart.
void require_same_chart(const ChartPtr& a, const ChartPtr& b, const char* what);

}  // namespace superlag

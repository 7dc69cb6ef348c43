#pragma once

// Brute-force model of the Grassmann algebra: odd generators are sent to
// distinct basis vectors of a concrete exterior algebra, even generators to
// rationals. Nothing here reuses the symbolic kernel's sign bookkeeping; the
// only thing read from a Superfunction is its list of (coefficient, exponent
// vector) terms.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "superlag/superalgebra.hpp"

namespace superlag::oracle {

inline constexpr std::size_t kMaxDimension = 12;

/// Element of the exterior algebra on e_0..e_{dim-1}; blades are bitmasks.
class Multivector {
 public:
  explicit Multivector(std::size_t dimension);

  static Multivector scalar(std::size_t dimension, const Rational& value);
  static Multivector basis(std::size_t dimension, std::size_t index);

  std::size_t dimension() const { return dimension_; }
  const std::map<std::uint32_t, Rational>& components() const { return components_; }
  Rational component(std::uint32_t blade) const;
  /// Component on e_{i1} ^ ... ^ e_{ik} for strictly increasing indices.
  Rational component(const std::vector<std::size_t>& indices) const;

  Multivector& operator+=(const Multivector& other);
  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator*(const Multivector& a, const Multivector& b);
  friend Multivector operator*(Multivector a, const Rational& s);
  bool operator==(const Multivector& other) const { return components_ == other.components_; }

  /// Left contraction by the dual of e_index: the odd left derivative.
  Multivector contract(std::size_t index) const;

 private:
  void add(std::uint32_t blade, const Rational& value);

  std::size_t dimension_;
  std::map<std::uint32_t, Rational> components_;
};

struct OracleContext {
  std::size_t odd_dimension = 0;
  /// Per chart generator: basis index for odd generators.
  std::vector<std::optional<std::size_t>> odd_assignment;
  /// Per chart generator: value for even generators.
  std::vector<std::optional<Rational>> even_values;
  std::uint64_t seed = 0;
};

/// Random injective odd assignment into odd_count + spare dimensions and
/// random rational values (small numerators and denominators) for evens.
OracleContext random_context(const Chart& chart, std::uint64_t seed, std::size_t spare = 2);

/// Ring homomorphism into the concrete algebra. Throws Error when the
/// context does not cover a generator used by f.
Multivector evaluate(const Superfunction& f, const OracleContext& ctx);

/// True iff f and g evaluate equal in `trials` random contexts.
bool check_identity(const Superfunction& f, const Superfunction& g, unsigned trials,
                    std::uint64_t seed);

}  // namespace superlag::oracle

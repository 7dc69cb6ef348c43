#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "superlag/superalgebra.hpp"

namespace superlag {

struct RandomPolySpec {
  unsigned max_terms = 3;
  unsigned max_degree = 2;
  int coefficient_range = 5;  // numerators in [-range, range], denominators in [1, 3]
};

/// Uniform draw in [0, n) from the raw engine output; portable across
/// standard libraries, unlike std::uniform_int_distribution.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t n);

/// Nonzero rational with numerator in [-range, range] and denominator in [1, 3].
Rational random_rational(std::mt19937_64& rng, int range);

/// Random homogeneous superfunction of the given parity, using only the
/// generators in `allowed` (all generators when empty). May be zero when no
/// monomial of the requested parity fits the degree bound.
Superfunction random_superfunction(const ChartPtr& chart, Parity parity, std::mt19937_64& rng,
                                   const RandomPolySpec& spec = {},
                                   const std::vector<std::size_t>& allowed = {});

}  // namespace superlag

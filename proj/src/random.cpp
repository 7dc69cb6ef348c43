#include "superlag/random.hpp"

namespace superlag {

std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t n) { return n == 0 ? 0 : rng() % n; }

Rational random_rational(std::mt19937_64& rng, int range) {
  const auto span = static_cast<std::uint64_t>(2 * range);
  long num = static_cast<long>(draw_below(rng, span)) - range;
  if (num >= 0) ++num;  // skip zero
  const long den = static_cast<long>(draw_below(rng, 3)) + 1;
  return Rational(num) / Rational(den);
}

Superfunction random_superfunction(const ChartPtr& chart, Parity parity, std::mt19937_64& rng,
                                   const RandomPolySpec& spec, const std::vector<std::size_t>& allowed) {
  std::vector<std::size_t> pool = allowed;
  if (pool.empty()) {
    for (std::size_t i = 0; i < chart->size(); ++i) pool.push_back(i);
  }
  Superfunction out(chart);
  const unsigned terms = 1 + static_cast<unsigned>(draw_below(rng, spec.max_terms));
  for (unsigned t = 0; t < terms; ++t) {
    // A few attempts to land on the requested parity.
    for (int attempt = 0; attempt < 16; ++attempt) {
      Monomial m{std::vector<std::uint32_t>(chart->size(), 0)};
      const auto degree = static_cast<unsigned>(draw_below(rng, spec.max_degree + 1));
      std::size_t odd = 0;
      bool ok = true;
      for (unsigned k = 0; k < degree && ok; ++k) {
        const auto g = pool[draw_below(rng, pool.size())];
        if (is_odd(chart->parity(g))) {
          if (m.exponents[g] != 0) {
            ok = false;
          } else {
            ++odd;
          }
        }
        ++m.exponents[g];
      }
      if (!ok || (odd % 2 == 1) != is_odd(parity)) continue;
      Superfunction term = Superfunction::monomial(chart, m, random_rational(rng, spec.coefficient_range));
      out += term;
      break;
    }
  }
  return out;
}

}  // namespace superlag

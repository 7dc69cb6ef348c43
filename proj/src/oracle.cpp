#include "superlag/oracle.hpp"

#include <bit>
#include <numeric>

#include "superlag/error.hpp"

namespace superlag::oracle {

Multivector::Multivector(std::size_t dimension) : dimension_(dimension) {
  if (dimension > kMaxDimension) throw Error("oracle dimension exceeds limit");
}

Multivector Multivector::scalar(std::size_t dimension, const Rational& value) {
  Multivector m(dimension);
  m.add(0, value);
  return m;
}

Multivector Multivector::basis(std::size_t dimension, std::size_t index) {
  if (index >= dimension) throw Error("oracle basis index out of range");
  Multivector m(dimension);
  m.add(std::uint32_t{1} << index, 1);
  return m;
}

Rational Multivector::component(std::uint32_t blade) const {
  auto it = components_.find(blade);
  return it == components_.end() ? Rational(0) : it->second;
}

Rational Multivector::component(const std::vector<std::size_t>& indices) const {
  std::uint32_t blade = 0;
  for (auto i : indices) blade |= std::uint32_t{1} << i;
  return component(blade);
}

void Multivector::add(std::uint32_t blade, const Rational& value) {
  if (value == 0) return;
  auto [it, inserted] = components_.try_emplace(blade, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) components_.erase(it);
  }
}

Multivector& Multivector::operator+=(const Multivector& other) {
  for (const auto& [blade, value] : other.components_) add(blade, value);
  return *this;
}

namespace {

// Sign of e_A e_B rewritten as the sorted blade A|B.
int blade_sign(std::uint32_t a, std::uint32_t b) {
  int swaps = 0;
  for (std::uint32_t rest = b; rest != 0; rest &= rest - 1) {
    const int bit = std::countr_zero(rest);
    swaps += std::popcount(a >> (bit + 1));
  }
  return (swaps % 2 == 0) ? 1 : -1;
}

}  // namespace

Multivector operator*(const Multivector& a, const Multivector& b) {
  Multivector out(std::max(a.dimension_, b.dimension_));
  for (const auto& [ba, va] : a.components_) {
    for (const auto& [bb, vb] : b.components_) {
      if ((ba & bb) != 0) continue;
      const Rational v = va * vb;
      out.add(ba | bb, blade_sign(ba, bb) > 0 ? v : Rational(-v));
    }
  }
  return out;
}

Multivector operator*(Multivector a, const Rational& s) {
  Multivector out(a.dimension_);
  for (const auto& [blade, value] : a.components_) out.add(blade, value * s);
  return out;
}

Multivector Multivector::contract(std::size_t index) const {
  Multivector out(dimension_);
  const std::uint32_t bit = std::uint32_t{1} << index;
  for (const auto& [blade, value] : components_) {
    if ((blade & bit) == 0) continue;
    const int below = std::popcount(blade & (bit - 1));
    out.add(blade & ~bit, below % 2 == 0 ? value : Rational(-value));
  }
  return out;
}

namespace {

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

}  // namespace

OracleContext random_context(const Chart& chart, std::uint64_t seed, std::size_t spare) {
  std::mt19937_64 rng(seed);
  OracleContext ctx;
  ctx.seed = seed;
  std::size_t odd_count = 0;
  for (const auto& g : chart.generators()) {
    if (is_odd(g.parity)) ++odd_count;
  }
  ctx.odd_dimension = odd_count + spare;
  if (ctx.odd_dimension > kMaxDimension) throw Error("too many odd generators for the oracle");

  std::vector<std::size_t> slots(ctx.odd_dimension);
  std::iota(slots.begin(), slots.end(), 0);
  for (std::size_t i = slots.size(); i > 1; --i) std::swap(slots[i - 1], slots[draw(rng, i)]);

  ctx.odd_assignment.resize(chart.size());
  ctx.even_values.resize(chart.size());
  std::size_t next = 0;
  for (const auto& g : chart.generators()) {
    if (is_odd(g.parity)) {
      ctx.odd_assignment[g.index] = slots[next++];
    } else {
      const auto num = static_cast<long>(draw(rng, 31)) - 15;
      const auto den = static_cast<long>(draw(rng, 6)) + 1;
      ctx.even_values[g.index] = Rational(num) / Rational(den);
    }
  }
  return ctx;
}

Multivector evaluate(const Superfunction& f, const OracleContext& ctx) {
  const auto& chart = *f.chart();
  Multivector out(ctx.odd_dimension);
  for (const auto& [m, c] : f.terms()) {
    Rational scalar = c;
    Multivector blade = Multivector::scalar(ctx.odd_dimension, 1);
    for (std::size_t i = 0; i < m.exponents.size(); ++i) {
      const auto e = m.exponents[i];
      if (e == 0) continue;
      if (is_odd(chart.parity(i))) {
        if (i >= ctx.odd_assignment.size() || !ctx.odd_assignment[i]) {
          throw Error("oracle context does not cover '" + chart.generator(i).name + "'");
        }
        Multivector factor = Multivector::basis(ctx.odd_dimension, *ctx.odd_assignment[i]);
        for (std::uint32_t k = 0; k < e; ++k) blade = blade * factor;
      } else {
        if (i >= ctx.even_values.size() || !ctx.even_values[i]) {
          throw Error("oracle context does not cover '" + chart.generator(i).name + "'");
        }
        for (std::uint32_t k = 0; k < e; ++k) scalar *= *ctx.even_values[i];
      }
    }
    out += blade * scalar;
  }
  return out;
}

bool check_identity(const Superfunction& f, const Superfunction& g, unsigned trials,
                    std::uint64_t seed) {
  require_same_chart(f.chart(), g.chart(), "oracle identity");
  std::mt19937_64 seeds(seed);
  for (unsigned t = 0; t < trials; ++t) {
    const auto ctx = random_context(*f.chart(), seeds());
    if (!(evaluate(f, ctx) == evaluate(g, ctx))) return false;
  }
  return true;
}

}  // namespace superlag::oracle

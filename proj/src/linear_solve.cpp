#include "superlag/linear_solve.hpp"

#include <optional>

#include "superlag/error.hpp"

namespace superlag {

RingMatrix::RingMatrix(ChartPtr chart, std::size_t rows, std::size_t cols)
    : chart_(chart), rows_(rows), cols_(cols), data_(rows * cols, Superfunction(chart)) {}

namespace {

bool usable_pivot(const Superfunction& f) {
  if (f.is_zero()) return false;
  const auto p = f.parity();
  if (!p || *p != Parity::Even) return false;
  const Superfunction b = f.body();
  return !b.is_zero() && b.is_constant();
}

}  // namespace

LinearSolution solve_linear(const RingMatrix& a, const std::vector<Superfunction>& rhs) {
  if (rhs.size() != a.rows()) throw Error("solve_linear: rhs size does not match matrix rows");
  const auto rows = a.rows();
  const auto cols = a.cols();
  const auto& chart = a.chart();

  RingMatrix m = a;
  std::vector<Superfunction> b = rhs;
  std::vector<bool> row_used(rows, false);
  std::vector<std::optional<std::size_t>> pivot_row_of(cols);

  for (std::size_t col = cols; col-- > 0;) {
    std::optional<std::size_t> pivot;
    for (std::size_t r = 0; r < rows; ++r) {
      if (!row_used[r] && usable_pivot(m(r, col))) {
        pivot = r;
        break;
      }
    }
    if (!pivot) continue;
    const auto pr = *pivot;
    row_used[pr] = true;
    pivot_row_of[col] = pr;

    const Superfunction inv = m(pr, col).invert();
    for (std::size_t c = 0; c < cols; ++c) m(pr, c) = inv * m(pr, c);
    b[pr] = inv * b[pr];

    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pr || m(r, col).is_zero()) continue;
      const Superfunction factor = m(r, col);
      for (std::size_t c = 0; c < cols; ++c) {
        if (!m(pr, c).is_zero()) m(r, c) -= factor * m(pr, c);
      }
      b[r] -= factor * b[pr];
    }
  }

  LinearSolution out;
  for (std::size_t c = 0; c < cols; ++c) {
    (pivot_row_of[c] ? out.pivot_columns : out.free_columns).push_back(c);
  }

  bool inconsistent = false;
  for (std::size_t r = 0; r < rows; ++r) {
    if (row_used[r]) continue;
    for (std::size_t c = 0; c < cols; ++c) {
      if (!m(r, c).is_zero()) {
        out.status = SolveStatus::Undecided;
        return out;
      }
    }
    if (!b[r].is_zero()) inconsistent = true;
  }
  if (inconsistent) {
    out.status = SolveStatus::Inconsistent;
    return out;
  }

  out.status = SolveStatus::Solved;
  out.particular.assign(cols, Superfunction(chart));
  for (auto c : out.pivot_columns) out.particular[c] = b[*pivot_row_of[c]];
  for (auto f : out.free_columns) {
    std::vector<Superfunction> v(cols, Superfunction(chart));
    v[f] = Superfunction::constant(chart, 1);
    for (auto c : out.pivot_columns) v[c] = -m(*pivot_row_of[c], f);
    out.nullspace.push_back(std::move(v));
  }
  return out;
}

LinearSolution solve_left_linear(const RingMatrix& c, const std::vector<Superfunction>& rhs,
                                 const std::vector<Parity>& unknown_parity) {
  if (unknown_parity.size() != c.cols()) throw Error("solve_left_linear: parity list size mismatch");
  RingMatrix a(c.chart(), c.rows(), c.cols());
  for (std::size_t i = 0; i < c.rows(); ++i) {
    for (std::size_t j = 0; j < c.cols(); ++j) {
      // x c = sigma^{|x|}(c) x
      a(i, j) = is_odd(unknown_parity[j]) ? c(i, j).parity_twist() : c(i, j);
    }
  }
  return solve_linear(a, rhs);
}

}  // namespace superlag

#pragma once

// Gauss-Jordan elimination over the supercommutative ring.
//
// Only pivots that are even with a nonzero constant body are used (these are
// exactly the elements `Superfunction::invert` accepts). When elimination
// stalls on a nonzero entry that is not such a pivot the result is Undecided;
// rank over a ring with nilpotents is not attempted.

#include <cstddef>
#include <vector>

#include "superlag/superalgebra.hpp"

namespace superlag {

enum class SolveStatus { Solved, Inconsistent, Undecided };

class RingMatrix {
 public:
  RingMatrix(ChartPtr chart, std::size_t rows, std::size_t cols);

  const ChartPtr& chart() const { return chart_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Superfunction& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Superfunction& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  ChartPtr chart_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Superfunction> data_;
};

struct LinearSolution {
  SolveStatus status = SolveStatus::Undecided;
  /// Solution with every free unknown set to zero (valid when Solved).
  std::vector<Superfunction> particular;
  std::vector<std::size_t> pivot_columns;
  std::vector<std::size_t> free_columns;
  /// One homogeneous solution per free column, with a 1 in that column and
  /// zeros in the other free columns.
  std::vector<std::vector<Superfunction>> nullspace;
};

/// Solves sum_j A(i,j) x_j = rhs_i with the unknowns written to the right of
/// the coefficients. Columns are pivoted from the last to the first; for
/// constant coefficients a nullspace vector's lowest nonzero entry is then
/// the 1 in its free column.
LinearSolution solve_linear(const RingMatrix& a, const std::vector<Superfunction>& rhs);

/// Same system, but written as sum_j x_j c(i,j) = rhs_i with the unknown x_j
/// homogeneous of parity `unknown_parity[j]`. Moves each unknown to the right
/// with its Koszul sign and calls solve_linear.
LinearSolution solve_left_linear(const RingMatrix& c, const std::vector<Superfunction>& rhs,
                                 const std::vector<Parity>& unknown_parity);

}  // namespace superlag

#pragma once

#include <vector>

#include "ordslack/comb_polytope.hpp"
#include "ordslack/rational.hpp"

namespace ordslack {

// Dense matrix of arbitrary-precision rationals. Exact throughout; there is
// no floating point fallback anywhere in this module.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}

  static ExactMatrix from_support(const std::vector<std::vector<std::uint8_t>>& support);
  static ExactMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rat& at(int r, int c) { return a_[r * cols_ + c]; }
  const Rat& at(int r, int c) const { return a_[r * cols_ + c]; }

  ExactMatrix transposed() const;
  ExactMatrix with_row_appended(const std::vector<Rat>& v) const;

  bool is_integral() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rat> a_;
};

// Exact rank. Integer inputs take the fraction-free Bareiss route; anything
// else falls back to rational Gaussian elimination (still exact).
int rank(const ExactMatrix& M);

// Exact membership of v in the row span of M, via a rank comparison.
// Throws DimensionMismatch if the length of v is not cols(M).
bool row_span_contains(const ExactMatrix& M, const std::vector<Rat>& v);

// Rank modulo a prime, used as an independent cross-check in tests.
int rank_mod_p(const std::vector<std::vector<std::uint8_t>>& support, std::uint64_t p);

// Theorem-level tests on the 0/1 filling of the slack support:
// morally 2-level iff rank = dim + 1; 2-level iff additionally the all-ones
// row lies in the row span. The point polytope is trivially both.
bool is_morally_2level(const CombPolytope& P);
bool is_2level(const CombPolytope& P);

}  // namespace ordslack

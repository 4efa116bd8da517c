#include "ordslack/exact_matrix.hpp"

#include <algorithm>

namespace ordslack {

ExactMatrix ExactMatrix::from_support(
    const std::vector<std::vector<std::uint8_t>>& support) {
  const int m = static_cast<int>(support.size());
  const int n = m ? static_cast<int>(support[0].size()) : 0;
  ExactMatrix M(m, n);
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < n; ++c)
      if (support[r][c]) M.at(r, c) = 1;
  return M;
}

ExactMatrix ExactMatrix::identity(int n) {
  ExactMatrix M(n, n);
  for (int i = 0; i < n; ++i) M.at(i, i) = 1;
  return M;
}

ExactMatrix ExactMatrix::transposed() const {
  ExactMatrix T(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) T.at(c, r) = at(r, c);
  return T;
}

ExactMatrix ExactMatrix::with_row_appended(const std::vector<Rat>& v) const {
  ExactMatrix M(rows_ + 1, cols_);
  M.a_ = a_;
  M.a_.resize((rows_ + 1) * cols_, Rat(0));
  for (int c = 0; c < cols_; ++c) M.at(rows_, c) = v[c];
  return M;
}

bool ExactMatrix::is_integral() const {
  for (const Rat& q : a_)
    if (q.get_den() != 1) return false;
  return true;
}

namespace {

// Bareiss fraction-free elimination on an integer copy; intermediate entries
// stay integral and growth is controlled by the previous pivot division.
int rank_bareiss(const ExactMatrix& M) {
  const int m = M.rows(), n = M.cols();
  std::vector<std::vector<Int>> a(m, std::vector<Int>(n));
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < n; ++c) a[r][c] = M.at(r, c).get_num();
  Int prev_pivot = 1;
  int rank = 0;
  for (int col = 0; col < n && rank < m; ++col) {
    int pivot = -1;
    for (int r = rank; r < m; ++r)
      if (a[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[rank], a[pivot]);
    for (int r = rank + 1; r < m; ++r) {
      for (int c = col + 1; c < n; ++c) {
        Int num = a[rank][col] * a[r][c] - a[r][col] * a[rank][c];
        a[r][c] = num / prev_pivot;  // exact by Bareiss
      }
      a[r][col] = 0;
    }
    prev_pivot = a[rank][col];
    ++rank;
  }
  return rank;
}

int rank_rational(const ExactMatrix& M) {
  const int m = M.rows(), n = M.cols();
  std::vector<std::vector<Rat>> a(m, std::vector<Rat>(n));
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < n; ++c) a[r][c] = M.at(r, c);
  int rank = 0;
  for (int col = 0; col < n && rank < m; ++col) {
    int pivot = -1;
    for (int r = rank; r < m; ++r)
      if (a[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[rank], a[pivot]);
    Rat inv = a[rank][col];
    for (int r = rank + 1; r < m; ++r) {
      if (a[r][col] == 0) continue;
      Rat factor = a[r][col] / inv;
      for (int c = col; c < n; ++c) a[r][c] -= factor * a[rank][c];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

int rank(const ExactMatrix& M) {
  if (M.rows() == 0 || M.cols() == 0) return 0;
  return M.is_integral() ? rank_bareiss(M) : rank_rational(M);
}

bool row_span_contains(const ExactMatrix& M, const std::vector<Rat>& v) {
  if (static_cast<int>(v.size()) != M.cols())
    throw DimensionMismatch("vector length does not match column count");
  return rank(M) == rank(M.with_row_appended(v));
}

int rank_mod_p(const std::vector<std::vector<std::uint8_t>>& support, std::uint64_t p) {
  const int m = static_cast<int>(support.size());
  const int n = m ? static_cast<int>(support[0].size()) : 0;
  std::vector<std::vector<std::uint64_t>> a(m, std::vector<std::uint64_t>(n));
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < n; ++c) a[r][c] = support[r][c] % p;
  auto pow_mod = [&](std::uint64_t b, std::uint64_t e) {
    unsigned __int128 acc = 1, base = b % p;
    while (e) {
      if (e & 1) acc = acc * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return static_cast<std::uint64_t>(acc);
  };
  int rank = 0;
  for (int col = 0; col < n && rank < m; ++col) {
    int pivot = -1;
    for (int r = rank; r < m; ++r)
      if (a[r][col]) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[rank], a[pivot]);
    std::uint64_t inv = pow_mod(a[rank][col], p - 2);
    for (int r = rank + 1; r < m; ++r) {
      if (!a[r][col]) continue;
      unsigned __int128 factor = (unsigned __int128)a[r][col] * inv % p;
      for (int c = col; c < n; ++c) {
        unsigned __int128 sub = factor * a[rank][c] % p;
        a[r][c] = (a[r][c] + p - static_cast<std::uint64_t>(sub)) % p;
      }
    }
    ++rank;
  }
  return rank;
}

bool is_morally_2level(const CombPolytope& P) {
  if (P.is_point()) return true;
  return rank(ExactMatrix::from_support(P.support)) == P.dim + 1;
}

bool is_2level(const CombPolytope& P) {
  if (P.is_point()) return true;
  ExactMatrix M = ExactMatrix::from_support(P.support);
  if (rank(M) != P.dim + 1) return false;
  std::vector<Rat> ones(P.num_vertices(), Rat(1));
  return row_span_contains(M, ones);
}

}  // namespace ordslack

#include "linalg.hpp"

namespace qcover {

namespace {

// Generic row-reduction rank over any exact field type F.
template <class F>
int rank_generic(std::vector<std::vector<F>>& m, const F& zero) {
  if (m.empty()) return 0;
  std::size_t rows = m.size(), cols = m[0].size();
  int rank = 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t pivot = row;
    while (pivot < rows && m[pivot][col] == zero) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[row], m[pivot]);
    for (std::size_t r = row + 1; r < rows; ++r) {
      if (m[r][col] == zero) continue;
      F f = m[r][col] / m[row][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
    }
    ++row;
    ++rank;
  }
  return rank;
}

}  // namespace

int rank_rat(std::vector<std::vector<Rat>> m) { return rank_generic(m, Rat(0)); }

int rank_ratfunc(std::vector<std::vector<RatFunc>> m) {
  return rank_generic(m, RatFunc());
}

LinSolve solve_rat(std::vector<std::vector<Rat>> a, std::vector<Rat> b) {
  LinSolve out;
  std::size_t rows = a.size();
  std::size_t cols = rows ? a[0].size() : 0;
  if (b.size() != rows) throw BadInput("solve_rat: dimension mismatch");
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t p = row;
    while (p < rows && a[p][col] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[row], a[p]);
    std::swap(b[row], b[p]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || a[r][col] == 0) continue;
      Rat f = a[r][col] / a[row][col];
      for (std::size_t c = col; c < cols; ++c) a[r][c] -= f * a[row][c];
      b[r] -= f * b[row];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t r = row; r < rows; ++r)
    if (b[r] != 0) return out;  // inconsistent
  out.consistent = true;
  out.rank = static_cast<int>(row);
  out.unique = (row == cols);
  out.x.assign(cols, Rat(0));
  for (std::size_t k = 0; k < pivot_col.size(); ++k)
    out.x[pivot_col[k]] = b[k] / a[k][pivot_col[k]];
  return out;
}

}  // namespace qcover

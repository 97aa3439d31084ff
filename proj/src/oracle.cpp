#include "stsolve/oracle.hpp"

#include <algorithm>

namespace stsolve {

namespace {

constexpr size_t kMaxUnknowns = 600;

// Self-contained RREF; returns pivot columns. Operates in place.
std::vector<size_t> rref(const FieldCtx& F, FieldMat& M) {
  std::vector<size_t> pivots;
  size_t r = 0;
  for (size_t c = 0; c < M.cols && r < M.rows; ++c) {
    size_t pr = r;
    while (pr < M.rows && M.at(pr, c) == 0) ++pr;
    if (pr == M.rows) continue;
    if (pr != r)
      for (size_t j = 0; j < M.cols; ++j) std::swap(M.a[pr * M.cols + j], M.a[r * M.cols + j]);
    uint64_t inv = F.inv(M.at(r, c));
    for (size_t j = c; j < M.cols; ++j) M.at(r, j) = F.mul(M.at(r, j), inv);
    for (size_t i = 0; i < M.rows; ++i) {
      if (i == r) continue;
      uint64_t f = M.at(i, c);
      if (!f) continue;
      for (size_t j = c; j < M.cols; ++j)
        M.at(i, j) = F.sub(M.at(i, j), F.mul(f, M.at(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

// Nullspace basis of A from its RREF and pivot columns.
std::vector<std::vector<uint64_t>> nullspace_from_rref(const FieldCtx& F, const FieldMat& R,
                                                       const std::vector<size_t>& pivots,
                                                       size_t ncols) {
  std::vector<bool> is_pivot(ncols, false);
  for (size_t c : pivots) is_pivot[c] = true;
  std::vector<std::vector<uint64_t>> basis;
  for (size_t fc = 0; fc < ncols; ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<uint64_t> z(ncols, 0);
    z[fc] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) z[pivots[r]] = F.neg(R.at(r, fc));
    basis.push_back(std::move(z));
  }
  return basis;
}

}  // namespace

RankSolveResult dense_rank_solve(const FieldCtx& F, const FieldMat& A,
                                 const std::vector<uint64_t>& v) {
  bool homogeneous = v.empty();
  if (!homogeneous && v.size() != A.rows) throw DimensionMismatch("dense_rank_solve");
  FieldMat M(A.rows, A.cols + (homogeneous ? 0 : 1));
  for (size_t i = 0; i < A.rows; ++i) {
    for (size_t j = 0; j < A.cols; ++j) M.at(i, j) = F.reduce(A.at(i, j));
    if (!homogeneous) M.at(i, A.cols) = F.reduce(v[i]);
  }
  std::vector<size_t> pivots = rref(F, M);
  RankSolveResult out;
  bool consistent = true;
  out.rank = pivots.size();
  if (!homogeneous && !pivots.empty() && pivots.back() == A.cols) {
    consistent = false;
    --out.rank;
    pivots.pop_back();
  }
  out.nullspace = nullspace_from_rref(F, M, pivots, A.cols);
  if (homogeneous) {
    out.solution = std::vector<uint64_t>(A.cols, 0);
  } else if (consistent) {
    std::vector<uint64_t> sol(A.cols, 0);
    for (size_t r = 0; r < pivots.size(); ++r) sol[pivots[r]] = M.at(r, A.cols);
    out.solution = std::move(sol);
  }
  return out;
}

size_t rank_column_sweep(const FieldCtx& F, const FieldMat& A) {
  FieldMat M = A;
  size_t rank = 0;
  std::vector<bool> used_row(M.rows, false);
  for (size_t c = 0; c < M.cols; ++c) {
    // probe rows bottom-up, unlike the RREF path
    size_t pr = M.rows;
    for (size_t i = M.rows; i-- > 0;)
      if (!used_row[i] && M.at(i, c) != 0) {
        pr = i;
        break;
      }
    if (pr == M.rows) continue;
    used_row[pr] = true;
    ++rank;
    uint64_t inv = F.inv(M.at(pr, c));
    for (size_t j = c + 1; j < M.cols; ++j) {
      uint64_t f = F.mul(M.at(pr, j), inv);
      if (!f) continue;
      for (size_t i = 0; i < M.rows; ++i)
        M.at(i, j) = F.sub(M.at(i, j), F.mul(f, M.at(i, c)));
    }
  }
  return rank;
}

namespace {

// residue[0..d-1] <- residue of x * residue mod M, M monic of degree d,
// using only coefficient shuffles (independent of the poly module).
void shift_reduce(const FieldCtx& F, std::vector<uint64_t>& r, const std::vector<uint64_t>& M) {
  size_t d = M.size() - 1;
  uint64_t top = d == 0 ? 0 : r[d - 1];
  for (size_t k = d; k-- > 1;) r[k] = r[k - 1];
  if (d > 0) r[0] = 0;
  if (top)
    for (size_t k = 0; k < d; ++k) r[k] = F.sub(r[k], F.mul(top, F.reduce(M[k])));
}

// residues of f * x^k mod M for 0 <= k < D
std::vector<std::vector<uint64_t>> residue_table(const FieldCtx& F,
                                                 const std::vector<uint64_t>& f,
                                                 const std::vector<uint64_t>& M, size_t D) {
  size_t d = M.size() - 1;
  std::vector<uint64_t> r(d, 0);
  for (size_t k = 0; k < d && k < f.size(); ++k) r[k] = F.reduce(f[k]);
  std::vector<std::vector<uint64_t>> tab;
  for (size_t k = 0; k < D; ++k) {
    tab.push_back(r);
    shift_reduce(F, r, M);
  }
  return tab;
}

}  // namespace

std::vector<std::vector<uint64_t>> brute_vector_mpade(const FieldCtx& F,
                                                      const std::vector<uint64_t>& M,
                                                      const std::vector<std::vector<uint64_t>>& Frow,
                                                      const std::vector<uint64_t>& v, size_t D) {
  size_t alpha = Frow.size();
  size_t d = M.size() - 1;
  size_t cols = alpha * D + D;
  if (cols > kMaxUnknowns) throw SizeTooLarge("brute_vector_mpade");
  FieldMat C(d, cols);
  for (size_t j = 0; j < alpha; ++j) {
    auto tab = residue_table(F, Frow[j], M, D);
    for (size_t k = 0; k < D; ++k)
      for (size_t row = 0; row < d; ++row) C.at(row, j * D + k) = tab[k][row];
  }
  {
    auto tab = residue_table(F, v, M, D);
    for (size_t k = 0; k < D; ++k)
      for (size_t row = 0; row < d; ++row) C.at(row, alpha * D + k) = F.neg(tab[k][row]);
  }
  return dense_rank_solve(F, C, {}).nullspace;
}

std::vector<std::vector<uint64_t>> brute_simultaneous_mpade(
    const FieldCtx& F, const std::vector<uint64_t>& M,
    const std::vector<std::vector<uint64_t>>& Fcol, const std::vector<long long>& s,
    const std::vector<std::vector<uint64_t>>& v) {
  size_t alpha = Fcol.size();
  size_t d = M.size() - 1;
  if (s.size() != alpha || v.size() != alpha) throw DimensionMismatch("brute_simultaneous_mpade");
  size_t cols = d + 1;
  if (cols > kMaxUnknowns) throw SizeTooLarge("brute_simultaneous_mpade");
  size_t nrows = 0;
  for (long long si : s) nrows += static_cast<size_t>(std::max<long long>(0, d - si));
  FieldMat C(nrows, cols);
  size_t row0 = 0;
  for (size_t i = 0; i < alpha; ++i) {
    auto tab = residue_table(F, Fcol[i], M, d);
    std::vector<uint64_t> vi(d, 0);
    for (size_t k = 0; k < d && k < v[i].size(); ++k) vi[k] = F.reduce(v[i][k]);
    long long lo = std::max<long long>(0, s[i]);
    for (long long deg = lo; deg < static_cast<long long>(d); ++deg) {
      size_t row = row0 + static_cast<size_t>(deg - lo);
      for (size_t k = 0; k < d; ++k) C.at(row, k) = tab[k][static_cast<size_t>(deg)];
      C.at(row, d) = F.neg(vi[static_cast<size_t>(deg)]);
    }
    row0 += static_cast<size_t>(std::max<long long>(0, d - lo));
  }
  return dense_rank_solve(F, C, {}).nullspace;
}

}  // namespace stsolve

#include "stsolve/mat.hpp"

namespace stsolve {

FieldMat mat_mul(const FieldCtx& F, const FieldMat& A, const FieldMat& B) {
  if (A.cols != B.rows) throw DimensionMismatch("mat_mul");
  FieldMat C(A.rows, B.cols);
  for (size_t i = 0; i < A.rows; ++i)
    for (size_t k = 0; k < A.cols; ++k) {
      uint64_t aik = A.at(i, k);
      if (!aik) continue;
      for (size_t j = 0; j < B.cols; ++j)
        C.at(i, j) = F.add(C.at(i, j), F.mul(aik, B.at(k, j)));
    }
  return C;
}

FieldMat mat_add(const FieldCtx& F, const FieldMat& A, const FieldMat& B) {
  if (A.rows != B.rows || A.cols != B.cols) throw DimensionMismatch("mat_add");
  FieldMat C(A.rows, A.cols);
  for (size_t i = 0; i < A.a.size(); ++i) C.a[i] = F.add(A.a[i], B.a[i]);
  return C;
}

FieldMat mat_sub(const FieldCtx& F, const FieldMat& A, const FieldMat& B) {
  if (A.rows != B.rows || A.cols != B.cols) throw DimensionMismatch("mat_sub");
  FieldMat C(A.rows, A.cols);
  for (size_t i = 0; i < A.a.size(); ++i) C.a[i] = F.sub(A.a[i], B.a[i]);
  return C;
}

FieldMat mat_transpose(const FieldMat& A) {
  FieldMat T(A.cols, A.rows);
  for (size_t i = 0; i < A.rows; ++i)
    for (size_t j = 0; j < A.cols; ++j) T.at(j, i) = A.at(i, j);
  return T;
}

std::vector<uint64_t> mat_vec(const FieldCtx& F, const FieldMat& A, const std::vector<uint64_t>& v) {
  if (A.cols != v.size()) throw DimensionMismatch("mat_vec");
  std::vector<uint64_t> r(A.rows, 0);
  for (size_t i = 0; i < A.rows; ++i) {
    uint64_t acc = 0;
    for (size_t j = 0; j < A.cols; ++j) acc = F.add(acc, F.mul(A.at(i, j), v[j]));
    r[i] = acc;
  }
  return r;
}

std::optional<FieldMat> mat_inverse(const FieldCtx& F, const FieldMat& A) {
  if (A.rows != A.cols) throw NotSquare("mat_inverse");
  size_t n = A.rows;
  FieldMat M = A;
  FieldMat I = FieldMat::identity(n);
  for (size_t k = 0; k < n; ++k) {
    size_t piv = k;
    while (piv < n && M.at(piv, k) == 0) ++piv;
    if (piv == n) return std::nullopt;
    if (piv != k)
      for (size_t j = 0; j < n; ++j) {
        std::swap(M.a[piv * n + j], M.a[k * n + j]);
        std::swap(I.a[piv * n + j], I.a[k * n + j]);
      }
    uint64_t d = F.inv(M.at(k, k));
    for (size_t j = 0; j < n; ++j) {
      M.at(k, j) = F.mul(M.at(k, j), d);
      I.at(k, j) = F.mul(I.at(k, j), d);
    }
    for (size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      uint64_t f = M.at(i, k);
      if (!f) continue;
      for (size_t j = 0; j < n; ++j) {
        M.at(i, j) = F.sub(M.at(i, j), F.mul(f, M.at(k, j)));
        I.at(i, j) = F.sub(I.at(i, j), F.mul(f, I.at(k, j)));
      }
    }
  }
  return I;
}

std::optional<std::vector<uint64_t>> mat_solve(const FieldCtx& F, const FieldMat& A,
                                               const std::vector<uint64_t>& b) {
  auto inv = mat_inverse(F, A);
  if (!inv) return std::nullopt;
  return mat_vec(F, *inv, b);
}

}  // namespace stsolve

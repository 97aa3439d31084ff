#ifndef STSOLVE_MAT_HPP
#define STSOLVE_MAT_HPP

// Dense constant matrices over F_p, plus the small amount of linear algebra
// (inverse / solve) that the polynomial-matrix layer needs for leading-matrix
// work. The oracle module has its own, independent elimination code.

#include <cstdint>
#include <optional>
#include <vector>

#include "stsolve/errors.hpp"
#include "stsolve/field.hpp"

namespace stsolve {

struct FieldMat {
  size_t rows = 0, cols = 0;
  std::vector<uint64_t> a;  // row-major

  FieldMat() = default;
  FieldMat(size_t r, size_t c) : rows(r), cols(c), a(r * c, 0) {}

  uint64_t& at(size_t i, size_t j) { return a[i * cols + j]; }
  uint64_t at(size_t i, size_t j) const { return a[i * cols + j]; }

  static FieldMat identity(size_t n) {
    FieldMat m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  bool operator==(const FieldMat& o) const = default;
};

FieldMat mat_mul(const FieldCtx& F, const FieldMat& A, const FieldMat& B);
FieldMat mat_add(const FieldCtx& F, const FieldMat& A, const FieldMat& B);
FieldMat mat_sub(const FieldCtx& F, const FieldMat& A, const FieldMat& B);
FieldMat mat_transpose(const FieldMat& A);
std::vector<uint64_t> mat_vec(const FieldCtx& F, const FieldMat& A, const std::vector<uint64_t>& v);

// Gauss-Jordan inverse; nullopt when A is singular.
std::optional<FieldMat> mat_inverse(const FieldCtx& F, const FieldMat& A);

// Solve A c = b for square A; nullopt when A is singular.
std::optional<std::vector<uint64_t>> mat_solve(const FieldCtx& F, const FieldMat& A,
                                               const std::vector<uint64_t>& b);

}  // namespace stsolve

#endif

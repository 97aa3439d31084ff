#ifndef STSOLVE_POLYMAT_HPP
#define STSOLVE_POLYMAT_HPP

// Polynomial matrices over F_p with shifted-degree bookkeeping: the
// reduced / weak-Popov / Popov predicates and transforms, approximant and
// kernel bases, modular inverse application, and a module-membership test.
//
// Conventions (column-wise unless said otherwise):
//   cdeg_s(col j) = max_i (deg P_ij + s_i), -inf for a zero column.
//   The pivot of a column is the bottom-most row attaining cdeg_s.
//   Weak Popov: square, pivot of column j is exactly j.
//   Popov: weak Popov + monic diagonal + in every row j, off-diagonal
//   entries have plain degree < deg P_jj.

#include <cstdint>
#include <optional>
#include <vector>

#include "stsolve/errors.hpp"
#include "stsolve/field.hpp"
#include "stsolve/mat.hpp"
#include "stsolve/poly.hpp"

namespace stsolve {

using Shift = std::vector<long long>;
using DegTuple = std::vector<long long>;  // kNegInf marks -inf
using PolyVec = std::vector<Poly>;

struct PolyMat {
  size_t rows = 0, cols = 0;
  std::vector<Poly> e;  // row-major

  PolyMat() = default;
  PolyMat(size_t r, size_t c) : rows(r), cols(c), e(r * c) {}

  Poly& at(size_t i, size_t j) { return e[i * cols + j]; }
  const Poly& at(size_t i, size_t j) const { return e[i * cols + j]; }

  static PolyMat identity(size_t n) {
    PolyMat m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = {1};
    return m;
  }

  bool operator==(const PolyMat& o) const = default;
};

enum class Axis { col, row };
enum class Form { reduced, weak_popov, popov };

PolyMat pm_mul(const FieldCtx& F, const PolyMat& A, const PolyMat& B);
// A*B with every entry truncated rem x^k.
PolyMat pm_mul_trunc(const FieldCtx& F, const PolyMat& A, const PolyMat& B, size_t k);
PolyMat pm_add(const FieldCtx& F, const PolyMat& A, const PolyMat& B);
PolyMat pm_sub(const FieldCtx& F, const PolyMat& A, const PolyMat& B);
PolyMat pm_transpose(const PolyMat& A);
// Entrywise remainder modulo M.
PolyMat pm_rem(const FieldCtx& F, const PolyMat& A, const Poly& M);
PolyVec pm_apply(const FieldCtx& F, const PolyMat& A, const PolyVec& v);
long long pm_deg(const PolyMat& A);

DegTuple shifted_cdeg(const PolyMat& P, const Shift& s);
DegTuple shifted_rdeg(const PolyMat& P, const Shift& s);
// Shifted degree of a single column vector.
long long shifted_cdeg_vec(const PolyVec& w, const Shift& s);

FieldMat leading_matrix(const FieldCtx& F, const PolyMat& P, const Shift& s, Axis axis);

bool form_predicate(const FieldCtx& F, const PolyMat& P, const Shift& s, Form form, Axis axis);

// Entry (i,j) -> rev_{delta_j}(P_ij); throws DegreeTooLarge when some entry
// exceeds its bound.
PolyMat col_reverse(const PolyMat& P, const DegTuple& delta);
PolyMat row_reverse(const PolyMat& P, const DegTuple& delta);

// Unimodular column reduction (Mulders-Storjohann) to s-weak-Popov form,
// columns permuted so that pivot(col j) = j. Throws SingularInput on a
// singular input (zero column, or tripped step guard).
PolyMat weak_popov_transform(const FieldCtx& F, const PolyMat& B, const Shift& s);

// Unique s-Popov matrix with the same column span; requires P s-weak-Popov.
PolyMat popov_normalize(const FieldCtx& F, const PolyMat& P, const Shift& s);

// s-Popov basis of {p : Fmat * p = 0 mod x^sigma}.
PolyMat approximant_basis(const FieldCtx& F, const PolyMat& Fmat, size_t sigma, const Shift& s);

// Basis of the exact kernel {p : Fmat * p = 0}; columns primitive.
// Requires s >= cdeg(Fmat) entrywise, s nonnegative.
PolyMat kernel_basis(const FieldCtx& F, const PolyMat& Fmat, const Shift& s);

// Exact determinant (fraction-free elimination).
Poly pm_determinant(const FieldCtx& F, const PolyMat& A);

// The unique W with deg(W) < deg(M) and P*W = V mod M; throws
// NotInvertibleMod when gcd(det P, M) != 1. Requires deg(V) < deg(M).
PolyMat inv_apply_mod(const FieldCtx& F, const PolyMat& P, const PolyMat& V, const Poly& M);

// lambda with P*lambda = w exactly, or nullopt when w is outside the column
// span. Requires P square and s-reduced.
std::optional<PolyVec> module_membership(const FieldCtx& F, const PolyMat& P, const Shift& s,
                                         const PolyVec& w);

}  // namespace stsolve

#endif

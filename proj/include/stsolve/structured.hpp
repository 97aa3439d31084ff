#ifndef STSOLVE_STRUCTURED_HPP
#define STSOLVE_STRUCTURED_HPP

// Displacement-structured matrices in compressed generator form.
//
// Operators: Toeplitz-like uses the Stein operator A - Z_m A Z_n^T with the
// down-shift Z; Vandermonde-like uses A - D(x) A Z_n^T; Cauchy-like uses the
// Sylvester operator D(x) A - A D(y). An instance stores (G, H) with
// operator(A) = G H^T, plus the point lists where relevant.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stsolve/mat.hpp"
#include "stsolve/poly.hpp"

namespace stsolve {

enum class Structure { toeplitz, vandermonde, cauchy };

std::string structure_name(Structure s);
std::optional<Structure> structure_from_name(const std::string& name);

struct Generators {
  Structure structure = Structure::toeplitz;
  size_t m = 0, n = 0, alpha = 0;
  FieldMat G;   // m x alpha
  FieldMat H;   // n x alpha
  PointList x;  // length m (vandermonde, cauchy)
  PointList y;  // length n (cauchy)

  // Throws DimensionMismatch / InvalidPoints on invariant violations.
  void validate(const FieldCtx& F) const;
};

// Dense elementary blocks (used by to_dense and by correspondence tests).
FieldMat dense_lower_toeplitz(const FieldCtx& F, const std::vector<uint64_t>& g, size_t m,
                              size_t ell);
FieldMat dense_upper_toeplitz(const FieldCtx& F, const std::vector<uint64_t>& h, size_t ell,
                              size_t n);
FieldMat dense_vandermonde(const FieldCtx& F, const PointList& x, size_t n);
FieldMat dense_cauchy(const FieldCtx& F, const PointList& x, const PointList& y);

// The unique A with operator(A) = G H^T, reconstructed densely.
FieldMat to_dense(const FieldCtx& F, const Generators& g);

// A*u without forming A, via the polynomial forms of the elementary blocks.
std::vector<uint64_t> apply(const FieldCtx& F, const Generators& g,
                            const std::vector<uint64_t>& u);

FieldMat displacement_of_dense(const FieldCtx& F, Structure s, const PointList& x,
                               const PointList& y, const FieldMat& A);

struct RandomInstance {
  Generators gen;
  std::vector<uint64_t> rhs;  // uniformly random (consistency not guaranteed)
};

// Deterministic in (all arguments); wide_nullspace requires n > m so the
// nullity is at least n - m. Throws FieldTooSmall when p <= m + n for the
// point-based structures.
RandomInstance random_instance(const FieldCtx& F, Structure s, size_t m, size_t n, size_t alpha,
                               uint64_t seed, bool wide_nullspace = false);

// A right-hand side guaranteed to be consistent: apply(g, random u).
std::vector<uint64_t> make_consistent_rhs(const FieldCtx& F, const Generators& g, uint64_t seed);

}  // namespace stsolve

#endif

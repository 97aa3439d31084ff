#ifndef STSOLVE_ORACLE_HPP
#define STSOLVE_ORACLE_HPP

// Ground-truth routines used by the test-suites: dense exact linear algebra
// (its own elimination code, not shared with the polynomial-matrix layer) and
// brute-force coefficient-space solvers for the two approximation problems.
// Everything here favors obvious correctness over speed.

#include <cstdint>
#include <optional>
#include <vector>

#include "stsolve/errors.hpp"
#include "stsolve/field.hpp"
#include "stsolve/mat.hpp"

namespace stsolve {

struct RankSolveResult {
  size_t rank = 0;
  std::optional<std::vector<uint64_t>> solution;  // nullopt when inconsistent
  std::vector<std::vector<uint64_t>> nullspace;   // n - rank independent vectors
};

// Row-reduced echelon computation on [A | v]; v may be empty (homogeneous).
RankSolveResult dense_rank_solve(const FieldCtx& F, const FieldMat& A,
                                 const std::vector<uint64_t>& v);

// Second, independently coded elimination (column sweep, reverse row probing)
// used to cross-check ranks.
size_t rank_column_sweep(const FieldCtx& F, const FieldMat& A);

// K-basis of {(p, q) : sum_j F_j p_j = v q mod M, deg p_j < D, deg q < D},
// flattened as alpha*D p-coefficients followed by D q-coefficients.
// Coefficient arithmetic is self-contained (iterative shift-and-reduce mod M).
std::vector<std::vector<uint64_t>> brute_vector_mpade(const FieldCtx& F,
                                                      const std::vector<uint64_t>& M,
                                                      const std::vector<std::vector<uint64_t>>& Frow,
                                                      const std::vector<uint64_t>& v, size_t D);

// K-basis of {(p, c) : deg coefficient k of (F_i p - c v_i rem M) = 0 for all
// k >= s_i}, flattened as d p-coefficients followed by the scalar c.
std::vector<std::vector<uint64_t>> brute_simultaneous_mpade(
    const FieldCtx& F, const std::vector<uint64_t>& M,
    const std::vector<std::vector<uint64_t>>& Fcol, const std::vector<long long>& s,
    const std::vector<std::vector<uint64_t>>& v);

}  // namespace stsolve

#endif

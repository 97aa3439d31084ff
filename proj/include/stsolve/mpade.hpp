#ifndef STSOLVE_MPADE_HPP
#define STSOLVE_MPADE_HPP

// Nonhomogeneous vector and simultaneous M-Pade approximation.
//
// vector_mpade: given a monic modulus M of degree d, a 1 x alpha row F and a
// right-hand side v, returns the s-Popov basis P of {p : F p = 0 mod M}
// together with the minimal monic multiplier mu and a particular solution
// column sol with F sol = v mu mod M and rdeg(sol) < rdeg(P).
//
// simultaneous_mpade: given a column F and bounds s, returns a generating
// description of {p in K[x]_{<d} : rdeg((F p) rem M) < s} plus, when one
// exists, a particular c with rdeg((F c - v) rem M) < s.

#include <cstdint>
#include <optional>
#include <vector>

#include "stsolve/polymat.hpp"

namespace stsolve {

struct VmpadeOut {
  PolyMat P;    // alpha x alpha, s-Popov
  Poly mu;      // monic
  PolyVec sol;  // alpha entries
};

VmpadeOut vector_mpade(const FieldCtx& F, size_t d, size_t alpha, const Poly& M,
                       const PolyVec& Frow, const Shift& s, const Poly& v);

struct SolBasisOut {
  size_t k = 0;
  PolyMat L;  // c x k: the "solution part" rows of the selected columns
  std::vector<long long> dvec;
};

// Basis-with-degree-bounds primitive: columns (p, r) with r = S p rem M and
// deg of every coordinate strictly below its bound N_i. S is alpha x c with
// c in {1,2}; N has c + alpha entries, each in [0, deg M].
SolBasisOut solution_basis(const FieldCtx& F, const Poly& M, const PolyMat& S, const Shift& N);

struct SolutionBasis {
  size_t ell = 0;
  PolyVec p;                  // ell nonzero polynomials, deg < d
  std::vector<long long> t;   // ell entries, 1 <= t_i <= d
};

struct SmpadeOut {
  SolutionBasis basis;
  std::optional<Poly> csol;  // nullopt exactly when no particular solution exists
};

SmpadeOut simultaneous_mpade(const FieldCtx& F, size_t d, size_t alpha, const Poly& M,
                             const PolyVec& Fcol, const Shift& s, const PolyVec& v);

}  // namespace stsolve

#endif

#ifndef STSOLVE_POLY_HPP
#define STSOLVE_POLY_HPP

// Dense univariate polynomials over F_p. A Poly is a coefficient vector,
// index i = coefficient of x^i, normalized so that the last entry is nonzero
// (the zero polynomial is the empty vector). deg(0) is the kNegInf sentinel.
//
// Multiplication picks schoolbook / Karatsuba / NTT automatically depending
// on size and on the 2-adic room of the modulus; callers never see which
// branch ran.

#include <cstdint>
#include <vector>

#include "stsolve/errors.hpp"
#include "stsolve/field.hpp"

namespace stsolve {

using Poly = std::vector<uint64_t>;
using PointList = std::vector<uint64_t>;

inline constexpr long long kNegInf = -(1ll << 60);

inline long long poly_deg(const Poly& a) {
  return a.empty() ? kNegInf : static_cast<long long>(a.size()) - 1;
}
void poly_normalize(Poly& a);
inline bool poly_is_zero(const Poly& a) { return a.empty(); }
inline uint64_t poly_coeff(const Poly& a, long long i) {
  return (i >= 0 && i < static_cast<long long>(a.size())) ? a[static_cast<size_t>(i)] : 0;
}
Poly poly_from_coeffs(const FieldCtx& F, const std::vector<uint64_t>& c);

Poly poly_add(const FieldCtx& F, const Poly& a, const Poly& b);
Poly poly_sub(const FieldCtx& F, const Poly& a, const Poly& b);
Poly poly_neg(const FieldCtx& F, const Poly& a);
Poly poly_scale(const FieldCtx& F, uint64_t c, const Poly& a);
Poly poly_mul(const FieldCtx& F, const Poly& a, const Poly& b);
// a * x^k
Poly poly_shift(const Poly& a, size_t k);
// a rem x^k
Poly poly_trunc(const Poly& a, size_t k);
// a quo x^k
Poly poly_quo_xk(const Poly& a, size_t k);

// Euclidean division; throws DivideByZeroPoly when b = 0.
std::pair<Poly, Poly> poly_divrem(const FieldCtx& F, const Poly& a, const Poly& b);
Poly poly_rem(const FieldCtx& F, const Poly& a, const Poly& b);
Poly poly_quo(const FieldCtx& F, const Poly& a, const Poly& b);

Poly poly_make_monic(const FieldCtx& F, const Poly& a);
Poly poly_gcd(const FieldCtx& F, Poly a, Poly b);  // monic (or 0)
// g = gcd(a,b) monic, with s a + t b = g.
void poly_xgcd(const FieldCtx& F, const Poly& a, const Poly& b, Poly& g, Poly& s, Poly& t);
// Inverse of a modulo M; throws NotCoprime when gcd(a, M) != 1.
Poly poly_modinv(const FieldCtx& F, const Poly& a, const Poly& M);
// Inverse of a modulo x^k by Newton iteration; requires a(0) != 0.
Poly poly_inv_mod_xk(const FieldCtx& F, const Poly& a, size_t k);

// rev_d(a) = x^d a(1/x); throws DegreeTooLarge when deg(a) > d.
Poly poly_reverse(size_t d, const Poly& a);
Poly poly_derivative(const FieldCtx& F, const Poly& a);

uint64_t poly_eval(const FieldCtx& F, const Poly& a, uint64_t x);
std::vector<uint64_t> eval_multi(const FieldCtx& F, const Poly& a, const PointList& grid);
// Lagrange interpolation on a repetition-free grid; throws RepeatedPoint.
Poly interpolate(const FieldCtx& F, const PointList& grid, const std::vector<uint64_t>& values);
// prod (x - x_i); repetitions allowed.
Poly master_poly(const FieldCtx& F, const PointList& grid);

// g*u rem x^m (lower-triangular Toeplitz matrix action).
Poly truncated_product(const FieldCtx& F, const Poly& g, const Poly& u, size_t m);
// (h*u quo x^{n-1}) rem x^ell where h has coefficient vector reverse(hvec);
// this is the middle product / upper-triangular Toeplitz matrix action.
// Requires deg(u) < n and ell <= n (n = hvec.size()).
Poly middle_product(const FieldCtx& F, const std::vector<uint64_t>& hvec, const Poly& u, size_t ell);

}  // namespace stsolve

#endif

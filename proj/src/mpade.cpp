#include "stsolve/mpade.hpp"

#include <algorithm>

namespace stsolve {

namespace {

bool monic_of_degree(const Poly& M, size_t d) {
  return poly_deg(M) == static_cast<long long>(d) && !M.empty() && M.back() == 1;
}

bool is_power_of_x(const Poly& M) {
  if (M.size() < 2 || M.back() != 1) return false;
  for (size_t i = 0; i + 1 < M.size(); ++i)
    if (M[i]) return false;
  return true;
}

// Homogeneous case: s-Popov basis of {p : F p = 0 mod M}, read off as the
// principal alpha x alpha block of an approximant basis of [F | M].
PolyMat vector_mpade_homog(const FieldCtx& F, size_t d, size_t alpha, const Poly& M,
                           const PolyVec& Frow, const Shift& s) {
  PolyMat B(1, alpha + 1);
  for (size_t j = 0; j < alpha; ++j) B.at(0, j) = Frow[j];
  B.at(0, alpha) = M;
  long long smin = *std::min_element(s.begin(), s.end());
  long long smax = *std::max_element(s.begin(), s.end());
  Shift sx = s;
  sx.push_back(smin);
  size_t tau = 2 * d + static_cast<size_t>(smax - smin);
  PolyMat Q = approximant_basis(F, B, tau, sx);
  PolyMat P(alpha, alpha);
  for (size_t i = 0; i < alpha; ++i)
    for (size_t j = 0; j < alpha; ++j) P.at(i, j) = Q.at(i, j);
  return P;
}

}  // namespace

VmpadeOut vector_mpade(const FieldCtx& F, size_t d, size_t alpha, const Poly& M,
                       const PolyVec& Frow, const Shift& s, const Poly& v) {
  if (alpha < 1 || Frow.size() != alpha || s.size() != alpha)
    throw DimensionMismatch("vector_mpade");
  if (d < 1 || !monic_of_degree(M, d)) throw BadModulus("vector_mpade: M must be monic, deg d >= 1");
  for (const auto& f : Frow)
    if (poly_deg(f) >= static_cast<long long>(d)) throw DegreeTooLarge("vector_mpade: deg F >= d");
  if (poly_deg(v) >= static_cast<long long>(d)) throw DegreeTooLarge("vector_mpade: deg v >= d");

  if (poly_is_zero(v)) {
    PolyMat P = vector_mpade_homog(F, d, alpha, M, Frow, s);
    return {std::move(P), Poly{1}, PolyVec(alpha)};
  }
  // augment with -v under shift (s, max(s)+d) and read off the blocks
  PolyVec Fbar = Frow;
  Fbar.push_back(poly_neg(F, v));
  Shift sbar = s;
  sbar.push_back(*std::max_element(s.begin(), s.end()) + static_cast<long long>(d));
  PolyMat Q = vector_mpade_homog(F, d, alpha + 1, M, Fbar, sbar);
  for (size_t j = 0; j < alpha; ++j)
    if (!poly_is_zero(Q.at(alpha, j)))
      throw InternalError("vector_mpade: bottom-left block not zero");
  VmpadeOut out;
  out.P = PolyMat(alpha, alpha);
  for (size_t i = 0; i < alpha; ++i)
    for (size_t j = 0; j < alpha; ++j) out.P.at(i, j) = Q.at(i, j);
  out.mu = Q.at(alpha, alpha);
  out.sol.resize(alpha);
  for (size_t i = 0; i < alpha; ++i) out.sol[i] = Q.at(i, alpha);
  return out;
}

SolBasisOut solution_basis(const FieldCtx& F, const Poly& M, const PolyMat& S, const Shift& N) {
  size_t c = S.cols, alpha = S.rows;
  if (c < 1 || c > 2) throw DimensionMismatch("solution_basis: c must be 1 or 2");
  if (N.size() != c + alpha) throw DimensionMismatch("solution_basis");
  long long d = poly_deg(M);
  if (d < 1 || M.back() != 1) throw BadModulus("solution_basis: M must be monic, deg >= 1");
  for (const auto& e : S.e)
    if (poly_deg(e) >= d) throw DegreeTooLarge("solution_basis: deg S >= deg M");
  for (long long n : N)
    if (n < 0 || n > d) throw ShiftOutOfRange("solution_basis: bounds must lie in [0, deg M]");

  size_t dim = c + alpha;
  Shift neg(dim);
  for (size_t i = 0; i < dim; ++i) neg[i] = -N[i];
  PolyMat W;
  if (is_power_of_x(M)) {
    // congruence module as approximants of [S | -I] at order deg M
    PolyMat A(alpha, dim);
    for (size_t i = 0; i < alpha; ++i) {
      for (size_t j = 0; j < c; ++j) A.at(i, j) = S.at(i, j);
      A.at(i, c + i) = Poly{F.p() - 1};
    }
    W = approximant_basis(F, A, static_cast<size_t>(d), neg);
  } else {
    PolyMat B(dim, dim);
    for (size_t j = 0; j < c; ++j) {
      B.at(j, j) = {1};
      for (size_t i = 0; i < alpha; ++i) B.at(c + i, j) = S.at(i, j);
    }
    for (size_t i = 0; i < alpha; ++i) {
      Poly col(M);
      B.at(c + i, c + i) = std::move(col);
    }
    W = weak_popov_transform(F, B, neg);
  }
  DegTuple cd = shifted_cdeg(W, neg);
  SolBasisOut out;
  std::vector<size_t> keep;
  for (size_t j = 0; j < dim; ++j)
    if (cd[j] != kNegInf && cd[j] < 0) keep.push_back(j);
  out.k = keep.size();
  out.L = PolyMat(c, out.k);
  out.dvec.resize(out.k);
  for (size_t idx = 0; idx < keep.size(); ++idx) {
    for (size_t i = 0; i < c; ++i) out.L.at(i, idx) = W.at(i, keep[idx]);
    out.dvec[idx] = -cd[keep[idx]];
  }
  return out;
}

SmpadeOut simultaneous_mpade(const FieldCtx& F, size_t d, size_t alpha, const Poly& M,
                             const PolyVec& Fcol, const Shift& s, const PolyVec& v) {
  if (alpha < 1 || Fcol.size() != alpha || s.size() != alpha || v.size() != alpha)
    throw DimensionMismatch("simultaneous_mpade");
  if (d < 1 || !monic_of_degree(M, d))
    throw BadModulus("simultaneous_mpade: M must be monic, deg d >= 1");
  for (long long si : s)
    if (si < 0 || si > static_cast<long long>(d)) throw ShiftOutOfRange("simultaneous_mpade");
  for (const auto& f : Fcol)
    if (poly_deg(f) >= static_cast<long long>(d))
      throw DegreeTooLarge("simultaneous_mpade: deg F >= d");
  for (const auto& w : v)
    if (poly_deg(w) >= static_cast<long long>(d))
      throw DegreeTooLarge("simultaneous_mpade: deg v >= d");

  PolyMat S(alpha, 2);
  for (size_t i = 0; i < alpha; ++i) {
    S.at(i, 0) = Fcol[i];
    S.at(i, 1) = poly_neg(F, v[i]);
  }
  Shift N;
  N.push_back(static_cast<long long>(d));
  N.push_back(1);
  for (long long si : s) N.push_back(si);
  SolBasisOut sb = solution_basis(F, M, S, N);

  SmpadeOut out;
  bool second_row_zero = true;
  for (size_t j = 0; j < sb.k; ++j)
    if (!poly_is_zero(sb.L.at(1, j))) second_row_zero = false;
  if (sb.k == 0 || second_row_zero) {
    out.basis.ell = sb.k;
    out.basis.p.resize(sb.k);
    for (size_t j = 0; j < sb.k; ++j) out.basis.p[j] = sb.L.at(0, j);
    out.basis.t = sb.dvec;
    out.csol = std::nullopt;
    return out;
  }
  // pivot: smallest index among nonzero second-row entries of maximal dvec
  size_t piv = sb.k;
  long long best = -1;
  for (size_t j = 0; j < sb.k; ++j) {
    if (poly_is_zero(sb.L.at(1, j))) continue;
    if (sb.dvec[j] > best) {
      best = sb.dvec[j];
      piv = j;
    }
  }
  // second-row entries are constants (their bound is 1)
  uint64_t ci = F.inv(sb.L.at(1, piv)[0]);
  Poly csol = poly_scale(F, ci, sb.L.at(0, piv));
  out.basis.ell = sb.k - 1;
  for (size_t j = 0; j < sb.k; ++j) {
    if (j == piv) continue;
    Poly pj = sb.L.at(0, j);
    if (!poly_is_zero(sb.L.at(1, j))) {
      uint64_t cj = sb.L.at(1, j)[0];
      pj = poly_sub(F, pj, poly_scale(F, cj, csol));
    }
    out.basis.p.push_back(std::move(pj));
    out.basis.t.push_back(sb.dvec[j]);
  }
  out.csol = std::move(csol);
  return out;
}

}  // namespace stsolve

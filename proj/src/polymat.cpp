#include "stsolve/polymat.hpp"

#include <algorithm>
#include <numeric>

namespace stsolve {

namespace {

// (pivot row, shifted degree) of a column; nullopt for a zero column.
// Pivot = bottom-most row attaining the shifted column degree.
std::optional<std::pair<size_t, long long>> col_pivot(const PolyMat& P, const Shift& s, size_t j) {
  long long best = kNegInf;
  size_t row = 0;
  bool seen = false;
  for (size_t i = 0; i < P.rows; ++i) {
    long long d = poly_deg(P.at(i, j));
    if (d == kNegInf) continue;
    long long sd = d + s[i];
    if (!seen || sd >= best) {
      best = sd;
      row = i;
      seen = true;
    }
  }
  if (!seen) return std::nullopt;
  return std::make_pair(row, best);
}

void col_axpy(const FieldCtx& F, PolyMat& M, size_t j, uint64_t c, size_t src, size_t xpow) {
  for (size_t i = 0; i < M.rows; ++i)
    M.at(i, j) = poly_sub(F, M.at(i, j), poly_scale(F, c, poly_shift(M.at(i, src), xpow)));
}

void col_scale(const FieldCtx& F, PolyMat& M, size_t j, uint64_t c) {
  for (size_t i = 0; i < M.rows; ++i) M.at(i, j) = poly_scale(F, c, M.at(i, j));
}

void col_times_x(PolyMat& M, size_t j, size_t trunc_to) {
  for (size_t i = 0; i < M.rows; ++i) {
    M.at(i, j) = poly_shift(M.at(i, j), 1);
    if (trunc_to) M.at(i, j) = poly_trunc(M.at(i, j), trunc_to);
  }
}

PolyMat pm_mul_const_right(const FieldCtx& F, const PolyMat& A, const FieldMat& C) {
  if (A.cols != C.rows) throw DimensionMismatch("pm_mul_const_right");
  PolyMat R(A.rows, C.cols);
  for (size_t i = 0; i < A.rows; ++i)
    for (size_t k = 0; k < A.cols; ++k) {
      if (poly_is_zero(A.at(i, k))) continue;
      for (size_t j = 0; j < C.cols; ++j) {
        uint64_t c = C.at(k, j);
        if (!c) continue;
        R.at(i, j) = poly_add(F, R.at(i, j), poly_scale(F, c, A.at(i, k)));
      }
    }
  return R;
}

// Iterative order basis: s-weak-Popov P with Fmat*P = 0 mod x^sigma and
// pivot(col j) = j. Also returns t = cdeg_s(P).
std::pair<PolyMat, Shift> mbasis(const FieldCtx& F, const PolyMat& Fmat, size_t sigma,
                                 const Shift& s) {
  size_t n = Fmat.cols;
  PolyMat P = PolyMat::identity(n);
  Shift t = s;
  PolyMat R(Fmat.rows, n);
  for (size_t i = 0; i < Fmat.rows; ++i)
    for (size_t j = 0; j < n; ++j) R.at(i, j) = poly_trunc(Fmat.at(i, j), sigma);
  for (size_t k = 0; k < sigma; ++k) {
    for (size_t i = 0; i < Fmat.rows; ++i) {
      size_t piv = n;
      for (size_t j = 0; j < n; ++j) {
        if (poly_coeff(R.at(i, j), static_cast<long long>(k)) == 0) continue;
        if (piv == n || t[j] < t[piv]) piv = j;
      }
      if (piv == n) continue;
      uint64_t rpiv_inv = F.inv(poly_coeff(R.at(i, piv), static_cast<long long>(k)));
      for (size_t j = 0; j < n; ++j) {
        if (j == piv) continue;
        uint64_t rj = poly_coeff(R.at(i, j), static_cast<long long>(k));
        if (!rj) continue;
        uint64_t c = F.mul(rj, rpiv_inv);
        col_axpy(F, P, j, c, piv, 0);
        col_axpy(F, R, j, c, piv, 0);
      }
      col_times_x(P, piv, 0);
      col_times_x(R, piv, sigma);
      ++t[piv];
    }
  }
  return {std::move(P), std::move(t)};
}

std::pair<PolyMat, Shift> pmbasis(const FieldCtx& F, const PolyMat& Fmat, size_t sigma,
                                  const Shift& s) {
  constexpr size_t kBase = 32;
  if (sigma <= kBase) return mbasis(F, Fmat, sigma, s);
  size_t s1 = sigma / 2;
  auto [P1, t1] = pmbasis(F, Fmat, s1, s);
  PolyMat G(Fmat.rows, Fmat.cols);
  {
    PolyMat prod = pm_mul_trunc(F, Fmat, P1, sigma);
    for (size_t i = 0; i < G.rows; ++i)
      for (size_t j = 0; j < G.cols; ++j) G.at(i, j) = poly_quo_xk(prod.at(i, j), s1);
  }
  auto [P2, t2] = pmbasis(F, G, sigma - s1, t1);
  return {pm_mul(F, P1, P2), std::move(t2)};
}

Poly column_content(const FieldCtx& F, const PolyMat& K, size_t j) {
  Poly g;
  for (size_t i = 0; i < K.rows; ++i) g = poly_gcd(F, g, K.at(i, j));
  return g;
}

bool is_power_of_x(const Poly& M) {
  if (M.empty() || M.back() != 1 || M.size() < 2) return false;
  for (size_t i = 0; i + 1 < M.size(); ++i)
    if (M[i]) return false;
  return true;
}

}  // namespace

PolyMat pm_mul(const FieldCtx& F, const PolyMat& A, const PolyMat& B) {
  if (A.cols != B.rows) throw DimensionMismatch("pm_mul");
  PolyMat C(A.rows, B.cols);
  for (size_t i = 0; i < A.rows; ++i)
    for (size_t k = 0; k < A.cols; ++k) {
      if (poly_is_zero(A.at(i, k))) continue;
      for (size_t j = 0; j < B.cols; ++j) {
        if (poly_is_zero(B.at(k, j))) continue;
        C.at(i, j) = poly_add(F, C.at(i, j), poly_mul(F, A.at(i, k), B.at(k, j)));
      }
    }
  return C;
}

PolyMat pm_mul_trunc(const FieldCtx& F, const PolyMat& A, const PolyMat& B, size_t k) {
  if (A.cols != B.rows) throw DimensionMismatch("pm_mul_trunc");
  PolyMat C(A.rows, B.cols);
  for (size_t i = 0; i < A.rows; ++i)
    for (size_t kk = 0; kk < A.cols; ++kk) {
      if (poly_is_zero(A.at(i, kk))) continue;
      Poly a = poly_trunc(A.at(i, kk), k);
      if (poly_is_zero(a)) continue;
      for (size_t j = 0; j < B.cols; ++j) {
        if (poly_is_zero(B.at(kk, j))) continue;
        Poly t = poly_trunc(poly_mul(F, a, poly_trunc(B.at(kk, j), k)), k);
        C.at(i, j) = poly_add(F, C.at(i, j), t);
      }
    }
  return C;
}

PolyMat pm_add(const FieldCtx& F, const PolyMat& A, const PolyMat& B) {
  if (A.rows != B.rows || A.cols != B.cols) throw DimensionMismatch("pm_add");
  PolyMat C(A.rows, A.cols);
  for (size_t i = 0; i < A.e.size(); ++i) C.e[i] = poly_add(F, A.e[i], B.e[i]);
  return C;
}

PolyMat pm_sub(const FieldCtx& F, const PolyMat& A, const PolyMat& B) {
  if (A.rows != B.rows || A.cols != B.cols) throw DimensionMismatch("pm_sub");
  PolyMat C(A.rows, A.cols);
  for (size_t i = 0; i < A.e.size(); ++i) C.e[i] = poly_sub(F, A.e[i], B.e[i]);
  return C;
}

PolyMat pm_transpose(const PolyMat& A) {
  PolyMat T(A.cols, A.rows);
  for (size_t i = 0; i < A.rows; ++i)
    for (size_t j = 0; j < A.cols; ++j) T.at(j, i) = A.at(i, j);
  return T;
}

PolyMat pm_rem(const FieldCtx& F, const PolyMat& A, const Poly& M) {
  PolyMat C(A.rows, A.cols);
  for (size_t i = 0; i < A.e.size(); ++i) C.e[i] = poly_rem(F, A.e[i], M);
  return C;
}

PolyVec pm_apply(const FieldCtx& F, const PolyMat& A, const PolyVec& v) {
  if (A.cols != v.size()) throw DimensionMismatch("pm_apply");
  PolyVec r(A.rows);
  for (size_t i = 0; i < A.rows; ++i)
    for (size_t j = 0; j < A.cols; ++j)
      r[i] = poly_add(F, r[i], poly_mul(F, A.at(i, j), v[j]));
  return r;
}

long long pm_deg(const PolyMat& A) {
  long long d = kNegInf;
  for (const auto& p : A.e) d = std::max(d, poly_deg(p));
  return d;
}

DegTuple shifted_cdeg(const PolyMat& P, const Shift& s) {
  if (s.size() != P.rows) throw DimensionMismatch("shifted_cdeg");
  DegTuple t(P.cols, kNegInf);
  for (size_t j = 0; j < P.cols; ++j) {
    auto pv = col_pivot(P, s, j);
    if (pv) t[j] = pv->second;
  }
  return t;
}

DegTuple shifted_rdeg(const PolyMat& P, const Shift& s) {
  if (s.size() != P.cols) throw DimensionMismatch("shifted_rdeg");
  return shifted_cdeg(pm_transpose(P), s);
}

long long shifted_cdeg_vec(const PolyVec& w, const Shift& s) {
  if (s.size() != w.size()) throw DimensionMismatch("shifted_cdeg_vec");
  long long t = kNegInf;
  for (size_t i = 0; i < w.size(); ++i)
    if (!poly_is_zero(w[i])) t = std::max(t, poly_deg(w[i]) + s[i]);
  return t;
}

FieldMat leading_matrix(const FieldCtx& F, const PolyMat& P, const Shift& s, Axis axis) {
  if (axis == Axis::row) return mat_transpose(leading_matrix(F, pm_transpose(P), s, Axis::col));
  if (s.size() != P.rows) throw DimensionMismatch("leading_matrix");
  DegTuple t = shifted_cdeg(P, s);
  FieldMat L(P.rows, P.cols);
  for (size_t j = 0; j < P.cols; ++j) {
    if (t[j] == kNegInf) continue;
    for (size_t i = 0; i < P.rows; ++i) L.at(i, j) = poly_coeff(P.at(i, j), t[j] - s[i]);
  }
  return L;
}

bool form_predicate(const FieldCtx& F, const PolyMat& P, const Shift& s, Form form, Axis axis) {
  if (P.rows != P.cols) throw NotSquare("form_predicate");
  if (axis == Axis::row) return form_predicate(F, pm_transpose(P), s, form, Axis::col);
  if (s.size() != P.rows) throw DimensionMismatch("form_predicate");
  if (form == Form::reduced) return mat_inverse(F, leading_matrix(F, P, s, Axis::col)).has_value();
  for (size_t j = 0; j < P.cols; ++j) {
    auto pv = col_pivot(P, s, j);
    if (!pv || pv->first != j) return false;
  }
  if (form == Form::weak_popov) return true;
  for (size_t j = 0; j < P.cols; ++j) {
    const Poly& d = P.at(j, j);
    if (d.empty() || d.back() != 1) return false;
    for (size_t i = 0; i < P.cols; ++i)
      if (i != j && poly_deg(P.at(j, i)) >= poly_deg(d)) return false;
  }
  return true;
}

PolyMat col_reverse(const PolyMat& P, const DegTuple& delta) {
  if (delta.size() != P.cols) throw DimensionMismatch("col_reverse");
  PolyMat R(P.rows, P.cols);
  for (size_t j = 0; j < P.cols; ++j) {
    if (delta[j] < 0) throw DegreeTooLarge("col_reverse: negative bound");
    for (size_t i = 0; i < P.rows; ++i)
      R.at(i, j) = poly_reverse(static_cast<size_t>(delta[j]), P.at(i, j));
  }
  return R;
}

PolyMat row_reverse(const PolyMat& P, const DegTuple& delta) {
  return pm_transpose(col_reverse(pm_transpose(P), delta));
}

PolyMat weak_popov_transform(const FieldCtx& F, const PolyMat& B, const Shift& s) {
  if (B.rows != B.cols) throw NotSquare("weak_popov_transform");
  if (s.size() != B.rows) throw DimensionMismatch("weak_popov_transform");
  size_t n = B.cols;
  PolyMat P = B;
  std::vector<std::pair<size_t, long long>> piv(n);
  long long total = 0;
  for (size_t j = 0; j < n; ++j) {
    auto pv = col_pivot(P, s, j);
    if (!pv) throw SingularInput("weak_popov_transform: zero column");
    piv[j] = *pv;
    total += pv->second;
  }
  long long lo = *std::min_element(s.begin(), s.end());
  // Every step lowers (shifted degree, pivot row) of one column, so this
  // bound is generous.
  long long guard = (total - static_cast<long long>(n) * lo + 1) * static_cast<long long>(n + 1) *
                        static_cast<long long>(n + 1) +
                    64;
  for (long long step = 0;; ++step) {
    if (step > guard) throw SingularInput("weak_popov_transform: step guard tripped");
    // find a pivot-row collision
    size_t a = n, b = n;
    for (size_t j = 0; j < n && a == n; ++j)
      for (size_t k = j + 1; k < n; ++k)
        if (piv[j].first == piv[k].first) {
          a = j;
          b = k;
          break;
        }
    if (a == n) break;
    if (piv[a].second < piv[b].second) std::swap(a, b);  // reduce the larger
    size_t row = piv[a].first;
    uint64_t la = poly_coeff(P.at(row, a), piv[a].second - s[row]);
    uint64_t lb = poly_coeff(P.at(row, b), piv[b].second - s[row]);
    uint64_t c = F.mul(la, F.inv(lb));
    col_axpy(F, P, a, c, b, static_cast<size_t>(piv[a].second - piv[b].second));
    auto pv = col_pivot(P, s, a);
    if (!pv) throw SingularInput("weak_popov_transform: column vanished");
    piv[a] = *pv;
  }
  // permute columns so pivot(col j) = j
  PolyMat R(n, n);
  std::vector<bool> used(n, false);
  for (size_t j = 0; j < n; ++j) {
    size_t dst = piv[j].first;
    if (used[dst]) throw SingularInput("weak_popov_transform: duplicate pivot");
    used[dst] = true;
    for (size_t i = 0; i < n; ++i) R.at(i, dst) = P.at(i, j);
  }
  return R;
}

PolyMat popov_normalize(const FieldCtx& F, const PolyMat& P, const Shift& s) {
  if (!form_predicate(F, P, s, Form::weak_popov, Axis::col))
    throw InternalError("popov_normalize: input not weak Popov");
  size_t n = P.cols;
  Shift neg_delta(n);
  for (size_t j = 0; j < n; ++j) neg_delta[j] = -poly_deg(P.at(j, j));
  PolyMat W = weak_popov_transform(F, P, neg_delta);
  FieldMat L = leading_matrix(F, W, neg_delta, Axis::col);
  auto Linv = mat_inverse(F, L);
  if (!Linv) throw InternalError("popov_normalize: leading matrix singular");
  PolyMat R = pm_mul_const_right(F, W, *Linv);
  if (!form_predicate(F, R, s, Form::popov, Axis::col))
    throw InternalError("popov_normalize: normalization failed");
  return R;
}

PolyMat approximant_basis(const FieldCtx& F, const PolyMat& Fmat, size_t sigma, const Shift& s) {
  if (s.size() != Fmat.cols) throw DimensionMismatch("approximant_basis");
  auto [P1, t1] = pmbasis(F, Fmat, sigma, s);
  size_t n = Fmat.cols;
  // two-pass Popov normalization: rerun with the negated pivot degrees, then
  // cancel the constant leading matrix
  bool ok = form_predicate(F, P1, s, Form::weak_popov, Axis::col);
  if (ok) {
    Shift neg_delta(n);
    for (size_t j = 0; j < n; ++j) neg_delta[j] = -poly_deg(P1.at(j, j));
    auto [P2, t2] = pmbasis(F, Fmat, sigma, neg_delta);
    FieldMat L = leading_matrix(F, P2, neg_delta, Axis::col);
    auto Linv = mat_inverse(F, L);
    if (Linv) {
      PolyMat R = pm_mul_const_right(F, P2, *Linv);
      if (form_predicate(F, R, s, Form::popov, Axis::col)) return R;
    }
    return popov_normalize(F, P1, s);
  }
  return popov_normalize(F, weak_popov_transform(F, P1, s), s);
}

PolyMat kernel_basis(const FieldCtx& F, const PolyMat& Fmat, const Shift& s) {
  if (s.size() != Fmat.cols) throw DimensionMismatch("kernel_basis");
  long long sum = 0, mx = 0;
  for (long long v : s) {
    if (v < 0) throw ShiftOutOfRange("kernel_basis: negative shift");
    sum += v;
    mx = std::max(mx, v);
  }
  size_t sigma = static_cast<size_t>(sum + mx + 1);
  PolyMat Q = approximant_basis(F, Fmat, sigma, s);
  std::vector<size_t> keep;
  for (size_t j = 0; j < Q.cols; ++j) {
    bool exact = true;
    for (size_t i = 0; i < Fmat.rows && exact; ++i) {
      Poly acc;
      for (size_t k = 0; k < Fmat.cols; ++k)
        acc = poly_add(F, acc, poly_mul(F, Fmat.at(i, k), Q.at(k, j)));
      exact = poly_is_zero(acc);
    }
    if (exact) keep.push_back(j);
  }
  PolyMat K(Fmat.cols, keep.size());
  for (size_t c = 0; c < keep.size(); ++c)
    for (size_t i = 0; i < Fmat.cols; ++i) K.at(i, c) = Q.at(i, keep[c]);
  // primitivity + deterministic scaling (first nonzero entry monic)
  for (size_t c = 0; c < K.cols; ++c) {
    Poly g = column_content(F, K, c);
    if (poly_deg(g) > 0)
      for (size_t i = 0; i < K.rows; ++i) K.at(i, c) = poly_quo(F, K.at(i, c), g);
    for (size_t i = 0; i < K.rows; ++i) {
      if (poly_is_zero(K.at(i, c))) continue;
      col_scale(F, K, c, F.inv(K.at(i, c).back()));
      break;
    }
  }
  return K;
}

Poly pm_determinant(const FieldCtx& F, const PolyMat& A) {
  if (A.rows != A.cols) throw NotSquare("pm_determinant");
  size_t n = A.rows;
  if (n == 0) return {1};
  PolyMat M = A;
  Poly prev = {1};
  bool neg = false;
  for (size_t k = 0; k + 1 < n; ++k) {
    size_t piv = k;
    while (piv < n && poly_is_zero(M.at(piv, k))) ++piv;
    if (piv == n) return {};
    if (piv != k) {
      for (size_t j = 0; j < n; ++j) std::swap(M.at(piv, j), M.at(k, j));
      neg = !neg;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) {
        Poly num = poly_sub(F, poly_mul(F, M.at(k, k), M.at(i, j)),
                            poly_mul(F, M.at(i, k), M.at(k, j)));
        auto [q, r] = poly_divrem(F, num, prev);
        if (!poly_is_zero(r)) throw InternalError("pm_determinant: inexact division");
        M.at(i, j) = std::move(q);
      }
    prev = M.at(k, k);
  }
  Poly d = M.at(n - 1, n - 1);
  return neg ? poly_neg(F, d) : d;
}

PolyMat inv_apply_mod(const FieldCtx& F, const PolyMat& P, const PolyMat& V, const Poly& M) {
  if (P.rows != P.cols) throw NotSquare("inv_apply_mod");
  if (V.rows != P.rows) throw DimensionMismatch("inv_apply_mod");
  if (poly_is_zero(M)) throw BadModulus("inv_apply_mod: zero modulus");
  size_t alpha = P.rows;
  long long dm = poly_deg(M);
  for (const auto& p : V.e)
    if (poly_deg(p) >= dm) throw DegreeTooLarge("inv_apply_mod: rhs degree >= deg(M)");
  if (dm == 0) return PolyMat(alpha, V.cols);
  // coprimality of det(P) and M
  if (is_power_of_x(M)) {
    FieldMat P0(alpha, alpha);
    for (size_t i = 0; i < alpha; ++i)
      for (size_t j = 0; j < alpha; ++j) P0.at(i, j) = poly_coeff(P.at(i, j), 0);
    auto P0inv = mat_inverse(F, P0);
    if (!P0inv) throw NotInvertibleMod();
    // Newton iteration for X = P^{-1} mod x^k, then W = X V mod x^k
    size_t k = static_cast<size_t>(dm);
    PolyMat X(alpha, alpha);
    for (size_t i = 0; i < alpha; ++i)
      for (size_t j = 0; j < alpha; ++j)
        if (P0inv->at(i, j)) X.at(i, j) = {P0inv->at(i, j)};
    PolyMat I2 = PolyMat::identity(alpha);
    for (auto& e : I2.e)
      if (!e.empty()) e[0] = F.reduce(2);
    size_t prec = 1;
    while (prec < k) {
      prec = std::min(2 * prec, k);
      PolyMat PX = pm_mul_trunc(F, P, X, prec);
      X = pm_mul_trunc(F, X, pm_sub(F, I2, PX), prec);
    }
    return pm_mul_trunc(F, X, V, k);
  } else {
    Poly det = pm_determinant(F, P);
    if (poly_is_zero(det) || poly_deg(poly_gcd(F, det, M)) != 0) throw NotInvertibleMod();
  }
  DegTuple cd = shifted_cdeg(P, Shift(alpha, 0));
  PolyMat W(alpha, V.cols);
  for (size_t b = 0; b < V.cols; ++b) {
    bool zero = true;
    for (size_t i = 0; i < alpha; ++i)
      if (!poly_is_zero(V.at(i, b))) zero = false;
    if (zero) continue;
    PolyMat A(alpha, alpha + 1);
    for (size_t i = 0; i < alpha; ++i) {
      for (size_t j = 0; j < alpha; ++j) A.at(i, j) = P.at(i, j);
      A.at(i, alpha) = poly_neg(F, V.at(i, b));
    }
    Shift s(alpha + 1);
    for (size_t j = 0; j < alpha; ++j) {
      if (cd[j] == kNegInf) throw NotInvertibleMod();  // zero column: singular
      s[j] = cd[j];
    }
    s[alpha] = dm - 1;
    PolyMat K = kernel_basis(F, A, s);
    if (K.cols != 1) throw InternalError("inv_apply_mod: kernel rank != 1");
    const Poly& mu = K.at(alpha, 0);
    if (poly_is_zero(mu)) throw InternalError("inv_apply_mod: zero cofactor");
    Poly mu_inv = poly_modinv(F, mu, M);
    for (size_t i = 0; i < alpha; ++i)
      W.at(i, b) = poly_rem(F, poly_mul(F, K.at(i, 0), mu_inv), M);
  }
  return W;
}

std::optional<PolyVec> module_membership(const FieldCtx& F, const PolyMat& P, const Shift& s,
                                         const PolyVec& w) {
  if (P.rows != P.cols) throw NotSquare("module_membership");
  if (w.size() != P.rows) throw DimensionMismatch("module_membership");
  size_t n = P.cols;
  FieldMat L = leading_matrix(F, P, s, Axis::col);
  auto Linv = mat_inverse(F, L);
  if (!Linv) throw SingularInput("module_membership: input not reduced");
  DegTuple t = shifted_cdeg(P, s);
  PolyVec r = w;
  PolyVec lambda(n);
  long long prevT = 1ll << 62;
  while (true) {
    long long T = shifted_cdeg_vec(r, s);
    if (T == kNegInf) return lambda;
    if (T >= prevT) throw InternalError("module_membership: no progress");
    prevT = T;
    std::vector<uint64_t> lv(n, 0);
    for (size_t i = 0; i < n; ++i) lv[i] = poly_coeff(r[i], T - s[i]);
    std::vector<uint64_t> c = mat_vec(F, *Linv, lv);
    for (size_t j = 0; j < n; ++j)
      if (c[j] && t[j] > T) return std::nullopt;
    for (size_t j = 0; j < n; ++j) {
      if (!c[j]) continue;
      size_t sh = static_cast<size_t>(T - t[j]);
      Poly term = poly_shift(Poly{c[j]}, sh);
      lambda[j] = poly_add(F, lambda[j], term);
      for (size_t i = 0; i < n; ++i)
        r[i] = poly_sub(F, r[i], poly_scale(F, c[j], poly_shift(P.at(i, j), sh)));
    }
  }
}

}  // namespace stsolve

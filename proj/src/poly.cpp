#include "stsolve/poly.hpp"

#include <algorithm>

namespace stsolve {

namespace {

constexpr size_t kKaratsubaThreshold = 32;
constexpr size_t kNttThreshold = 64;

Poly mul_school(const FieldCtx& F, const Poly& a, const Poly& b) {
  Poly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j)
      c[i + j] = F.add(c[i + j], F.mul(a[i], b[j]));
  }
  return c;
}

Poly mul_karatsuba(const FieldCtx& F, const Poly& a, const Poly& b) {
  if (std::min(a.size(), b.size()) < kKaratsubaThreshold) return mul_school(F, a, b);
  size_t h = (std::max(a.size(), b.size()) + 1) / 2;
  Poly a0(a.begin(), a.begin() + std::min(h, a.size()));
  Poly a1(a.begin() + std::min(h, a.size()), a.end());
  Poly b0(b.begin(), b.begin() + std::min(h, b.size()));
  Poly b1(b.begin() + std::min(h, b.size()), b.end());
  Poly z0 = (a0.empty() || b0.empty()) ? Poly{} : mul_karatsuba(F, a0, b0);
  Poly z2 = (a1.empty() || b1.empty()) ? Poly{} : mul_karatsuba(F, a1, b1);
  Poly sa(std::max(a0.size(), a1.size()), 0);
  for (size_t i = 0; i < a0.size(); ++i) sa[i] = a0[i];
  for (size_t i = 0; i < a1.size(); ++i) sa[i] = F.add(sa[i], a1[i]);
  Poly sb(std::max(b0.size(), b1.size()), 0);
  for (size_t i = 0; i < b0.size(); ++i) sb[i] = b0[i];
  for (size_t i = 0; i < b1.size(); ++i) sb[i] = F.add(sb[i], b1[i]);
  Poly z1 = (sa.empty() || sb.empty()) ? Poly{} : mul_karatsuba(F, sa, sb);
  Poly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < z0.size(); ++i) c[i] = F.add(c[i], z0[i]);
  for (size_t i = 0; i < z1.size(); ++i) {
    uint64_t m = z1[i];
    if (i < z0.size()) m = F.sub(m, z0[i]);
    if (i < z2.size()) m = F.sub(m, z2[i]);
    if (m && i + h < c.size()) c[i + h] = F.add(c[i + h], m);
  }
  for (size_t i = 0; i < z2.size(); ++i) c[i + 2 * h] = F.add(c[i + 2 * h], z2[i]);
  return c;
}

void ntt_inplace(const FieldCtx& F, std::vector<uint64_t>& a, bool inverse) {
  size_t n = a.size();
  unsigned lg = 0;
  while ((1u << lg) < n) ++lg;
  for (size_t i = 1, j = 0; i < n; ++i) {
    size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  // root of order n
  uint64_t w_n = F.ntt_root();
  for (unsigned k = F.two_adicity(); k > lg; --k) w_n = F.mul(w_n, w_n);
  if (inverse) w_n = F.inv(w_n);
  for (size_t len = 2; len <= n; len <<= 1) {
    uint64_t wl = w_n;
    for (size_t l = len; l < n; l <<= 1) wl = F.mul(wl, wl);
    for (size_t i = 0; i < n; i += len) {
      uint64_t w = 1;
      for (size_t j = 0; j < len / 2; ++j) {
        uint64_t u = a[i + j], v = F.mul(a[i + j + len / 2], w);
        a[i + j] = F.add(u, v);
        a[i + j + len / 2] = F.sub(u, v);
        w = F.mul(w, wl);
      }
    }
  }
  if (inverse) {
    uint64_t ninv = F.inv(n % F.p());
    for (auto& x : a) x = F.mul(x, ninv);
  }
}

Poly mul_ntt(const FieldCtx& F, const Poly& a, const Poly& b) {
  size_t rs = a.size() + b.size() - 1;
  size_t n = 1;
  while (n < rs) n <<= 1;
  std::vector<uint64_t> fa(a.begin(), a.end()), fb(b.begin(), b.end());
  fa.resize(n, 0);
  fb.resize(n, 0);
  ntt_inplace(F, fa, false);
  ntt_inplace(F, fb, false);
  for (size_t i = 0; i < n; ++i) fa[i] = F.mul(fa[i], fb[i]);
  ntt_inplace(F, fa, true);
  fa.resize(rs);
  return fa;
}

bool ntt_usable(const FieldCtx& F, size_t result_size) {
  size_t n = 1;
  unsigned lg = 0;
  while (n < result_size) {
    n <<= 1;
    ++lg;
  }
  return lg <= F.two_adicity() && n < F.p();
}

}  // namespace

void poly_normalize(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_from_coeffs(const FieldCtx& F, const std::vector<uint64_t>& c) {
  Poly a(c.size());
  for (size_t i = 0; i < c.size(); ++i) a[i] = F.reduce(c[i]);
  poly_normalize(a);
  return a;
}

Poly poly_add(const FieldCtx& F, const Poly& a, const Poly& b) {
  Poly c(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) c[i] = F.add(c[i], b[i]);
  poly_normalize(c);
  return c;
}

Poly poly_sub(const FieldCtx& F, const Poly& a, const Poly& b) {
  Poly c(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) c[i] = F.sub(c[i], b[i]);
  poly_normalize(c);
  return c;
}

Poly poly_neg(const FieldCtx& F, const Poly& a) {
  Poly c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = F.neg(a[i]);
  return c;
}

Poly poly_scale(const FieldCtx& F, uint64_t c, const Poly& a) {
  c = F.reduce(c);
  if (c == 0) return {};
  Poly r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = F.mul(c, a[i]);
  poly_normalize(r);
  return r;
}

Poly poly_mul(const FieldCtx& F, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  size_t sm = std::min(a.size(), b.size());
  Poly c;
  if (sm < kKaratsubaThreshold)
    c = mul_school(F, a, b);
  else if (a.size() + b.size() >= kNttThreshold && ntt_usable(F, a.size() + b.size() - 1))
    c = mul_ntt(F, a, b);
  else
    c = mul_karatsuba(F, a, b);
  poly_normalize(c);
  return c;
}

Poly poly_shift(const Poly& a, size_t k) {
  if (a.empty()) return {};
  Poly c(a.size() + k, 0);
  std::copy(a.begin(), a.end(), c.begin() + k);
  return c;
}

Poly poly_trunc(const Poly& a, size_t k) {
  Poly c(a.begin(), a.begin() + std::min(k, a.size()));
  poly_normalize(c);
  return c;
}

Poly poly_quo_xk(const Poly& a, size_t k) {
  if (a.size() <= k) return {};
  return Poly(a.begin() + k, a.end());
}

std::pair<Poly, Poly> poly_divrem(const FieldCtx& F, const Poly& a, const Poly& b) {
  if (b.empty()) throw DivideByZeroPoly();
  if (a.size() < b.size()) return {{}, a};
  Poly r = a;
  Poly q(a.size() - b.size() + 1, 0);
  uint64_t linv = F.inv(b.back());
  for (size_t sh = q.size(); sh-- > 0;) {
    size_t i = sh + b.size() - 1;
    if (r[i] == 0) continue;
    uint64_t c = F.mul(r[i], linv);
    q[sh] = c;
    for (size_t j = 0; j < b.size(); ++j)
      r[sh + j] = F.sub(r[sh + j], F.mul(c, b[j]));
  }
  r.resize(b.size() - 1);
  poly_normalize(r);
  poly_normalize(q);
  return {q, r};
}

Poly poly_rem(const FieldCtx& F, const Poly& a, const Poly& b) { return poly_divrem(F, a, b).second; }
Poly poly_quo(const FieldCtx& F, const Poly& a, const Poly& b) { return poly_divrem(F, a, b).first; }

Poly poly_make_monic(const FieldCtx& F, const Poly& a) {
  if (a.empty()) return {};
  return poly_scale(F, F.inv(a.back()), a);
}

Poly poly_gcd(const FieldCtx& F, Poly a, Poly b) {
  while (!b.empty()) {
    Poly r = poly_rem(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return poly_make_monic(F, a);
}

void poly_xgcd(const FieldCtx& F, const Poly& a, const Poly& b, Poly& g, Poly& s, Poly& t) {
  Poly r0 = a, r1 = b;
  Poly s0 = {1}, s1 = {};
  Poly t0 = {}, t1 = {1};
  while (!r1.empty()) {
    auto [q, r] = poly_divrem(F, r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = poly_sub(F, s0, poly_mul(F, q, s1));
    s0 = std::move(s1);
    s1 = std::move(s2);
    Poly t2 = poly_sub(F, t0, poly_mul(F, q, t1));
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (!r0.empty()) {
    uint64_t c = F.inv(r0.back());
    r0 = poly_scale(F, c, r0);
    s0 = poly_scale(F, c, s0);
    t0 = poly_scale(F, c, t0);
  }
  g = std::move(r0);
  s = std::move(s0);
  t = std::move(t0);
}

Poly poly_modinv(const FieldCtx& F, const Poly& a, const Poly& M) {
  if (M.empty()) throw DivideByZeroPoly("poly_modinv: zero modulus");
  Poly g, s, t;
  poly_xgcd(F, poly_rem(F, a, M), M, g, s, t);
  if (poly_deg(g) != 0) throw NotCoprime();
  return poly_rem(F, s, M);
}

Poly poly_inv_mod_xk(const FieldCtx& F, const Poly& a, size_t k) {
  if (a.empty() || a[0] == 0) throw NotCoprime("poly_inv_mod_xk: constant term is zero");
  Poly r = {F.inv(a[0])};
  size_t prec = 1;
  while (prec < k) {
    prec = std::min(2 * prec, k);
    // r <- r*(2 - a*r) mod x^prec
    Poly ar = poly_trunc(poly_mul(F, poly_trunc(a, prec), r), prec);
    Poly two_minus = poly_sub(F, Poly{2 % F.p()}, ar);
    r = poly_trunc(poly_mul(F, r, two_minus), prec);
  }
  return poly_trunc(r, k);
}

Poly poly_reverse(size_t d, const Poly& a) {
  if (poly_deg(a) > static_cast<long long>(d)) throw DegreeTooLarge("poly_reverse");
  Poly c(d + 1, 0);
  for (size_t i = 0; i < a.size(); ++i) c[d - i] = a[i];
  poly_normalize(c);
  return c;
}

Poly poly_derivative(const FieldCtx& F, const Poly& a) {
  if (a.size() <= 1) return {};
  Poly c(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i) c[i - 1] = F.mul(i % F.p(), a[i]);
  poly_normalize(c);
  return c;
}

uint64_t poly_eval(const FieldCtx& F, const Poly& a, uint64_t x) {
  uint64_t r = 0;
  for (size_t i = a.size(); i-- > 0;) r = F.add(F.mul(r, x), a[i]);
  return r;
}

std::vector<uint64_t> eval_multi(const FieldCtx& F, const Poly& a, const PointList& grid) {
  std::vector<uint64_t> r(grid.size());
  for (size_t i = 0; i < grid.size(); ++i) r[i] = poly_eval(F, a, grid[i]);
  return r;
}

Poly master_poly(const FieldCtx& F, const PointList& grid) {
  Poly m = {1};
  for (uint64_t x : grid) {
    Poly f = {F.neg(F.reduce(x)), 1};
    m = poly_mul(F, m, f);
  }
  return m;
}

Poly interpolate(const FieldCtx& F, const PointList& grid, const std::vector<uint64_t>& values) {
  if (grid.size() != values.size()) throw DimensionMismatch("interpolate");
  size_t d = grid.size();
  if (d == 0) return {};
  // denominators prod_{j != i} (x_i - x_j), inverted in one batch
  std::vector<uint64_t> den(d, 1);
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) {
      if (i == j) continue;
      uint64_t diff = F.sub(F.reduce(grid[i]), F.reduce(grid[j]));
      if (diff == 0) throw RepeatedPoint();
      den[i] = F.mul(den[i], diff);
    }
  F.batch_inv(den);
  Poly mu = master_poly(F, grid);
  Poly r = {};
  for (size_t i = 0; i < d; ++i) {
    uint64_t c = F.mul(F.reduce(values[i]), den[i]);
    if (!c) continue;
    // mu / (x - x_i), synthetic division
    Poly q(d, 0);
    uint64_t xi = F.reduce(grid[i]);
    uint64_t acc = 0;
    for (size_t k = d + 1; k-- > 1;) {
      acc = F.add(mu[k], F.mul(acc, xi));
      q[k - 1] = acc;
    }
    r = poly_add(F, r, poly_scale(F, c, q));
  }
  return r;
}

Poly truncated_product(const FieldCtx& F, const Poly& g, const Poly& u, size_t m) {
  return poly_trunc(poly_mul(F, g, u), m);
}

Poly middle_product(const FieldCtx& F, const std::vector<uint64_t>& hvec, const Poly& u, size_t ell) {
  size_t n = hvec.size();
  if (ell > n) throw DegreeTooLarge("middle_product: ell > n");
  if (poly_deg(u) >= static_cast<long long>(n)) throw DegreeTooLarge("middle_product: deg(u) >= n");
  if (n == 0) return {};
  Poly h(n);
  for (size_t i = 0; i < n; ++i) h[i] = F.reduce(hvec[n - 1 - i]);
  poly_normalize(h);
  Poly prod = poly_mul(F, h, u);
  return poly_trunc(poly_quo_xk(prod, n - 1), ell);
}

}  // namespace stsolve

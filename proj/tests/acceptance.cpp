// Acceptance suite: one pass/fail line per criterion. Criteria 1-6 and 8 are
// hard (exact checks plus a runtime budget); criterion 7 (empirical scaling)
// is soft and reports FLAGGED instead of FAIL on constrained hardware.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "stsolve/io.hpp"
#include "stsolve/mpade.hpp"
#include "stsolve/oracle.hpp"
#include "stsolve/solver.hpp"

using namespace stsolve;

namespace {

struct Criterion {
  int id;
  bool soft = false;
  bool ok = true;
  std::string detail;
  double seconds = 0;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

double now_s() {
  using namespace std::chrono;
  return duration<double>(steady_clock::now().time_since_epoch()).count();
}

Poly rand_poly(const FieldCtx& F, std::mt19937_64& rng, size_t len) {
  Poly a(len);
  for (auto& c : a) c = rng() % F.p();
  poly_normalize(a);
  return a;
}

Poly xpow(size_t d) {
  Poly m(d + 1, 0);
  m[d] = 1;
  return m;
}

Poly rand_modulus(const FieldCtx& F, std::mt19937_64& rng, size_t d, int kind) {
  if (kind == 0) return xpow(d);
  if (kind == 1) {
    PointList pts;
    while (pts.size() < d) {
      uint64_t x = rng() % F.p();
      bool dup = false;
      for (uint64_t q : pts) dup |= (q == x);
      if (!dup) pts.push_back(x);
    }
    return master_poly(F, pts);
  }
  Poly m = rand_poly(F, rng, d);
  m.resize(d + 1);
  m[d] = 1;
  return m;
}

std::vector<uint64_t> mul_vec(const FieldCtx& F, const FieldMat& A,
                              const std::vector<uint64_t>& u) {
  std::vector<uint64_t> r(A.rows, 0);
  for (size_t i = 0; i < A.rows; ++i)
    for (size_t j = 0; j < A.cols; ++j) r[i] = F.add(r[i], F.mul(A.at(i, j), u[j]));
  return r;
}

// ---- criteria 1 + 2: solver vs dense oracle, plus the degree ledger --------

void run_solver_sweep(Criterion& c1, Criterion& c2) {
  FieldCtx F(65537);
  size_t total = 0;
  for (Structure st : {Structure::toeplitz, Structure::vandermonde, Structure::cauchy}) {
    std::mt19937_64 rng(1000 + static_cast<uint64_t>(st));
    for (int it = 0; it < 200; ++it) {
      size_t m = 1 + rng() % 48, n = 1 + rng() % 48;
      switch (it % 3) {
        case 0: n = m; break;                          // square
        case 1: if (n <= m) std::swap(m, n); if (n == m) ++n; break;  // wide
        case 2: if (m <= n) std::swap(m, n); if (n == m) ++m; break;  // tall
      }
      size_t alpha = 1 + rng() % std::min<size_t>(6, std::min(m, n));
      bool wide_flag = (it % 3 == 1);
      RandomInstance ri = random_instance(F, st, m, n, alpha, 40000 + it, wide_flag);
      std::optional<std::vector<uint64_t>> v;
      switch (it % 4) {
        case 0: v = std::vector<uint64_t>(m, 0); break;
        case 1: v = ri.rhs; break;
        case 2: v = make_consistent_rhs(F, ri.gen, 50000 + it); break;
        case 3: v = std::nullopt; break;
      }
      SolveOutput out = solve(F, ri.gen, v);
      ++total;

      FieldMat A = to_dense(F, ri.gen);
      std::vector<uint64_t> rhs = v.value_or(std::vector<uint64_t>(m, 0));
      auto rs = dense_rank_solve(F, A, rhs);
      std::string tag = structure_name(st) + " m=" + std::to_string(m) +
                        " n=" + std::to_string(n) + " it=" + std::to_string(it);

      if (out.u.has_value() != rs.solution.has_value())
        c1.fail("solvability verdict mismatch at " + tag);
      if (out.u && apply(F, ri.gen, *out.u) != rhs) c1.fail("residual A u != v at " + tag);

      long long sumt = 0;
      long long maxdt = 0;
      for (size_t i = 0; i < out.ell; ++i) {
        sumt += out.t[i];
        maxdt = std::max(maxdt, out.d[i] + out.t[i]);
        if (!(poly_deg(out.p[i]) <= out.d[i] && out.d[i] <= static_cast<long long>(n) - out.t[i] &&
              out.t[i] >= 1 && static_cast<long long>(n) - out.t[i] < static_cast<long long>(n)))
          c2.fail("degree ledger violated at " + tag);
      }
      if (maxdt > static_cast<long long>(n)) c2.fail("max(d+t) > n at " + tag);
      if (sumt != static_cast<long long>(n - rs.rank))
        c1.fail("sum(t) != oracle nullity at " + tag);

      auto vecs = expand_nullspace(F, out, ri.gen);
      for (const auto& z : vecs)
        if (apply(F, ri.gen, z) != std::vector<uint64_t>(m, 0))
          c1.fail("nullspace vector not annihilated at " + tag);
      if (!vecs.empty()) {
        FieldMat Z(vecs.size(), n);
        for (size_t i = 0; i < vecs.size(); ++i)
          for (size_t j = 0; j < n; ++j) Z.at(i, j) = vecs[i][j];
        if (dense_rank_solve(F, Z, {}).rank != vecs.size())
          c1.fail("nullspace vectors dependent at " + tag);
      }
    }
  }
  if (c1.ok)
    c1.detail = std::to_string(total) + " instances (200 per structure), oracle-exact";
  if (c2.ok) c2.detail = "ledger exact on all " + std::to_string(total) + " instances";
}

// ---- criterion 3: vector_mpade contract ------------------------------------

void run_vmpade_contract(Criterion& c) {
  FieldCtx F(65537);
  FieldCtx Fs(97);
  std::mt19937_64 rng(61001);
  size_t total = 0, gen_checked = 0;
  for (int it = 0; it < 500; ++it) {
    // small prime for the generation checks so brute bases stay small
    bool gen_check = (it % 3 == 0);
    const FieldCtx& K = gen_check ? Fs : F;
    size_t d = gen_check ? 1 + rng() % 10 : 1 + rng() % 24;
    size_t alpha = gen_check ? 1 + rng() % 3 : 1 + rng() % 5;
    Poly M = rand_modulus(K, rng, d, it % 3);
    PolyVec Frow(alpha);
    for (auto& f : Frow) f = rand_poly(K, rng, d);
    Shift s(alpha);
    for (auto& e : s) e = static_cast<long long>(rng() % 3);
    Poly v = (it % 4 == 0) ? Poly{} : rand_poly(K, rng, d);
    VmpadeOut o = vector_mpade(K, d, alpha, M, Frow, s, v);
    ++total;
    std::string tag = "it=" + std::to_string(it);

    if (!form_predicate(K, o.P, s, Form::popov, Axis::col)) c.fail("P not s-Popov at " + tag);
    long long sumdeg = 0;
    for (size_t j = 0; j < alpha; ++j) sumdeg += poly_deg(o.P.at(j, j));
    if (sumdeg > static_cast<long long>(d)) c.fail("sum of pivot degrees > d at " + tag);
    Poly det = pm_determinant(K, o.P);
    if (!poly_is_zero(poly_rem(K, M, det))) c.fail("det(P) does not divide M at " + tag);
    for (size_t j = 0; j < alpha; ++j) {
      Poly col;
      for (size_t i = 0; i < alpha; ++i) col = poly_add(K, col, poly_mul(K, Frow[i], o.P.at(i, j)));
      if (!poly_is_zero(poly_rem(K, col, M))) c.fail("F P != 0 mod M at " + tag);
    }
    Poly fs;
    for (size_t i = 0; i < alpha; ++i) fs = poly_add(K, fs, poly_mul(K, Frow[i], o.sol[i]));
    if (!poly_is_zero(poly_rem(K, poly_sub(K, fs, poly_mul(K, v, o.mu)), M)))
      c.fail("F sol != v mu mod M at " + tag);
    for (size_t i = 0; i < alpha; ++i) {
      long long rd = kNegInf;
      for (size_t j = 0; j < alpha; ++j) rd = std::max(rd, poly_deg(o.P.at(i, j)));
      if (poly_deg(o.sol[i]) >= rd) c.fail("rdeg(sol) not < rdeg(P) at " + tag);
    }

    if (!gen_check) continue;
    ++gen_checked;
    std::vector<std::vector<uint64_t>> Fraw(alpha);
    for (size_t i = 0; i < alpha; ++i) Fraw[i] = Frow[i];
    auto basis = brute_vector_mpade(K, M, Fraw, v, d);
    // backward: every brute (p, q) reduces into the span of P via mu | q
    for (const auto& vec : basis) {
      PolyVec p(alpha);
      for (size_t j = 0; j < alpha; ++j) {
        p[j] = Poly(vec.begin() + j * d, vec.begin() + (j + 1) * d);
        poly_normalize(p[j]);
      }
      Poly q(vec.begin() + alpha * d, vec.begin() + (alpha + 1) * d);
      poly_normalize(q);
      auto [qq, qr] = poly_divrem(K, q, o.mu);
      if (!poly_is_zero(qr)) {
        c.fail("mu does not divide a brute multiplier at " + tag);
        continue;
      }
      PolyVec w(alpha);
      for (size_t j = 0; j < alpha; ++j) w[j] = poly_sub(K, p[j], poly_mul(K, o.sol[j], qq));
      if (!module_membership(K, o.P, s, w).has_value())
        c.fail("brute solution outside the span of P at " + tag);
    }
    // forward: P lambda + sol nu always solves with multiplier mu nu
    for (int rep = 0; rep < 2; ++rep) {
      PolyVec lam(alpha);
      for (auto& e : lam) e = rand_poly(K, rng, 3);
      Poly nu = rand_poly(K, rng, 3);
      PolyVec cand = pm_apply(K, o.P, lam);
      Poly lhs;
      for (size_t j = 0; j < alpha; ++j) {
        cand[j] = poly_add(K, cand[j], poly_mul(K, o.sol[j], nu));
        lhs = poly_add(K, lhs, poly_mul(K, Frow[j], cand[j]));
      }
      Poly want = poly_mul(K, v, poly_mul(K, o.mu, nu));
      if (!poly_is_zero(poly_rem(K, poly_sub(K, lhs, want), M)))
        c.fail("forward generation failed at " + tag);
    }
  }
  if (c.ok)
    c.detail = std::to_string(total) + " instances, generation cross-checked on " +
               std::to_string(gen_checked);
}

// ---- criterion 4: simultaneous_mpade contract ------------------------------

void run_smpade_contract(Criterion& c) {
  FieldCtx Fs(97);
  std::mt19937_64 rng(62001);
  size_t total = 0;
  for (int it = 0; it < 500; ++it) {
    size_t d = 1 + rng() % 24, alpha = 1 + rng() % 5;
    Poly M = rand_modulus(Fs, rng, d, it % 3);
    PolyVec Fcol(alpha);
    std::vector<std::vector<uint64_t>> Fraw(alpha), vraw(alpha);
    for (size_t i = 0; i < alpha; ++i) {
      Fcol[i] = rand_poly(Fs, rng, d);
      Fraw[i] = Fcol[i];
    }
    Shift s(alpha);
    for (auto& e : s) e = static_cast<long long>(rng() % (d + 1));
    PolyVec v(alpha);
    for (size_t i = 0; i < alpha; ++i) {
      v[i] = (it % 3 == 0) ? Poly{} : rand_poly(Fs, rng, d);
      vraw[i] = v[i];
    }
    SmpadeOut o = simultaneous_mpade(Fs, d, alpha, M, Fcol, s, v);
    ++total;
    std::string tag = "it=" + std::to_string(it);

    long long sumt = 0;
    for (size_t i = 0; i < o.basis.ell; ++i) {
      sumt += o.basis.t[i];
      if (poly_is_zero(o.basis.p[i]) || poly_deg(o.basis.p[i]) >= static_cast<long long>(d) ||
          o.basis.t[i] < 1 || o.basis.t[i] > static_cast<long long>(d))
        c.fail("basis shape invariant violated at " + tag);
    }

    // reducedness of the augmented matrix with cdeg_{-sbar} = -t
    if (o.basis.ell > 0) {
      PolyMat Q(1 + alpha, o.basis.ell);
      for (size_t j = 0; j < o.basis.ell; ++j) {
        Q.at(0, j) = o.basis.p[j];
        for (size_t i = 0; i < alpha; ++i)
          Q.at(1 + i, j) = poly_rem(Fs, poly_mul(Fs, Fcol[i], o.basis.p[j]), M);
      }
      Shift negsbar(1 + alpha);
      negsbar[0] = -static_cast<long long>(d);
      for (size_t i = 0; i < alpha; ++i) negsbar[1 + i] = -s[i];
      DegTuple cd = shifted_cdeg(Q, negsbar);
      for (size_t j = 0; j < o.basis.ell; ++j)
        if (cd[j] != -o.basis.t[j]) c.fail("cdeg_{-sbar} != -t at " + tag);
      FieldMat L = leading_matrix(Fs, Q, negsbar, Axis::col);
      if (dense_rank_solve(Fs, L, {}).rank != o.basis.ell)
        c.fail("augmented matrix not (-sbar)-reduced at " + tag);
    }

    // brute-force dimension and particular-solution agreement
    auto basis = brute_simultaneous_mpade(Fs, M, Fraw, s, vraw);
    bool brute_has_c = false;
    for (const auto& vec : basis) brute_has_c |= (vec[d] != 0);
    long long dim_homog = static_cast<long long>(basis.size()) - (brute_has_c ? 1 : 0);
    if (sumt != dim_homog) c.fail("sum(t) != brute solution dimension at " + tag);
    if (o.csol.has_value() != brute_has_c) c.fail("csol existence disagrees with brute at " + tag);
    if (o.csol) {
      if (poly_deg(*o.csol) >= static_cast<long long>(d)) c.fail("deg(csol) >= d at " + tag);
      for (size_t i = 0; i < alpha; ++i) {
        Poly r = poly_rem(Fs, poly_sub(Fs, poly_mul(Fs, Fcol[i], *o.csol), v[i]), M);
        if (poly_deg(r) >= s[i]) c.fail("csol residual too large at " + tag);
      }
    }
  }
  if (c.ok) c.detail = std::to_string(total) + " instances, brute-force exact agreement";
}

// ---- criterion 5: correspondence suite -------------------------------------

void run_correspondence(Criterion& c) {
  FieldCtx F(65537);
  std::mt19937_64 rng(63001);
  for (int it = 0; it < 100; ++it) {
    size_t n = 1 + rng() % 16, m = 1 + rng() % 16, ell = 1 + rng() % std::min(m, n);
    std::vector<uint64_t> g(m), h(n), u(n);
    for (auto& x : g) x = rng() % F.p();
    for (auto& x : h) x = rng() % F.p();
    for (auto& x : u) x = rng() % F.p();
    Poly up = u;
    poly_normalize(up);
    std::string tag = "it=" + std::to_string(it);

    std::vector<uint64_t> ue(ell);
    for (size_t i = 0; i < ell && i < n; ++i) ue[i] = u[i];
    Poly upe = ue;
    poly_normalize(upe);
    auto lv = mul_vec(F, dense_lower_toeplitz(F, g, m, ell), ue);
    Poly tp = truncated_product(F, g, upe, m);
    for (size_t i = 0; i < m; ++i)
      if (lv[i] != poly_coeff(tp, static_cast<long long>(i)))
        c.fail("lower-Toeplitz correspondence at " + tag);

    auto uv = mul_vec(F, dense_upper_toeplitz(F, h, ell, n), u);
    Poly mp = middle_product(F, h, up, ell);
    for (size_t i = 0; i < ell; ++i)
      if (uv[i] != poly_coeff(mp, static_cast<long long>(i)))
        c.fail("upper-Toeplitz correspondence at " + tag);

    PointList x, y;
    while (x.size() < m) {
      uint64_t pt = rng() % F.p();
      bool dup = false;
      for (uint64_t q : x) dup |= (q == pt);
      if (!dup) x.push_back(pt);
    }
    while (y.size() < n) {
      uint64_t pt = rng() % F.p();
      bool dup = false;
      for (uint64_t q : x) dup |= (q == pt);
      for (uint64_t q : y) dup |= (q == pt);
      if (!dup) y.push_back(pt);
    }
    if (mul_vec(F, dense_vandermonde(F, x, n), u) != eval_multi(F, up, x))
      c.fail("Vandermonde correspondence at " + tag);

    auto cv = mul_vec(F, dense_cauchy(F, x, y), u);
    Poly mux = master_poly(F, x), muy = master_poly(F, y);
    Poly ubar = interpolate(F, y, u);
    Poly iota = poly_modinv(F, muy, mux);
    Poly t = poly_rem(F, poly_mul(F, poly_derivative(F, muy), ubar), muy);
    Poly w = poly_rem(F, poly_mul(F, iota, t), mux);
    if (cv != eval_multi(F, w, x)) c.fail("Cauchy fraction-map correspondence at " + tag);

    // round trip + structured apply on a random generator instance
    Structure st = static_cast<Structure>(it % 3);
    size_t alpha = 1 + rng() % std::min<size_t>(4, std::min(m, n));
    RandomInstance ri = random_instance(F, st, m, n, alpha, 70000 + it);
    FieldMat A = to_dense(F, ri.gen);
    if (displacement_of_dense(F, st, ri.gen.x, ri.gen.y, A) !=
        mat_mul(F, ri.gen.G, mat_transpose(ri.gen.H)))
      c.fail("displacement round trip at " + tag);
    if (apply(F, ri.gen, u) != mul_vec(F, A, u)) c.fail("apply != dense product at " + tag);
  }
  if (c.ok) c.detail = "100 random cases per correspondence, all exact";
}

// ---- criterion 6: lemma suite ----------------------------------------------

void run_lemmas(Criterion& c) {
  FieldCtx F(65537);
  std::mt19937_64 rng(64001);
  for (int it = 0; it < 100; ++it) {
    std::string tag = "it=" + std::to_string(it);
    size_t kappa = 2 + rng() % 2, sigma = 2 + rng() % 4;
    Shift s(kappa, 0);
    PolyMat Fm(1, kappa);
    for (auto& e : Fm.e) e = rand_poly(F, rng, sigma);
    PolyMat P = approximant_basis(F, Fm, sigma, s);
    DegTuple delta = shifted_cdeg(P, s);

    // predictable degree: equality for the reduced P, inequality in general
    PolyVec q(kappa);
    for (auto& e : q) e = rand_poly(F, rng, 1 + rng() % 4);
    Shift t(kappa);
    for (size_t j = 0; j < kappa; ++j) t[j] = delta[j];
    if (shifted_cdeg_vec(pm_apply(F, P, q), s) != shifted_cdeg_vec(q, t))
      c.fail("predictable degree equality at " + tag);
    PolyMat B(kappa, kappa);
    for (auto& e : B.e) e = rand_poly(F, rng, 3);
    DegTuple cb = shifted_cdeg(B, s);
    Shift tb(kappa);
    for (size_t j = 0; j < kappa; ++j) tb[j] = (cb[j] == kNegInf) ? 0 : cb[j];
    if (shifted_cdeg_vec(pm_apply(F, B, q), s) > shifted_cdeg_vec(q, tb))
      c.fail("predictable degree inequality at " + tag);

    // degree-bound recovery of the combination coefficients
    long long n = 0;
    for (auto d : delta) n = std::max(n, d);
    n += 2;
    PolyVec lam(kappa);
    for (size_t i = 0; i < kappa; ++i)
      lam[i] = rand_poly(F, rng, static_cast<size_t>(n - delta[i]));
    auto lam2 = module_membership(F, P, s, pm_apply(F, P, lam));
    if (!lam2) {
      c.fail("membership recovery failed at " + tag);
    } else {
      for (size_t i = 0; i < kappa; ++i)
        if ((*lam2)[i] != lam[i] || poly_deg((*lam2)[i]) >= n - delta[i])
          c.fail("recovered coefficients break the degree bound at " + tag);
    }

    // reversal of a product under the degree hypotheses
    {
      size_t beta = 1 + rng() % 2, gamma = 1 + rng() % 2;
      long long nn = 3 + static_cast<long long>(rng() % 4);
      DegTuple dl(kappa), bound(kappa);
      PolyMat Pp(beta, kappa), Q(kappa, gamma);
      for (size_t j = 0; j < kappa; ++j) dl[j] = static_cast<long long>(rng() % nn);
      for (size_t i = 0; i < beta; ++i)
        for (size_t j = 0; j < kappa; ++j)
          Pp.at(i, j) = rand_poly(F, rng, static_cast<size_t>(dl[j]) + 1);
      for (size_t i = 0; i < kappa; ++i) {
        bound[i] = nn - dl[i] - 1;
        for (size_t j = 0; j < gamma; ++j)
          Q.at(i, j) = rand_poly(F, rng, static_cast<size_t>(bound[i]) + 1);
      }
      PolyMat PQ = pm_mul(F, Pp, Q);
      PolyMat lhs(PQ.rows, PQ.cols);
      for (size_t i = 0; i < PQ.rows; ++i)
        for (size_t j = 0; j < PQ.cols; ++j)
          lhs.at(i, j) = poly_reverse(static_cast<size_t>(nn - 1), PQ.at(i, j));
      if (pm_deg(PQ) >= nn || lhs != pm_mul(F, col_reverse(Pp, dl), row_reverse(Q, bound)))
        c.fail("product reversal identity at " + tag);
    }

    // inv_apply_mod multiply-back on both modulus shapes
    {
      size_t alpha = 1 + rng() % 3, dm = 2 + rng() % 5;
      Poly M = rand_modulus(F, rng, dm, it % 2 == 0 ? 0 : 1);
      PolyMat Pi;
      while (true) {
        Pi = PolyMat(alpha, alpha);
        for (auto& e : Pi.e) e = rand_poly(F, rng, 3);
        Poly det = pm_determinant(F, Pi);
        if (!poly_is_zero(det) && poly_gcd(F, det, M) == Poly{1}) break;
      }
      PolyMat V(alpha, 1);
      for (auto& e : V.e) e = rand_poly(F, rng, dm);
      PolyMat W = inv_apply_mod(F, Pi, V, M);
      PolyMat R = pm_rem(F, pm_sub(F, pm_mul(F, Pi, W), V), M);
      bool okw = pm_deg(W) < static_cast<long long>(dm);
      for (const auto& e : R.e) okw &= poly_is_zero(e);
      if (!okw) c.fail("inv_apply_mod multiply-back at " + tag);

      // shared factor must be rejected
      PolyMat Sing(2, 2);
      Sing.at(0, 0) = {0, 1};
      Sing.at(1, 1) = {1};
      bool threw = false;
      try {
        inv_apply_mod(F, Sing, PolyMat(2, 1), xpow(3));
      } catch (const NotInvertibleMod&) {
        threw = true;
      }
      if (!threw) c.fail("NotInvertibleMod not raised at " + tag);
    }
  }
  if (c.ok) c.detail = "100 rounds per lemma, all exact";
}

// ---- criterion 7: empirical scaling (soft) ---------------------------------

void run_scaling(Criterion& c) {
  FieldCtx F(65537);
  std::vector<size_t> sizes = {256, 512, 1024, 2048};
  std::vector<double> medians;
  for (size_t n : sizes) {
    RandomInstance ri = random_instance(F, Structure::toeplitz, n, n, 4, 9000 + n);
    auto v = make_consistent_rhs(F, ri.gen, 9000 + n);
    std::vector<double> runs;
    for (int r = 0; r < 3; ++r) {
      PhaseTimes pt;
      solve(F, ri.gen, v, &pt);
      runs.push_back(pt.total_ms());
    }
    std::sort(runs.begin(), runs.end());
    medians.push_back(runs[1]);
  }
  std::string ratios;
  for (size_t i = 1; i < medians.size(); ++i) {
    double r = medians[i] / medians[i - 1];
    char buf[32];
    std::snprintf(buf, sizeof buf, "%s%.2f", i > 1 ? ", " : "", r);
    ratios += buf;
    if (r > 3.0) c.ok = false;
  }
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "alpha=4, n=256..2048, median-of-3 totals %.0f/%.0f/%.0f/%.0f ms, ratios [%s]",
                medians[0], medians[1], medians[2], medians[3], ratios.c_str());
  c.detail = buf;
}

// ---- criterion 8: determinism ----------------------------------------------

void run_determinism(Criterion& c) {
  FieldCtx F(65537);
  for (Structure st : {Structure::toeplitz, Structure::vandermonde, Structure::cauchy}) {
    RandomInstance a = random_instance(F, st, 9, 13, 3, 4242, true);
    RandomInstance b = random_instance(F, st, 9, 13, 3, 4242, true);
    InstanceFile fa{65537, a.gen, a.rhs}, fb{65537, b.gen, b.rhs};
    if (instance_to_json(fa) != instance_to_json(fb))
      c.fail("instance files differ for identical seeds (" + structure_name(st) + ")");
    SolveOutput oa = solve(F, a.gen, a.rhs), ob = solve(F, b.gen, b.rhs);
    if (solution_to_json(solution_of(oa)) != solution_to_json(solution_of(ob)))
      c.fail("solution files differ for identical seeds (" + structure_name(st) + ")");
  }
  // Popov uniqueness: repeated vector_mpade runs are bit-identical
  std::mt19937_64 rng(65001);
  for (int it = 0; it < 50; ++it) {
    size_t d = 1 + rng() % 12, alpha = 1 + rng() % 4;
    Poly M = rand_modulus(F, rng, d, it % 3);
    PolyVec Frow(alpha);
    for (auto& f : Frow) f = rand_poly(F, rng, d);
    Shift s(alpha, 0);
    Poly v = rand_poly(F, rng, d);
    VmpadeOut x = vector_mpade(F, d, alpha, M, Frow, s, v);
    VmpadeOut y = vector_mpade(F, d, alpha, M, Frow, s, v);
    if (!(x.P == y.P && x.mu == y.mu && x.sol == y.sol))
      c.fail("vector_mpade output differs across reruns at it=" + std::to_string(it));
  }
  if (c.ok) c.detail = "instance/solution files bit-identical; approximations rerun-stable";
}

}  // namespace

int main() {
  Criterion c1{1}, c2{2}, c3{3}, c4{4}, c5{5}, c6{6}, c7{7, true}, c8{8};
  struct Budget {
    Criterion* c;
    void (*fn)(Criterion&);
    double limit_s;
  };

  {
    double t0 = now_s();
    run_solver_sweep(c1, c2);
    c1.seconds = c2.seconds = now_s() - t0;
    if (c1.seconds > 60.0) c1.fail("runtime budget of 60 s exceeded");
  }
  std::vector<Budget> rest = {
      {&c3, run_vmpade_contract, 60.0}, {&c4, run_smpade_contract, 90.0},
      {&c5, run_correspondence, 30.0},  {&c6, run_lemmas, 30.0},
      {&c7, run_scaling, 600.0},        {&c8, run_determinism, 600.0},
  };
  for (auto& b : rest) {
    double t0 = now_s();
    b.fn(*b.c);
    b.c->seconds = now_s() - t0;
    if (b.c->seconds > b.limit_s && !b.c->soft) b.c->fail("runtime budget exceeded");
  }

  int hard_failures = 0;
  for (Criterion* c : {&c1, &c2, &c3, &c4, &c5, &c6, &c7, &c8}) {
    const char* status = c->ok ? "PASS" : (c->soft ? "FLAGGED" : "FAIL");
    if (!c->ok && !c->soft) ++hard_failures;
    std::printf("CRITERION %d: %s — %s (%.1f s)\n", c->id, status, c->detail.c_str(), c->seconds);
  }
  return hard_failures;
}

#include "stsolve/solver.hpp"

#include <algorithm>
#include <chrono>

namespace stsolve {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::vector<uint64_t> col_of(const FieldMat& M, size_t j) {
  std::vector<uint64_t> c(M.rows);
  for (size_t i = 0; i < M.rows; ++i) c[i] = M.at(i, j);
  return c;
}

Poly x_power(size_t k) {
  Poly m(k + 1, 0);
  m[k] = 1;
  return m;
}

long long vec_deg(const PolyVec& v) {
  long long d = kNegInf;
  for (const auto& p : v) d = std::max(d, poly_deg(p));
  return d;
}

}  // namespace

SolveOutput solve(const FieldCtx& F, const Generators& g,
                  const std::optional<std::vector<uint64_t>>& v_in, PhaseTimes* times) {
  g.validate(F);
  size_t m = g.m, n = g.n, alpha = g.alpha;
  std::vector<uint64_t> vvec = v_in.value_or(std::vector<uint64_t>(m, 0));
  if (vvec.size() != m) throw DimensionMismatch("solve: rhs length");
  bool cauchy = g.structure == Structure::cauchy;

  // phase 1: polynomial formulation + vector M-Pade approximation
  auto t0 = Clock::now();
  Poly Mx, Mphase3, iy, dmuy;
  Poly vpoly;
  PolyVec Frow(alpha);   // arguments of the vector approximation
  PolyVec hpoly(alpha);  // right block for phase 2
  if (g.structure == Structure::toeplitz) {
    Mx = x_power(m);
    Mphase3 = x_power(n);
    vpoly = poly_from_coeffs(F, vvec);
    for (size_t j = 0; j < alpha; ++j) {
      Frow[j] = poly_from_coeffs(F, col_of(g.G, j));
      hpoly[j] = poly_from_coeffs(F, col_of(g.H, j));
    }
  } else if (g.structure == Structure::vandermonde) {
    Mx = master_poly(F, g.x);
    Mphase3 = x_power(n);
    vpoly = interpolate(F, g.x, vvec);
    for (size_t j = 0; j < alpha; ++j) {
      Frow[j] = interpolate(F, g.x, col_of(g.G, j));
      hpoly[j] = poly_from_coeffs(F, col_of(g.H, j));
    }
  } else {
    Mx = master_poly(F, g.x);
    Mphase3 = master_poly(F, g.y);
    iy = poly_modinv(F, Mphase3, Mx);
    dmuy = poly_derivative(F, Mphase3);
    vpoly = interpolate(F, g.x, vvec);
    for (size_t j = 0; j < alpha; ++j) {
      Poly gbar = interpolate(F, g.x, col_of(g.G, j));
      Frow[j] = poly_rem(F, poly_mul(F, iy, gbar), Mx);
      Poly hbar = interpolate(F, g.y, col_of(g.H, j));
      hpoly[j] = poly_rem(F, poly_mul(F, dmuy, hbar), Mphase3);
    }
  }
  VmpadeOut vp = vector_mpade(F, m, alpha, Mx, Frow, Shift(alpha, 0), vpoly);
  DegTuple delta(alpha);
  for (size_t j = 0; j < alpha; ++j) delta[j] = poly_deg(vp.P.at(j, j));
  if (times) times->phase1_ms = ms_since(t0);

  // phase 2: transform into a simultaneous instance
  t0 = Clock::now();
  PolyVec w(alpha);
  PolyVec Fcol(alpha);
  if (!cauchy) {
    PolyMat Pbar = col_reverse(vp.P, delta);
    long long e = std::min<long long>(*std::max_element(delta.begin(), delta.end()),
                                      static_cast<long long>(n));
    bool sol_fits = e >= 1 && vec_deg(vp.sol) <= e - 1;
    if (sol_fits) {
      PolyMat rs(alpha, 1);
      for (size_t i = 0; i < alpha; ++i)
        rs.at(i, 0) = poly_reverse(static_cast<size_t>(e - 1), vp.sol[i]);
      PolyMat W1 = inv_apply_mod(F, Pbar, rs, x_power(static_cast<size_t>(e)));
      for (size_t i = 0; i < alpha; ++i)
        w[i] = poly_shift(W1.at(i, 0), n - static_cast<size_t>(e));
    }
    // otherwise deg(sol) >= n forces the "no solution" branch below and the
    // homogeneous output does not depend on w, so w = 0 is safe
    PolyMat hb(alpha, 1);
    for (size_t i = 0; i < alpha; ++i) hb.at(i, 0) = poly_trunc(hpoly[i], n);
    PolyMat Fm = inv_apply_mod(F, Pbar, hb, Mphase3);
    for (size_t i = 0; i < alpha; ++i) Fcol[i] = Fm.at(i, 0);
  } else {
    PolyMat rs(alpha, 1), hb(alpha, 1);
    for (size_t i = 0; i < alpha; ++i) {
      rs.at(i, 0) = poly_rem(F, vp.sol[i], Mphase3);
      hb.at(i, 0) = hpoly[i];
    }
    PolyMat W1 = inv_apply_mod(F, vp.P, rs, Mphase3);
    PolyMat Fm = inv_apply_mod(F, vp.P, hb, Mphase3);
    for (size_t i = 0; i < alpha; ++i) {
      w[i] = W1.at(i, 0);
      Fcol[i] = Fm.at(i, 0);
    }
  }
  if (times) times->phase2_ms = ms_since(t0);

  // phase 3: simultaneous M-Pade approximation and read-off
  t0 = Clock::now();
  Shift s(alpha);
  for (size_t i = 0; i < alpha; ++i)
    s[i] = std::max<long long>(0, static_cast<long long>(n) - delta[i]);
  SmpadeOut sm = simultaneous_mpade(F, n, alpha, Mphase3, Fcol, s, w);

  SolveOutput out;
  bool no_solution = vp.mu != Poly{1} || vec_deg(vp.sol) >= static_cast<long long>(n) ||
                     !sm.csol.has_value();
  if (!no_solution) {
    const Poly& c = *sm.csol;
    std::vector<uint64_t> u(n, 0);
    if (cauchy) {
      u = eval_multi(F, c, g.y);
    } else {
      for (size_t i = 1; i <= n; ++i)
        u[i - 1] = poly_coeff(c, static_cast<long long>(n - i));
    }
    out.u = std::move(u);
  }
  out.ell = sm.basis.ell;
  out.t = sm.basis.t;
  out.p.resize(out.ell);
  out.d.resize(out.ell);
  for (size_t i = 0; i < out.ell; ++i) {
    long long di = poly_deg(sm.basis.p[i]);
    out.d[i] = di;
    out.p[i] = cauchy ? sm.basis.p[i] : poly_reverse(static_cast<size_t>(di), sm.basis.p[i]);
  }
  if (times) times->phase3_ms = ms_since(t0);
  return out;
}

std::vector<std::vector<uint64_t>> expand_nullspace(const FieldCtx& F, const SolveOutput& out,
                                                    const Generators& g) {
  size_t n = g.n;
  std::vector<std::vector<uint64_t>> vecs;
  for (size_t i = 0; i < out.ell; ++i) {
    long long shift0 = static_cast<long long>(n) - out.d[i] - out.t[i];
    if (out.t[i] < 1 || poly_deg(out.p[i]) > out.d[i] ||
        (g.structure != Structure::cauchy && shift0 < 0))
      throw DegreeTooLarge("expand_nullspace: inconsistent degree data");
    for (long long j = 0; j < out.t[i]; ++j) {
      Poly q;
      if (g.structure == Structure::cauchy)
        q = poly_shift(out.p[i], static_cast<size_t>(j));
      else
        q = poly_shift(out.p[i], static_cast<size_t>(shift0 + j));
      std::vector<uint64_t> z(n, 0);
      if (g.structure == Structure::cauchy) {
        z = eval_multi(F, q, g.y);
      } else {
        for (size_t k = 0; k < n && k < q.size(); ++k) z[k] = q[k];
      }
      vecs.push_back(std::move(z));
    }
  }
  return vecs;
}

VerifyReport verify(const FieldCtx& F, const Generators& g,
                    const std::optional<std::vector<uint64_t>>& v, const SolveOutput& out) {
  VerifyReport rep;
  size_t n = g.n;
  std::vector<uint64_t> vvec = v.value_or(std::vector<uint64_t>(g.m, 0));
  if (out.p.size() != out.ell || out.d.size() != out.ell || out.t.size() != out.ell) {
    rep.fail("shape: ell does not match p/d/t lengths");
    return rep;
  }
  for (size_t i = 0; i < out.ell; ++i) {
    if (!(poly_deg(out.p[i]) <= out.d[i] && out.d[i] <= static_cast<long long>(n) - out.t[i] &&
          out.t[i] >= 1 && static_cast<long long>(n) - out.t[i] < static_cast<long long>(n)))
      rep.fail("degree ledger violated at index " + std::to_string(i));
    if (out.d[i] + out.t[i] > static_cast<long long>(n))
      rep.fail("max(d + t) <= n violated at index " + std::to_string(i));
  }
  if (out.u) {
    if (out.u->size() != n) {
      rep.fail("u has wrong length");
    } else if (apply(F, g, *out.u) != vvec) {
      rep.fail("residual: apply(g, u) != v");
    }
  }
  if (!rep.ok) return rep;  // degree data unusable: do not try to expand
  auto null_vecs = expand_nullspace(F, out, g);
  std::vector<uint64_t> zero(g.m, 0);
  for (size_t i = 0; i < null_vecs.size(); ++i)
    if (apply(F, g, null_vecs[i]) != zero)
      rep.fail("nullspace vector " + std::to_string(i) + " not annihilated");
  return rep;
}

}  // namespace stsolve

#include "stsolve/structured.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace stsolve {

namespace {

std::vector<uint64_t> col_of(const FieldMat& M, size_t j) {
  std::vector<uint64_t> c(M.rows);
  for (size_t i = 0; i < M.rows; ++i) c[i] = M.at(i, j);
  return c;
}

Poly poly_of(const FieldCtx& F, const std::vector<uint64_t>& c) { return poly_from_coeffs(F, c); }

void check_distinct(const PointList& pts, const char* what) {
  std::set<uint64_t> seen(pts.begin(), pts.end());
  if (seen.size() != pts.size()) throw InvalidPoints(what);
}

}  // namespace

std::string structure_name(Structure s) {
  switch (s) {
    case Structure::toeplitz: return "toeplitz";
    case Structure::vandermonde: return "vandermonde";
    case Structure::cauchy: return "cauchy";
  }
  return "?";
}

std::optional<Structure> structure_from_name(const std::string& name) {
  if (name == "toeplitz") return Structure::toeplitz;
  if (name == "vandermonde") return Structure::vandermonde;
  if (name == "cauchy") return Structure::cauchy;
  return std::nullopt;
}

void Generators::validate(const FieldCtx& F) const {
  if (alpha < 1 || alpha > std::min(m, n)) throw DimensionMismatch("generators: bad alpha");
  if (G.rows != m || G.cols != alpha || H.rows != n || H.cols != alpha)
    throw DimensionMismatch("generators: G/H shape");
  if (structure != Structure::toeplitz) {
    if (x.size() != m) throw InvalidPoints("generators: |x| != m");
    for (uint64_t v : x)
      if (v >= F.p()) throw InvalidPoints("generators: x not reduced");
    check_distinct(x, "generators: repeated x point");
  }
  if (structure == Structure::cauchy) {
    if (y.size() != n) throw InvalidPoints("generators: |y| != n");
    for (uint64_t v : y)
      if (v >= F.p()) throw InvalidPoints("generators: y not reduced");
    check_distinct(y, "generators: repeated y point");
    std::set<uint64_t> xs(x.begin(), x.end());
    for (uint64_t v : y)
      if (xs.count(v)) throw InvalidPoints("generators: x and y not disjoint");
  }
}

FieldMat dense_lower_toeplitz(const FieldCtx& F, const std::vector<uint64_t>& g, size_t m,
                              size_t ell) {
  FieldMat L(m, ell);
  for (size_t i = 0; i < m; ++i)
    for (size_t k = 0; k <= i && k < ell; ++k)
      if (i - k < g.size()) L.at(i, k) = F.reduce(g[i - k]);
  return L;
}

FieldMat dense_upper_toeplitz(const FieldCtx& F, const std::vector<uint64_t>& h, size_t ell,
                              size_t n) {
  FieldMat U(ell, n);
  for (size_t k = 0; k < ell; ++k)
    for (size_t i = k; i < n; ++i)
      if (i - k < h.size()) U.at(k, i) = F.reduce(h[i - k]);
  return U;
}

FieldMat dense_vandermonde(const FieldCtx& F, const PointList& x, size_t n) {
  FieldMat V(x.size(), n);
  for (size_t i = 0; i < x.size(); ++i) {
    uint64_t acc = 1;
    for (size_t k = 0; k < n; ++k) {
      V.at(i, k) = acc;
      acc = F.mul(acc, F.reduce(x[i]));
    }
  }
  return V;
}

FieldMat dense_cauchy(const FieldCtx& F, const PointList& x, const PointList& y) {
  FieldMat C(x.size(), y.size());
  for (size_t i = 0; i < x.size(); ++i)
    for (size_t j = 0; j < y.size(); ++j)
      C.at(i, j) = F.inv(F.sub(F.reduce(x[i]), F.reduce(y[j])));
  return C;
}

FieldMat to_dense(const FieldCtx& F, const Generators& g) {
  g.validate(F);
  size_t m = g.m, n = g.n;
  FieldMat A(m, n);
  if (g.structure == Structure::toeplitz) {
    size_t ell = std::min(m, n);
    for (size_t j = 0; j < g.alpha; ++j) {
      FieldMat L = dense_lower_toeplitz(F, col_of(g.G, j), m, ell);
      FieldMat U = dense_upper_toeplitz(F, col_of(g.H, j), ell, n);
      A = mat_add(F, A, mat_mul(F, L, U));
    }
  } else if (g.structure == Structure::vandermonde) {
    FieldMat V = dense_vandermonde(F, g.x, n);
    for (size_t j = 0; j < g.alpha; ++j) {
      FieldMat VU = mat_mul(F, V, dense_upper_toeplitz(F, col_of(g.H, j), n, n));
      for (size_t i = 0; i < m; ++i)
        for (size_t k = 0; k < n; ++k)
          A.at(i, k) = F.add(A.at(i, k), F.mul(g.G.at(i, j), VU.at(i, k)));
    }
  } else {
    FieldMat C = dense_cauchy(F, g.x, g.y);
    for (size_t j = 0; j < g.alpha; ++j)
      for (size_t i = 0; i < m; ++i)
        for (size_t k = 0; k < n; ++k)
          A.at(i, k) =
              F.add(A.at(i, k), F.mul(F.mul(g.G.at(i, j), g.H.at(k, j)), C.at(i, k)));
  }
  return A;
}

std::vector<uint64_t> apply(const FieldCtx& F, const Generators& g,
                            const std::vector<uint64_t>& u) {
  g.validate(F);
  if (u.size() != g.n) throw DimensionMismatch("apply");
  size_t m = g.m, n = g.n;
  Poly up = poly_of(F, u);
  if (g.structure == Structure::toeplitz) {
    size_t ell = std::min(m, n);
    Poly acc;
    for (size_t j = 0; j < g.alpha; ++j) {
      Poly mid = middle_product(F, col_of(g.H, j), up, ell);
      acc = poly_add(F, acc, truncated_product(F, poly_of(F, col_of(g.G, j)), mid, m));
    }
    std::vector<uint64_t> r(m, 0);
    for (size_t i = 0; i < m && i < acc.size(); ++i) r[i] = acc[i];
    return r;
  }
  if (g.structure == Structure::vandermonde) {
    Poly mux = master_poly(F, g.x);
    Poly acc;
    for (size_t j = 0; j < g.alpha; ++j) {
      Poly mid = middle_product(F, col_of(g.H, j), up, n);
      Poly gj = interpolate(F, g.x, col_of(g.G, j));
      acc = poly_add(F, acc, poly_rem(F, poly_mul(F, gj, mid), mux));
    }
    return eval_multi(F, acc, g.x);
  }
  // cauchy
  Poly mux = master_poly(F, g.x);
  Poly muy = master_poly(F, g.y);
  Poly iy = poly_modinv(F, muy, mux);
  Poly dmuy = poly_derivative(F, muy);
  Poly ubar = interpolate(F, g.y, u);
  std::vector<uint64_t> r(m, 0);
  for (size_t j = 0; j < g.alpha; ++j) {
    Poly hbar = interpolate(F, g.y, col_of(g.H, j));
    Poly q = poly_rem(F, poly_mul(F, dmuy, poly_rem(F, poly_mul(F, hbar, ubar), muy)), muy);
    Poly rj = poly_rem(F, poly_mul(F, iy, q), mux);
    std::vector<uint64_t> ev = eval_multi(F, rj, g.x);
    for (size_t i = 0; i < m; ++i) r[i] = F.add(r[i], F.mul(g.G.at(i, j), ev[i]));
  }
  return r;
}

FieldMat displacement_of_dense(const FieldCtx& F, Structure s, const PointList& x,
                               const PointList& y, const FieldMat& A) {
  size_t m = A.rows, n = A.cols;
  FieldMat D(m, n);
  if (s == Structure::toeplitz) {
    for (size_t i = 0; i < m; ++i)
      for (size_t j = 0; j < n; ++j) {
        uint64_t shifted = (i >= 1 && j >= 1) ? A.at(i - 1, j - 1) : 0;
        D.at(i, j) = F.sub(A.at(i, j), shifted);
      }
    return D;
  }
  if (s == Structure::vandermonde) {
    if (x.size() != m) throw DimensionMismatch("displacement_of_dense: |x| != m");
    for (size_t i = 0; i < m; ++i)
      for (size_t j = 0; j < n; ++j) {
        uint64_t shifted = (j >= 1) ? F.mul(F.reduce(x[i]), A.at(i, j - 1)) : 0;
        D.at(i, j) = F.sub(A.at(i, j), shifted);
      }
    return D;
  }
  if (x.size() != m || y.size() != n) throw DimensionMismatch("displacement_of_dense: points");
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < n; ++j)
      D.at(i, j) = F.mul(F.sub(F.reduce(x[i]), F.reduce(y[j])), A.at(i, j));
  return D;
}

RandomInstance random_instance(const FieldCtx& F, Structure s, size_t m, size_t n, size_t alpha,
                               uint64_t seed, bool wide_nullspace) {
  if (alpha < 1 || alpha > std::min(m, n)) throw DimensionMismatch("random_instance: bad alpha");
  if (wide_nullspace && n <= m)
    throw DimensionMismatch("random_instance: wide_nullspace requires n > m");
  if (s != Structure::toeplitz && F.p() <= m + n)
    throw FieldTooSmall("random_instance: need p > m + n for point-based structures");
  std::mt19937_64 rng(seed);
  auto draw = [&]() { return rng() % F.p(); };
  RandomInstance out;
  Generators& g = out.gen;
  g.structure = s;
  g.m = m;
  g.n = n;
  g.alpha = alpha;
  g.G = FieldMat(m, alpha);
  for (auto& v : g.G.a) v = draw();
  g.H = FieldMat(n, alpha);
  for (auto& v : g.H.a) v = draw();
  if (s != Structure::toeplitz) {
    std::set<uint64_t> used;
    auto draw_point = [&]() {
      for (;;) {
        uint64_t v = draw();
        if (used.insert(v).second) return v;
      }
    };
    g.x.resize(m);
    for (auto& v : g.x) v = draw_point();
    if (s == Structure::cauchy) {
      g.y.resize(n);
      for (auto& v : g.y) v = draw_point();
    }
  }
  out.rhs.resize(m);
  for (auto& v : out.rhs) v = draw();
  g.validate(F);
  return out;
}

std::vector<uint64_t> make_consistent_rhs(const FieldCtx& F, const Generators& g, uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  std::vector<uint64_t> u(g.n);
  for (auto& v : u) v = rng() % F.p();
  return apply(F, g, u);
}

}  // namespace stsolve

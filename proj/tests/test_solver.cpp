#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "stsolve/oracle.hpp"
#include "stsolve/solver.hpp"

using namespace stsolve;

namespace {

FieldMat fm(size_t r, size_t c, std::vector<uint64_t> a) {
  FieldMat M(r, c);
  M.a = std::move(a);
  return M;
}

Generators toeplitz_gen(size_t m, size_t n, FieldMat G, FieldMat H) {
  Generators g;
  g.structure = Structure::toeplitz;
  g.m = m;
  g.n = n;
  g.alpha = G.cols;
  g.G = std::move(G);
  g.H = std::move(H);
  return g;
}

// Full cross-check of one instance against the dense oracle.
void check_against_oracle(const FieldCtx& F, const Generators& g,
                          const std::optional<std::vector<uint64_t>>& v) {
  SolveOutput out = solve(F, g, v);
  FieldMat A = to_dense(F, g);
  std::vector<uint64_t> rhs = v.value_or(std::vector<uint64_t>(g.m, 0));
  auto rs = dense_rank_solve(F, A, rhs);

  CHECK(out.u.has_value() == rs.solution.has_value());
  if (out.u) CHECK(apply(F, g, *out.u) == rhs);

  long long sumt = 0;
  for (size_t i = 0; i < out.ell; ++i) {
    CHECK(poly_deg(out.p[i]) <= out.d[i]);
    CHECK(out.d[i] <= static_cast<long long>(g.n) - out.t[i]);
    CHECK(out.t[i] >= 1);
    CHECK(out.d[i] + out.t[i] <= static_cast<long long>(g.n));
    sumt += out.t[i];
  }
  CHECK(sumt == static_cast<long long>(g.n - rs.rank));

  auto vecs = expand_nullspace(F, out, g);
  CHECK(vecs.size() == static_cast<size_t>(sumt));
  for (const auto& z : vecs) CHECK(apply(F, g, z) == std::vector<uint64_t>(g.m, 0));
  if (!vecs.empty()) {
    FieldMat Z(vecs.size(), g.n);
    for (size_t i = 0; i < vecs.size(); ++i)
      for (size_t j = 0; j < g.n; ++j) Z.at(i, j) = vecs[i][j];
    CHECK(dense_rank_solve(F, Z, {}).rank == vecs.size());
  }

  CHECK(verify(F, g, v, out).ok);
}

}  // namespace

TEST_CASE("identity instance") {
  FieldCtx F(7);
  auto g = toeplitz_gen(2, 2, fm(2, 1, {1, 0}), fm(2, 1, {1, 0}));
  SolveOutput out = solve(F, g, std::vector<uint64_t>{3, 5});
  REQUIRE(out.u.has_value());
  CHECK(*out.u == std::vector<uint64_t>{3, 5});
  CHECK(out.ell == 0);
  CHECK(verify(F, g, std::vector<uint64_t>{3, 5}, out).ok);
}

TEST_CASE("down-shift instance") {
  FieldCtx F(7);
  auto g = toeplitz_gen(2, 2, fm(2, 1, {0, 1}), fm(2, 1, {1, 0}));  // A = Z_2
  SolveOutput out = solve(F, g, std::vector<uint64_t>{0, 1});
  REQUIRE(out.u.has_value());
  CHECK((*out.u)[0] == 1);
  long long sumt = 0;
  for (auto t : out.t) sumt += t;
  CHECK(sumt == 1);
  auto vecs = expand_nullspace(F, out, g);
  REQUIRE(vecs.size() == 1);
  CHECK(vecs[0][0] == 0);
  CHECK(vecs[0][1] != 0);
}

TEST_CASE("wide single-row instance") {
  FieldCtx F(7);
  auto g = toeplitz_gen(1, 2, fm(1, 1, {1}), fm(2, 1, {1, 1}));  // A = [1 1]
  SolveOutput out = solve(F, g, std::nullopt);
  long long sumt = 0;
  for (auto t : out.t) sumt += t;
  CHECK(sumt == 1);
  auto vecs = expand_nullspace(F, out, g);
  REQUIRE(vecs.size() == 1);
  // proportional to (1, 6)
  CHECK(F.mul(vecs[0][0], 6) == vecs[0][1]);
  CHECK(vecs[0][0] != 0);
}

TEST_CASE("zero matrix edge cases") {
  FieldCtx F(65537);
  auto g = toeplitz_gen(3, 3, FieldMat(3, 1), fm(3, 1, {1, 2, 3}));  // G = 0 so A = 0
  check_against_oracle(F, g, std::nullopt);
  check_against_oracle(F, g, std::vector<uint64_t>{1, 0, 0});  // inconsistent
  check_against_oracle(F, g, std::vector<uint64_t>{0, 0, 0});
}

TEST_CASE("oracle agreement on random instances, all structures and shapes") {
  FieldCtx F(65537);
  std::mt19937_64 rng(201);
  for (Structure st : {Structure::toeplitz, Structure::vandermonde, Structure::cauchy}) {
    for (int it = 0; it < 25; ++it) {
      size_t m = 1 + rng() % 20, n = 1 + rng() % 20;
      bool wide = (it % 3 == 0);
      if (wide && n <= m) n = m + 1 + rng() % 4;
      size_t alpha = 1 + rng() % std::min<size_t>(4, std::min(m, n));
      RandomInstance ri = random_instance(F, st, m, n, alpha, 7000 + it, wide);
      std::optional<std::vector<uint64_t>> v;
      switch (it % 4) {
        case 0: v = std::nullopt; break;
        case 1: v = ri.rhs; break;
        case 2: v = make_consistent_rhs(F, ri.gen, 9000 + it); break;
        case 3: v = std::vector<uint64_t>(m, 0); break;
      }
      CAPTURE(static_cast<int>(st));
      CAPTURE(m);
      CAPTURE(n);
      CAPTURE(alpha);
      check_against_oracle(F, ri.gen, v);
    }
  }
}

TEST_CASE("homogeneous call matches zero right-hand side") {
  FieldCtx F(65537);
  for (Structure st : {Structure::toeplitz, Structure::vandermonde, Structure::cauchy}) {
    RandomInstance ri = random_instance(F, st, 5, 9, 2, 31, true);
    SolveOutput a = solve(F, ri.gen, std::nullopt);
    SolveOutput b = solve(F, ri.gen, std::vector<uint64_t>(5, 0));
    CHECK(a.ell == b.ell);
    CHECK(a.p == b.p);
    CHECK(a.d == b.d);
    CHECK(a.t == b.t);
  }
}

TEST_CASE("determinism of repeated solves") {
  FieldCtx F(65537);
  RandomInstance ri = random_instance(F, Structure::cauchy, 8, 8, 3, 55);
  SolveOutput a = solve(F, ri.gen, ri.rhs);
  SolveOutput b = solve(F, ri.gen, ri.rhs);
  CHECK(a.ell == b.ell);
  CHECK(a.p == b.p);
  CHECK(a.d == b.d);
  CHECK(a.t == b.t);
  CHECK(a.u == b.u);
}

TEST_CASE("affine solution set matches the oracle span") {
  // every u0 + combination of expanded nullspace vectors solves, and the
  // solution-set dimension equals the oracle nullity
  FieldCtx F(65537);
  std::mt19937_64 rng(301);
  for (Structure st : {Structure::toeplitz, Structure::vandermonde, Structure::cauchy}) {
    RandomInstance ri = random_instance(F, st, 4, 7, 2, 77, true);
    auto v = make_consistent_rhs(F, ri.gen, 78);
    SolveOutput out = solve(F, ri.gen, v);
    REQUIRE(out.u.has_value());
    auto vecs = expand_nullspace(F, out, ri.gen);
    for (int rep = 0; rep < 5; ++rep) {
      std::vector<uint64_t> u = *out.u;
      for (const auto& z : vecs) {
        uint64_t c = rng() % F.p();
        for (size_t j = 0; j < u.size(); ++j) u[j] = F.add(u[j], F.mul(c, z[j]));
      }
      CHECK(apply(F, ri.gen, u) == v);
    }
  }
}

TEST_CASE("verification flags tampered outputs") {
  FieldCtx F(65537);
  RandomInstance ri = random_instance(F, Structure::toeplitz, 4, 7, 2, 99, true);
  auto v = make_consistent_rhs(F, ri.gen, 99);
  SolveOutput out = solve(F, ri.gen, v);
  REQUIRE(out.u.has_value());
  CHECK(verify(F, ri.gen, v, out).ok);

  SolveOutput bad_u = out;
  (*bad_u.u)[0] = F.add((*bad_u.u)[0], 1);
  CHECK_FALSE(verify(F, ri.gen, v, bad_u).ok);

  if (out.ell > 0) {
    SolveOutput bad_t = out;
    bad_t.t[0] = static_cast<long long>(ri.gen.n) + 1;
    CHECK_FALSE(verify(F, ri.gen, v, bad_t).ok);

    SolveOutput bad_p = out;
    bad_p.p[0] = poly_add(F, bad_p.p[0], Poly{1});
    CHECK_FALSE(verify(F, ri.gen, v, bad_p).ok);
  }
}

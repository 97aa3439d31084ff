#ifndef STSOLVE_SOLVER_HPP
#define STSOLVE_SOLVER_HPP

// Deterministic structured solvers: given a displacement generator for A and
// an optional right-hand side v, compute a solution of A u = v (or report
// that none exists) together with a complete compressed description of the
// nullspace of A.
//
// Pipeline, per structure: (1) translate the instance into a vector M-Pade
// approximation and solve it; (2) transform the result into a simultaneous
// M-Pade instance via reversal (Toeplitz/Vandermonde) and modular matrix
// inversion; (3) solve that instance; read off u and the nullspace
// description (ell, p, d, t): the nullspace is spanned by the coefficient
// vectors (or evaluation vectors at y, for Cauchy) of x^{n-d_i-t_i} p_i x^j,
// 0 <= j < t_i.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stsolve/mpade.hpp"
#include "stsolve/structured.hpp"

namespace stsolve {

struct SolveOutput {
  size_t ell = 0;
  PolyVec p;
  std::vector<long long> d;
  std::vector<long long> t;
  std::optional<std::vector<uint64_t>> u;  // nullopt: system inconsistent
};

struct PhaseTimes {
  double phase1_ms = 0, phase2_ms = 0, phase3_ms = 0;
  double total_ms() const { return phase1_ms + phase2_ms + phase3_ms; }
};

SolveOutput solve(const FieldCtx& F, const Generators& g,
                  const std::optional<std::vector<uint64_t>>& v, PhaseTimes* times = nullptr);

// The sum(t_i) spanning vectors of the nullspace of A.
std::vector<std::vector<uint64_t>> expand_nullspace(const FieldCtx& F, const SolveOutput& out,
                                                    const Generators& g);

struct VerifyReport {
  bool ok = true;
  std::vector<std::string> failures;
  void fail(std::string msg) {
    ok = false;
    failures.push_back(std::move(msg));
  }
};

// Self-contained checks: residual of u, nullspace vectors annihilated by A,
// degree ledger. (Oracle cross-checks live in the test-suites and CLI.)
VerifyReport verify(const FieldCtx& F, const Generators& g,
                    const std::optional<std::vector<uint64_t>>& v, const SolveOutput& out);

}  // namespace stsolve

#endif

// Command-line front end: instance generation, solving, verification and
// scaling benchmarks over the structured-solver library.

#include <CLI11.hpp>
#include <algorithm>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "stsolve/io.hpp"
#include "stsolve/oracle.hpp"
#include "stsolve/solver.hpp"

using namespace stsolve;

namespace {

int cmd_gen(const std::string& structure, size_t m, size_t n, size_t alpha, uint64_t prime,
            uint64_t seed, bool wide, const std::string& rhs_mode, const std::string& out_path) {
  auto st = structure_from_name(structure);
  if (!st) {
    std::cerr << "error: unknown structure '" << structure << "'\n";
    return 1;
  }
  FieldCtx F(prime);
  RandomInstance ri = random_instance(F, *st, m, n, alpha, seed, wide);
  InstanceFile inst;
  inst.prime = prime;
  inst.gen = ri.gen;
  if (rhs_mode == "random")
    inst.v = ri.rhs;
  else if (rhs_mode == "zero")
    inst.v = std::vector<uint64_t>(m, 0);
  else if (rhs_mode == "consistent")
    inst.v = make_consistent_rhs(F, ri.gen, seed);
  else if (rhs_mode != "none") {
    std::cerr << "error: unknown rhs mode '" << rhs_mode << "'\n";
    return 1;
  }
  write_file(out_path, instance_to_json(inst));
  return 0;
}

int cmd_solve(const std::string& inst_path, const std::string& out_path) {
  InstanceFile inst;
  try {
    inst = instance_from_json(read_file(inst_path));
  } catch (const std::exception& e) {
    std::cerr << "error: malformed instance: " << e.what() << "\n";
    return 2;
  }
  FieldCtx F(inst.prime);
  SolveOutput out = solve(F, inst.gen, inst.v);
  write_file(out_path, solution_to_json(solution_of(out)));
  return out.u ? 0 : 3;
}

int cmd_verify(const std::string& inst_path, const std::string& sol_path) {
  InstanceFile inst;
  SolutionFile sol;
  try {
    inst = instance_from_json(read_file(inst_path));
    sol = solution_from_json(read_file(sol_path));
  } catch (const std::exception& e) {
    std::cerr << "error: malformed file: " << e.what() << "\n";
    return 1;
  }
  FieldCtx F(inst.prime);
  SolveOutput out = solve_output_of(sol);
  VerifyReport rep = verify(F, inst.gen, inst.v, out);
  if (rep.ok && inst.gen.m <= 64 && inst.gen.n <= 64) {
    FieldMat A = to_dense(F, inst.gen);
    std::vector<uint64_t> v = inst.v.value_or(std::vector<uint64_t>(inst.gen.m, 0));
    RankSolveResult rs = dense_rank_solve(F, A, v);
    long long nullity = static_cast<long long>(inst.gen.n - rs.rank);
    if (sol.nullity != nullity)
      rep.fail("nullity mismatch: file says " + std::to_string(sol.nullity) + ", dense rank gives " +
               std::to_string(nullity));
    bool solvable = rs.solution.has_value();
    if (solvable != (sol.status == "solved"))
      rep.fail("solvability mismatch against dense elimination");
    auto vecs = expand_nullspace(F, out, inst.gen);
    if (!vecs.empty()) {
      FieldMat Z(vecs.size(), inst.gen.n);
      for (size_t i = 0; i < vecs.size(); ++i)
        for (size_t j = 0; j < inst.gen.n; ++j) Z.at(i, j) = vecs[i][j];
      if (static_cast<long long>(dense_rank_solve(F, Z, {}).rank) !=
          static_cast<long long>(vecs.size()))
        rep.fail("expanded nullspace vectors are not independent");
    }
  }
  if (rep.ok) {
    std::cout << "verify: all checks passed\n";
    return 0;
  }
  for (const auto& f : rep.failures) std::cout << "verify: FAILED: " << f << "\n";
  return 1;
}

int cmd_bench(const std::string& structure, size_t alpha, const std::string& sizes_csv,
              size_t reps, uint64_t prime, uint64_t seed) {
  auto st = structure_from_name(structure);
  if (!st) {
    std::cerr << "error: unknown structure '" << structure << "'\n";
    return 1;
  }
  FieldCtx F(prime);
  std::vector<size_t> sizes;
  {
    std::string tok;
    for (char c : sizes_csv + ",") {
      if (c == ',') {
        if (!tok.empty()) sizes.push_back(std::stoull(tok));
        tok.clear();
      } else {
        tok += c;
      }
    }
  }
  std::cout << "structure,m,n,alpha,phase1_ms,phase2_ms,phase3_ms,total_ms\n";
  for (size_t n : sizes) {
    std::vector<PhaseTimes> runs;
    RandomInstance ri = random_instance(F, *st, n, n, alpha, seed + n);
    std::vector<uint64_t> v = make_consistent_rhs(F, ri.gen, seed + n);
    for (size_t r = 0; r < reps; ++r) {
      PhaseTimes pt;
      solve(F, ri.gen, v, &pt);
      runs.push_back(pt);
    }
    auto median = [&](auto sel) {
      std::vector<double> xs;
      for (const auto& pt : runs) xs.push_back(sel(pt));
      std::sort(xs.begin(), xs.end());
      return xs[xs.size() / 2];
    };
    std::printf("%s,%zu,%zu,%zu,%.3f,%.3f,%.3f,%.3f\n", structure.c_str(), n, n, alpha,
                median([](const PhaseTimes& t) { return t.phase1_ms; }),
                median([](const PhaseTimes& t) { return t.phase2_ms; }),
                median([](const PhaseTimes& t) { return t.phase3_ms; }),
                median([](const PhaseTimes& t) { return t.total_ms(); }));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact structured linear solver over prime fields"};
  app.require_subcommand(1);

  std::string structure = "toeplitz", rhs_mode = "random", out_path, inst_path, sol_path,
              sizes_csv = "256,512";
  size_t m = 8, n = 8, alpha = 2, reps = 3;
  uint64_t prime = 65537, seed = 1;
  bool wide = false;

  auto* gen = app.add_subcommand("gen", "generate a random instance file");
  gen->add_option("--structure", structure)->required();
  gen->add_option("--m", m)->required();
  gen->add_option("--n", n)->required();
  gen->add_option("--alpha", alpha)->required();
  gen->add_option("--prime", prime)->required();
  gen->add_option("--seed", seed)->required();
  gen->add_flag("--wide", wide, "require n > m (guaranteed nullity)");
  gen->add_option("--rhs", rhs_mode, "random | zero | consistent | none");
  gen->add_option("-o,--out", out_path)->required();

  auto* solve_cmd = app.add_subcommand("solve", "solve an instance file");
  solve_cmd->add_option("instance", inst_path)->required();
  solve_cmd->add_option("output", out_path)->required();

  auto* verify_cmd = app.add_subcommand("verify", "verify a solution file against its instance");
  verify_cmd->add_option("instance", inst_path)->required();
  verify_cmd->add_option("solution", sol_path)->required();

  auto* bench = app.add_subcommand("bench", "emit scaling CSV on stdout");
  bench->add_option("--structure", structure);
  bench->add_option("--alpha", alpha);
  bench->add_option("--sizes", sizes_csv);
  bench->add_option("--reps", reps);
  bench->add_option("--prime", prime);
  bench->add_option("--seed", seed);

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed())
      return cmd_gen(structure, m, n, alpha, prime, seed, wide, rhs_mode, out_path);
    if (solve_cmd->parsed()) return cmd_solve(inst_path, out_path);
    if (verify_cmd->parsed()) return cmd_verify(inst_path, sol_path);
    if (bench->parsed()) return cmd_bench(structure, alpha, sizes_csv, reps, prime, seed);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return solve_cmd->parsed() ? 2 : 1;
  }
  return 1;
}

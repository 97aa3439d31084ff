#include "stsolve/io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

namespace stsolve {

namespace {

using nlohmann::ordered_json;

ordered_json grid_json(const FieldMat& M) {
  ordered_json rows = ordered_json::array();
  for (size_t i = 0; i < M.rows; ++i) {
    ordered_json row = ordered_json::array();
    for (size_t j = 0; j < M.cols; ++j) row.push_back(M.at(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

FieldMat grid_from(const FieldCtx& F, const ordered_json& j, size_t m, size_t n, const char* what) {
  if (!j.is_array() || j.size() != m) throw Error(std::string("instance: bad grid ") + what);
  FieldMat M(m, n);
  for (size_t i = 0; i < m; ++i) {
    if (!j[i].is_array() || j[i].size() != n)
      throw Error(std::string("instance: bad grid row in ") + what);
    for (size_t k = 0; k < n; ++k) M.at(i, k) = F.reduce(j[i][k].get<uint64_t>());
  }
  return M;
}

std::vector<uint64_t> list_from(const FieldCtx& F, const ordered_json& j, const char* what) {
  if (!j.is_array()) throw Error(std::string("bad list ") + what);
  std::vector<uint64_t> v;
  v.reserve(j.size());
  for (const auto& e : j) v.push_back(F.reduce(e.get<uint64_t>()));
  return v;
}

}  // namespace

std::string instance_to_json(const InstanceFile& inst) {
  ordered_json j;
  j["prime"] = inst.prime;
  j["structure"] = structure_name(inst.gen.structure);
  j["m"] = inst.gen.m;
  j["n"] = inst.gen.n;
  j["alpha"] = inst.gen.alpha;
  j["G"] = grid_json(inst.gen.G);
  j["H"] = grid_json(inst.gen.H);
  if (inst.gen.structure != Structure::toeplitz) j["x"] = inst.gen.x;
  if (inst.gen.structure == Structure::cauchy) j["y"] = inst.gen.y;
  if (inst.v) j["v"] = *inst.v;
  return j.dump(2) + "\n";
}

InstanceFile instance_from_json(const std::string& text) {
  ordered_json j = ordered_json::parse(text);
  InstanceFile inst;
  inst.prime = j.at("prime").get<uint64_t>();
  FieldCtx F(inst.prime);
  auto st = structure_from_name(j.at("structure").get<std::string>());
  if (!st) throw Error("instance: unknown structure");
  inst.gen.structure = *st;
  inst.gen.m = j.at("m").get<size_t>();
  inst.gen.n = j.at("n").get<size_t>();
  inst.gen.alpha = j.at("alpha").get<size_t>();
  inst.gen.G = grid_from(F, j.at("G"), inst.gen.m, inst.gen.alpha, "G");
  inst.gen.H = grid_from(F, j.at("H"), inst.gen.n, inst.gen.alpha, "H");
  if (inst.gen.structure != Structure::toeplitz) inst.gen.x = list_from(F, j.at("x"), "x");
  if (inst.gen.structure == Structure::cauchy) inst.gen.y = list_from(F, j.at("y"), "y");
  if (j.contains("v")) {
    auto v = list_from(F, j.at("v"), "v");
    if (v.size() != inst.gen.m) throw Error("instance: |v| != m");
    inst.v = std::move(v);
  }
  inst.gen.validate(F);
  return inst;
}

SolutionFile solution_of(const SolveOutput& out) {
  SolutionFile s;
  s.status = out.u ? "solved" : "inconsistent";
  s.u = out.u;
  s.ell = out.ell;
  s.d = out.d;
  s.t = out.t;
  s.p.resize(out.ell);
  for (size_t i = 0; i < out.ell; ++i) s.p[i] = out.p[i];
  for (long long ti : out.t) s.nullity += ti;
  return s;
}

std::string solution_to_json(const SolutionFile& sol) {
  ordered_json j;
  j["status"] = sol.status;
  if (sol.u) j["u"] = *sol.u;
  ordered_json ns;
  ns["ell"] = sol.ell;
  ns["d"] = sol.d;
  ns["t"] = sol.t;
  ns["p"] = sol.p;
  j["nullspace"] = std::move(ns);
  j["nullity"] = sol.nullity;
  return j.dump(2) + "\n";
}

SolutionFile solution_from_json(const std::string& text) {
  ordered_json j = ordered_json::parse(text);
  SolutionFile s;
  s.status = j.at("status").get<std::string>();
  if (s.status != "solved" && s.status != "inconsistent") throw Error("solution: bad status");
  if (j.contains("u")) s.u = j.at("u").get<std::vector<uint64_t>>();
  const auto& ns = j.at("nullspace");
  s.ell = ns.at("ell").get<size_t>();
  s.d = ns.at("d").get<std::vector<long long>>();
  s.t = ns.at("t").get<std::vector<long long>>();
  s.p = ns.at("p").get<std::vector<std::vector<uint64_t>>>();
  if (s.d.size() != s.ell || s.t.size() != s.ell || s.p.size() != s.ell)
    throw Error("solution: inconsistent nullspace arrays");
  s.nullity = j.at("nullity").get<long long>();
  long long sum = 0;
  for (long long ti : s.t) sum += ti;
  if (sum != s.nullity) throw Error("solution: nullity != sum(t)");
  return s;
}

SolveOutput solve_output_of(const SolutionFile& sol) {
  SolveOutput out;
  out.ell = sol.ell;
  out.d = sol.d;
  out.t = sol.t;
  out.p.resize(sol.ell);
  for (size_t i = 0; i < sol.ell; ++i) {
    out.p[i] = sol.p[i];
    poly_normalize(out.p[i]);
  }
  if (sol.status == "solved") {
    if (!sol.u) throw Error("solution: solved status without u");
    out.u = sol.u;
  }
  return out;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open for writing: " + path);
  f << content;
  if (!f) throw Error("write failed: " + path);
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace stsolve

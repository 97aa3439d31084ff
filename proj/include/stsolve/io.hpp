#ifndef STSOLVE_IO_HPP
#define STSOLVE_IO_HPP

// JSON file formats for instances and solutions. Coefficient lists are
// serialized low-degree-first; integers are reduced mod p on load.

#include <optional>
#include <string>
#include <vector>

#include "stsolve/solver.hpp"
#include "stsolve/structured.hpp"

namespace stsolve {

struct InstanceFile {
  uint64_t prime = 0;
  Generators gen;
  std::optional<std::vector<uint64_t>> v;
};

struct SolutionFile {
  std::string status;  // "solved" | "inconsistent"
  std::optional<std::vector<uint64_t>> u;
  size_t ell = 0;
  std::vector<long long> d, t;
  std::vector<std::vector<uint64_t>> p;  // low-degree-first coefficients
  long long nullity = 0;                 // sum of t
};

std::string instance_to_json(const InstanceFile& inst);
// Throws Error (or a subclass) on malformed content.
InstanceFile instance_from_json(const std::string& text);

SolutionFile solution_of(const SolveOutput& out);
std::string solution_to_json(const SolutionFile& sol);
SolutionFile solution_from_json(const std::string& text);

SolveOutput solve_output_of(const SolutionFile& sol);

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace stsolve

#endif

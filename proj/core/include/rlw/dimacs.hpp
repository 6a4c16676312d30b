#pragma once

// CNF encoding of an avoidance spec, DIMACS text I/O and a small DPLL
// solver for checking the encoding.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rlw/coloring.hpp"
#include "rlw/search.hpp"

namespace rlw {

struct Cnf {
  int num_vars = 0;
  std::vector<std::vector<int>> clauses;
  std::vector<std::string> comments;  // without the leading "c "
};

// Variable numbering: x(S, c) = code(S) * k + c + 1 for c in [0, k); then,
// when a rainbow target is present, one e-variable per unordered pair of
// subsets {S < T} (bitmask order), true iff S and T share a color.
struct CnfLayout {
  int n = 0;
  int k = 0;
  int x_vars = 0;
  int e_vars = 0;

  int x(Code s, int c) const { return static_cast<int>(s) * k + c + 1; }
  int e(Code s, Code t) const;
};

CnfLayout cnf_layout(const AvoidanceSpec& spec);

// Throws a palette-infinite error for the unbounded palette.
Cnf export_dimacs(const AvoidanceSpec& spec);

std::string to_dimacs(const Cnf& cnf);
Cnf parse_dimacs(std::string_view text);

// Literals from "v ..." lines, or from a whitespace-separated list when no
// such line exists.  A "s UNSATISFIABLE" line yields an empty list.
std::vector<int> parse_model(std::string_view text);

// Throws an inconsistent-model error unless every subset gets exactly one
// color.
Coloring decode_model(const AvoidanceSpec& spec, const std::vector<int>& model);

struct SolveResult {
  enum class Status { Sat, Unsat, Unknown };
  Status status = Status::Unknown;
  std::vector<int> model;  // one literal per variable, ascending
  std::uint64_t decisions = 0;
};

SolveResult solve_cnf(const Cnf& cnf, std::uint64_t max_decisions = 10'000'000);

}  // namespace rlw

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rlw/coloring.hpp"
#include "rlw/embedding.hpp"
#include "rlw/pattern.hpp"

namespace rlw {

struct Palette {
  enum class Kind { ExactK, AtMostK, Unbounded };
  Kind kind = Kind::Unbounded;
  int k = 0;

  static Palette exact(int k) { return {Kind::ExactK, k}; }
  static Palette at_most(int k) { return {Kind::AtMostK, k}; }
  static Palette unbounded() { return {Kind::Unbounded, 0}; }
  bool finite() const noexcept { return kind != Kind::Unbounded; }
};

std::string to_string(const Palette& p);      // "exact:3", "atmost:2", "unbounded"
Palette parse_palette(const std::string& text);

struct AvoidanceSpec {
  int n = 1;
  std::optional<PatternPoset> rainbow_target;  // Q
  std::optional<PatternPoset> mono_target;     // P
  Palette palette;
  CopyMode mode = CopyMode::Induced;

  void validate() const;
};

// One-line canonical text used for fingerprints.
std::string canonical_text(const AvoidanceSpec& spec);

// Independent check of a coloring against a spec: palette, no rainbow Q, no
// monochromatic P.  Uses the detectors only.
bool satisfies(const Coloring& c, const AvoidanceSpec& spec, std::string* why = nullptr);

enum class Pruning { Leaves, CompletedCopies, ForwardChecking };

// Node budget from RLW_BUDGET, else 10^8.
std::uint64_t default_budget();

struct SearchOptions {
  std::uint64_t budget = default_budget();
  Pruning pruning = Pruning::ForwardChecking;
  bool ground_symmetry = true;  // orbit leaders on the singleton level
  std::vector<Code> order;      // subset assignment order; empty = (size, bitmask)
  int threads = 1;
};

enum class SearchStatus { Found, Absent, Indeterminate };

const char* to_string(SearchStatus s) noexcept;

struct SearchStats {
  std::uint64_t nodes = 0;
  double wall_ms = 0.0;
};

struct SearchOutcome {
  SearchStatus status = SearchStatus::Indeterminate;
  std::optional<Coloring> coloring;
  SearchStats stats;
};

SearchOutcome exists_coloring(const AvoidanceSpec& spec, const SearchOptions& options = {});

struct EnumerationOutcome {
  bool complete = false;  // false if the budget ran out or the visitor stopped
  std::uint64_t visited = 0;
  SearchStats stats;
};

// Calls visit on every canonical avoiding coloring (one per color partition,
// and with ground symmetry on, one per singleton-level orbit class).  Return
// false from visit to stop.
EnumerationOutcome for_each_coloring(const AvoidanceSpec& spec, const std::function<bool(const Coloring&)>& visit,
                                     const SearchOptions& options = {});

enum class NumberKind { R, RR, GR };

const char* to_string(NumberKind k) noexcept;

struct NumberWitness {
  int n = 0;
  SearchStatus status = SearchStatus::Indeterminate;
  std::optional<Coloring> avoider;  // present when status == Found
  bool vacuous = false;             // 2^n < k for exact palettes
};

struct NumberResult {
  NumberKind kind = NumberKind::R;
  std::optional<int> value;
  bool good = false;
  bool indeterminate = false;
  int verified_up_to = 0;
  std::vector<NumberWitness> witnesses;  // one per n examined, increasing
  SearchStats stats;
  std::vector<std::string> notes;
};

NumberResult compute_ramsey(const PatternPoset& p, int k, CopyMode mode, int n_max,
                            const SearchOptions& options = {});
NumberResult compute_rr(const PatternPoset& q, const PatternPoset& p, int n_max,
                        const SearchOptions& options = {}, CopyMode mode = CopyMode::Induced);
NumberResult compute_gr(const PatternPoset& q, const PatternPoset& p, int k, std::pair<int, int> window,
                        const SearchOptions& options = {}, CopyMode mode = CopyMode::Induced);

}  // namespace rlw

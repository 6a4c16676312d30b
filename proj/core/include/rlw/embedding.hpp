#pragma once

#include <optional>
#include <vector>

#include "rlw/coloring.hpp"
#include "rlw/lattice.hpp"
#include "rlw/pattern.hpp"

namespace rlw {

enum class CopyMode { Induced, Weak };

const char* to_string(CopyMode m) noexcept;

struct Embedding {
  std::vector<SubsetId> map;  // pattern element -> subset
  CopyMode mode = CopyMode::Induced;
};

// Backtracking in topological order of the pattern; candidates are tried in
// (size, bitmask) order, so the first embedding found is lexicographically
// first with respect to that order.
std::optional<Embedding> find_copy(int n, const FamilyMask& host, const PatternPoset& p, CopyMode mode);
std::optional<Embedding> find_induced_copy(int n, const FamilyMask& host, const PatternPoset& p);
std::optional<Embedding> find_weak_copy(int n, const FamilyMask& host, const PatternPoset& p);

struct MonoCopy {
  Color color = 0;
  Embedding embedding;
};

std::optional<MonoCopy> find_mono_copy(const Coloring& c, const PatternPoset& p,
                                       CopyMode mode = CopyMode::Induced);
std::optional<Embedding> find_rainbow_copy(const Coloring& c, const PatternPoset& p,
                                           CopyMode mode = CopyMode::Induced);

struct RainbowChain {
  int length = 0;
  std::vector<SubsetId> chain;  // increasing
};

RainbowChain max_rainbow_chain(const Coloring& c);

// Checks the embedding conditions directly (injective plus weak or induced).
bool is_embedding(const std::vector<Code>& images, const PatternPoset& p, CopyMode mode);

// Every distinct image set of a copy of p inside host, each sorted by
// bitmask; the list itself is sorted.  Used to build search constraints.
std::vector<std::vector<Code>> copy_images(int n, const FamilyMask& host, const PatternPoset& p,
                                           CopyMode mode);

}  // namespace rlw

#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "rlw/embedding.hpp"
#include "rlw/lattice.hpp"
#include "rlw/pattern.hpp"
#include "rlw/rational.hpp"

namespace rlw {

ExactRational lubell(int n, const FamilyMask& family);

struct LuMaxResult {
  ExactRational value;
  FamilyMask witness;  // a maximizing induced-P-free family
  bool complete = false;
  std::uint64_t nodes = 0;
};

// Branch and bound over families of B_n, n <= 5.  Sets are decided in
// (size, bitmask) order, taking a set before leaving it out.
LuMaxResult lu_max(int n, const PatternPoset& p, std::uint64_t budget = 100'000'000ULL);

struct LevelWindow {
  int n = 0;
  int lo = 0;  // levels lo .. lo + size - 1
  int size = 0;
  Embedding copy;
};

struct EPosetResult {
  int e = 0;
  int n_probe = 0;
  // No window up to n_probe failed, so e is only a lower bound.
  bool saturated = false;
  std::optional<LevelWindow> failing;  // first window of e+1 levels holding a copy
};

// Largest m such that every m consecutive levels of B_n are induced-P-free
// for all n <= n_probe.
EPosetResult e_poset(const PatternPoset& p, int n_probe);

// 0 with both a maximum and a minimum, 2 with neither, 1 otherwise.
int g_poset(const PatternPoset& q);

struct UilbReport {
  bool holds = false;
  int e = 0;
  std::vector<std::pair<int, ExactRational>> lu;  // (n, Lu_n) for n = 1..n_max
  int verified_up_to = 0;
  bool complete = true;
};

UilbReport is_uilb(const PatternPoset& p, int n_max, int n_probe = 6);

std::int64_t gst(int v, int n);

struct GstCheck {
  std::int64_t formula = 0;
  int searched = 0;  // largest u with an induced copy of u disjoint v-chains
  bool ok = false;
};

GstCheck gst_check(int v, int n);
inline bool gst_verify(int v, int n) { return gst_check(v, n).ok; }

int color_cap_c3(int n);
int color_cap_b2(int n);

}  // namespace rlw

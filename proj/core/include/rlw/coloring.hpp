#pragma once

#include <cstdint>
#include <vector>

#include "rlw/lattice.hpp"

namespace rlw {

using Color = std::uint32_t;

// Total coloring of B_n with colors in [0, k).  Colors are indexed by subset
// code; 1-based colors only appear at I/O boundaries.
class Coloring {
 public:
  Coloring() = default;
  Coloring(int n, std::vector<Color> by_code, int k);

  // Colors listed in (size, bitmask) order, 1-based.
  static Coloring from_canonical(int n, int k, const std::vector<int>& one_based);
  static Coloring constant(int n, Color c = 0, int k = 1);

  int n() const noexcept { return n_; }
  int k() const noexcept { return k_; }
  Color operator()(Code c) const noexcept { return colors_[c]; }
  Color at(SubsetId s) const noexcept { return colors_[s.bits()]; }
  const std::vector<Color>& by_code() const noexcept { return colors_; }

  bool exact() const noexcept { return distinct_ == k_; }
  int distinct_colors() const noexcept { return distinct_; }

  FamilyMask color_class(Color c) const;
  std::vector<int> to_canonical() const;  // 1-based, (size, bitmask) order

  // c'(S) = perm[c(S)]
  Coloring relabeled(const std::vector<Color>& perm) const;
  // c'(pi(S)) = c(S), pi acting on elements 1..n through perm[i-1]-1.
  Coloring permuted_ground(const std::vector<int>& perm) const;
  // c'(S) = c([n] \ S)
  Coloring complemented() const;

  friend bool operator==(const Coloring& a, const Coloring& b) {
    return a.n_ == b.n_ && a.k_ == b.k_ && a.colors_ == b.colors_;
  }

 private:
  int n_ = 0;
  int k_ = 0;
  int distinct_ = 0;
  std::vector<Color> colors_;
};

// Image of a subset under a permutation of [n] given 1-based.
Code permute_code(Code c, const std::vector<int>& perm);

}  // namespace rlw

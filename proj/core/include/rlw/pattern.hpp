#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rlw {

inline constexpr int kMaxPatternSize = 16;

enum class PatternKind { Chain, Antichain, Fork, Boolean, DisjointChains, Custom };

// A finite poset on elements 0..size-1, stored as up-sets and down-sets.
class PatternPoset {
 public:
  static PatternPoset chain(int t);
  static PatternPoset antichain(int t);
  static PatternPoset fork();
  static PatternPoset boolean(int m);
  static PatternPoset disjoint_chains(int u, int v);
  // Relations (a, b) mean a < b; the closure is taken and cycles rejected.
  static PatternPoset custom(int size, const std::vector<std::pair<int, int>>& less,
                             std::vector<std::string> names = {});

  int size() const noexcept { return size_; }
  PatternKind kind() const noexcept { return kind_; }
  // Descriptor text that make_pattern parses back to an equal poset.
  const std::string& label() const noexcept { return label_; }
  const std::vector<std::string>& names() const noexcept { return names_; }

  bool leq(int a, int b) const noexcept { return (up_[a] >> b) & 1u; }
  bool less(int a, int b) const noexcept { return a != b && leq(a, b); }
  bool comparable(int a, int b) const noexcept { return leq(a, b) || leq(b, a); }
  std::uint32_t up_set(int a) const noexcept { return up_[a]; }
  std::uint32_t down_set(int a) const noexcept { return down_[a]; }

  // Number of elements on a longest chain strictly below / above a.
  int depth_below(int a) const noexcept { return below_[a]; }
  int depth_above(int a) const noexcept { return above_[a]; }
  int height() const noexcept;  // size of a longest chain

  bool has_minimum() const noexcept;
  bool has_maximum() const noexcept;

  // Kahn order, always taking the smallest available index.
  const std::vector<int>& topological_order() const noexcept { return topo_; }

  // Maximal runs of identical components: each entry lists the first element
  // of every component in the run.  Components are interchangeable, so a
  // search may demand their images appear in increasing order.
  const std::vector<std::vector<int>>& interchangeable_roots() const noexcept { return twins_; }

  friend bool operator==(const PatternPoset& a, const PatternPoset& b) {
    return a.size_ == b.size_ && a.up_ == b.up_;
  }

 private:
  PatternPoset(int size, std::vector<std::uint32_t> up, PatternKind kind, std::string label,
               std::vector<std::string> names);
  void finish();

  int size_ = 0;
  PatternKind kind_ = PatternKind::Custom;
  std::string label_;
  std::vector<std::string> names_;
  std::vector<std::uint32_t> up_;
  std::vector<std::uint32_t> down_;
  std::vector<int> below_;
  std::vector<int> above_;
  std::vector<int> topo_;
  std::vector<std::vector<int>> twins_;
};

// `chain:3`, `antichain:2`, `fork`, `boolean:2`, `disjoint:2x2`, `custom:[a<b,a<c]`.
PatternPoset make_pattern(std::string_view descriptor);

}  // namespace rlw

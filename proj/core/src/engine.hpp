#pragma once

// Depth-first coloring search shared by exists_coloring, for_each_coloring
// and the number computations.

#include <atomic>
#include <cstdint>
#include <functional>
#include <vector>

#include "rlw/search.hpp"

namespace rlw::detail {

class Engine {
 public:
  Engine(const AvoidanceSpec& spec, const SearchOptions& options);

  enum class Result { Stopped, Exhausted, OutOfBudget, Cancelled };

  // Visits every valid assignment of the first `depth_limit` positions (all
  // positions by default).  leaf returns true to stop.
  using Leaf = std::function<bool(const Engine&)>;
  Result run(const Leaf& leaf, int depth_limit = -1);

  // Assigns the given colors to the first positions; false on conflict.
  bool apply_prefix(const std::vector<std::int8_t>& prefix);
  std::vector<std::int8_t> prefix(int depth) const;

  Coloring coloring() const;
  std::uint64_t nodes() const noexcept { return nodes_; }
  int positions() const noexcept { return static_cast<int>(order_.size()); }

  void share_budget(std::atomic<std::uint64_t>* counter) { shared_nodes_ = counter; }
  void set_cancel(const std::atomic<bool>* flag) { cancel_ = flag; }

 private:
  bool assign(int pos, int color);
  bool propagate(int pos);
  void undo_to(std::size_t mark);
  bool symmetry_ok(int depth, int color) const;
  bool leaf_ok() const;
  bool charge();

  int n_;
  int cap_;
  bool exact_ = false;
  bool unbounded_ = false;
  int k_;
  Pruning pruning_;
  std::uint64_t budget_;

  std::vector<Code> order_;
  std::vector<std::uint32_t> copy_members_;
  std::vector<std::uint32_t> copy_offset_;
  std::vector<std::uint8_t> copy_mono_;
  std::vector<std::vector<std::uint32_t>> incidence_;

  std::vector<std::int8_t> color_;  // by position
  std::vector<std::uint64_t> domain_;
  std::vector<std::pair<std::uint32_t, std::uint64_t>> trail_;
  int used_ = 0;

  int sym_begin_ = -1;  // singleton run [sym_begin_, sym_end_) in position order
  int sym_end_ = -1;
  int sym_base_ = 0;

  std::uint64_t nodes_ = 0;
  std::uint64_t pending_ = 0;
  std::atomic<std::uint64_t>* shared_nodes_ = nullptr;
  const std::atomic<bool>* cancel_ = nullptr;
  bool stop_ = false;
};

}  // namespace rlw::detail

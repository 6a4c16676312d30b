#include "engine.hpp"

#include <algorithm>

#include "rlw/error.hpp"

namespace rlw::detail {

namespace {

constexpr int kMaxColors = 64;
constexpr std::size_t kMaxCopyMembers = std::size_t{1} << 28;

}  // namespace

Engine::Engine(const AvoidanceSpec& spec, const SearchOptions& options)
    : n_(spec.n), pruning_(options.pruning), budget_(options.budget) {
  spec.validate();
  const std::size_t universe = std::size_t{1} << n_;
  switch (spec.palette.kind) {
    case Palette::Kind::ExactK:
    case Palette::Kind::AtMostK:
      k_ = spec.palette.k;
      cap_ = std::min<int>(k_, static_cast<int>(universe));
      exact_ = spec.palette.kind == Palette::Kind::ExactK;
      break;
    case Palette::Kind::Unbounded:
      k_ = static_cast<int>(universe);
      cap_ = k_;
      exact_ = false;
      unbounded_ = true;
      break;
  }
  if (cap_ > kMaxColors) {
    fail(ErrorKind::Capacity, "search supports at most " + std::to_string(kMaxColors) +
                                  " simultaneous colors; palette allows " + std::to_string(cap_));
  }

  order_ = options.order.empty() ? canonical_order(n_) : options.order;
  if (order_.size() != universe) fail(ErrorKind::Range, "assignment order must list every subset once");
  std::vector<std::int32_t> pos_of(universe, -1);
  for (std::size_t i = 0; i < order_.size(); ++i) {
    if (order_[i] >= universe || pos_of[order_[i]] >= 0) {
      fail(ErrorKind::Range, "assignment order must list every subset once");
    }
    pos_of[order_[i]] = static_cast<std::int32_t>(i);
  }

  incidence_.assign(universe, {});
  copy_offset_.push_back(0);
  auto add_copies = [&](const PatternPoset& p, bool mono) {
    // A rainbow copy needs |p| distinct colors; skip when the palette cannot
    // supply them.
    if (!mono && p.size() > cap_) return;
    const auto images = copy_images(n_, FamilyMask::all(n_), p, spec.mode);
    for (const auto& img : images) {
      const auto id = static_cast<std::uint32_t>(copy_mono_.size());
      for (Code c : img) {
        copy_members_.push_back(static_cast<std::uint32_t>(pos_of[c]));
        incidence_[pos_of[c]].push_back(id);
      }
      if (copy_members_.size() > kMaxCopyMembers) {
        fail(ErrorKind::Capacity, "pattern copies in B_" + std::to_string(n_) + " exceed the search table limit");
      }
      copy_offset_.push_back(static_cast<std::uint32_t>(copy_members_.size()));
      copy_mono_.push_back(mono ? 1 : 0);
    }
  };
  if (spec.mono_target) add_copies(*spec.mono_target, true);
  if (spec.rainbow_target) add_copies(*spec.rainbow_target, false);

  color_.assign(universe, -1);
  const std::uint64_t full = cap_ == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << cap_) - 1);
  domain_.assign(universe, full);

  // Permuting [n] fixes ∅ and [n] and permutes singletons arbitrarily, so a
  // canonical form exists in which the singleton colors are sorted, provided
  // the singletons form one run preceded only by ∅ and [n].
  if (options.ground_symmetry && n_ >= 2) {
    int first = -1, last = -1;
    bool ok = true;
    for (int i = 0; i < static_cast<int>(universe); ++i) {
      const Code c = order_[i];
      if (popcount(c) == 1) {
        if (first < 0) first = i;
        else if (last != i - 1) ok = false;
        last = i;
      } else if (first < 0 && c != 0 && c != full_code(n_)) {
        ok = false;
      }
    }
    if (ok && first >= 0) {
      sym_begin_ = first;
      sym_end_ = last + 1;
    }
  }
}

bool Engine::charge() {
  ++nodes_;
  if (shared_nodes_) {
    if (++pending_ >= 1024) {
      const auto total = shared_nodes_->fetch_add(pending_) + pending_;
      pending_ = 0;
      if (total > budget_) return false;
    }
    if (cancel_ && cancel_->load(std::memory_order_relaxed)) {
      stop_ = true;
      return false;
    }
    return true;
  }
  if (cancel_ && (nodes_ & 1023) == 0 && cancel_->load(std::memory_order_relaxed)) {
    stop_ = true;
    return false;
  }
  return nodes_ <= budget_;
}

void Engine::undo_to(std::size_t mark) {
  while (trail_.size() > mark) {
    domain_[trail_.back().first] = trail_.back().second;
    trail_.pop_back();
  }
}

bool Engine::propagate(int pos) {
  if (pruning_ == Pruning::Leaves) return true;
  const bool forward = pruning_ == Pruning::ForwardChecking;
  for (std::uint32_t ci : incidence_[pos]) {
    const std::uint32_t* m = copy_members_.data() + copy_offset_[ci];
    const std::uint32_t len = copy_offset_[ci + 1] - copy_offset_[ci];
    int open = -1;
    int nopen = 0;
    std::uint64_t seen = 0;
    bool distinct = true;
    bool same = true;
    int first = -1;
    for (std::uint32_t i = 0; i < len; ++i) {
      const int col = color_[m[i]];
      if (col < 0) {
        open = static_cast<int>(m[i]);
        if (++nopen > 1) break;
        continue;
      }
      const std::uint64_t bit = std::uint64_t{1} << col;
      if (seen & bit) distinct = false;
      seen |= bit;
      if (first < 0) first = col;
      else if (col != first) same = false;
    }
    if (nopen > 1) continue;
    if (copy_mono_[ci]) {
      if (!same) continue;
      if (nopen == 0) return false;
      if (!forward) continue;
      const std::uint64_t bit = std::uint64_t{1} << first;
      if (domain_[open] & bit) {
        trail_.emplace_back(open, domain_[open]);
        domain_[open] &= ~bit;
      }
    } else {
      if (!distinct) continue;
      if (nopen == 0) return false;
      if (!forward) continue;
      if (domain_[open] & ~seen) {
        trail_.emplace_back(open, domain_[open]);
        domain_[open] &= seen;
      }
    }
    if (domain_[open] == 0) return false;
  }
  return true;
}

bool Engine::symmetry_ok(int depth, int col) const {
  if (sym_begin_ < 0 || depth <= sym_begin_ || depth >= sym_end_) return true;
  const int prev = color_[depth - 1];
  if (col < prev) return false;
  if (col != prev || col < sym_base_) return true;
  // Extending a block of a color first seen on this level: it may not grow
  // past the previous such block.
  if (col - 1 < sym_base_) return true;
  int mine = 1, before = 0;
  for (int d = sym_begin_; d < depth; ++d) {
    const int c = color_[d];
    if (c == col) ++mine;
    else if (c == col - 1) ++before;
  }
  return mine <= before;
}

bool Engine::leaf_ok() const {
  if (exact_ && used_ != k_) return false;
  if (pruning_ != Pruning::Leaves) return true;
  for (std::size_t ci = 0; ci + 1 < copy_offset_.size(); ++ci) {
    std::uint64_t seen = 0;
    bool distinct = true, same = true;
    int first = -1;
    for (std::uint32_t i = copy_offset_[ci]; i < copy_offset_[ci + 1]; ++i) {
      const int col = color_[copy_members_[i]];
      const std::uint64_t bit = std::uint64_t{1} << col;
      if (seen & bit) distinct = false;
      seen |= bit;
      if (first < 0) first = col;
      else if (col != first) same = false;
    }
    if (copy_mono_[ci] ? same : distinct) return false;
  }
  return true;
}

Engine::Result Engine::run(const Leaf& leaf, int depth_limit) {
  const int total = static_cast<int>(order_.size());
  const int limit = depth_limit < 0 ? total : std::min(depth_limit, total);
  int start = 0;
  while (start < total && color_[start] >= 0) ++start;

  struct Frame {
    int next;
    std::size_t mark;
    int used_before;
  };
  std::vector<Frame> st(static_cast<std::size_t>(total) + 1);
  int d = start;
  st[d] = {0, trail_.size(), used_};

  auto retreat = [&]() -> bool {
    if (d == start) return false;
    --d;
    const Frame& f = st[d];
    undo_to(f.mark);
    color_[d] = -1;
    used_ = f.used_before;
    return true;
  };

  while (true) {
    if (d == limit) {
      const bool full = limit == total;
      if (!full || leaf_ok()) {
        if (leaf(*this)) return Result::Stopped;
      }
      if (!retreat()) return Result::Exhausted;
      continue;
    }
    Frame& f = st[d];
    const int pos = d;
    const int top = std::min(used_ + 1, cap_);
    bool advanced = false;
    for (int c = f.next; c < top; ++c) {
      if (!((domain_[pos] >> c) & 1u)) continue;
      const int used_after = std::max(used_, c + 1);
      if (exact_ && k_ - used_after > total - d - 1) continue;
      if (!symmetry_ok(d, c)) continue;
      if (!charge()) return stop_ ? Result::Cancelled : Result::OutOfBudget;
      if (d == sym_begin_) sym_base_ = used_;
      color_[pos] = static_cast<std::int8_t>(c);
      used_ = used_after;
      if (propagate(pos)) {
        f.next = c + 1;
        advanced = true;
        break;
      }
      undo_to(f.mark);
      color_[pos] = -1;
      used_ = f.used_before;
    }
    if (!advanced) {
      if (!retreat()) return Result::Exhausted;
      continue;
    }
    ++d;
    st[d] = {0, trail_.size(), used_};
  }
}

bool Engine::apply_prefix(const std::vector<std::int8_t>& prefix) {
  for (std::size_t d = 0; d < prefix.size(); ++d) {
    const int pos = d;
    const int c = prefix[d];
    if (!((domain_[pos] >> c) & 1u)) return false;
    if (static_cast<int>(d) == sym_begin_) sym_base_ = used_;
    color_[pos] = static_cast<std::int8_t>(c);
    used_ = std::max(used_, c + 1);
    if (!propagate(pos)) return false;
  }
  return true;
}

std::vector<std::int8_t> Engine::prefix(int depth) const {
  std::vector<std::int8_t> out;
  for (int d = 0; d < depth; ++d) out.push_back(color_[d]);
  return out;
}

Coloring Engine::coloring() const {
  std::vector<Color> col(color_.size());
  for (std::size_t d = 0; d < color_.size(); ++d) col[order_[d]] = static_cast<Color>(color_[d]);
  return Coloring(n_, std::move(col), unbounded_ ? std::max(used_, 1) : k_);
}

}  // namespace rlw::detail

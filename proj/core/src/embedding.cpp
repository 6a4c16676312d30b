#include "rlw/embedding.hpp"

#include <algorithm>

#include "rlw/error.hpp"

namespace rlw {

const char* to_string(CopyMode m) noexcept { return m == CopyMode::Induced ? "induced" : "weak"; }

namespace {

class Matcher {
 public:
  Matcher(int n, const FamilyMask& host, const PatternPoset& p, CopyMode mode)
      : n_(n), p_(p), mode_(mode), rank_(canonical_rank(n)), img_(p.size(), 0), placed_(p.size(), false) {
    if (host.n() != n) fail(ErrorKind::Precondition, "host family is over a different ground set");
    const auto host_codes = host.canonical_codes();
    const int t = p.size();
    cands_.resize(t);
    for (int a = 0; a < t; ++a) {
      const int lo = p.depth_below(a);
      const int hi = n - p.depth_above(a);
      for (Code c : host_codes) {
        const int s = popcount(c);
        if (s >= lo && s <= hi) cands_[a].push_back(c);
      }
    }
    twin_prev_.assign(t, -1);
    for (const auto& run : p.interchangeable_roots())
      for (std::size_t i = 1; i < run.size(); ++i) twin_prev_[run[i]] = run[i - 1];
  }

  // Calls leaf(img) for each embedding until it returns true.
  template <class Accept, class Leaf>
  bool run(Accept&& accept, Leaf&& leaf, bool use_twins) {
    use_twins_ = use_twins;
    return dfs(0, accept, leaf);
  }

  const std::vector<Code>& images() const { return img_; }

 private:
  bool consistent(int a, Code cand) const {
    for (int q = 0; q < p_.size(); ++q) {
      if (!placed_[q]) continue;
      const Code other = img_[q];
      if (other == cand) return false;
      const bool q_le_a = p_.leq(q, a);
      const bool a_le_q = p_.leq(a, q);
      const bool sub = is_subset(other, cand);
      const bool sup = is_subset(cand, other);
      if (mode_ == CopyMode::Induced) {
        if (q_le_a != sub || a_le_q != sup) return false;
      } else {
        if ((q_le_a && !sub) || (a_le_q && !sup)) return false;
      }
    }
    return true;
  }

  template <class Accept, class Leaf>
  bool dfs(std::size_t depth, Accept& accept, Leaf& leaf) {
    if (depth == p_.topological_order().size()) return leaf(img_);
    const int a = p_.topological_order()[depth];
    const int prev = use_twins_ ? twin_prev_[a] : -1;
    for (Code cand : cands_[a]) {
      if (prev >= 0 && rank_[cand] <= rank_[img_[prev]]) continue;
      if (!consistent(a, cand)) continue;
      if (!accept(a, cand)) continue;
      img_[a] = cand;
      placed_[a] = true;
      const bool done = dfs(depth + 1, accept, leaf);
      placed_[a] = false;
      if (done) return true;
    }
    return false;
  }

  int n_;
  const PatternPoset& p_;
  CopyMode mode_;
  std::vector<std::uint32_t> rank_;
  std::vector<std::vector<Code>> cands_;
  std::vector<int> twin_prev_;
  std::vector<Code> img_;
  std::vector<bool> placed_;
  bool use_twins_ = true;
};

Embedding to_embedding(int n, const std::vector<Code>& img, CopyMode mode) {
  Embedding e;
  e.mode = mode;
  e.map.reserve(img.size());
  for (Code c : img) e.map.emplace_back(n, c);
  return e;
}

}  // namespace

std::optional<Embedding> find_copy(int n, const FamilyMask& host, const PatternPoset& p, CopyMode mode) {
  Matcher m(n, host, p, mode);
  std::optional<Embedding> out;
  m.run([](int, Code) { return true; },
        [&](const std::vector<Code>& img) {
          out = to_embedding(n, img, mode);
          return true;
        },
        true);
  return out;
}

std::optional<Embedding> find_induced_copy(int n, const FamilyMask& host, const PatternPoset& p) {
  return find_copy(n, host, p, CopyMode::Induced);
}

std::optional<Embedding> find_weak_copy(int n, const FamilyMask& host, const PatternPoset& p) {
  return find_copy(n, host, p, CopyMode::Weak);
}

std::optional<MonoCopy> find_mono_copy(const Coloring& c, const PatternPoset& p, CopyMode mode) {
  for (Color col = 0; col < static_cast<Color>(c.k()); ++col) {
    const FamilyMask cls = c.color_class(col);
    if (cls.count() < static_cast<std::size_t>(p.size())) continue;
    if (auto e = find_copy(c.n(), cls, p, mode)) return MonoCopy{col, std::move(*e)};
  }
  return std::nullopt;
}

std::optional<Embedding> find_rainbow_copy(const Coloring& c, const PatternPoset& p, CopyMode mode) {
  if (c.distinct_colors() < p.size()) return std::nullopt;
  const int n = c.n();
  Matcher m(n, FamilyMask::all(n), p, mode);
  std::optional<Embedding> out;
  // Elements are placed in topological order, so the earlier entries of that
  // order are exactly the placed ones.
  const auto& topo = p.topological_order();
  std::vector<int> pos(p.size());
  for (std::size_t i = 0; i < topo.size(); ++i) pos[topo[i]] = static_cast<int>(i);
  m.run(
      [&](int a, Code cand) {
        const Color col = c(cand);
        const auto& img = m.images();
        for (std::size_t i = 0; i < static_cast<std::size_t>(pos[a]); ++i)
          if (c(img[topo[i]]) == col) return false;
        return true;
      },
      [&](const std::vector<Code>& img) {
        out = to_embedding(n, img, mode);
        return true;
      },
      true);
  return out;
}

RainbowChain max_rainbow_chain(const Coloring& c) {
  const int n = c.n();
  const Code top = full_code(n);
  RainbowChain best;
  std::vector<Code> chain;
  std::vector<Color> used;
  // Supersets of z in (size, bitmask) order are generated per call.
  auto dfs = [&](auto&& self, Code z) -> void {
    const int len = static_cast<int>(chain.size());
    if (len > best.length) {
      best.length = len;
      best.chain.clear();
      for (Code s : chain) best.chain.emplace_back(n, s);
    }
    if (len + (n - popcount(z)) <= best.length) return;
    const Code rest = top & ~z;
    std::vector<Code> ups;
    for (Code s = rest; s != 0; s = (s - 1) & rest) ups.push_back(z | s);
    std::sort(ups.begin(), ups.end(), canonical_less);
    for (Code u : ups) {
      const Color col = c(u);
      if (std::find(used.begin(), used.end(), col) != used.end()) continue;
      if (len + 1 + (n - popcount(u)) <= best.length) continue;
      chain.push_back(u);
      used.push_back(col);
      self(self, u);
      chain.pop_back();
      used.pop_back();
    }
  };
  for (Code s : canonical_order(n)) {
    if (1 + (n - popcount(s)) <= best.length) continue;
    chain.assign(1, s);
    used.assign(1, c(s));
    dfs(dfs, s);
  }
  return best;
}

bool is_embedding(const std::vector<Code>& images, const PatternPoset& p, CopyMode mode) {
  if (static_cast<int>(images.size()) != p.size()) return false;
  for (int a = 0; a < p.size(); ++a)
    for (int b = 0; b < p.size(); ++b) {
      if (a == b) continue;
      if (images[a] == images[b]) return false;
      const bool sub = is_subset(images[a], images[b]);
      if (mode == CopyMode::Induced ? (p.leq(a, b) != sub) : (p.leq(a, b) && !sub)) return false;
    }
  return true;
}

std::vector<std::vector<Code>> copy_images(int n, const FamilyMask& host, const PatternPoset& p,
                                           CopyMode mode) {
  Matcher m(n, host, p, mode);
  std::vector<std::vector<Code>> out;
  m.run([](int, Code) { return true; },
        [&](const std::vector<Code>& img) {
          std::vector<Code> s = img;
          std::sort(s.begin(), s.end());
          out.push_back(std::move(s));
          return false;
        },
        true);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace rlw

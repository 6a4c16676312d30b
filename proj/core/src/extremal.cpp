#include "rlw/extremal.hpp"

#include <numeric>

#include "rlw/error.hpp"

namespace rlw {

ExactRational lubell(int n, const FamilyMask& family) {
  check_ground(n);
  if (family.n() != n) fail(ErrorKind::Precondition, "family is not over B_" + std::to_string(n));
  std::vector<long long> per_level(n + 1, 0);
  family.for_each([&](Code c) { ++per_level[popcount(c)]; });
  ExactRational sum;
  for (int j = 0; j <= n; ++j) {
    if (per_level[j]) sum += ExactRational(per_level[j], binomial(n, j));
  }
  return sum;
}

namespace {

class LuSearch {
 public:
  LuSearch(int n, const PatternPoset& p, std::uint64_t budget) : n_(n), budget_(budget) {
    order_ = canonical_order(n);
    const auto rank = canonical_rank(n);
    std::uint64_t lcm = 1;
    for (int j = 0; j <= n; ++j) lcm = std::lcm(lcm, static_cast<std::uint64_t>(binomial(n, j)));
    weight_.resize(order_.size());
    for (std::size_t i = 0; i < order_.size(); ++i)
      weight_[i] = lcm / static_cast<std::uint64_t>(binomial(n, popcount(order_[i])));
    scale_ = lcm;
    suffix_.assign(order_.size() + 1, 0);
    for (std::size_t i = order_.size(); i-- > 0;) suffix_[i] = suffix_[i + 1] + weight_[i];
    closing_.resize(order_.size());
    for (const auto& img : copy_images(n, FamilyMask::all(n), p, CopyMode::Induced)) {
      std::uint64_t mask = 0;
      std::uint32_t last = 0;
      for (Code c : img) {
        mask |= std::uint64_t{1} << rank[c];
        last = std::max(last, rank[c]);
      }
      closing_[last].push_back(mask);
    }
  }

  LuMaxResult run() {
    dfs(0, 0, 0);
    LuMaxResult r;
    r.value = ExactRational(static_cast<long long>(best_), static_cast<long long>(scale_));
    r.witness = FamilyMask(n_);
    for (std::size_t i = 0; i < order_.size(); ++i)
      if ((best_set_ >> i) & 1u) r.witness.insert(order_[i]);
    r.complete = !out_of_budget_;
    r.nodes = nodes_;
    return r;
  }

 private:
  void dfs(std::size_t i, std::uint64_t chosen, std::uint64_t value) {
    if (out_of_budget_) return;
    if (++nodes_ > budget_) {
      out_of_budget_ = true;
      return;
    }
    if (value > best_ || (value == best_ && !found_)) {
      best_ = value;
      best_set_ = chosen;
      found_ = true;
    }
    if (i == order_.size() || value + suffix_[i] <= best_) return;
    const std::uint64_t with = chosen | (std::uint64_t{1} << i);
    bool ok = true;
    for (std::uint64_t m : closing_[i]) {
      if ((with & m) == m) {
        ok = false;
        break;
      }
    }
    if (ok) dfs(i + 1, with, value + weight_[i]);
    dfs(i + 1, chosen, value);
  }

  int n_;
  std::uint64_t budget_;
  std::vector<Code> order_;
  std::vector<std::uint64_t> weight_;
  std::vector<std::uint64_t> suffix_;
  std::vector<std::vector<std::uint64_t>> closing_;
  std::uint64_t scale_ = 1;
  std::uint64_t best_ = 0;
  std::uint64_t best_set_ = 0;
  bool found_ = false;
  std::uint64_t nodes_ = 0;
  bool out_of_budget_ = false;
};

}  // namespace

LuMaxResult lu_max(int n, const PatternPoset& p, std::uint64_t budget) {
  check_ground(n);
  if (n > 5) fail(ErrorKind::Capacity, "lu_max is exhaustive and limited to n <= 5");
  return LuSearch(n, p, budget).run();
}

EPosetResult e_poset(const PatternPoset& p, int n_probe) {
  check_ground(n_probe);
  EPosetResult r;
  r.n_probe = n_probe;
  for (int m = 1; m <= n_probe + 1; ++m) {
    for (int n = 1; n <= n_probe; ++n) {
      for (int lo = 0; lo + m - 1 <= n; ++lo) {
        if (auto e = find_induced_copy(n, levels(n, lo, lo + m - 1), p)) {
          r.e = m - 1;
          r.failing = LevelWindow{n, lo, m, *e};
          return r;
        }
      }
    }
  }
  r.e = n_probe + 1;
  r.saturated = true;
  return r;
}

int g_poset(const PatternPoset& q) {
  const int extremes = (q.has_maximum() ? 1 : 0) + (q.has_minimum() ? 1 : 0);
  return 2 - extremes;
}

UilbReport is_uilb(const PatternPoset& p, int n_max, int n_probe) {
  if (n_max < 1) fail(ErrorKind::Range, "n_max must be positive");
  UilbReport r;
  const auto e = e_poset(p, n_probe);
  r.e = e.e;
  r.holds = true;
  for (int n = 1; n <= n_max; ++n) {
    const auto lu = lu_max(n, p);
    r.lu.emplace_back(n, lu.value);
    if (!lu.complete) {
      r.complete = false;
      r.holds = false;
      break;
    }
    r.verified_up_to = n;
    if (ExactRational(r.e) < lu.value) r.holds = false;
  }
  return r;
}

std::int64_t gst(int v, int n) {
  if (v < 1 || n < 0 || n - v + 1 < 0) fail(ErrorKind::Range, "gst needs 1 <= v <= n + 1");
  const int t = n - v + 1;
  return static_cast<std::int64_t>(binomial(t, t / 2));
}

GstCheck gst_check(int v, int n) {
  GstCheck r;
  r.formula = gst(v, n);
  check_ground(n);
  for (int u = 1;; ++u) {
    if (u * v > kMaxPatternSize) {
      fail(ErrorKind::Capacity, "disjoint chains " + std::to_string(u) + "x" + std::to_string(v) +
                                    " exceed the pattern size limit");
    }
    if (!find_induced_copy(n, FamilyMask::all(n), PatternPoset::disjoint_chains(u, v))) break;
    r.searched = u;
  }
  r.ok = r.searched == r.formula;
  return r;
}

int color_cap_c3(int n) {
  if (n < 2) fail(ErrorKind::Range, "color_cap_c3 needs n >= 2");
  return static_cast<int>(binomial(n, (n + 1) / 2)) + 1;
}

int color_cap_b2(int n) {
  if (n <= 2) fail(ErrorKind::Range, "color_cap_b2 needs n > 2");
  return static_cast<int>(binomial(n, n / 2) + binomial(n - 1, (n - 1) / 2) + binomial(n - 2, (n - 2) / 2)) + 1;
}

}  // namespace rlw

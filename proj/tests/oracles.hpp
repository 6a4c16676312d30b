#pragma once

// Brute-force reference implementations.  Nothing here calls into rlw; the
// tests compare the library against these on small inputs.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <utility>
#include <vector>

namespace oracle {

using Coloring = std::vector<int>;  // color by subset code

inline bool sub(unsigned a, unsigned b) { return (a & ~b) == 0; }

struct Poset {
  int size = 0;
  std::vector<std::vector<bool>> leq;
};

inline Poset poset(int size, const std::vector<std::pair<int, int>>& less) {
  Poset p;
  p.size = size;
  p.leq.assign(size, std::vector<bool>(size, false));
  for (int i = 0; i < size; ++i) p.leq[i][i] = true;
  for (auto [a, b] : less) p.leq[a][b] = true;
  for (int m = 0; m < size; ++m)
    for (int a = 0; a < size; ++a)
      for (int b = 0; b < size; ++b)
        if (p.leq[a][m] && p.leq[m][b]) p.leq[a][b] = true;
  return p;
}

inline Poset chain(int t) {
  std::vector<std::pair<int, int>> r;
  for (int i = 0; i + 1 < t; ++i) r.push_back({i, i + 1});
  return poset(t, r);
}
inline Poset antichain(int t) { return poset(t, {}); }
inline Poset fork() { return poset(3, {{0, 1}, {0, 2}}); }
inline Poset b2() { return poset(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}); }

// Every injective map of the poset into `host` (a list of codes) matching
// the order relation exactly (induced) or only its comparabilities (weak).
inline void for_each_copy(const Poset& p, const std::vector<unsigned>& host, bool induced,
                          const std::function<bool(const std::vector<unsigned>&)>& f) {
  std::vector<unsigned> img(p.size);
  std::vector<bool> used(host.size(), false);
  bool stop = false;
  std::function<void(int)> rec = [&](int i) {
    if (stop) return;
    if (i == p.size) {
      for (int a = 0; a < p.size; ++a)
        for (int b = 0; b < p.size; ++b) {
          if (a == b) continue;
          const bool want = p.leq[a][b];
          const bool have = sub(img[a], img[b]);
          if (want && !have) return;
          if (induced && !want && have) return;
        }
      if (!f(img)) stop = true;
      return;
    }
    for (std::size_t h = 0; h < host.size(); ++h) {
      if (used[h]) continue;
      used[h] = true;
      img[i] = host[h];
      rec(i + 1);
      used[h] = false;
    }
  };
  rec(0);
}

inline std::vector<unsigned> all_codes(int n) {
  std::vector<unsigned> v(std::size_t{1} << n);
  std::iota(v.begin(), v.end(), 0u);
  return v;
}

inline bool has_copy(const Poset& p, const std::vector<unsigned>& host, bool induced = true) {
  bool found = false;
  for_each_copy(p, host, induced, [&](const std::vector<unsigned>&) {
    found = true;
    return false;
  });
  return found;
}

inline bool has_rainbow(const Coloring& c, int n, const Poset& p, bool induced = true) {
  bool found = false;
  for_each_copy(p, all_codes(n), induced, [&](const std::vector<unsigned>& img) {
    std::vector<int> cols;
    for (unsigned s : img) cols.push_back(c[s]);
    std::sort(cols.begin(), cols.end());
    if (std::adjacent_find(cols.begin(), cols.end()) == cols.end()) {
      found = true;
      return false;
    }
    return true;
  });
  return found;
}

inline bool has_mono(const Coloring& c, int n, const Poset& p, bool induced = true) {
  const int k = *std::max_element(c.begin(), c.end()) + 1;
  for (int col = 0; col < k; ++col) {
    std::vector<unsigned> cls;
    for (unsigned s = 0; s < c.size(); ++s)
      if (c[s] == col) cls.push_back(s);
    if (static_cast<int>(cls.size()) >= p.size && has_copy(p, cls, induced)) return true;
  }
  (void)n;
  return false;
}

inline int distinct(const Coloring& c) {
  std::vector<int> v = c;
  std::sort(v.begin(), v.end());
  return static_cast<int>(std::unique(v.begin(), v.end()) - v.begin());
}

// All k^(2^n) maps, by code.
inline void for_each_raw_coloring(int n, int k, const std::function<void(const Coloring&)>& f) {
  const std::size_t m = std::size_t{1} << n;
  Coloring c(m, 0);
  while (true) {
    f(c);
    std::size_t i = 0;
    while (i < m && ++c[i] == k) c[i++] = 0;
    if (i == m) return;
  }
}

// Restricted growth strings of length len using at most kmax blocks.
inline void for_each_rgs(int len, int kmax, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> a(len, 0);
  std::function<void(int, int)> rec = [&](int i, int used) {
    if (i == len) {
      f(a);
      return;
    }
    for (int c = 0; c <= std::min(used, kmax - 1); ++c) {
      a[i] = c;
      rec(i + 1, std::max(used, c + 1));
    }
  };
  rec(0, 0);
}

inline long long stirling2(int n, int k) {
  std::vector<std::vector<long long>> s(n + 1, std::vector<long long>(k + 1, 0));
  s[0][0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= std::min(i, k); ++j) s[i][j] = j * s[i - 1][j] + s[i - 1][j - 1];
  return s[n][k];
}

inline long long choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Lubell sum as a reduced fraction (num, den).
inline std::pair<long long, long long> lubell(int n, const std::vector<unsigned>& family) {
  long long num = 0, den = 1;
  for (unsigned s : family) {
    const long long d = choose(n, __builtin_popcount(s));
    num = num * d + den;
    den *= d;
    const long long g = std::gcd(num, den);
    num /= g;
    den /= g;
  }
  return {num, den};
}

inline int longest_rainbow_chain(const Coloring& c, int n) {
  const std::size_t m = std::size_t{1} << n;
  int best = 0;
  std::vector<unsigned> chain;
  std::vector<int> cols;
  std::function<void(unsigned)> rec = [&](unsigned top) {
    best = std::max(best, static_cast<int>(chain.size()));
    for (unsigned t = 0; t < m; ++t) {
      if (!chain.empty() && (t == top || !sub(top, t))) continue;
      if (std::find(cols.begin(), cols.end(), c[t]) != cols.end()) continue;
      chain.push_back(t);
      cols.push_back(c[t]);
      rec(t);
      chain.pop_back();
      cols.pop_back();
    }
  };
  rec(0);
  return best;
}

}  // namespace oracle

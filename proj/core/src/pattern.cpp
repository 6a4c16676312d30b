#include "rlw/pattern.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <map>

#include "rlw/error.hpp"

namespace rlw {

namespace {

void check_size(int t) {
  if (t < 1) fail(ErrorKind::Range, "pattern must have at least one element");
  if (t > kMaxPatternSize) {
    fail(ErrorKind::Capacity, "pattern size " + std::to_string(t) + " exceeds " +
                                  std::to_string(kMaxPatternSize));
  }
}

std::vector<std::uint32_t> identity_up(int t) {
  std::vector<std::uint32_t> up(t);
  for (int i = 0; i < t; ++i) up[i] = std::uint32_t{1} << i;
  return up;
}

std::vector<std::string> default_names(int t) {
  std::vector<std::string> names(t);
  for (int i = 0; i < t; ++i) names[i] = "x" + std::to_string(i);
  return names;
}

}  // namespace

PatternPoset::PatternPoset(int size, std::vector<std::uint32_t> up, PatternKind kind,
                           std::string label, std::vector<std::string> names)
    : size_(size), kind_(kind), label_(std::move(label)), names_(std::move(names)), up_(std::move(up)) {
  if (names_.empty()) names_ = default_names(size_);
  finish();
}

void PatternPoset::finish() {
  const int t = size_;
  down_.assign(t, 0);
  for (int a = 0; a < t; ++a)
    for (int b = 0; b < t; ++b)
      if (leq(a, b)) down_[b] |= std::uint32_t{1} << a;

  topo_.clear();
  std::uint32_t placed = 0;
  for (int step = 0; step < t; ++step) {
    for (int a = 0; a < t; ++a) {
      const std::uint32_t bit = std::uint32_t{1} << a;
      if (placed & bit) continue;
      if (((down_[a] & ~bit) & ~placed) == 0) {
        topo_.push_back(a);
        placed |= bit;
        break;
      }
    }
  }

  below_.assign(t, 0);
  for (int a : topo_) {
    for (int b = 0; b < t; ++b)
      if (less(b, a)) below_[a] = std::max(below_[a], below_[b] + 1);
  }
  above_.assign(t, 0);
  for (auto it = topo_.rbegin(); it != topo_.rend(); ++it) {
    const int a = *it;
    for (int b = 0; b < t; ++b)
      if (less(a, b)) above_[a] = std::max(above_[a], above_[b] + 1);
  }

  // Components of the comparability graph.
  std::vector<int> comp(t, -1);
  int ncomp = 0;
  for (int s = 0; s < t; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s};
    comp[s] = ncomp;
    while (!stack.empty()) {
      const int a = stack.back();
      stack.pop_back();
      for (int b = 0; b < t; ++b)
        if (comp[b] < 0 && comparable(a, b)) {
          comp[b] = ncomp;
          stack.push_back(b);
        }
    }
    ++ncomp;
  }
  struct Range {
    int lo, hi;
  };
  std::vector<Range> ranges;
  bool contiguous = true;
  for (int c = 0; c < ncomp && contiguous; ++c) {
    int lo = t, hi = -1, cnt = 0;
    for (int a = 0; a < t; ++a)
      if (comp[a] == c) {
        lo = std::min(lo, a);
        hi = std::max(hi, a);
        ++cnt;
      }
    if (hi - lo + 1 != cnt) contiguous = false;
    ranges.push_back({lo, hi});
  }
  twins_.clear();
  if (!contiguous) return;
  std::sort(ranges.begin(), ranges.end(), [](const Range& x, const Range& y) { return x.lo < y.lo; });
  auto same_shape = [&](const Range& x, const Range& y) {
    if (x.hi - x.lo != y.hi - y.lo) return false;
    const int len = x.hi - x.lo + 1;
    for (int i = 0; i < len; ++i)
      for (int j = 0; j < len; ++j)
        if (leq(x.lo + i, x.lo + j) != leq(y.lo + i, y.lo + j)) return false;
    return true;
  };
  // The first element of a component in topological order is its root.
  auto root_of = [&](const Range& r) {
    for (int a : topo_)
      if (a >= r.lo && a <= r.hi) return a;
    return r.lo;
  };
  std::size_t i = 0;
  while (i < ranges.size()) {
    std::size_t j = i + 1;
    while (j < ranges.size() && same_shape(ranges[i], ranges[j])) ++j;
    if (j - i >= 2) {
      std::vector<int> roots;
      for (std::size_t r = i; r < j; ++r) roots.push_back(root_of(ranges[r]));
      twins_.push_back(std::move(roots));
    }
    i = j;
  }
}

int PatternPoset::height() const noexcept {
  int h = 0;
  for (int a = 0; a < size_; ++a) h = std::max(h, below_[a] + 1);
  return h;
}

bool PatternPoset::has_minimum() const noexcept {
  const std::uint32_t all = size_ == 32 ? ~0u : ((std::uint32_t{1} << size_) - 1);
  for (int a = 0; a < size_; ++a)
    if (up_[a] == all) return true;
  return false;
}

bool PatternPoset::has_maximum() const noexcept {
  const std::uint32_t all = size_ == 32 ? ~0u : ((std::uint32_t{1} << size_) - 1);
  for (int a = 0; a < size_; ++a)
    if (down_[a] == all) return true;
  return false;
}

PatternPoset PatternPoset::chain(int t) {
  check_size(t);
  std::vector<std::uint32_t> up(t);
  for (int i = 0; i < t; ++i) up[i] = ((std::uint32_t{1} << t) - 1) & ~((std::uint32_t{1} << i) - 1);
  return PatternPoset(t, std::move(up), PatternKind::Chain, "chain:" + std::to_string(t), {});
}

PatternPoset PatternPoset::antichain(int t) {
  check_size(t);
  return PatternPoset(t, identity_up(t), PatternKind::Antichain, "antichain:" + std::to_string(t), {});
}

PatternPoset PatternPoset::fork() {
  std::vector<std::uint32_t> up = {0b111, 0b010, 0b100};
  return PatternPoset(3, std::move(up), PatternKind::Fork, "fork", {"X0", "X1", "X2"});
}

PatternPoset PatternPoset::boolean(int m) {
  if (m < 0 || (1 << std::min(m, 8)) > kMaxPatternSize) {
    fail(ErrorKind::Capacity, "boolean:" + std::to_string(m) + " exceeds the pattern size cap");
  }
  const int t = 1 << m;
  std::vector<std::uint32_t> up(t, 0);
  for (int a = 0; a < t; ++a)
    for (int b = 0; b < t; ++b)
      if ((a & ~b) == 0) up[a] |= std::uint32_t{1} << b;
  return PatternPoset(t, std::move(up), PatternKind::Boolean, "boolean:" + std::to_string(m), {});
}

PatternPoset PatternPoset::disjoint_chains(int u, int v) {
  if (u < 1 || v < 1) fail(ErrorKind::Range, "disjoint chains need u,v >= 1");
  check_size(u * v);
  const int t = u * v;
  std::vector<std::uint32_t> up(t, 0);
  for (int c = 0; c < u; ++c)
    for (int i = 0; i < v; ++i)
      for (int j = i; j < v; ++j) up[c * v + i] |= std::uint32_t{1} << (c * v + j);
  return PatternPoset(t, std::move(up), PatternKind::DisjointChains,
                      "disjoint:" + std::to_string(u) + "x" + std::to_string(v), {});
}

PatternPoset PatternPoset::custom(int size, const std::vector<std::pair<int, int>>& less,
                                  std::vector<std::string> names) {
  check_size(size);
  if (names.empty()) names = default_names(size);
  if (static_cast<int>(names.size()) != size) fail(ErrorKind::Range, "name count does not match size");
  auto up = identity_up(size);
  for (auto [a, b] : less) {
    if (a < 0 || b < 0 || a >= size || b >= size) fail(ErrorKind::Range, "relation index out of range");
    if (a == b) fail(ErrorKind::Cycle, "element " + names[a] + " below itself");
    up[a] |= std::uint32_t{1} << b;
  }
  // Warshall closure over bit rows.
  for (int k = 0; k < size; ++k)
    for (int i = 0; i < size; ++i)
      if ((up[i] >> k) & 1u) up[i] |= up[k];
  for (int a = 0; a < size; ++a)
    for (int b = a + 1; b < size; ++b)
      if (((up[a] >> b) & 1u) && ((up[b] >> a) & 1u)) {
        fail(ErrorKind::Cycle, "relations force " + names[a] + " = " + names[b]);
      }
  // Canonical label: cover relations, then isolated elements.
  std::string label = "custom:[";
  bool first = true;
  std::vector<bool> mentioned(size, false);
  for (int a = 0; a < size; ++a)
    for (int b = 0; b < size; ++b) {
      if (a == b || !((up[a] >> b) & 1u)) continue;
      bool cover = true;
      for (int c = 0; c < size && cover; ++c)
        if (c != a && c != b && ((up[a] >> c) & 1u) && ((up[c] >> b) & 1u)) cover = false;
      if (!cover) continue;
      if (!first) label += ',';
      label += names[a] + "<" + names[b];
      mentioned[a] = mentioned[b] = true;
      first = false;
    }
  for (int a = 0; a < size; ++a)
    if (!mentioned[a]) {
      if (!first) label += ',';
      label += names[a];
      first = false;
    }
  label += ']';
  return PatternPoset(size, std::move(up), PatternKind::Custom, std::move(label), std::move(names));
}

namespace {

int parse_count(std::string_view s, std::string_view whole) {
  if (s.empty() || s.size() > 4) fail(ErrorKind::Parse, "bad count in '" + std::string(whole) + "'");
  int v = 0;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      fail(ErrorKind::Parse, "bad count in '" + std::string(whole) + "'");
    }
    v = v * 10 + (ch - '0');
  }
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

PatternPoset parse_custom(std::string_view body, std::string_view whole) {
  body = trim(body);
  if (body.size() < 2 || body.front() != '[' || body.back() != ']') {
    fail(ErrorKind::Parse, "custom pattern needs [..]: '" + std::string(whole) + "'");
  }
  body = trim(body.substr(1, body.size() - 2));
  std::vector<std::string> names;
  std::map<std::string, int, std::less<>> index;
  std::vector<std::pair<int, int>> rel;
  auto id_of = [&](std::string_view tok) {
    tok = trim(tok);
    if (tok.empty()) fail(ErrorKind::Parse, "empty identifier in '" + std::string(whole) + "'");
    for (char ch : tok)
      if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_') {
        fail(ErrorKind::Parse, "bad identifier '" + std::string(tok) + "'");
      }
    auto it = index.find(tok);
    if (it != index.end()) return it->second;
    const int id = static_cast<int>(names.size());
    names.emplace_back(tok);
    index.emplace(std::string(tok), id);
    return id;
  };
  while (!body.empty()) {
    const auto comma = body.find(',');
    std::string_view item = body.substr(0, comma);
    int prev = -1;
    while (true) {
      const auto lt = item.find('<');
      const int id = id_of(item.substr(0, lt));
      if (prev >= 0) rel.emplace_back(prev, id);
      prev = id;
      if (lt == std::string_view::npos) break;
      item = item.substr(lt + 1);
    }
    if (comma == std::string_view::npos) break;
    body = body.substr(comma + 1);
  }
  if (names.empty()) fail(ErrorKind::Range, "pattern must have at least one element");
  const int t = static_cast<int>(names.size());
  return PatternPoset::custom(t, rel, std::move(names));
}

}  // namespace

PatternPoset make_pattern(std::string_view descriptor) {
  const std::string_view d = trim(descriptor);
  const auto colon = d.find(':');
  const std::string_view head = d.substr(0, colon);
  const std::string_view arg = colon == std::string_view::npos ? std::string_view{} : d.substr(colon + 1);
  auto need_arg = [&] {
    if (colon == std::string_view::npos) fail(ErrorKind::Parse, "missing argument in '" + std::string(d) + "'");
  };
  if (head == "chain") {
    need_arg();
    return PatternPoset::chain(parse_count(arg, d));
  }
  if (head == "antichain") {
    need_arg();
    return PatternPoset::antichain(parse_count(arg, d));
  }
  if (head == "fork") {
    if (colon != std::string_view::npos) fail(ErrorKind::Parse, "fork takes no argument");
    return PatternPoset::fork();
  }
  if (head == "boolean") {
    need_arg();
    return PatternPoset::boolean(parse_count(arg, d));
  }
  if (head == "disjoint") {
    need_arg();
    const auto x = arg.find('x');
    if (x == std::string_view::npos) fail(ErrorKind::Parse, "disjoint needs UxV: '" + std::string(d) + "'");
    return PatternPoset::disjoint_chains(parse_count(arg.substr(0, x), d), parse_count(arg.substr(x + 1), d));
  }
  if (head == "custom") {
    need_arg();
    return parse_custom(arg, d);
  }
  fail(ErrorKind::Parse, "unknown pattern '" + std::string(d) + "'");
}

}  // namespace rlw

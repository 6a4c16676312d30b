#include "rlw/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "rlw/error.hpp"

namespace rlw {

void check_ground(int n) {
  if (n < 1 || n > kMaxGround) {
    fail(ErrorKind::Capacity, "ground set size " + std::to_string(n) + " outside [1," +
                                  std::to_string(kMaxGround) + "]");
  }
}

SubsetId::SubsetId(int n, Code bits) : bits_(bits), n_(static_cast<std::uint8_t>(n)) {
  check_ground(n);
  if ((bits & ~full_code(n)) != 0) {
    fail(ErrorKind::InvalidBits, "subset " + std::to_string(bits) + " has elements above " +
                                     std::to_string(n));
  }
}

SubsetId SubsetId::of(int n, std::initializer_list<int> elements) {
  Code bits = 0;
  for (int e : elements) {
    if (e < 1 || e > n) {
      fail(ErrorKind::InvalidBits, "element " + std::to_string(e) + " outside [1," +
                                       std::to_string(n) + "]");
    }
    bits |= Code{1} << (e - 1);
  }
  return SubsetId(n, bits);
}

std::vector<Code> canonical_order(int n) {
  check_ground(n);
  std::vector<Code> order(std::size_t{1} << n);
  std::iota(order.begin(), order.end(), Code{0});
  std::sort(order.begin(), order.end(), canonical_less);
  return order;
}

std::vector<std::uint32_t> canonical_rank(int n) {
  const auto order = canonical_order(n);
  std::vector<std::uint32_t> rank(order.size());
  for (std::uint32_t i = 0; i < order.size(); ++i) rank[order[i]] = i;
  return rank;
}

const char* to_string(OrderRelation r) noexcept {
  switch (r) {
    case OrderRelation::Less: return "Less";
    case OrderRelation::Greater: return "Greater";
    case OrderRelation::Equal: return "Equal";
    case OrderRelation::Incomparable: return "Incomparable";
  }
  return "?";
}

namespace {

void check_member(int n, SubsetId s) {
  check_ground(n);
  if ((s.bits() & ~full_code(n)) != 0) {
    fail(ErrorKind::InvalidBits, "subset " + format_subset(s) + " not in B_" + std::to_string(n));
  }
}

void check_strict(int n, SubsetId lo, SubsetId hi) {
  check_member(n, lo);
  check_member(n, hi);
  if (lo.bits() == hi.bits() || !is_subset(lo.bits(), hi.bits())) {
    fail(ErrorKind::OrderViolation,
         format_subset(lo) + " is not strictly below " + format_subset(hi));
  }
}

}  // namespace

OrderRelation compare(int n, SubsetId x, SubsetId y) {
  check_member(n, x);
  check_member(n, y);
  const Code a = x.bits();
  const Code b = y.bits();
  if (a == b) return OrderRelation::Equal;
  if (is_subset(a, b)) return OrderRelation::Less;
  if (is_subset(b, a)) return OrderRelation::Greater;
  return OrderRelation::Incomparable;
}

FamilyMask::FamilyMask(int n) : n_(n) {
  check_ground(n);
  words_.assign(((std::size_t{1} << n) + 63) / 64, 0);
}

FamilyMask FamilyMask::all(int n) {
  FamilyMask f(n);
  const std::size_t u = f.universe();
  for (std::size_t w = 0; w < f.words_.size(); ++w) {
    const std::size_t bits = std::min<std::size_t>(64, u - w * 64);
    f.words_[w] = bits == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << bits) - 1);
  }
  return f;
}

FamilyMask FamilyMask::from_codes(int n, const std::vector<Code>& codes) {
  FamilyMask f(n);
  for (Code c : codes) {
    if ((c & ~full_code(n)) != 0) {
      fail(ErrorKind::InvalidBits, "subset " + format_subset(c) + " not in B_" + std::to_string(n));
    }
    f.insert(c);
  }
  return f;
}

std::size_t FamilyMask::count() const noexcept {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

void FamilyMask::same_ground(const FamilyMask& o) const {
  if (n_ != o.n_) {
    fail(ErrorKind::Precondition, "family algebra across ground sets " + std::to_string(n_) +
                                      " and " + std::to_string(o.n_));
  }
}

FamilyMask& FamilyMask::operator|=(const FamilyMask& o) {
  same_ground(o);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

FamilyMask& FamilyMask::operator&=(const FamilyMask& o) {
  same_ground(o);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

FamilyMask& FamilyMask::operator-=(const FamilyMask& o) {
  same_ground(o);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
  return *this;
}

FamilyMask FamilyMask::complement() const { return all(n_) - *this; }

std::vector<Code> FamilyMask::codes() const {
  std::vector<Code> out;
  out.reserve(count());
  for_each([&](Code c) { out.push_back(c); });
  return out;
}

std::vector<Code> FamilyMask::canonical_codes() const {
  auto out = codes();
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

FamilyMask interval(int n, SubsetId lo, SubsetId hi, Bounds bounds) {
  check_member(n, lo);
  check_member(n, hi);
  if (!is_subset(lo.bits(), hi.bits())) {
    fail(ErrorKind::OrderViolation, format_subset(lo) + " is not below " + format_subset(hi));
  }
  FamilyMask f(n);
  const Code base = lo.bits();
  const Code free = hi.bits() & ~base;
  // Enumerate all subsets of the free part.
  Code s = 0;
  do {
    f.insert(base | s);
    s = (s - free) & free;
  } while (s != 0);
  if (bounds == Bounds::OpenLo || bounds == Bounds::Open) f.erase(lo.bits());
  if (bounds == Bounds::OpenHi || bounds == Bounds::Open) f.erase(hi.bits());
  return f;
}

FamilyMask level(int n, int k) {
  check_ground(n);
  if (k < 0 || k > n) {
    fail(ErrorKind::Range, "level " + std::to_string(k) + " outside [0," + std::to_string(n) + "]");
  }
  FamilyMask f(n);
  const Code top = full_code(n);
  for (Code c = 0;; ++c) {
    if (popcount(c) == k) f.insert(c);
    if (c == top) break;
  }
  return f;
}

FamilyMask levels(int n, int lo, int hi) {
  check_ground(n);
  if (lo < 0 || hi > n || lo > hi) {
    fail(ErrorKind::Range, "level window [" + std::to_string(lo) + "," + std::to_string(hi) +
                               "] outside [0," + std::to_string(n) + "]");
  }
  FamilyMask f(n);
  const Code top = full_code(n);
  for (Code c = 0;; ++c) {
    const int p = popcount(c);
    if (p >= lo && p <= hi) f.insert(c);
    if (c == top) break;
  }
  return f;
}

FamilyMask up_family(int n, SubsetId x0, SubsetId y0) {
  check_strict(n, x0, y0);
  const Code base = x0.bits();
  const Code diff = y0.bits() & ~base;
  FamilyMask f(n);
  const Code rest = full_code(n) & ~base;
  Code s = 0;
  do {
    if (s != 0 && (s & diff) != 0) f.insert(base | s);
    s = (s - rest) & rest;
  } while (s != 0);
  return f;
}

FamilyMask down_family(int n, SubsetId x0, SubsetId y0) {
  check_strict(n, x0, y0);
  const Code top = y0.bits();
  const Code diff = top & ~x0.bits();
  FamilyMask f(n);
  Code s = 0;
  do {
    if (s != top && !is_subset(diff, s)) f.insert(s);
    s = (s - top) & top;
  } while (s != 0);
  return f;
}

SubsetId tl1_witness(int n, SubsetId x, SubsetId z, SubsetId w) {
  check_member(n, x);
  check_member(n, z);
  check_member(n, w);
  if (x.bits() == z.bits() || !is_subset(x.bits(), z.bits())) {
    fail(ErrorKind::Precondition, "X < Z fails: " + format_subset(x) + " vs " + format_subset(z));
  }
  if (z.size() < x.size() + 2) {
    fail(ErrorKind::Precondition, "|Z| >= |X|+2 fails: |X|=" + std::to_string(x.size()) +
                                      ", |Z|=" + std::to_string(z.size()));
  }
  if (is_subset(w.bits(), x.bits())) {
    fail(ErrorKind::Precondition, "W lies below X: " + format_subset(w));
  }
  if (is_subset(z.bits(), w.bits())) {
    fail(ErrorKind::Precondition, "W lies above Z: " + format_subset(w));
  }
  // Candidates are X plus one element of Z \ X; scanning the added element
  // upward yields increasing bitmasks.
  const Code diff = z.bits() & ~x.bits();
  for (int b = 0; b < n; ++b) {
    const Code e = Code{1} << b;
    if (!(diff & e)) continue;
    const Code cand = x.bits() | e;
    if (!is_subset(cand, w.bits()) && !is_subset(w.bits(), cand)) return SubsetId(n, cand);
  }
  fail(ErrorKind::Precondition, "no witness exists; preconditions inconsistent");
}

SubsetId parse_subset(int n, std::string_view text) {
  check_ground(n);
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  std::string_view t = trim(text);
  if (t.size() >= 2 && t[0] == '0' && (t[1] == 'b' || t[1] == 'B')) {
    Code bits = 0;
    if (t.size() == 2) fail(ErrorKind::Parse, "empty binary literal");
    if (t.size() - 2 > 32) fail(ErrorKind::Parse, "binary literal too long");
    for (char ch : t.substr(2)) {
      if (ch != '0' && ch != '1') fail(ErrorKind::Parse, "bad binary digit in '" + std::string(t) + "'");
      bits = (bits << 1) | static_cast<Code>(ch - '0');
    }
    return SubsetId(n, bits);
  }
  if (t.size() < 2 || t.front() != '{' || t.back() != '}') {
    fail(ErrorKind::Parse, "subset literal must be {..} or 0b..: '" + std::string(t) + "'");
  }
  std::string_view body = trim(t.substr(1, t.size() - 2));
  Code bits = 0;
  while (!body.empty()) {
    const auto comma = body.find(',');
    std::string_view tok = trim(body.substr(0, comma));
    if (tok.empty()) fail(ErrorKind::Parse, "empty element in '" + std::string(t) + "'");
    int value = 0;
    for (char ch : tok) {
      if (!std::isdigit(static_cast<unsigned char>(ch)) || value > 1000) {
        fail(ErrorKind::Parse, "bad element '" + std::string(tok) + "'");
      }
      value = value * 10 + (ch - '0');
    }
    if (value < 1 || value > n) {
      fail(ErrorKind::InvalidBits, "element " + std::to_string(value) + " outside [1," +
                                       std::to_string(n) + "]");
    }
    bits |= Code{1} << (value - 1);
    if (comma == std::string_view::npos) break;
    body = body.substr(comma + 1);
    if (trim(body).empty()) fail(ErrorKind::Parse, "trailing comma in '" + std::string(t) + "'");
  }
  return SubsetId(n, bits);
}

std::string format_subset(Code bits) {
  std::string out = "{";
  bool first = true;
  for (int b = 0; b < 32; ++b) {
    if ((bits >> b) & 1u) {
      if (!first) out += ',';
      out += std::to_string(b + 1);
      first = false;
    }
  }
  out += '}';
  return out;
}

std::string format_family(const FamilyMask& f) {
  std::string out = "[";
  bool first = true;
  for (Code c : f.canonical_codes()) {
    if (!first) out += ',';
    out += format_subset(c);
    first = false;
  }
  out += ']';
  return out;
}

}  // namespace rlw

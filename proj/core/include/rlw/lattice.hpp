#pragma once

// Boolean lattice B_n on ground set [n] = {1..n}.  A subset is a bitmask
// with bit i-1 standing for element i.

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace rlw {

inline constexpr int kMaxGround = 24;

using Code = std::uint32_t;

inline bool is_subset(Code a, Code b) noexcept { return (a & ~b) == 0; }
inline int popcount(Code a) noexcept { return std::popcount(a); }
inline Code full_code(int n) noexcept { return n >= 32 ? ~Code{0} : (Code{1} << n) - 1; }

// Throws a capacity error unless 1 <= n <= kMaxGround.
void check_ground(int n);

class SubsetId {
 public:
  constexpr SubsetId() = default;
  SubsetId(int n, Code bits);

  static SubsetId empty(int n) { return SubsetId(n, 0); }
  static SubsetId full(int n) { return SubsetId(n, full_code(n)); }
  static SubsetId of(int n, std::initializer_list<int> elements);

  Code bits() const noexcept { return bits_; }
  int n() const noexcept { return n_; }
  int size() const noexcept { return popcount(bits_); }
  bool contains(int element) const noexcept {
    return element >= 1 && element <= n_ && ((bits_ >> (element - 1)) & 1u);
  }

  friend bool operator==(const SubsetId&, const SubsetId&) = default;

 private:
  Code bits_ = 0;
  std::uint8_t n_ = 0;
};

// Strict weak order (size, bitmask) used for every canonical listing.
inline bool canonical_less(Code a, Code b) noexcept {
  const int pa = popcount(a);
  const int pb = popcount(b);
  return pa != pb ? pa < pb : a < b;
}

// All 2^n codes sorted by (size, bitmask).
std::vector<Code> canonical_order(int n);
// rank[code] = position of code in canonical_order(n).
std::vector<std::uint32_t> canonical_rank(int n);

enum class OrderRelation { Less, Greater, Equal, Incomparable };

const char* to_string(OrderRelation r) noexcept;

OrderRelation compare(int n, SubsetId x, SubsetId y);

class FamilyMask {
 public:
  FamilyMask() = default;
  explicit FamilyMask(int n);

  static FamilyMask all(int n);
  static FamilyMask from_codes(int n, const std::vector<Code>& codes);

  int n() const noexcept { return n_; }
  std::size_t universe() const noexcept { return std::size_t{1} << n_; }

  bool contains(Code c) const noexcept { return (words_[c >> 6] >> (c & 63)) & 1u; }
  bool contains(SubsetId s) const { return contains(s.bits()); }
  void insert(Code c) noexcept { words_[c >> 6] |= std::uint64_t{1} << (c & 63); }
  void erase(Code c) noexcept { words_[c >> 6] &= ~(std::uint64_t{1} << (c & 63)); }

  std::size_t count() const noexcept;
  bool empty() const noexcept { return count() == 0; }

  FamilyMask& operator|=(const FamilyMask& o);
  FamilyMask& operator&=(const FamilyMask& o);
  FamilyMask& operator-=(const FamilyMask& o);
  friend FamilyMask operator|(FamilyMask a, const FamilyMask& b) { return a |= b; }
  friend FamilyMask operator&(FamilyMask a, const FamilyMask& b) { return a &= b; }
  friend FamilyMask operator-(FamilyMask a, const FamilyMask& b) { return a -= b; }
  FamilyMask complement() const;

  friend bool operator==(const FamilyMask&, const FamilyMask&) = default;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t word = words_[w];
      while (word) {
        const int b = std::countr_zero(word);
        f(static_cast<Code>(w * 64 + b));
        word &= word - 1;
      }
    }
  }

  std::vector<Code> codes() const;            // bitmask order
  std::vector<Code> canonical_codes() const;  // (size, bitmask) order

 private:
  void same_ground(const FamilyMask& o) const;

  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

enum class Bounds { Closed, OpenLo, OpenHi, Open };

FamilyMask interval(int n, SubsetId lo, SubsetId hi, Bounds bounds);
FamilyMask level(int n, int k);
FamilyMask levels(int n, int lo, int hi);  // union of levels lo..hi

// {Z : X0 < Z, Z meets Y0 \ X0}
FamilyMask up_family(int n, SubsetId x0, SubsetId y0);
// {Z : Z < Y0, Z does not contain Y0 \ X0}
FamilyMask down_family(int n, SubsetId x0, SubsetId y0);

// Smallest-bitmask W0 with X < W0 < Z, |W0| = |X|+1 and W0 incomparable to W.
SubsetId tl1_witness(int n, SubsetId x, SubsetId z, SubsetId w);

// Literals: "{1,3,4}", "{}" or "0b1101" (bit i-1 = element i, so 0b1101 = {1,3,4}).
SubsetId parse_subset(int n, std::string_view text);
std::string format_subset(Code bits);
inline std::string format_subset(SubsetId s) { return format_subset(s.bits()); }
// Canonically ordered list "[{},{1},...]".
std::string format_family(const FamilyMask& f);

}  // namespace rlw

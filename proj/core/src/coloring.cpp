#include "rlw/coloring.hpp"

#include <algorithm>

#include "rlw/error.hpp"

namespace rlw {

Coloring::Coloring(int n, std::vector<Color> by_code, int k) : n_(n), k_(k), colors_(std::move(by_code)) {
  check_ground(n);
  if (k < 1) fail(ErrorKind::Range, "palette size must be positive");
  if (colors_.size() != (std::size_t{1} << n)) {
    fail(ErrorKind::Range, "coloring of B_" + std::to_string(n) + " needs " +
                               std::to_string(std::size_t{1} << n) + " colors, got " +
                               std::to_string(colors_.size()));
  }
  std::vector<bool> seen(static_cast<std::size_t>(k), false);
  for (Color c : colors_) {
    if (c >= static_cast<Color>(k)) {
      fail(ErrorKind::Range, "color " + std::to_string(c + 1) + " exceeds palette " + std::to_string(k));
    }
    if (!seen[c]) {
      seen[c] = true;
      ++distinct_;
    }
  }
}

Coloring Coloring::from_canonical(int n, int k, const std::vector<int>& one_based) {
  check_ground(n);
  const auto order = canonical_order(n);
  if (one_based.size() != order.size()) {
    fail(ErrorKind::Range, "expected " + std::to_string(order.size()) + " colors, got " +
                               std::to_string(one_based.size()));
  }
  std::vector<Color> by_code(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (one_based[i] < 1) fail(ErrorKind::Range, "colors are 1-based; got " + std::to_string(one_based[i]));
    by_code[order[i]] = static_cast<Color>(one_based[i] - 1);
  }
  return Coloring(n, std::move(by_code), k);
}

Coloring Coloring::constant(int n, Color c, int k) {
  check_ground(n);
  return Coloring(n, std::vector<Color>(std::size_t{1} << n, c), k);
}

FamilyMask Coloring::color_class(Color c) const {
  FamilyMask f(n_);
  for (Code s = 0; s < colors_.size(); ++s)
    if (colors_[s] == c) f.insert(s);
  return f;
}

std::vector<int> Coloring::to_canonical() const {
  std::vector<int> out;
  out.reserve(colors_.size());
  for (Code s : canonical_order(n_)) out.push_back(static_cast<int>(colors_[s]) + 1);
  return out;
}

Coloring Coloring::relabeled(const std::vector<Color>& perm) const {
  Color top = 0;
  for (Color c : perm) top = std::max(top, c);
  std::vector<Color> out(colors_.size());
  for (std::size_t s = 0; s < colors_.size(); ++s) {
    if (colors_[s] >= perm.size()) fail(ErrorKind::Range, "relabeling is shorter than the palette");
    out[s] = perm[colors_[s]];
  }
  return Coloring(n_, std::move(out), std::max<int>(k_, static_cast<int>(top) + 1));
}

Code permute_code(Code c, const std::vector<int>& perm) {
  Code out = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    if ((c >> i) & 1u) out |= Code{1} << (perm[i] - 1);
  return out;
}

Coloring Coloring::permuted_ground(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != n_) fail(ErrorKind::Range, "permutation length differs from n");
  std::vector<bool> hit(n_, false);
  for (int p : perm) {
    if (p < 1 || p > n_ || hit[p - 1]) fail(ErrorKind::Range, "not a permutation of [n]");
    hit[p - 1] = true;
  }
  std::vector<Color> out(colors_.size());
  for (Code s = 0; s < colors_.size(); ++s) out[permute_code(s, perm)] = colors_[s];
  return Coloring(n_, std::move(out), k_);
}

Coloring Coloring::complemented() const {
  std::vector<Color> out(colors_.size());
  const Code top = full_code(n_);
  for (Code s = 0; s < colors_.size(); ++s) out[top & ~s] = colors_[s];
  return Coloring(n_, std::move(out), k_);
}

}  // namespace rlw

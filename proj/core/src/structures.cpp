#include "rlw/structures.hpp"

#include <algorithm>
#include <set>

#include "rlw/error.hpp"

namespace rlw {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

FamilyMask single(int n, SubsetId s) {
  FamilyMask f(n);
  f.insert(s.bits());
  return f;
}

FamilyMask closed(int n, Code lo, Code hi) { return interval(n, SubsetId(n, lo), SubsetId(n, hi), Bounds::Closed); }
FamilyMask open(int n, Code lo, Code hi) { return interval(n, SubsetId(n, lo), SubsetId(n, hi), Bounds::Open); }
FamilyMask open_lo(int n, Code lo, Code hi) { return interval(n, SubsetId(n, lo), SubsetId(n, hi), Bounds::OpenLo); }
FamilyMask open_hi(int n, Code lo, Code hi) { return interval(n, SubsetId(n, lo), SubsetId(n, hi), Bounds::OpenHi); }

void require(bool ok, const std::string& what) {
  if (!ok) fail(ErrorKind::Precondition, what);
}

void check_pair(int n, SubsetId x0, SubsetId y0) {
  require(x0.n() == n && y0.n() == n, "parameters are over a different ground set");
  require(x0.bits() != 0, "X0 must be nonempty");
  require(y0.bits() != full_code(n), "Y0 must differ from [n]");
  require(is_subset(x0.bits(), y0.bits()) && x0.bits() != y0.bits(), "X0 must be strictly below Y0");
  require(y0.size() >= x0.size() + 2, "|Y0| >= |X0|+2 fails");
}

std::vector<std::string> family_names(std::size_t count) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < count; ++i) names.push_back("F" + std::to_string(i + 1));
  return names;
}

FamilyLayout make_layout(std::vector<FamilyMask> families, FamilyMask free_class, int low, int high) {
  FamilyLayout l;
  l.names = family_names(families.size());
  l.families = std::move(families);
  l.free_class = std::move(free_class);
  l.free_allowed = {low, high};
  return l;
}

}  // namespace

std::string type_name(const StructureInstance& inst) {
  return std::visit(overloaded{
                        [](const C3Shape&) { return std::string("C3Shape"); },
                        [](const V2Case1&) { return std::string("V2Case1"); },
                        [](const V2Case2&) { return std::string("V2Case2"); },
                        [](const Type1&) { return std::string("Type1"); },
                        [](const Type2&) { return std::string("Type2"); },
                        [](const Type3_1&) { return std::string("Type3_1"); },
                        [](const Type3_2&) { return std::string("Type3_2"); },
                        [](const Type4_1&) { return std::string("Type4_1"); },
                        [](const Type4_2&) { return std::string("Type4_2"); },
                        [](const Type5&) { return std::string("Type5"); },
                    },
                    inst);
}

void validate_instance(int n, const StructureInstance& inst) {
  check_ground(n);
  std::visit(overloaded{
                 [](const C3Shape&) {},
                 [](const V2Case2&) {},
                 [](const Type5&) {},
                 [&](const V2Case1& v) {
                   require(v.A.n() == n, "A is over a different ground set");
                   require(v.A.size() <= n - 2, "|A| <= n-2 fails");
                 },
                 [&](const Type1& t) { check_pair(n, t.X0, t.Y0); },
                 [&](const Type2& t) { check_pair(n, t.X0, t.Y0); },
                 [&](const Type3_1& t) { check_pair(n, t.X0, t.Y0); },
                 [&](const Type3_2& t) { check_pair(n, t.X0, t.Y0); },
                 [&](const Type4_1& t) {
                   require(t.X0.n() == n && t.Y_family.n() == n, "parameters are over a different ground set");
                   require(t.X0.size() >= 1 && t.X0.size() <= n - 2, "1 <= |X0| <= n-2 fails");
                   require(!t.Y_family.empty(), "Y_family must be nonempty");
                   const FamilyMask range = open_lo(n, t.X0.bits(), full_code(n));
                   require((t.Y_family - range).empty(), "Y_family must lie in (X0,[n]]");
                 },
                 [&](const Type4_2& t) {
                   require(t.Y0.n() == n && t.X_family.n() == n, "parameters are over a different ground set");
                   require(t.Y0.size() >= 2 && t.Y0.size() <= n - 1, "2 <= |Y0| <= n-1 fails");
                   require(!t.X_family.empty(), "X_family must be nonempty");
                   const FamilyMask range = open(n, 0, t.Y0.bits());
                   require((t.X_family - range).empty(), "X_family must lie in (∅,Y0)");
                 },
             },
             inst);
}

FamilyLayout structure_layout(int n, const StructureInstance& inst) {
  validate_instance(n, inst);
  const Code top = full_code(n);
  const FamilyMask all = FamilyMask::all(n);
  return std::visit(
      overloaded{
          [&](const Type1& t) {
            const Code x = t.X0.bits(), y = t.Y0.bits();
            const FamilyMask low = closed(n, 0, y), high = closed(n, x, top), mid = closed(n, x, y);
            return make_layout({low - mid, single(n, t.X0), open(n, x, y), single(n, t.Y0), high - mid},
                               all - (low | high), 0, 4);
          },
          [&](const Type2& t) {
            const Code x = t.X0.bits(), y = t.Y0.bits();
            const FamilyMask low = closed(n, 0, y), high = closed(n, x, top), mid = closed(n, x, y);
            return make_layout({low - mid, single(n, t.X0) | single(n, t.Y0), open(n, x, y), high - mid},
                               all - (low | high), 0, 3);
          },
          [&](const Type3_1& t) {
            const Code x = t.X0.bits(), y = t.Y0.bits();
            const FamilyMask low = closed(n, 0, y), mid = closed(n, x, y);
            const FamilyMask up = up_family(n, t.X0, t.Y0);
            return make_layout(
                {low - mid, single(n, t.X0) | (up - open_lo(n, x, y)), open(n, x, y), single(n, t.Y0)},
                all - (low | up), 0, 1);
          },
          [&](const Type3_2& t) {
            const Code x = t.X0.bits(), y = t.Y0.bits();
            const FamilyMask high = closed(n, x, top), mid = closed(n, x, y);
            const FamilyMask down = down_family(n, t.X0, t.Y0);
            return make_layout(
                {high - mid, single(n, t.Y0) | (down - open_hi(n, x, y)), open(n, x, y), single(n, t.X0)},
                all - (high | down), 0, 1);
          },
          [&](const Type4_1& t) {
            const Code x = t.X0.bits();
            FamilyMask below(n), f1(n);
            t.Y_family.for_each([&](Code y) {
              const FamilyMask b = open_hi(n, 0, y);
              below |= b;
              f1 |= b - open_hi(n, x, y);
            });
            const FamilyMask above = open_lo(n, x, top);
            return make_layout({f1, single(n, t.X0), above - t.Y_family, t.Y_family},
                               all - (closed(n, x, top) | below), 0, 2);
          },
          [&](const Type4_2& t) {
            const Code y = t.Y0.bits();
            FamilyMask above(n), f1(n);
            t.X_family.for_each([&](Code x) {
              const FamilyMask a = open_lo(n, x, top);
              above |= a;
              f1 |= a - open_lo(n, x, y);
            });
            return make_layout({f1, single(n, t.Y0), open_hi(n, 0, y) - t.X_family, t.X_family},
                               all - (closed(n, 0, y) | above), 0, 2);
          },
          [&](const V2Case1& v) {
            const Code a = v.A.bits();
            FamilyLayout l = make_layout({all - closed(n, a, top), single(n, v.A), open(n, a, top)}, FamilyMask(n), 0, 0);
            l.top_separate = true;
            return l;
          },
          [&](const auto&) -> FamilyLayout {
            fail(ErrorKind::NotGenerable, type_name(inst) + " is a predicate shape without a family layout");
          },
      },
      inst);
}

StructurePalette default_palette(int n, const StructureInstance& inst) {
  const FamilyLayout l = structure_layout(n, inst);
  StructurePalette p;
  for (std::size_t i = 0; i < l.families.size(); ++i) p.family_colors.push_back(static_cast<Color>(i));
  return p;
}

Coloring generate_structure(int n, const StructureInstance& inst, const StructurePalette& palette) {
  if (std::holds_alternative<C3Shape>(inst) || std::holds_alternative<V2Case2>(inst) ||
      std::holds_alternative<Type5>(inst)) {
    fail(ErrorKind::NotGenerable, type_name(inst) + " has no generator");
  }
  const FamilyLayout l = structure_layout(n, inst);
  if (palette.family_colors.size() != l.families.size()) {
    fail(ErrorKind::PaletteCollision, type_name(inst) + " needs " + std::to_string(l.families.size()) +
                                          " family colors, got " + std::to_string(palette.family_colors.size()));
  }
  for (std::size_t i = 0; i < l.families.size(); ++i)
    for (std::size_t j = i + 1; j < l.families.size(); ++j)
      if (palette.family_colors[i] == palette.family_colors[j]) {
        fail(ErrorKind::PaletteCollision, l.names[i] + " and " + l.names[j] + " share color " +
                                              std::to_string(palette.family_colors[i] + 1));
      }
  constexpr Color unset = ~Color{0};
  std::vector<Color> col(std::size_t{1} << n, unset);
  for (std::size_t i = 0; i < l.families.size(); ++i) {
    l.families[i].for_each([&](Code s) { col[s] = palette.family_colors[i]; });
  }
  l.free_class.for_each([&](Code s) {
    int side = palette.free.mode == FreeChoice::Mode::AllHigh ? 1 : 0;
    if (palette.free.mode == FreeChoice::Mode::PerSet) {
      auto it = palette.free.per_set.find(s);
      if (it != palette.free.per_set.end()) side = it->second;
    }
    if (side != 0 && side != 1) fail(ErrorKind::Range, "free-class choice must be low or high");
    col[s] = palette.family_colors[l.free_allowed[side]];
  });
  if (palette.free.mode == FreeChoice::Mode::PerSet) {
    for (const auto& [code, side] : palette.free.per_set) {
      (void)side;
      if (code >= col.size() || !l.free_class.contains(code)) {
        fail(ErrorKind::Precondition, format_subset(code) + " is not in the free class");
      }
    }
  }
  Color max_color = 0;
  for (Color c : palette.family_colors) max_color = std::max(max_color, c);
  if (l.top_separate) {
    const Color t = palette.top_color.value_or(max_color + 1);
    col[full_code(n)] = t;
    max_color = std::max(max_color, t);
  }
  Color used_max = 0;
  for (Color c : col) {
    if (c == unset) fail(ErrorKind::Precondition, "layout leaves a set uncolored");
    used_max = std::max(used_max, c);
  }
  return Coloring(n, std::move(col), static_cast<int>(used_max) + 1);
}

namespace {

// Color shared by every member, or nullopt if the family is not monochromatic.
std::optional<Color> mono_color(const Coloring& c, const FamilyMask& f) {
  std::optional<Color> col;
  bool ok = true;
  f.for_each([&](Code s) {
    if (!ok) return;
    if (!col) col = c(s);
    else if (*col != c(s)) ok = false;
  });
  if (!ok) return std::nullopt;
  return col;
}

bool matches_layout(const Coloring& c, const FamilyLayout& l) {
  std::vector<std::optional<Color>> colors;
  for (const auto& f : l.families) {
    if (f.empty()) {
      colors.push_back(std::nullopt);
      continue;
    }
    auto col = mono_color(c, f);
    if (!col) return false;
    colors.push_back(col);
  }
  for (std::size_t i = 0; i < colors.size(); ++i)
    for (std::size_t j = i + 1; j < colors.size(); ++j)
      if (colors[i] && colors[j] && *colors[i] == *colors[j]) return false;
  const auto& lo = colors[l.free_allowed[0]];
  const auto& hi = colors[l.free_allowed[1]];
  bool ok = true;
  l.free_class.for_each([&](Code s) {
    const Color col = c(s);
    if (!((lo && *lo == col) || (hi && *hi == col))) ok = false;
  });
  return ok;
}

int colors_in(const Coloring& c, const FamilyMask& f) {
  std::set<Color> seen;
  f.for_each([&](Code s) { seen.insert(c(s)); });
  return static_cast<int>(seen.size());
}

bool matches_v2_case2(const Coloring& c) {
  const int n = c.n();
  const Code top = full_code(n);
  std::set<Color> below;
  for (Code s = 0; s < top; ++s) below.insert(c(s));
  return below.size() == 2 && !below.count(c(top));
}

}  // namespace

bool matches_structure(const Coloring& c, const StructureInstance& inst) {
  const int n = c.n();
  if (std::holds_alternative<C3Shape>(inst)) return check_c3_shape(c);
  if (std::holds_alternative<V2Case2>(inst)) return matches_v2_case2(c);
  if (std::holds_alternative<Type5>(inst)) return check_type5(c).holds;
  FamilyLayout l;
  try {
    l = structure_layout(n, inst);
  } catch (const Error&) {
    return false;
  }
  if (!matches_layout(c, l)) return false;
  if (l.top_separate) {
    // With four colors in play the top set must carry the fourth one; with
    // three it is unrestricted.
    const Code top = full_code(n);
    if (c.distinct_colors() == 4) {
      for (Code s = 0; s < top; ++s)
        if (c(s) == c(top)) return false;
    }
  }
  return true;
}

bool check_c3_shape(const Coloring& c) {
  const int n = c.n();
  const Code top = full_code(n);
  const Color base = c(0);
  if (c(top) != base) return false;
  for (Code x = 1; x < top; ++x) {
    if (c(x) == base) continue;
    for (Code y = x + 1; y < top; ++y) {
      if (c(y) == base || c(y) == c(x)) continue;
      if (is_subset(x, y) || is_subset(y, x)) return false;
    }
  }
  return true;
}

std::optional<StructureInstance> classify_v2(const Coloring& c) {
  const int n = c.n();
  for (Code a : canonical_order(n)) {
    if (popcount(a) > n - 2) break;
    StructureInstance inst = V2Case1{SubsetId(n, a)};
    if (matches_structure(c, inst)) return inst;
  }
  if (matches_v2_case2(c)) return StructureInstance{V2Case2{}};
  return std::nullopt;
}

std::optional<StructureInstance> classify_b2(const Coloring& c) {
  const int n = c.n();
  const Code top = full_code(n);
  if (c(0) == c(top)) {
    Type5Report r = check_type5(c);
    if (!r.holds) return std::nullopt;
    Type5 t;
    t.chains = std::move(r.four_chains);
    for (auto& ch : r.three_chains) t.chains.push_back(std::move(ch));
    return StructureInstance{std::move(t)};
  }
  const auto order = canonical_order(n);
  std::vector<std::pair<Code, Code>> pairs;
  for (Code x : order) {
    if (x == 0) continue;
    for (Code y : order) {
      if (y == top || !is_subset(x, y) || popcount(y) < popcount(x) + 2) continue;
      pairs.emplace_back(x, y);
    }
  }
  auto try_pairs = [&](auto make) -> std::optional<StructureInstance> {
    for (auto [x, y] : pairs) {
      StructureInstance inst = make(SubsetId(n, x), SubsetId(n, y));
      if (matches_structure(c, inst)) return inst;
    }
    return std::nullopt;
  };
  if (auto r = try_pairs([](SubsetId x, SubsetId y) { return StructureInstance{Type1{x, y}}; })) return r;
  if (auto r = try_pairs([](SubsetId x, SubsetId y) { return StructureInstance{Type2{x, y}}; })) return r;
  if (auto r = try_pairs([](SubsetId x, SubsetId y) { return StructureInstance{Type3_1{x, y}}; })) return r;
  if (auto r = try_pairs([](SubsetId x, SubsetId y) { return StructureInstance{Type3_2{x, y}}; })) return r;

  // Candidate families are the color classes inside the allowed range, taken
  // in order of their first member.
  auto classes_within = [&](const FamilyMask& range) {
    std::vector<FamilyMask> out;
    std::vector<Color> seen;
    for (Code s : range.canonical_codes()) {
      const Color col = c(s);
      if (std::find(seen.begin(), seen.end(), col) != seen.end()) continue;
      seen.push_back(col);
      out.push_back(c.color_class(col) & range);
    }
    return out;
  };
  for (Code x : order) {
    const int sx = popcount(x);
    if (sx < 1 || sx > n - 2) continue;
    const FamilyMask range = open_lo(n, x, top);
    const auto classes = classes_within(range);
    if (classes.size() > 2) continue;
    for (const auto& fam : classes) {
      StructureInstance inst = Type4_1{SubsetId(n, x), fam};
      if (matches_structure(c, inst)) return inst;
    }
  }
  for (Code y : order) {
    const int sy = popcount(y);
    if (sy < 2 || sy > n - 1) continue;
    const FamilyMask range = open(n, 0, y);
    for (const auto& fam : classes_within(range)) {
      StructureInstance inst = Type4_2{SubsetId(n, y), fam};
      if (matches_structure(c, inst)) return inst;
    }
  }
  return std::nullopt;
}

namespace {

// Family conditions around a rainbow 4-chain with bottom w and top y.
bool four_chain_families(const Coloring& c, Code w, Code y) {
  const int n = c.n();
  const Code top = full_code(n);
  const SubsetId W(n, w), Y(n, y);
  const FamilyMask up = up_family(n, W, Y);
  const FamilyMask down = down_family(n, W, Y);
  const FamilyMask g1 = (up | down) - closed(n, w, y);
  const FamilyMask g3 = open(n, w, y);
  const auto c1 = mono_color(c, g1);
  const auto c3 = mono_color(c, g3);
  if (!c1 || !c3) return false;
  const Color c2 = c(w), c4 = c(y);
  const std::set<Color> distinct{*c1, c2, *c3, c4};
  if (distinct.size() != 4) return false;
  bool ok = true;
  (open_hi(n, 0, y) - down).for_each([&](Code s) {
    if (c(s) != *c1 && c(s) != c4) ok = false;
  });
  (open_lo(n, w, top) - up).for_each([&](Code s) {
    if (c(s) != *c1 && c(s) != c2) ok = false;
  });
  return ok;
}

}  // namespace

Type5Report check_type5(const Coloring& c) {
  Type5Report r;
  const int n = c.n();
  const Code top = full_code(n);
  const auto fmt = [&](std::initializer_list<Code> cs) {
    std::vector<SubsetId> v;
    for (Code s : cs) v.emplace_back(n, s);
    return v;
  };
  if (c(0) != c(top)) {
    r.failure = "c(∅) differs from c([n])";
    return r;
  }
  r.max_chain = max_rainbow_chain(c).length;
  r.chain_cap = r.max_chain <= 4;

  // Rainbow 4-chains (W,X,Y,[n]) and (∅,W,X,Y); both impose the same family
  // conditions on the pair (W,Y).
  r.clause_four = true;
  std::set<std::pair<Code, Code>> checked;
  const auto order = canonical_order(n);
  for (Code w : order) {
    if (w == 0 || w == top) continue;
    for (Code y : order) {
      if (y == top || !is_subset(w, y) || popcount(y) < popcount(w) + 2) continue;
      const Color cw = c(w), cy = c(y);
      if (cw == cy) continue;
      const Color anchor = c(top);  // equals c(∅)
      if (cw == anchor || cy == anchor) continue;
      std::optional<Code> mid;
      for (Code x : open(n, w, y).canonical_codes()) {
        const Color cx = c(x);
        if (cx != cw && cx != cy && cx != anchor) {
          mid = x;
          break;
        }
      }
      if (!mid) continue;
      r.four_chains.push_back(fmt({w, *mid, y, top}));
      r.four_chains.push_back(fmt({0, w, *mid, y}));
      if (checked.insert({w, y}).second && !four_chain_families(c, w, y)) {
        r.clause_four = false;
        if (r.failure.empty()) r.failure = "families around " + format_subset(w) + " < " + format_subset(y);
      }
    }
  }

  // Non-extendable rainbow 3-chains (W,Y,[n]) and the mirror (∅,W,Y).
  auto three_colors = [&](Code w, Code y) {
    return colors_in(c, closed(n, 0, y) | closed(n, w, top)) == 3;
  };
  auto extendable = [&](Code lo, Code mid, Code hi, Color a, Color b, Color d) {
    for (Code z = 0; z <= top; ++z) {
      if (z == lo || z == mid || z == hi) continue;
      const Color cz = c(z);
      if (cz == a || cz == b || cz == d) continue;
      const bool fits = is_subset(z, lo) || (is_subset(lo, z) && is_subset(z, mid)) ||
                        (is_subset(mid, z) && is_subset(z, hi)) || is_subset(hi, z);
      if (fits) return true;
    }
    return false;
  };
  r.clause_three = true;
  r.mirror_three = true;
  for (Code w : order) {
    if (w == 0 || w == top) continue;
    for (Code y : order) {
      if (y == top || y == w || !is_subset(w, y)) continue;
      const Color cw = c(w), cy = c(y), ct = c(top);
      if (cw == cy || cw == ct || cy == ct) continue;
      if (!extendable(w, y, top, cw, cy, ct)) {
        r.three_chains.push_back(fmt({w, y, top}));
        if (!three_colors(w, y)) {
          r.clause_three = false;
          if (r.failure.empty()) r.failure = "colors near " + format_subset(w) + " < " + format_subset(y) + " < [n]";
        }
      }
      if (!extendable(0, w, y, ct, cw, cy) && !three_colors(w, y)) r.mirror_three = false;
    }
  }
  if (!r.chain_cap && r.failure.empty()) r.failure = "rainbow chain of length " + std::to_string(r.max_chain);
  r.holds = r.chain_cap && r.clause_four && r.clause_three;
  return r;
}

Coloring type5_from_chain(int n, SubsetId w, SubsetId x, SubsetId y) {
  check_ground(n);
  const Code top = full_code(n);
  require(w.bits() != 0, "W must be nonempty");
  require(is_subset(w.bits(), x.bits()) && w.bits() != x.bits(), "W < X fails");
  require(is_subset(x.bits(), y.bits()) && x.bits() != y.bits(), "X < Y fails");
  require(y.bits() != top, "Y must differ from [n]");
  std::vector<Color> col(std::size_t{1} << n, 0);
  col[w.bits()] = 1;
  open(n, w.bits(), y.bits()).for_each([&](Code s) { col[s] = 2; });
  col[y.bits()] = 3;
  return Coloring(n, std::move(col), 4);
}

namespace {

long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

Coloring lower_bound_gr_c3(int s, int k) {
  if (s < 3) fail(ErrorKind::Range, "s must be at least 3");
  const int n = s - 1;
  check_ground(n);
  const long long cap = binom(n, (n + 1) / 2) + 1;
  if (k < 3 || k > cap) {
    fail(ErrorKind::Range, "k = " + std::to_string(k) + " outside [3," + std::to_string(cap) + "]");
  }
  const int mid = n / 2;
  std::vector<Color> col(std::size_t{1} << n, 0);
  int next = 1;
  for (Code x = 0; x <= full_code(n); ++x) {
    if (popcount(x) != mid) continue;
    col[x] = next <= k - 1 ? static_cast<Color>(next) : 1;
    ++next;
  }
  return Coloring(n, std::move(col), k);
}

Coloring lower_bound_gr_v2(int s, int k) {
  if (k == 3) {
    if (s < 2) fail(ErrorKind::Range, "k = 3 needs s >= 2");
    const int n = 2 * s - 2;
    check_ground(n);
    std::vector<Color> col(std::size_t{1} << n);
    for (Code x = 0; x <= full_code(n); ++x) col[x] = popcount(x) <= s - 2 ? 0 : 1;
    col[full_code(n)] = 2;
    return Coloring(n, std::move(col), 3);
  }
  if (k == 4) {
    if (s < 4) fail(ErrorKind::Range, "k = 4 needs s >= 4");
    const int n = s - 1;
    check_ground(n);
    const Code top = full_code(n);
    std::vector<Color> col(std::size_t{1} << n, 0);
    col[1] = 1;
    open(n, 1, top).for_each([&](Code x) { col[x] = 2; });
    col[top] = 3;
    return Coloring(n, std::move(col), 4);
  }
  fail(ErrorKind::Range, "k must be 3 or 4");
}

Coloring layered_coloring(int e, const PatternPoset& q) {
  if (e < 1) fail(ErrorKind::Range, "e must be positive");
  if (q.size() < 2) fail(ErrorKind::Range, "q needs at least two elements");
  const bool extra_top = !q.has_maximum();
  const bool extra_bottom = !q.has_minimum();
  const int blocks = q.size() - 1;
  const int n = e * blocks + (extra_top ? 1 : 0) + (extra_bottom ? 1 : 0) - 1;
  if (n < 1) fail(ErrorKind::Range, "construction degenerates to B_0");
  check_ground(n);
  std::vector<Color> col(std::size_t{1} << n);
  const int shift = extra_bottom ? 1 : 0;
  Color next = static_cast<Color>(blocks);
  const Color bottom_color = extra_bottom ? next++ : 0;
  const Color top_color = extra_top ? next++ : 0;
  for (Code x = 0; x <= full_code(n); ++x) {
    const int lv = popcount(x);
    if (extra_bottom && lv == 0) col[x] = bottom_color;
    else if (extra_top && lv == n) col[x] = top_color;
    else col[x] = static_cast<Color>((lv - shift) / e);
  }
  return Coloring(n, std::move(col), static_cast<int>(next));
}

std::vector<BlobSublattice> blob_partition(int m, int n0) {
  if (m < 1 || n0 < 1) fail(ErrorKind::Range, "m and n0 must be positive");
  const long long big_n = static_cast<long long>(m) * n0 + m;
  if (big_n > kMaxGround) {
    fail(ErrorKind::Capacity, "blob host B_" + std::to_string(big_n) + " exceeds the lattice cap");
  }
  const int n = static_cast<int>(big_n);
  auto block = [&](int l) {
    Code r = 0;
    for (int e = m + (l - 1) * n0 + 1; e <= m + l * n0; ++e) r |= Code{1} << (e - 1);
    return r;
  };
  std::vector<Code> labels;
  for (Code s = 1; s < (Code{1} << m); ++s) labels.push_back(s);
  std::sort(labels.begin(), labels.end(), canonical_less);
  std::vector<BlobSublattice> out;
  for (Code lab : labels) {
    BlobSublattice b;
    for (int i = 0; i < m; ++i)
      if ((lab >> i) & 1u) b.label.push_back(i + 1);
    const int j = popcount(lab);
    Code lo = lab;
    for (int l = 1; l < j; ++l) lo |= block(l);
    b.lo = SubsetId(n, lo);
    b.hi = SubsetId(n, lo | block(j));
    out.push_back(std::move(b));
  }
  return out;
}

std::optional<BlobSublattice> blob_with_few_colors(const Coloring& c, int m, int n0) {
  const auto parts = blob_partition(m, n0);
  if (c.n() != m * n0 + m) fail(ErrorKind::Precondition, "coloring is not over B_" + std::to_string(m * n0 + m));
  const int limit = (1 << m) - 1;
  for (const auto& b : parts) {
    if (colors_in(c, closed(c.n(), b.lo.bits(), b.hi.bits())) <= limit) return b;
  }
  return std::nullopt;
}

}  // namespace rlw

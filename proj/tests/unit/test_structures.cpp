#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "rlw/error.hpp"
#include "rlw/search.hpp"
#include "rlw/structures.hpp"

using namespace rlw;

namespace {

Coloring lift(int n, const oracle::Coloring& v) {
  std::vector<Color> col(v.begin(), v.end());
  int k = 0;
  for (int x : v) k = std::max(k, x + 1);
  return Coloring(n, col, k);
}

oracle::Coloring raw(const Coloring& c) { return oracle::Coloring(c.by_code().begin(), c.by_code().end()); }

// All (X0, Y0) with X0 nonempty, Y0 != [n], X0 < Y0 and |Y0| >= |X0| + 2.
std::vector<std::pair<SubsetId, SubsetId>> pairs(int n) {
  std::vector<std::pair<SubsetId, SubsetId>> out;
  const Code top = full_code(n);
  for (Code x = 1; x < top; ++x)
    for (Code y = 0; y < top; ++y)
      if (is_subset(x, y) && popcount(y) >= popcount(x) + 2) out.push_back({SubsetId(n, x), SubsetId(n, y)});
  return out;
}

}  // namespace

TEST_SUITE("structures") {

TEST_CASE("C_3 shape matches absence of a rainbow C_3 on B_2") {
  const auto c3 = oracle::chain(3);
  int agree = 0;
  for (int k = 3; k <= 4; ++k)
    oracle::for_each_raw_coloring(2, k, [&](const oracle::Coloring& v) {
      if (oracle::distinct(v) != k) return;
      const bool shape = check_c3_shape(lift(2, v));
      CHECK(shape == !oracle::has_rainbow(v, 2, c3));
      ++agree;
    });
  CHECK(agree == 36 + 24);
}

TEST_CASE("fork classification matches absence of a rainbow fork on B_2 and B_3") {
  const auto v2 = oracle::fork();
  for (int n = 2; n <= 3; ++n)
    oracle::for_each_rgs(1 << n, 4, [&](const std::vector<int>& v) {
      const int k = oracle::distinct(v);
      if (k < 3) return;
      const auto cls = classify_v2(lift(n, v));
      CHECK(cls.has_value() == !oracle::has_rainbow(v, n, v2));
      if (cls) CHECK(matches_structure(lift(n, v), *cls));
    });
}

TEST_CASE("generated B_2 types avoid a rainbow B_2 and classify back") {
  const auto b2 = oracle::b2();
  for (int n = 3; n <= 4; ++n) {
    for (auto [x, y] : pairs(n)) {
      for (StructureInstance inst : {StructureInstance{Type1{x, y}}, StructureInstance{Type2{x, y}},
                                     StructureInstance{Type3_1{x, y}}, StructureInstance{Type3_2{x, y}}}) {
        for (auto mode : {FreeChoice::Mode::AllLow, FreeChoice::Mode::AllHigh}) {
          StructurePalette pal = default_palette(n, inst);
          pal.free.mode = mode;
          const Coloring c = generate_structure(n, inst, pal);
          CHECK(c.exact());
          CHECK(matches_structure(c, inst));
          CHECK_FALSE(oracle::has_rainbow(raw(c), n, b2));
          CHECK(classify_b2(c).has_value());
        }
      }
    }
  }
}

TEST_CASE("a generated Type 2 coloring is classified as that instance") {
  const int n = 4;
  const StructureInstance inst = Type2{SubsetId::of(n, {1}), SubsetId::of(n, {1, 2, 3})};
  const Coloring c = generate_structure(n, inst, default_palette(n, inst));
  const auto cls = classify_b2(c);
  REQUIRE(cls);
  REQUIRE(std::holds_alternative<Type2>(*cls));
  CHECK(std::get<Type2>(*cls).X0 == SubsetId::of(n, {1}));
  CHECK(std::get<Type2>(*cls).Y0 == SubsetId::of(n, {1, 2, 3}));
}

TEST_CASE("Type 4 generators") {
  const int n = 4;
  const auto b2 = oracle::b2();
  const SubsetId x0 = SubsetId::of(n, {1});
  FamilyMask ys(n);
  ys.insert(SubsetId::of(n, {1, 2}).bits());
  ys.insert(SubsetId::of(n, {1, 3, 4}).bits());
  const StructureInstance t41 = Type4_1{x0, ys};
  const Coloring c = generate_structure(n, t41, default_palette(n, t41));
  CHECK(matches_structure(c, t41));
  CHECK_FALSE(oracle::has_rainbow(raw(c), n, b2));

  const SubsetId y0 = SubsetId::of(n, {1, 2, 3});
  FamilyMask xs(n);
  xs.insert(SubsetId::of(n, {2}).bits());
  const StructureInstance t42 = Type4_2{y0, xs};
  const Coloring d = generate_structure(n, t42, default_palette(n, t42));
  CHECK(matches_structure(d, t42));
  CHECK_FALSE(oracle::has_rainbow(raw(d), n, b2));

  FamilyMask bad(n);
  bad.insert(0);
  CHECK_THROWS_AS(validate_instance(n, Type4_1{x0, bad}), Error);
}

TEST_CASE("parameter and palette errors") {
  const int n = 4;
  CHECK_THROWS_AS(validate_instance(n, Type1{SubsetId::of(n, {1}), SubsetId::of(n, {1, 2})}), Error);
  CHECK_THROWS_AS(validate_instance(n, Type1{SubsetId::of(n, {}), SubsetId::of(n, {1, 2})}), Error);
  CHECK_THROWS_AS(validate_instance(n, V2Case1{SubsetId::of(n, {1, 2, 3})}), Error);
  const StructureInstance t = Type1{SubsetId::of(n, {1}), SubsetId::of(n, {1, 2, 3})};
  StructurePalette pal = default_palette(n, t);
  pal.family_colors[1] = pal.family_colors[0];
  CHECK_THROWS_AS(generate_structure(n, t, pal), Error);
  CHECK_THROWS_AS(generate_structure(n, C3Shape{}, {}), Error);
  pal = default_palette(n, t);
  pal.family_colors.pop_back();
  CHECK_THROWS_AS(generate_structure(n, t, pal), Error);
}

TEST_CASE("fork case one generator") {
  const auto v2 = oracle::fork();
  for (int n = 2; n <= 4; ++n)
    for (Code a = 0; a < (Code{1} << n); ++a) {
      if (popcount(a) > n - 2) continue;
      const StructureInstance inst = V2Case1{SubsetId(n, a)};
      const Coloring c = generate_structure(n, inst, default_palette(n, inst));
      CHECK(matches_structure(c, inst));
      if (n <= 3) CHECK_FALSE(oracle::has_rainbow(raw(c), n, v2));
      else CHECK_FALSE(find_rainbow_copy(c, PatternPoset::fork()).has_value());
    }
}

TEST_CASE("top equals bottom check on B_3") {
  const auto b2 = oracle::b2();
  int accepted = 0;
  oracle::for_each_rgs(8, 5, [&](const std::vector<int>& v) {
    if (v[0] != v[7] || oracle::distinct(v) < 4) return;
    const Coloring c = lift(3, v);
    const Type5Report r = check_type5(c);
    CHECK(r.holds == !oracle::has_rainbow(v, 3, b2));
    if (r.holds) {
      ++accepted;
      CHECK(r.max_chain <= 4);
    }
  });
  CHECK(accepted > 0);
}

TEST_CASE("chain family partition builds a Type 5 coloring") {
  const int n = 4;
  const Coloring c = type5_from_chain(n, SubsetId::of(n, {1}), SubsetId::of(n, {1, 2}), SubsetId::of(n, {1, 2, 3}));
  CHECK(c(0) == c(full_code(n)));
  CHECK(check_type5(c).holds);
  CHECK_FALSE(find_rainbow_copy(c, PatternPoset::boolean(2)).has_value());
  CHECK(max_rainbow_chain(c).length == 4);
}

TEST_CASE("lower-bound constructions avoid both targets") {
  for (int s = 3; s <= 5; ++s) {
    const int cap = static_cast<int>(oracle::choose(s - 1, s / 2)) + 1;
    for (int k = 3; k <= cap; ++k) {
      const Coloring c = lower_bound_gr_c3(s, k);
      AvoidanceSpec spec;
      spec.n = s - 1;
      spec.rainbow_target = PatternPoset::chain(3);
      spec.mono_target = PatternPoset::chain(s);
      spec.palette = Palette::exact(k);
      CHECK(satisfies(c, spec));
    }
  }
  for (int s = 2; s <= 4; ++s) {
    AvoidanceSpec spec;
    spec.rainbow_target = PatternPoset::fork();
    spec.mono_target = PatternPoset::chain(s);
    spec.palette = Palette::exact(3);
    const Coloring c = lower_bound_gr_v2(s, 3);
    spec.n = c.n();
    CHECK(c.n() == 2 * s - 2);
    CHECK(satisfies(c, spec));
  }
  for (int s = 4; s <= 6; ++s) {
    AvoidanceSpec spec;
    spec.rainbow_target = PatternPoset::fork();
    spec.mono_target = PatternPoset::chain(s);
    spec.palette = Palette::exact(4);
    const Coloring c = lower_bound_gr_v2(s, 4);
    spec.n = c.n();
    CHECK(satisfies(c, spec));
  }
  CHECK_THROWS_AS(lower_bound_gr_c3(3, 4), Error);
  CHECK_THROWS_AS(lower_bound_gr_v2(3, 4), Error);
}

TEST_CASE("layered construction") {
  // Blocks of one level for C_2, two levels for C_3.
  for (int e = 1; e <= 2; ++e) {
    const Coloring c = layered_coloring(e, PatternPoset::fork());
    CHECK(c.n() == 2 * e);
    AvoidanceSpec spec;
    spec.n = c.n();
    spec.rainbow_target = PatternPoset::fork();
    spec.mono_target = PatternPoset::chain(e + 1);
    spec.palette = Palette::unbounded();
    CHECK(satisfies(c, spec));
  }
  const Coloring d = layered_coloring(1, PatternPoset::chain(3));
  CHECK(d.n() == 1);
}

TEST_CASE("blob partition") {
  for (int m = 1; m <= 3; ++m)
    for (int n0 = 1; n0 <= 3; ++n0) {
      if (m * n0 + m > 12) continue;
      const int n = m * n0 + m;
      const auto parts = blob_partition(m, n0);
      CHECK(parts.size() == (std::size_t{1} << m) - 1);
      std::vector<int> seen(std::size_t{1} << n, 0);
      for (const auto& b : parts) {
        CHECK(is_subset(b.lo.bits(), b.hi.bits()));
        CHECK(b.hi.size() - b.lo.size() == n0);
        interval(n, b.lo, b.hi, Bounds::Closed).for_each([&](Code s) { ++seen[s]; });
      }
      for (int x : seen) CHECK(x <= 1);
    }
  const auto p = blob_partition(2, 1);
  CHECK(format_subset(p[0].lo) == "{1}");
  CHECK(format_subset(p[0].hi) == "{1,3}");
  CHECK(format_subset(p[2].lo) == "{1,2,3}");
  CHECK(format_subset(p[2].hi) == "{1,2,3,4}");
}

TEST_CASE("blob with few colors on random rainbow-free colorings of B_6") {
  // Two-element blobs make the color bound non-trivial.
  std::mt19937 rng(3);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    std::vector<Color> col(64);
    for (auto& x : col) x = rng() % 3 == 0 ? static_cast<Color>(rng() % 6) : 0;
    col[0] = 0;
    Color mx = 0;
    for (Color x : col) mx = std::max(mx, x);
    const Coloring c(6, col, static_cast<int>(mx) + 1);
    if (find_rainbow_copy(c, PatternPoset::boolean(2))) continue;
    ++checked;
    CHECK(blob_with_few_colors(c, 2, 2).has_value());
  }
  CHECK(checked > 0);
}

}

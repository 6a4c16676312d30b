#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "rlw/coloring.hpp"
#include "rlw/embedding.hpp"
#include "rlw/error.hpp"
#include "rlw/pattern.hpp"

using namespace rlw;

namespace {

oracle::Poset mirror(const PatternPoset& p) {
  std::vector<std::pair<int, int>> r;
  for (int a = 0; a < p.size(); ++a)
    for (int b = 0; b < p.size(); ++b)
      if (p.less(a, b)) r.push_back({a, b});
  return oracle::poset(p.size(), r);
}

oracle::Coloring raw(const Coloring& c) {
  return oracle::Coloring(c.by_code().begin(), c.by_code().end());
}

Coloring lift(int n, const oracle::Coloring& v) {
  std::vector<Color> col(v.begin(), v.end());
  int k = 0;
  for (int x : v) k = std::max(k, x + 1);
  return Coloring(n, col, k);
}

}  // namespace

TEST_SUITE("patterns") {

TEST_CASE("named posets") {
  const auto c3 = PatternPoset::chain(3);
  CHECK(c3.size() == 3);
  CHECK(c3.less(0, 2));
  CHECK(c3.height() == 3);
  CHECK(c3.has_minimum());
  CHECK(c3.has_maximum());

  const auto v = PatternPoset::fork();
  CHECK(v.size() == 3);
  CHECK(v.has_minimum());
  CHECK_FALSE(v.has_maximum());
  CHECK_FALSE(v.comparable(1, 2));

  const auto b2 = PatternPoset::boolean(2);
  CHECK(b2.size() == 4);
  CHECK(b2.has_minimum());
  CHECK(b2.has_maximum());
  CHECK(b2.height() == 3);
  CHECK(PatternPoset::boolean(1) == PatternPoset::chain(2));

  const auto a3 = PatternPoset::antichain(3);
  CHECK(a3.height() == 1);
  CHECK_FALSE(a3.has_minimum());

  const auto d = PatternPoset::disjoint_chains(2, 3);
  CHECK(d.size() == 6);
  CHECK(d.height() == 3);
  CHECK(d.interchangeable_roots().size() == 1);
  CHECK(d.interchangeable_roots()[0].size() == 2);
}

TEST_CASE("descriptors round-trip") {
  for (const char* s : {"chain:1", "chain:4", "antichain:2", "fork", "boolean:2", "boolean:3", "disjoint:2x2"}) {
    const auto p = make_pattern(s);
    CHECK(make_pattern(p.label()) == p);
  }
  const auto c = make_pattern("custom:[a<b,a<c]");
  CHECK(c == PatternPoset::fork());
  CHECK(make_pattern(c.label()) == c);
  CHECK_THROWS_AS(make_pattern("custom:[a<b,b<a]"), Error);
  CHECK_THROWS_AS(make_pattern("chain:0"), Error);
  CHECK_THROWS_AS(make_pattern("tree"), Error);
  CHECK_THROWS_AS(PatternPoset::chain(kMaxPatternSize + 1), Error);
}

TEST_CASE("topological order respects the relation") {
  for (const auto& p : {PatternPoset::boolean(3), PatternPoset::fork(), PatternPoset::disjoint_chains(3, 2),
                        make_pattern("custom:[d<a,c<a,b<d]")}) {
    const auto& t = p.topological_order();
    REQUIRE(t.size() == static_cast<std::size_t>(p.size()));
    for (std::size_t i = 0; i < t.size(); ++i)
      for (std::size_t j = i + 1; j < t.size(); ++j) CHECK_FALSE(p.less(t[j], t[i]));
  }
}

TEST_CASE("copy detection agrees with enumeration of all maps") {
  const std::vector<PatternPoset> pats = {PatternPoset::chain(2), PatternPoset::chain(3), PatternPoset::fork(),
                                          PatternPoset::boolean(2), PatternPoset::antichain(3),
                                          PatternPoset::disjoint_chains(2, 2)};
  std::mt19937 rng(7);
  for (int n = 1; n <= 3; ++n) {
    const std::uint32_t m = 1u << n;
    for (int trial = 0; trial < 60; ++trial) {
      FamilyMask host(n);
      std::vector<unsigned> codes;
      for (Code c = 0; c < m; ++c)
        if (rng() % 3 != 0) {
          host.insert(c);
          codes.push_back(c);
        }
      for (const auto& p : pats) {
        const auto o = mirror(p);
        for (CopyMode mode : {CopyMode::Induced, CopyMode::Weak}) {
          const bool induced = mode == CopyMode::Induced;
          const auto e = find_copy(n, host, p, mode);
          CHECK(e.has_value() == oracle::has_copy(o, codes, induced));
          if (e) {
            std::vector<Code> img;
            for (const auto& s : e->map) {
              CHECK(host.contains(s));
              img.push_back(s.bits());
            }
            CHECK(is_embedding(img, p, mode));
          }
        }
      }
    }
  }
}

TEST_CASE("rainbow and monochromatic detectors agree with brute force") {
  const std::vector<PatternPoset> pats = {PatternPoset::chain(2), PatternPoset::chain(3), PatternPoset::fork(),
                                          PatternPoset::boolean(2)};
  std::mt19937 rng(11);
  for (int n = 2; n <= 3; ++n) {
    for (int trial = 0; trial < 150; ++trial) {
      const int k = 2 + static_cast<int>(rng() % 4);
      oracle::Coloring v(std::size_t{1} << n);
      for (auto& x : v) x = static_cast<int>(rng() % k);
      const Coloring c = lift(n, v);
      for (const auto& p : pats) {
        const auto o = mirror(p);
        const auto r = find_rainbow_copy(c, p);
        CHECK(r.has_value() == oracle::has_rainbow(v, n, o));
        const auto mo = find_mono_copy(c, p);
        CHECK(mo.has_value() == oracle::has_mono(v, n, o));
        CHECK(find_mono_copy(c, p, CopyMode::Weak).has_value() == oracle::has_mono(v, n, o, false));
        if (mo) {
          for (const auto& s : mo->embedding.map) CHECK(c.at(s) == mo->color);
        }
      }
      CHECK(max_rainbow_chain(c).length == oracle::longest_rainbow_chain(raw(c), n));
    }
  }
}

TEST_CASE("first embedding is the lexicographically first") {
  const auto e = find_induced_copy(3, FamilyMask::all(3), PatternPoset::chain(3));
  REQUIRE(e);
  CHECK(e->map[0].bits() == 0u);
  CHECK(e->map[1].bits() == 1u);
  CHECK(e->map[2].bits() == 3u);
  const auto f = find_induced_copy(2, FamilyMask::all(2), PatternPoset::fork());
  REQUIRE(f);
  CHECK(f->map[1].bits() == 1u);
  CHECK(f->map[2].bits() == 2u);
}

TEST_CASE("copy images are deduplicated") {
  // Two images of the fork with minimum {} in B_2 differ only by swapping
  // the upper elements; they form one image set.
  const auto imgs = copy_images(2, FamilyMask::all(2), PatternPoset::fork(), CopyMode::Induced);
  CHECK(imgs.size() == 1);
  // Induced C_2 copies of B_3 are the strictly comparable pairs: 3^3 - 2^3.
  CHECK(copy_images(3, FamilyMask::all(3), PatternPoset::chain(2), CopyMode::Induced).size() == 19);
}

}

#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "rlw/error.hpp"
#include "rlw/search.hpp"

using namespace rlw;

namespace {

struct Target {
  PatternPoset pattern;
  oracle::Poset mirror;
};

std::vector<Target> targets() {
  return {{PatternPoset::chain(2), oracle::chain(2)},
          {PatternPoset::chain(3), oracle::chain(3)},
          {PatternPoset::fork(), oracle::fork()},
          {PatternPoset::boolean(2), oracle::b2()}};
}

AvoidanceSpec make_spec(int n, const std::optional<PatternPoset>& q, const std::optional<PatternPoset>& p,
                        Palette pal) {
  AvoidanceSpec s;
  s.n = n;
  s.rainbow_target = q;
  s.mono_target = p;
  s.palette = pal;
  return s;
}

std::uint64_t count(const AvoidanceSpec& spec, const SearchOptions& o) {
  std::uint64_t c = 0;
  const auto r = for_each_coloring(spec, [&](const Coloring& col) {
    CHECK(satisfies(col, spec));
    ++c;
    return true;
  }, o);
  CHECK(r.complete);
  return c;
}

long long factorial(int k) { return k <= 1 ? 1 : k * factorial(k - 1); }

}  // namespace

TEST_SUITE("search") {

TEST_CASE("palette text") {
  CHECK(to_string(Palette::exact(3)) == "exact:3");
  CHECK(to_string(Palette::at_most(2)) == "atmost:2");
  CHECK(to_string(Palette::unbounded()) == "unbounded");
  CHECK(parse_palette("exact:4").k == 4);
  CHECK(parse_palette("atmost:2").kind == Palette::Kind::AtMostK);
  CHECK_THROWS_AS(parse_palette("exact:0"), Error);
  CHECK_THROWS_AS(parse_palette("some"), Error);
}

TEST_CASE("spec validation") {
  AvoidanceSpec s = make_spec(2, PatternPoset::chain(3), std::nullopt, Palette::exact(4));
  CHECK_NOTHROW(s.validate());
  s.palette = Palette::exact(5);
  CHECK_THROWS_AS(s.validate(), Error);
  s.palette = Palette::at_most(5);
  CHECK_NOTHROW(s.validate());
  s.n = 0;
  CHECK_THROWS_AS(s.validate(), Error);
  CHECK_THROWS_AS(make_spec(2, std::nullopt, std::nullopt, Palette::exact(2)).validate(), Error);
  CHECK(canonical_text(make_spec(3, PatternPoset::fork(), PatternPoset::chain(2), Palette::exact(3))) ==
        "n=3;palette=exact:3;rainbow=fork;mono=chain:2;mode=induced");
}

TEST_CASE("unconstrained enumeration counts set partitions") {
  // A chain longer than any chain of B_n is a target that never occurs.
  SearchOptions o;
  o.ground_symmetry = false;
  for (int n = 1; n <= 3; ++n) {
    const int m = 1 << n;
    const auto none = PatternPoset::chain(n + 2);
    long long bell = 0;
    for (int k = 1; k <= m; ++k) {
      const auto c = count(make_spec(n, std::nullopt, none, Palette::exact(k)), o);
      CHECK(static_cast<long long>(c) == oracle::stirling2(m, k));
      bell += oracle::stirling2(m, k);
    }
    CHECK(static_cast<long long>(count(make_spec(n, std::nullopt, none, Palette::unbounded()), o)) == bell);
    long long upto3 = 0;
    for (int k = 1; k <= 3; ++k) upto3 += oracle::stirling2(m, k);
    CHECK(static_cast<long long>(count(make_spec(n, std::nullopt, none, Palette::at_most(3)), o)) == upto3);
  }
}

TEST_CASE("avoider counts agree with brute force over raw colorings") {
  SearchOptions o;
  o.ground_symmetry = false;
  for (int n = 2; n <= 3; ++n) {
    const int kmax = n == 2 ? 4 : 3;
    for (int k = 1; k <= kmax; ++k) {
      for (const auto& q : targets()) {
        for (const auto& p : targets()) {
          if (n == 3 && k == 3 && (q.pattern.size() == 4 || p.pattern.size() == 4)) continue;
          long long raw = 0;
          oracle::for_each_raw_coloring(n, k, [&](const oracle::Coloring& v) {
            if (oracle::distinct(v) != k) return;
            if (oracle::has_rainbow(v, n, q.mirror) || oracle::has_mono(v, n, p.mirror)) return;
            ++raw;
          });
          const auto spec = make_spec(n, q.pattern, p.pattern, Palette::exact(k));
          CHECK_MESSAGE(static_cast<long long>(count(spec, o)) * factorial(k) == raw, canonical_text(spec));
        }
      }
    }
  }
}

TEST_CASE("frozen avoider counts") {
  // Exact 3-colorings of B_3 with no rainbow fork and no monochromatic C_3;
  // raw count from the oracle, partitions from the enumerator.
  SearchOptions o;
  o.ground_symmetry = false;
  long long raw = 0;
  oracle::for_each_raw_coloring(3, 3, [&](const oracle::Coloring& v) {
    if (oracle::distinct(v) == 3 && !oracle::has_rainbow(v, 3, oracle::fork()) &&
        !oracle::has_mono(v, 3, oracle::chain(3)))
      ++raw;
  });
  CHECK(raw == 108);
  CHECK(count(make_spec(3, PatternPoset::fork(), PatternPoset::chain(3), Palette::exact(3)), o) == 108 / 6);
}

TEST_CASE("ground symmetry keeps existence and at least one member per orbit") {
  for (int n = 2; n <= 3; ++n)
    for (int k = 2; k <= 4; ++k)
      for (const auto& q : targets())
        for (const auto& p : targets()) {
          const auto spec = make_spec(n, q.pattern, p.pattern, Palette::exact(k));
          SearchOptions on, off;
          off.ground_symmetry = false;
          const auto a = exists_coloring(spec, on), b = exists_coloring(spec, off);
          CHECK(a.status == b.status);
          const auto ca = count(spec, on), cb = count(spec, off);
          CHECK(ca <= cb);
          CHECK((ca == 0) == (cb == 0));
        }
}

TEST_CASE("pruning modes and assignment orders agree") {
  std::mt19937 rng(5);
  for (int n = 2; n <= 3; ++n)
    for (int k = 2; k <= 4; ++k)
      for (const auto& q : targets())
        for (const auto& p : targets()) {
          const auto spec = make_spec(n, q.pattern, p.pattern, Palette::exact(k));
          SearchOptions base;
          base.ground_symmetry = false;
          const auto expect = count(spec, base);
          for (Pruning pr : {Pruning::Leaves, Pruning::CompletedCopies}) {
            SearchOptions o = base;
            o.pruning = pr;
            CHECK(count(spec, o) == expect);
          }
          SearchOptions shuffled = base;
          shuffled.order = canonical_order(n);
          std::shuffle(shuffled.order.begin(), shuffled.order.end(), rng);
          CHECK(exists_coloring(spec, shuffled).status == exists_coloring(spec, base).status);
          CHECK(count(spec, shuffled) == expect);
        }
}

TEST_CASE("threaded search agrees with the sequential one") {
  for (int k = 3; k <= 5; ++k) {
    const auto spec = make_spec(4, PatternPoset::fork(), PatternPoset::chain(4), Palette::exact(k));
    SearchOptions one, four;
    four.threads = 4;
    const auto a = exists_coloring(spec, one), b = exists_coloring(spec, four);
    CHECK(a.status == b.status);
    if (b.coloring) CHECK(satisfies(*b.coloring, spec));
  }
}

TEST_CASE("budget exhaustion is indeterminate") {
  const auto spec = make_spec(4, PatternPoset::boolean(2), PatternPoset::chain(3), Palette::exact(5));
  SearchOptions o;
  o.budget = 3;
  const auto r = exists_coloring(spec, o);
  CHECK(r.status == SearchStatus::Indeterminate);
  CHECK_FALSE(r.coloring);
}

TEST_CASE("order must be a permutation") {
  const auto spec = make_spec(2, PatternPoset::chain(3), std::nullopt, Palette::exact(3));
  SearchOptions o;
  o.order = {0, 1, 2};
  CHECK_THROWS_AS(exists_coloring(spec, o), Error);
}

TEST_CASE("numbers") {
  // Level colorings avoid a monochromatic comparable pair up to n = k - 1.
  for (int k = 1; k <= 4; ++k) {
    const auto r = compute_ramsey(PatternPoset::chain(2), k, CopyMode::Induced, 5);
    REQUIRE(r.value);
    CHECK(*r.value == k);
  }
  const auto rr = compute_rr(PatternPoset::fork(), PatternPoset::chain(2), 4);
  REQUIRE(rr.value);
  CHECK(*rr.value == 3);
  CHECK(rr.verified_up_to == 3);
  for (const auto& w : rr.witnesses)
    if (w.avoider) CHECK(w.n < 3);

  // Two comparable sets are either one color or two, so B_1 already forces
  // a rainbow or a monochromatic C_2.
  long long b1_avoiders = 0;
  oracle::for_each_raw_coloring(1, 2, [&](const oracle::Coloring& v) {
    if (!oracle::has_rainbow(v, 1, oracle::chain(2)) && !oracle::has_mono(v, 1, oracle::chain(2))) ++b1_avoiders;
  });
  CHECK(b1_avoiders == 0);
  const auto rr22 = compute_rr(PatternPoset::chain(2), PatternPoset::chain(2), 3);
  REQUIRE(rr22.value);
  CHECK(*rr22.value == 1);

  const auto gr = compute_gr(PatternPoset::fork(), PatternPoset::chain(2), 3, {2, 4});
  REQUIRE(gr.value);
  CHECK(*gr.value == 3);
  CHECK(gr.verified_up_to == 4);

  const auto good = compute_gr(PatternPoset::chain(3), PatternPoset::chain(3), 4, {1, 4});
  CHECK(good.good);
  CHECK_FALSE(good.value);

  SearchOptions tiny;
  tiny.budget = 1;
  CHECK(compute_rr(PatternPoset::boolean(2), PatternPoset::chain(3), 4, tiny).indeterminate);
}

}

#include <doctest.h>

#include "oracles.hpp"
#include "rlw/embedding.hpp"
#include "rlw/error.hpp"
#include "rlw/extremal.hpp"

using namespace rlw;

TEST_SUITE("extremal") {

TEST_CASE("exact rationals") {
  const ExactRational a(BigInt(2), BigInt(6));
  CHECK(a.to_string() == "1/3");
  CHECK((a + a + a).to_string() == "1");
  CHECK(ExactRational::parse("-4/6") == ExactRational(BigInt(-2), BigInt(3)));
  CHECK(ExactRational::parse("5").to_string() == "5");
  CHECK(ExactRational(BigInt(1), BigInt(-2)).to_string() == "-1/2");
  CHECK(ExactRational(1) / ExactRational(3) < ExactRational(BigInt(1), BigInt(2)));
  CHECK_THROWS_AS(ExactRational(BigInt(1), BigInt(0)), Error);
  CHECK_THROWS_AS(ExactRational::parse("1/x"), Error);
  CHECK(binomial(10, 5) == 252);
  CHECK(binomial(4, 5) == 0);
  CHECK(binomial(60, 30) == BigInt("118264581564861424"));
}

TEST_CASE("Lubell sums agree with the fraction oracle") {
  for (int n = 1; n <= 6; ++n)
    for (int lo = 0; lo <= n; ++lo)
      for (int hi = lo; hi <= n; ++hi) {
        const FamilyMask f = levels(n, lo, hi);
        CHECK(lubell(n, f) == ExactRational(hi - lo + 1));
      }
  const int n = 4;
  FamilyMask f(n);
  std::vector<unsigned> codes;
  for (Code c : {0b0001u, 0b0011u, 0b0110u, 0b1111u}) {
    f.insert(c);
    codes.push_back(c);
  }
  const auto [num, den] = oracle::lubell(n, codes);
  CHECK(lubell(n, f) == ExactRational(BigInt(num), BigInt(den)));
  CHECK(lubell(n, f).to_string() == "19/12");
}

TEST_CASE("maximum Lubell value against exhaustive family enumeration") {
  const std::vector<std::pair<PatternPoset, oracle::Poset>> pats = {
      {PatternPoset::chain(2), oracle::chain(2)},
      {PatternPoset::chain(3), oracle::chain(3)},
      {PatternPoset::fork(), oracle::fork()},
      {PatternPoset::boolean(2), oracle::b2()},
      {PatternPoset::antichain(2), oracle::antichain(2)}};
  for (int n = 1; n <= 3; ++n) {
    const unsigned m = 1u << n;
    for (const auto& [p, o] : pats) {
      std::pair<long long, long long> best{0, 1};
      for (unsigned fam = 0; fam < (1u << m); ++fam) {
        std::vector<unsigned> codes;
        for (unsigned s = 0; s < m; ++s)
          if ((fam >> s) & 1u) codes.push_back(s);
        if (oracle::has_copy(o, codes)) continue;
        const auto v = oracle::lubell(n, codes);
        if (v.first * best.second > best.first * v.second) best = v;
      }
      const auto r = lu_max(n, p);
      CHECK(r.complete);
      CHECK_MESSAGE(r.value == ExactRational(BigInt(best.first), BigInt(best.second)), p.label(), " n=", n);
      CHECK_FALSE(find_induced_copy(n, r.witness, p).has_value());
      CHECK(lubell(n, r.witness) == r.value);
    }
  }
  CHECK_THROWS_AS(lu_max(6, PatternPoset::chain(2)), Error);
}

TEST_CASE("consecutive-level parameter") {
  for (int s = 2; s <= 4; ++s) {
    const auto r = e_poset(PatternPoset::chain(s), 6);
    CHECK(r.e == s - 1);
    REQUIRE(r.failing);
    CHECK(r.failing->size == s);
  }
  const auto a2 = e_poset(PatternPoset::antichain(2), 6);
  CHECK(a2.e == 0);
  CHECK(e_poset(PatternPoset::fork(), 6).e == 1);
  CHECK(e_poset(PatternPoset::boolean(2), 6).e == 2);
}

TEST_CASE("extreme count") {
  CHECK(g_poset(PatternPoset::chain(3)) == 0);
  CHECK(g_poset(PatternPoset::boolean(2)) == 0);
  CHECK(g_poset(PatternPoset::fork()) == 1);
  CHECK(g_poset(PatternPoset::antichain(2)) == 2);
}

TEST_CASE("uniform Lubell bound") {
  for (int s = 2; s <= 4; ++s) {
    const auto r = is_uilb(PatternPoset::chain(s), 4);
    CHECK(r.holds);
    CHECK(r.verified_up_to == 4);
  }
  CHECK_FALSE(is_uilb(PatternPoset::fork(), 3).holds);
}

TEST_CASE("disjoint chains") {
  CHECK(gst(2, 3) == 2);
  CHECK(gst(1, 4) == 6);
  CHECK(gst(3, 5) == 3);
  CHECK_THROWS_AS(gst(3, 1), Error);
  for (int v = 1; v <= 2; ++v)
    for (int n = v; n <= 4; ++n) CHECK_MESSAGE(gst_verify(v, n), "v=", v, " n=", n);
}

TEST_CASE("color caps") {
  CHECK(color_cap_c3(2) == 3);
  CHECK(color_cap_c3(3) == 4);
  CHECK(color_cap_c3(4) == 7);
  CHECK(color_cap_b2(3) == 7);
  CHECK(color_cap_b2(4) == 12);
  CHECK_THROWS_AS(color_cap_b2(2), Error);
}

}

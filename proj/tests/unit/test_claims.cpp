#include <doctest.h>

#include "rlw/claims.hpp"
#include "rlw/error.hpp"
#include "rlw/verify.hpp"

using namespace rlw;

namespace {

ClaimParams params(std::initializer_list<std::pair<const char*, long long>> kv) {
  ClaimParams p;
  for (auto [k, v] : kv) p[k] = {v, "input"};
  return p;
}

ClaimInputs inputs(std::initializer_list<std::pair<const char*, long long>> kv) {
  ClaimInputs in;
  in.params = params(kv);
  return in;
}

}  // namespace

TEST_SUITE("claims") {

TEST_CASE("names round-trip") {
  for (ClaimId id : all_claims()) {
    CHECK(parse_claim(to_string(id)) == id);
    CHECK_FALSE(describe(id).empty());
  }
  CHECK_THROWS_AS(parse_claim("no-such-claim"), Error);
}

TEST_CASE("formula side") {
  CHECK(predicted_value(ClaimId::GrChainChain, params({{"s", 3}, {"k", 3}})).text() == "= 3");
  CHECK(predicted_value(ClaimId::GrChainChain, params({{"s", 3}, {"k", 4}})).shape == Prediction::Shape::Good);
  CHECK(predicted_value(ClaimId::GrChainChain, params({{"s", 5}, {"k", 7}})).text() == "= 5");
  CHECK(predicted_value(ClaimId::GrChainChain, params({{"s", 5}, {"k", 8}})).shape == Prediction::Shape::Good);
  CHECK(predicted_value(ClaimId::GrForkChainK3, params({{"s", 3}})).text() == "= 5");
  CHECK(predicted_value(ClaimId::GrForkChainK4, params({{"s", 3}})).shape == Prediction::Shape::Good);
  CHECK(predicted_value(ClaimId::GrForkChainK4, params({{"s", 4}})).text() == "= 4");
  CHECK(predicted_value(ClaimId::RrForkFormula, params({{"e", 2}})).text() == "= 5");
  CHECK(predicted_value(ClaimId::RrB2BnSandwich, params({{"n", 1}, {"r3", 3}})).text() == "in [3, 4]");
  CHECK(predicted_value(ClaimId::RrBmBnUpper, params({{"m", 2}, {"r", 3}})).text() == "<= 8");
  CHECK(predicted_value(ClaimId::C3ColorCap, params({{"n", 3}})).text() == "<= 4");
  CHECK(predicted_value(ClaimId::B2ColorCap, params({{"n", 3}})).text() == "<= 7");
  CHECK(predicted_value(ClaimId::DisjointChainCount, params({{"v", 2}, {"n", 3}})).text() == "= 2");
  CHECK(predicted_value(ClaimId::RrLowerGeneral, params({{"e", 2}, {"q", 3}, {"g", 1}})).text() == ">= 5");
  CHECK(predicted_value(ClaimId::RkUniformLubell, params({{"k", 3}, {"e", 1}})).text() == "= 3");
  CHECK(predicted_value(ClaimId::BlobColors, params({{"m", 2}})).text() == "<= 3");
  CHECK(predicted_value(ClaimId::GrB2BnUpper, params({{"n", 1}, {"k", 16}, {"r3", 3}})).text() == "<= 4");
  CHECK(predicted_value(ClaimId::GrB2BnUpper, params({{"n", 1}, {"k", 17}, {"r3", 3}})).shape == Prediction::Shape::Good);

  const auto p = predicted_value(ClaimId::RrForkFormula, params({{"e", 2}, {"unused", 9}}));
  CHECK(p.used.count("e") == 1);
  CHECK(p.used.count("unused") == 0);

  CHECK_THROWS_AS(predicted_value(ClaimId::RrForkFormula, {}), Error);
  CHECK_THROWS_AS(predicted_value(ClaimId::GrForkChainGood, params({{"s", 2}, {"k", 4}})), Error);
}

TEST_CASE("search side agrees on small cases") {
  struct Case {
    ClaimId id;
    ClaimInputs in;
  };
  const std::vector<Case> cases = {
      {ClaimId::GrChainChain, inputs({{"s", 3}, {"k", 3}})},
      {ClaimId::GrChainChain, inputs({{"s", 3}, {"k", 4}})},
      {ClaimId::GrForkChainK3, inputs({{"s", 2}})},
      {ClaimId::GrForkChainK4, inputs({{"s", 2}})},
      {ClaimId::GrForkChainGood, inputs({{"s", 2}, {"k", 5}})},
      {ClaimId::RrForkFormula, inputs({{"s", 2}})},
      {ClaimId::C3ColorCap, inputs({{"n", 3}})},
      {ClaimId::DisjointChainCount, inputs({{"v", 2}, {"n", 3}})},
      {ClaimId::RrLowerGeneral, inputs({})},
      {ClaimId::RkUniformLubell, inputs({{"k", 2}})},
      {ClaimId::RrB2BnSandwich, inputs({{"n", 1}})},
  };
  for (const auto& c : cases) {
    const ClaimReport r = verify_claim(c.id, c.in);
    CHECK_MESSAGE(r.verdict == "agree", to_string(c.id), ": ", to_json(r).dump());
    CHECK(r.verified_up_to.has_value());
    CHECK_FALSE(r.provenance.empty());
  }
}

TEST_CASE("searched sub-values carry provenance") {
  const ClaimReport r = verify_claim(ClaimId::RrB2BnSandwich, inputs({{"n", 1}}));
  REQUIRE(r.params.count("r3"));
  CHECK(r.params.at("r3").value == 3);
  CHECK(r.params.at("r3").provenance.find("compute_ramsey") != std::string::npos);
  REQUIRE(r.predicted);
  CHECK(r.predicted->used.at("r3").provenance == r.params.at("r3").provenance);
}

TEST_CASE("tiny budget gives an indeterminate verdict") {
  SearchOptions o;
  o.budget = 1;
  const ClaimReport r = verify_claim(ClaimId::GrForkChainK3, inputs({{"s", 3}}), o);
  CHECK(r.verdict == "indeterminate");
}

TEST_CASE("blob claim on a small sample") {
  ClaimInputs in = inputs({{"m", 2}});
  in.samples = 200;
  const ClaimReport r = verify_claim(ClaimId::BlobColors, in);
  CHECK(r.verdict == "agree");
  CHECK(r.checked_against["samples"] == 200);
}

}

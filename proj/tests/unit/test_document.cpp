#include <doctest.h>

#include "rlw/document.hpp"
#include "rlw/error.hpp"
#include "rlw/verify.hpp"

using namespace rlw;

namespace {

Json gr_document() {
  AvoidanceSpec base;
  base.rainbow_target = PatternPoset::fork();
  base.mono_target = PatternPoset::chain(2);
  base.palette = Palette::exact(3);
  const NumberResult r = compute_gr(*base.rainbow_target, *base.mono_target, 3, {1, 4});
  return make_document("number gr", {{"q", "fork"}, {"p", "chain:2"}, {"k", 3}}, to_json(r),
                       number_witnesses(base, r), run_info_now(1.0, 1));
}

}  // namespace

TEST_SUITE("document") {

TEST_CASE("serialization round-trips") {
  const Coloring c = Coloring::from_canonical(2, 3, {1, 2, 3, 1});
  CHECK(coloring_from_json(to_json(c)) == c);
  CHECK(to_json(c).dump() == R"({"n":2,"k":3,"colors":[1,2,3,1]})");

  AvoidanceSpec s;
  s.n = 3;
  s.rainbow_target = PatternPoset::boolean(2);
  s.palette = Palette::at_most(4);
  CHECK(canonical_text(spec_from_json(to_json(s))) == canonical_text(s));

  const int n = 4;
  const StructureInstance inst = Type4_1{SubsetId::of(n, {1}), FamilyMask::from_codes(n, {0b0011, 0b1101})};
  const StructureInstance back = instance_from_json(n, to_json(n, inst));
  CHECK(to_json(n, back) == to_json(n, inst));
  CHECK_THROWS_AS(instance_from_json(n, Json{{"type", "Type9"}}), Error);
  CHECK_THROWS_AS(coloring_from_json(Json{{"n", 2}}), Error);
}

TEST_CASE("fresh documents verify") {
  const Json doc = gr_document();
  CHECK(doc["schema"] == kSchemaVersion);
  CHECK(doc["content_hash"] == content_hash(doc));
  const VerifyReport r = verify_document(doc);
  CHECK(r.hash_ok);
  CHECK(r.pass());
  CHECK(r.items.size() >= 2);
}

TEST_CASE("hash ignores the run block only") {
  Json a = gr_document();
  Json b = a;
  b["run"]["timestamp"] = "1999-01-01T00:00:00Z";
  b["run"]["wall_ms"] = 12345.0;
  CHECK(content_hash(a) == content_hash(b));
  b["command"] = "number rr";
  CHECK(content_hash(a) != content_hash(b));
}

TEST_CASE("flipping one witness color fails that witness") {
  Json doc = gr_document();
  Json& w = doc["witnesses"];
  REQUIRE(w.size() >= 1);
  // Give the empty set the color of the top set: a monochromatic C_2.
  auto& colors = w[0]["coloring"]["colors"];
  colors[0] = colors[colors.size() - 1];
  const VerifyReport r = verify_document(doc);
  CHECK_FALSE(r.hash_ok);
  CHECK_FALSE(r.pass());
  int failing_witnesses = 0;
  for (const auto& i : r.items)
    if (!i.pass && i.name.find("witness") != std::string::npos) ++failing_witnesses;
  CHECK(failing_witnesses == 1);
}

TEST_CASE("every witness bit matters") {
  // Tampering with any single witness color is caught by the hash, and the
  // witness checks never crash.
  const Json doc = gr_document();
  for (std::size_t wi = 0; wi < doc["witnesses"].size(); ++wi) {
    const auto& colors = doc["witnesses"][wi]["coloring"]["colors"];
    for (std::size_t i = 0; i < colors.size(); ++i) {
      Json t = doc;
      auto& c = t["witnesses"][wi]["coloring"]["colors"][i];
      c = c.get<int>() + 1;
      const VerifyReport r = verify_document(t);
      CHECK_FALSE(r.pass());
    }
  }
}

TEST_CASE("stale tool version passes with a note") {
  Json doc = gr_document();
  doc["tool"]["version"] = "0.0.1";
  doc["content_hash"] = content_hash(doc);
  const VerifyReport r = verify_document(doc);
  CHECK(r.pass());
  CHECK_FALSE(r.notes.empty());
}

TEST_CASE("unsupported schema") {
  Json doc = gr_document();
  doc["schema"] = "rlw-0";
  CHECK_THROWS_AS(verify_document(doc), Error);
}

TEST_CASE("formula witnesses are re-evaluated") {
  ClaimParams p;
  p["s"] = {3, "input"};
  Prediction pred = predicted_value(ClaimId::GrForkChainK3, p);
  Json w = Json::array();
  w.push_back(formula_witness("prediction", ClaimId::GrForkChainK3, pred.used, pred));
  Json doc = make_document("claim", Json::object(), Json::object(), w, run_info_now(0, 1));
  CHECK(verify_document(doc).pass());
  pred.lo = pred.hi = 6;
  w[0] = formula_witness("prediction", ClaimId::GrForkChainK3, pred.used, pred);
  doc = make_document("claim", Json::object(), Json::object(), w, run_info_now(0, 1));
  CHECK_FALSE(verify_document(doc).pass());
}

TEST_CASE("documents are deterministic apart from the run block") {
  Json a = gr_document(), b = gr_document();
  a.erase("run");
  b.erase("run");
  CHECK(a.dump() == b.dump());
}

}

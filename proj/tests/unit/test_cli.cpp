#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "rlw/serialize.hpp"

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = rlw::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("rlw_test_" + name)).string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("number gr") {
  const Run r = run({"number", "gr", "--q", "fork", "--p", "chain:2", "--k", "3", "--window", "2:4"});
  CHECK(r.code == rlw::cli::kOk);
  CHECK(r.out.find("= 3") != std::string::npos);

  const Run j = run({"number", "gr", "--q", "fork", "--p", "chain:2", "--k", "3", "--window", "2:4", "--json"});
  const auto doc = rlw::Json::parse(j.out);
  CHECK(doc["result"]["value"] == 3);
  CHECK(doc["schema"] == "rlw-1");
}

TEST_CASE("gst with verification") {
  const Run r = run({"gst", "--v", "2", "--n", "3", "--verify"});
  CHECK(r.code == rlw::cli::kOk);
  CHECK(r.out == "2, verified\n");
}

TEST_CASE("generated Type 2 file classifies back") {
  const std::string file = temp_path("type2.json");
  const Run g = run({"generate", "type2", "--n", "4", "--x0", "{1}", "--y0", "{1,2,3}", "--out", file});
  REQUIRE(g.code == rlw::cli::kOk);
  const Run c = run({"classify", "b2", "--coloring", file, "--json"});
  REQUIRE(c.code == rlw::cli::kOk);
  const auto doc = rlw::Json::parse(c.out);
  CHECK(doc["result"]["instance"]["type"] == "Type2");
  CHECK(doc["result"]["instance"]["X0"] == "{1}");
  CHECK(doc["result"]["instance"]["Y0"] == "{1,2,3}");

  // The bare coloring schema works too.
  const std::string bare = temp_path("bare.json");
  std::ofstream(bare) << rlw::Json::parse(slurp(file))["result"]["coloring"].dump();
  CHECK(run({"classify", "b2", "--coloring", bare}).out.rfind("Type2", 0) == 0);
  std::remove(file.c_str());
  std::remove(bare.c_str());
}

TEST_CASE("inline colors") {
  const Run r = run({"classify", "c3", "--colors", "1,2,2,1"});
  CHECK(r.code == rlw::cli::kOk);
  CHECK(r.out.rfind("C3Shape", 0) == 0);
  const Run s = run({"classify", "c3", "--colors", "1,2,3,4"});
  CHECK(s.out.find("no structure matched") != std::string::npos);
}

TEST_CASE("verify a written document and catch tampering") {
  const std::string file = temp_path("gr.json");
  REQUIRE(run({"number", "gr", "--q", "fork", "--p", "chain:2", "--k", "3", "--window", "1:4", "--out", file}).code ==
          rlw::cli::kOk);
  const Run ok = run({"verify", file});
  CHECK(ok.code == rlw::cli::kOk);
  CHECK(ok.out.find("verified") != std::string::npos);

  auto doc = rlw::Json::parse(slurp(file));
  auto& colors = doc["witnesses"][0]["coloring"]["colors"];
  colors[0] = colors[colors.size() - 1];
  std::ofstream(file) << doc.dump(2);
  const Run bad = run({"verify", file});
  CHECK(bad.code == rlw::cli::kError);
  CHECK(bad.out.find("tampered") != std::string::npos);
  std::remove(file.c_str());
}

TEST_CASE("budget exhaustion exits with the indeterminate code") {
  const Run r = run({"search", "--n", "4", "--q", "boolean:2", "--p", "chain:3", "--palette", "exact:5", "--budget", "2"});
  CHECK(r.code == rlw::cli::kIndeterminate);
}

TEST_CASE("usage errors name the flag") {
  const Run r = run({"number", "gr", "--q", "fork", "--p", "chain:2", "--k", "3"});
  CHECK(r.code == rlw::cli::kError);
  CHECK(r.err.find("--window") != std::string::npos);
  const Run u = run({"search", "--n", "2", "--bogus"});
  CHECK(u.code == rlw::cli::kError);
  CHECK(u.err.find("--bogus") != std::string::npos);
  const Run p = run({"search", "--n", "2", "--q", "tree"});
  CHECK(p.code == rlw::cli::kError);
  CHECK(run({}).code == rlw::cli::kError);
}

TEST_CASE("dimacs export, solve and decode") {
  const std::string cnf = temp_path("spec.cnf");
  const std::vector<std::string> spec = {"--n", "2", "--q", "chain:3", "--p", "chain:2", "--palette", "exact:3"};
  auto with = [&](std::vector<std::string> head) {
    head.insert(head.end(), spec.begin(), spec.end());
    return head;
  };
  CHECK(run(with({"dimacs", "export", "--out", cnf})).code == rlw::cli::kOk);
  CHECK(slurp(cnf).find("p cnf 18 ") != std::string::npos);
  const Run s = run(with({"dimacs", "solve", "--json"}));
  REQUIRE(s.code == rlw::cli::kOk);
  const auto doc = rlw::Json::parse(s.out);
  // The bottom and the top each need their own color, and both atoms then
  // share the third, which leaves a rainbow chain.
  CHECK(doc["result"]["solver"] == "unsat");
  const Run s2 = run({"dimacs", "solve", "--json", "--n", "2", "--q", "chain:3", "--palette", "exact:3"});
  REQUIRE(s2.code == rlw::cli::kOk);
  CHECK(rlw::Json::parse(s2.out)["result"]["satisfies"] == true);

  const std::string model = temp_path("model.txt");
  // {} -> 1, {1} -> 2, {2} -> 2, {1,2} -> 3: the chain {} < {1} < {1,2} is rainbow.
  std::ofstream(model) << "v 1 -2 -3 -4 5 -6 -7 8 -9 -10 -11 12 0\n";
  const Run d = run(with({"dimacs", "decode", "--model", model}));
  CHECK(d.code == rlw::cli::kError);
  CHECK(d.out.find("VIOLATES") != std::string::npos);
  std::remove(cnf.c_str());
  std::remove(model.c_str());
}

TEST_CASE("claims") {
  const Run l = run({"claim", "list"});
  CHECK(l.out.find("gr-fork-chain-k3") != std::string::npos);
  const Run p = run({"claim", "rr-fork-formula", "--param", "e=2", "--predict-only"});
  CHECK(p.code == rlw::cli::kOk);
  CHECK(p.out.find("= 5") != std::string::npos);
  const Run v = run({"claim", "gr-chain-chain", "--param", "s=3", "--param", "k=3"});
  CHECK(v.code == rlw::cli::kOk);
  CHECK(v.out.find("verdict agree") != std::string::npos);
  CHECK(run({"claim", "nope"}).code == rlw::cli::kError);
}

TEST_CASE("extremal commands") {
  CHECK(run({"lubell", "--n", "4", "--levels", "1:2"}).out == "2\n");
  CHECK(run({"lubell", "--n", "3", "--family", "{};{1,2}"}).out == "4/3\n");
  CHECK(run({"e", "--p", "chain:3"}).out.rfind("e(chain:3) = 2", 0) == 0);
  CHECK(run({"g", "--q", "fork"}).out == "g(fork) = 1\n");
  CHECK(run({"caps", "--n", "3"}).out.find("k <= 7") != std::string::npos);
  CHECK(run({"lu", "--n", "2", "--p", "chain:2"}).out.rfind("Lu_2(chain:2) = 1", 0) == 0);
}

TEST_CASE("constructions and blob") {
  const Run c = run({"construct", "gr-v2", "--s", "3", "--k", "3"});
  CHECK(c.code == rlw::cli::kOk);
  CHECK(c.out.find("avoids") != std::string::npos);
  const Run l = run({"construct", "layered", "--e", "2", "--q", "fork", "--p", "chain:3"});
  CHECK(l.code == rlw::cli::kOk);
  const Run b = run({"blob", "--m", "2", "--n0", "1", "--samples", "50"});
  CHECK(b.code == rlw::cli::kOk);
  CHECK(b.out.find("0 counterexamples") != std::string::npos);
}

}

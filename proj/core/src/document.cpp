#include "rlw/document.hpp"

#include <chrono>
#include <ctime>

#include "rlw/hash.hpp"

#ifndef RLW_VERSION
#define RLW_VERSION "0.0.0"
#endif

namespace rlw {

const char* tool_version() noexcept { return RLW_VERSION; }

RunInfo run_info_now(double wall_ms, int threads) {
  RunInfo r;
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  r.timestamp = buf;
  r.wall_ms = wall_ms;
  r.threads = threads;
  return r;
}

Json avoider_witness(const std::string& label, const AvoidanceSpec& spec, const Coloring& c) {
  return {{"kind", "avoider"}, {"label", label}, {"spec", to_json(spec)}, {"coloring", to_json(c)}};
}

Json structure_witness(const std::string& label, const Coloring& c, const StructureInstance& inst) {
  return {{"kind", "structure"}, {"label", label}, {"coloring", to_json(c)}, {"instance", to_json(c.n(), inst)}};
}

Json copy_witness(const std::string& label, int n, int lo, int hi, const PatternPoset& p, const Embedding& e) {
  return {{"kind", "copy"}, {"label", label}, {"n", n},         {"levels", {lo, hi}},
          {"pattern", p.label()}, {"embedding", to_json(e)}};
}

Json formula_witness(const std::string& label, ClaimId id, const ClaimParams& params, const Prediction& predicted) {
  return {{"kind", "formula"},
          {"label", label},
          {"claim", to_string(id)},
          {"params", to_json(params)},
          {"predicted", to_json(predicted)}};
}

Json blob_witness(const std::string& label, int m, int n0, const Coloring& c, const BlobSublattice& b) {
  return {{"kind", "blob"}, {"label", label}, {"m", m}, {"n0", n0}, {"coloring", to_json(c)},
          {"blob", {{"label", b.label}, {"lo", format_subset(b.lo)}, {"hi", format_subset(b.hi)}}}};
}

Json number_witnesses(const AvoidanceSpec& base, const NumberResult& r) {
  Json out = Json::array();
  for (const auto& w : r.witnesses) {
    if (!w.avoider) continue;
    AvoidanceSpec s = base;
    s.n = w.n;
    out.push_back(avoider_witness("avoider at n=" + std::to_string(w.n), s, *w.avoider));
  }
  return out;
}

Json make_document(const std::string& command, Json instance, Json result, Json witnesses, const RunInfo& run) {
  Json doc;
  doc["schema"] = kSchemaVersion;
  doc["tool"] = {{"name", "rlw"}, {"version", tool_version()}};
  doc["command"] = command;
  doc["instance"] = std::move(instance);
  doc["result"] = std::move(result);
  doc["witnesses"] = witnesses.is_null() ? Json::array() : std::move(witnesses);
  doc["run"] = {{"timestamp", run.timestamp}, {"wall_ms", run.wall_ms}, {"threads", run.threads}};
  doc["content_hash"] = content_hash(doc);
  return doc;
}

std::string content_hash(const Json& doc) {
  Json copy = doc;
  if (copy.is_object()) {
    copy.erase("run");
    copy.erase("content_hash");
  }
  return sha256_hex(copy.dump());
}

}  // namespace rlw

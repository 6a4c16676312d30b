#pragma once

// Result documents: schema "rlw-1" JSON with self-contained witnesses and a
// content hash over everything except the run block.

#include <string>
#include <vector>

#include "rlw/serialize.hpp"

namespace rlw {

inline constexpr const char* kSchemaVersion = "rlw-1";

const char* tool_version() noexcept;

struct RunInfo {
  std::string timestamp;  // ISO 8601, UTC
  double wall_ms = 0.0;
  int threads = 1;
};

RunInfo run_info_now(double wall_ms, int threads);

// Witness records understood by verify_document.
Json avoider_witness(const std::string& label, const AvoidanceSpec& spec, const Coloring& c);
Json structure_witness(const std::string& label, const Coloring& c, const StructureInstance& inst);
// An induced or weak copy of p whose images lie in levels lo..hi of B_n.
Json copy_witness(const std::string& label, int n, int lo, int hi, const PatternPoset& p, const Embedding& e);
Json formula_witness(const std::string& label, ClaimId id, const ClaimParams& params, const Prediction& predicted);
// c on B_{m n0 + m} has no rainbow B_m and the named blob uses <= 2^m - 1 colors.
Json blob_witness(const std::string& label, int m, int n0, const Coloring& c, const BlobSublattice& b);

// Witness records from a number computation, one per avoider.
Json number_witnesses(const AvoidanceSpec& base, const NumberResult& r);

Json make_document(const std::string& command, Json instance, Json result, Json witnesses, const RunInfo& run);

// sha256 of the compact dump with "run" and "content_hash" removed.
std::string content_hash(const Json& doc);

}  // namespace rlw

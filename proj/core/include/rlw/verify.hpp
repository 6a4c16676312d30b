#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rlw/document.hpp"

namespace rlw {

struct VerifyItem {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  bool hash_ok = false;
  std::vector<VerifyItem> items;
  std::vector<std::string> notes;  // e.g. produced by another tool version
  bool pass() const;
};

// Throws a schema error for an unsupported schema.  Every witness is checked
// from scratch with the detectors; one failing witness does not stop the
// others.
VerifyReport verify_document(const Json& doc);
Json to_json(const VerifyReport& r);

struct ClaimInputs {
  ClaimParams params;  // plain inputs such as s, k, n
  std::optional<PatternPoset> p;
  std::optional<PatternPoset> q;
  std::optional<std::pair<int, int>> window;  // GR claims
  int n_max = 0;                              // RR and R claims; 0 = claim default
  int samples = 10000;                        // blob claim
  std::uint64_t seed = 1;
};

struct ClaimReport {
  ClaimId claim = ClaimId::GrChainChain;
  ClaimParams params;  // inputs plus searched sub-values, with provenance
  std::optional<Prediction> predicted;
  Json checked_against;
  std::string verdict;  // "agree", "disagree" or "indeterminate"
  std::optional<int> verified_up_to;
  std::vector<std::string> provenance;
  Json witnesses = Json::array();
};

ClaimReport verify_claim(ClaimId id, const ClaimInputs& inputs, const SearchOptions& options = {});
Json to_json(const ClaimReport& r);

// Largest exact k for which B_n has a coloring without a rainbow q, scanning
// k = 1..2^n.  nullopt if some k was indeterminate.
struct ColorCapSearch {
  std::optional<int> max_k;
  std::vector<std::pair<int, SearchStatus>> per_k;
  std::optional<Coloring> witness;
};
ColorCapSearch max_exact_colors(const PatternPoset& q, int n, const SearchOptions& options = {});

struct BlobSampleReport {
  int samples = 0;
  int from_generators = 0;
  int counterexamples = 0;
  std::vector<Coloring> counterexample_colorings;
  std::vector<std::pair<Coloring, BlobSublattice>> examples;  // a few passing samples
};

// Rainbow-B_m-free colorings of B_{m n0 + m}: structure generators with
// random palettes (m = 2 only) and rejection-sampled random colorings.
BlobSampleReport blob_samples(int m, int n0, int samples, std::uint64_t seed);

}  // namespace rlw

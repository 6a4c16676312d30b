#pragma once

// Closed-form predictions for the quantitative statements the tool checks.
// Sub-values (e(P), R_3(B_n), ...) are never computed here; callers pass
// them in together with where they came from.

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace rlw {

enum class ClaimId {
  GrChainChain,        // GR_k(C_3:C_s)
  GrForkChainK3,       // GR_3(fork:C_s)
  GrForkChainK4,       // GR_4(fork:C_s)
  GrForkChainGood,     // (fork:C_s)_k good for k >= 5
  GrB2BnUpper,         // GR_k(B_2:B_n) upper bound
  RrBmBnUpper,         // RR(B_m:B_n) <= m R_{2^m-1}(B_n) + m
  RrB2BnSandwich,      // R_3(B_n) <= RR(B_2:B_n) <= R_3(B_n) + n
  RrForkFormula,       // RR(fork:P) = 2e(P) + 1
  C3ColorCap,          // exact colorings without rainbow C_3
  B2ColorCap,          // exact colorings without rainbow B_2
  DisjointChainCount,  // c_v(n)
  RrLowerGeneral,      // RR(Q:P) >= e(P)(|Q|-1) + g(Q)
  RkUniformLubell,     // R_k(P) = k e(P)
  BlobColors,          // some blob sublattice uses at most 2^m - 1 colors
};

const std::vector<ClaimId>& all_claims();
std::string to_string(ClaimId id);  // kebab-case, e.g. "gr-chain-chain"
ClaimId parse_claim(const std::string& name);
std::string describe(ClaimId id);
// Parameter names predicted_value reads for this claim.
std::vector<std::string> claim_parameters(ClaimId id);

struct ParamValue {
  long long value = 0;
  std::string provenance = "input";
};

using ClaimParams = std::map<std::string, ParamValue>;

struct Prediction {
  enum class Shape { Exact, Upper, Lower, Range, Good };
  Shape shape = Shape::Exact;
  std::optional<long long> lo;  // Exact: lo == hi
  std::optional<long long> hi;
  std::string formula;          // the expression with values substituted
  ClaimParams used;             // every parameter read, with provenance

  // True when a searched value is consistent with the prediction.
  bool admits(long long value) const;
  std::string text() const;
};

const char* to_string(Prediction::Shape s) noexcept;

// Throws a missing-subvalue error when a needed parameter is absent and a
// range error when the claim's hypotheses fail.
Prediction predicted_value(ClaimId id, const ClaimParams& params);

}  // namespace rlw

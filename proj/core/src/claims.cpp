#include "rlw/claims.hpp"

#include "rlw/error.hpp"
#include "rlw/rational.hpp"

namespace rlw {

namespace {

struct ClaimInfo {
  ClaimId id;
  const char* name;
  const char* description;
  std::vector<std::string> params;
};

const std::vector<ClaimInfo>& table() {
  static const std::vector<ClaimInfo> t = {
      {ClaimId::GrChainChain, "gr-chain-chain", "GR_k(C_3:C_s) = s for 3 <= k <= C(s-1,ceil((s-1)/2))+1, good above",
       {"s", "k"}},
      {ClaimId::GrForkChainK3, "gr-fork-chain-k3", "GR_3(fork:C_s) = 2s-1", {"s"}},
      {ClaimId::GrForkChainK4, "gr-fork-chain-k4", "(fork:C_s)_4 good for s in {2,3}, GR_4(fork:C_s) = s for s >= 4",
       {"s"}},
      {ClaimId::GrForkChainGood, "gr-fork-chain-good", "(fork:C_s)_k good for k >= 5", {"s", "k"}},
      {ClaimId::GrB2BnUpper, "gr-b2-bn-upper",
       "GR_k(B_2:B_n) <= R_3(B_n)+n for 4 <= k <= 2^(R_3(B_n)+n), good above", {"n", "k", "r3"}},
      {ClaimId::RrBmBnUpper, "rr-bm-bn-upper", "RR(B_m:B_n) <= m R_{2^m-1}(B_n) + m", {"m", "r"}},
      {ClaimId::RrB2BnSandwich, "rr-b2-bn-sandwich", "R_3(B_n) <= RR(B_2:B_n) <= R_3(B_n) + n", {"n", "r3"}},
      {ClaimId::RrForkFormula, "rr-fork-formula", "RR(fork:P) = 2e(P)+1 for uniformly Lubell-bounded P", {"e"}},
      {ClaimId::C3ColorCap, "c3-color-cap", "no rainbow C_3 in an exact k-coloring of B_n forces k <= C(n,ceil(n/2))+1",
       {"n"}},
      {ClaimId::B2ColorCap, "b2-color-cap",
       "no rainbow B_2 in an exact k-coloring of B_n forces k <= C(n,n/2)+C(n-1,(n-1)/2)+C(n-2,(n-2)/2)+1", {"n"}},
      {ClaimId::DisjointChainCount, "disjoint-chain-count", "c_v(n) = C(n-v+1, floor((n-v+1)/2))", {"v", "n"}},
      {ClaimId::RrLowerGeneral, "rr-lower-general", "RR(Q:P) >= e(P)(|Q|-1) + g(Q)", {"e", "q", "g"}},
      {ClaimId::RkUniformLubell, "rk-uniform-lubell", "R_k(P) = k e(P)", {"k", "e"}},
      {ClaimId::BlobColors, "blob-colors",
       "a rainbow-B_m-free coloring has a blob sublattice with at most 2^m - 1 colors", {"m"}},
  };
  return t;
}

const ClaimInfo& info(ClaimId id) {
  for (const auto& c : table())
    if (c.id == id) return c;
  fail(ErrorKind::Range, "unknown claim");
}

long long need(const ClaimParams& params, const std::string& name, Prediction& pred) {
  const auto it = params.find(name);
  if (it == params.end()) fail(ErrorKind::MissingSubvalue, "parameter '" + name + "' is required");
  pred.used[name] = it->second;
  return it->second.value;
}

void require(bool ok, const std::string& what) {
  if (!ok) fail(ErrorKind::Range, what);
}

long long cap_c3(long long n) { return static_cast<long long>(binomial(static_cast<int>(n), static_cast<int>((n + 1) / 2))) + 1; }

}  // namespace

const std::vector<ClaimId>& all_claims() {
  static const std::vector<ClaimId> ids = [] {
    std::vector<ClaimId> v;
    for (const auto& c : table()) v.push_back(c.id);
    return v;
  }();
  return ids;
}

std::string to_string(ClaimId id) { return info(id).name; }
std::string describe(ClaimId id) { return info(id).description; }
std::vector<std::string> claim_parameters(ClaimId id) { return info(id).params; }

ClaimId parse_claim(const std::string& name) {
  for (const auto& c : table())
    if (name == c.name) return c.id;
  std::string known;
  for (const auto& c : table()) known += std::string(known.empty() ? "" : ", ") + c.name;
  fail(ErrorKind::Parse, "unknown claim '" + name + "' (known: " + known + ")");
}

const char* to_string(Prediction::Shape s) noexcept {
  switch (s) {
    case Prediction::Shape::Exact: return "exact";
    case Prediction::Shape::Upper: return "upper";
    case Prediction::Shape::Lower: return "lower";
    case Prediction::Shape::Range: return "range";
    case Prediction::Shape::Good: return "good";
  }
  return "?";
}

bool Prediction::admits(long long value) const {
  if (shape == Shape::Good) return false;
  if (lo && value < *lo) return false;
  if (hi && value > *hi) return false;
  return true;
}

std::string Prediction::text() const {
  switch (shape) {
    case Shape::Exact: return "= " + std::to_string(*lo);
    case Shape::Upper: return "<= " + std::to_string(*hi);
    case Shape::Lower: return ">= " + std::to_string(*lo);
    case Shape::Range: return "in [" + std::to_string(*lo) + ", " + std::to_string(*hi) + "]";
    case Shape::Good: return "good";
  }
  return "?";
}

Prediction predicted_value(ClaimId id, const ClaimParams& params) {
  Prediction p;
  auto exact = [&](long long v, std::string f) {
    p.shape = Prediction::Shape::Exact;
    p.lo = p.hi = v;
    p.formula = std::move(f) + " = " + std::to_string(v);
  };
  auto upper = [&](long long v, std::string f) {
    p.shape = Prediction::Shape::Upper;
    p.hi = v;
    p.formula = std::move(f) + " = " + std::to_string(v);
  };
  auto good = [&](std::string f) {
    p.shape = Prediction::Shape::Good;
    p.formula = std::move(f);
  };
  auto str = [](long long v) { return std::to_string(v); };

  switch (id) {
    case ClaimId::GrChainChain: {
      const long long s = need(params, "s", p), k = need(params, "k", p);
      require(s >= 3 && k >= 3, "needs s >= 3 and k >= 3");
      const long long cap = cap_c3(s - 1);
      if (k <= cap) exact(s, "s");
      else good("k = " + str(k) + " > C(" + str(s - 1) + "," + str(s / 2) + ")+1 = " + str(cap));
      break;
    }
    case ClaimId::GrForkChainK3: {
      const long long s = need(params, "s", p);
      require(s >= 2, "needs s >= 2");
      exact(2 * s - 1, "2*" + str(s) + "-1");
      break;
    }
    case ClaimId::GrForkChainK4: {
      const long long s = need(params, "s", p);
      require(s >= 2, "needs s >= 2");
      if (s <= 3) good("s = " + str(s) + " in {2,3}");
      else exact(s, "s");
      break;
    }
    case ClaimId::GrForkChainGood: {
      const long long s = need(params, "s", p), k = need(params, "k", p);
      require(s >= 2 && k >= 5, "needs s >= 2 and k >= 5");
      good("k = " + str(k) + " >= 5");
      break;
    }
    case ClaimId::GrB2BnUpper: {
      const long long n = need(params, "n", p), k = need(params, "k", p), r3 = need(params, "r3", p);
      require(n >= 1 && k >= 4 && r3 >= 1, "needs n >= 1, k >= 4, R_3(B_n) >= 1");
      require(r3 + n < 62, "2^(R_3(B_n)+n) overflows");
      const long long top = 1LL << (r3 + n);
      if (k <= top) upper(r3 + n, str(r3) + "+" + str(n));
      else good("k = " + str(k) + " > 2^" + str(r3 + n));
      break;
    }
    case ClaimId::RrBmBnUpper: {
      const long long m = need(params, "m", p), r = need(params, "r", p);
      require(m >= 1 && r >= 0, "needs m >= 1 and R >= 0");
      upper(m * r + m, str(m) + "*" + str(r) + "+" + str(m));
      break;
    }
    case ClaimId::RrB2BnSandwich: {
      const long long n = need(params, "n", p), r3 = need(params, "r3", p);
      require(n >= 1, "needs n >= 1");
      p.shape = Prediction::Shape::Range;
      p.lo = r3;
      p.hi = r3 + n;
      p.formula = "[" + str(r3) + ", " + str(r3) + "+" + str(n) + "]";
      break;
    }
    case ClaimId::RrForkFormula: {
      const long long e = need(params, "e", p);
      require(e >= 1, "needs e(P) >= 1 (P other than C_1)");
      exact(2 * e + 1, "2*" + str(e) + "+1");
      break;
    }
    case ClaimId::C3ColorCap: {
      const long long n = need(params, "n", p);
      require(n >= 2 && n <= 60, "needs 2 <= n <= 60");
      upper(cap_c3(n), "C(" + str(n) + "," + str((n + 1) / 2) + ")+1");
      break;
    }
    case ClaimId::B2ColorCap: {
      const long long n = need(params, "n", p);
      require(n >= 3 && n <= 60, "needs 3 <= n <= 60");
      const int ni = static_cast<int>(n);
      const long long v = static_cast<long long>(binomial(ni, ni / 2) + binomial(ni - 1, (ni - 1) / 2) +
                                                 binomial(ni - 2, (ni - 2) / 2)) + 1;
      upper(v, "C(" + str(n) + "," + str(n / 2) + ")+C(" + str(n - 1) + "," + str((n - 1) / 2) + ")+C(" +
                   str(n - 2) + "," + str((n - 2) / 2) + ")+1");
      break;
    }
    case ClaimId::DisjointChainCount: {
      const long long v = need(params, "v", p), n = need(params, "n", p);
      require(v >= 1 && n - v + 1 >= 0 && n <= 60, "needs 1 <= v <= n+1");
      const long long t = n - v + 1;
      exact(static_cast<long long>(binomial(static_cast<int>(t), static_cast<int>(t / 2))),
            "C(" + str(t) + "," + str(t / 2) + ")");
      break;
    }
    case ClaimId::RrLowerGeneral: {
      const long long e = need(params, "e", p), q = need(params, "q", p), g = need(params, "g", p);
      require(e >= 0 && q >= 1 && g >= 0 && g <= 2, "needs e >= 0, |Q| >= 1, g in {0,1,2}");
      p.shape = Prediction::Shape::Lower;
      p.lo = e * (q - 1) + g;
      p.formula = str(e) + "*(" + str(q) + "-1)+" + str(g) + " = " + str(*p.lo);
      break;
    }
    case ClaimId::RkUniformLubell: {
      const long long k = need(params, "k", p), e = need(params, "e", p);
      require(k >= 1 && e >= 1, "needs k >= 1 and e >= 1");
      exact(k * e, str(k) + "*" + str(e));
      break;
    }
    case ClaimId::BlobColors: {
      const long long m = need(params, "m", p);
      require(m >= 1 && m < 62, "needs 1 <= m < 62");
      upper((1LL << m) - 1, "2^" + str(m) + "-1");
      break;
    }
  }
  return p;
}

}  // namespace rlw

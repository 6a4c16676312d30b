#include "rlw/dimacs.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "rlw/error.hpp"
#include "rlw/hash.hpp"

namespace rlw {

int CnfLayout::e(Code s, Code t) const {
  if (s > t) std::swap(s, t);
  const long long m = 1LL << n;
  const long long idx = static_cast<long long>(s) * m - static_cast<long long>(s) * (s + 1) / 2 + (t - s - 1);
  return x_vars + static_cast<int>(idx) + 1;
}

CnfLayout cnf_layout(const AvoidanceSpec& spec) {
  spec.validate();
  if (!spec.palette.finite()) fail(ErrorKind::PaletteInfinite, "DIMACS export needs a finite palette");
  CnfLayout l;
  l.n = spec.n;
  l.k = spec.palette.k;
  const long long m = 1LL << spec.n;
  if (m * l.k + m * (m - 1) / 2 > 100'000'000LL) fail(ErrorKind::Capacity, "CNF would exceed 10^8 variables");
  l.x_vars = static_cast<int>(m * l.k);
  l.e_vars = spec.rainbow_target ? static_cast<int>(m * (m - 1) / 2) : 0;
  return l;
}

Cnf export_dimacs(const AvoidanceSpec& spec) {
  const CnfLayout l = cnf_layout(spec);
  const Code m = Code{1} << spec.n;
  Cnf cnf;
  cnf.num_vars = l.x_vars + l.e_vars;
  cnf.comments.push_back("spec-sha256: " + sha256_hex(canonical_text(spec)));
  cnf.comments.push_back("spec: " + canonical_text(spec));
  cnf.comments.push_back("x(S,c) = code(S)*" + std::to_string(l.k) + " + c + 1, colors 0-based");

  for (Code s = 0; s < m; ++s) {
    std::vector<int> some;
    for (int c = 0; c < l.k; ++c) some.push_back(l.x(s, c));
    cnf.clauses.push_back(some);
    for (int a = 0; a < l.k; ++a)
      for (int b = a + 1; b < l.k; ++b) cnf.clauses.push_back({-l.x(s, a), -l.x(s, b)});
  }
  if (spec.palette.kind == Palette::Kind::ExactK) {
    for (int c = 0; c < l.k; ++c) {
      std::vector<int> used;
      for (Code s = 0; s < m; ++s) used.push_back(l.x(s, c));
      cnf.clauses.push_back(used);
    }
  }
  if (spec.mono_target) {
    for (const auto& img : copy_images(spec.n, FamilyMask::all(spec.n), *spec.mono_target, spec.mode)) {
      for (int c = 0; c < l.k; ++c) {
        std::vector<int> cl;
        for (Code s : img) cl.push_back(-l.x(s, c));
        cnf.clauses.push_back(cl);
      }
    }
  }
  if (spec.rainbow_target) {
    for (Code s = 0; s < m; ++s) {
      for (Code t = s + 1; t < m; ++t) {
        const int e = l.e(s, t);
        for (int c = 0; c < l.k; ++c) {
          cnf.clauses.push_back({-l.x(s, c), -l.x(t, c), e});
          cnf.clauses.push_back({-e, -l.x(s, c), l.x(t, c)});
        }
      }
    }
    for (const auto& img : copy_images(spec.n, FamilyMask::all(spec.n), *spec.rainbow_target, spec.mode)) {
      std::vector<int> cl;
      for (std::size_t a = 0; a < img.size(); ++a)
        for (std::size_t b = a + 1; b < img.size(); ++b) cl.push_back(l.e(img[a], img[b]));
      cnf.clauses.push_back(cl);
    }
  }
  return cnf;
}

std::string to_dimacs(const Cnf& cnf) {
  std::ostringstream os;
  for (const auto& c : cnf.comments) os << "c " << c << '\n';
  os << "p cnf " << cnf.num_vars << ' ' << cnf.clauses.size() << '\n';
  for (const auto& cl : cnf.clauses) {
    for (int lit : cl) os << lit << ' ';
    os << "0\n";
  }
  return os.str();
}

Cnf parse_dimacs(std::string_view text) {
  Cnf cnf;
  std::istringstream is{std::string(text)};
  std::string line;
  bool header = false;
  std::size_t declared = 0;
  std::vector<int> cur;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line[0] == 'c') {
      cnf.comments.push_back(line.size() > 2 ? line.substr(2) : std::string());
      continue;
    }
    std::istringstream ls(line);
    if (line[0] == 'p') {
      std::string p, fmt;
      if (!(ls >> p >> fmt >> cnf.num_vars >> declared) || fmt != "cnf") fail(ErrorKind::Parse, "bad DIMACS header");
      header = true;
      continue;
    }
    if (!header) fail(ErrorKind::Parse, "clause before the DIMACS header");
    long long lit;
    while (ls >> lit) {
      if (lit == 0) {
        cnf.clauses.push_back(cur);
        cur.clear();
      } else {
        if (std::llabs(lit) > cnf.num_vars) fail(ErrorKind::Parse, "literal out of range: " + std::to_string(lit));
        cur.push_back(static_cast<int>(lit));
      }
    }
    if (!ls.eof()) fail(ErrorKind::Parse, "bad token in clause line: " + line);
  }
  if (!header) fail(ErrorKind::Parse, "missing DIMACS header");
  if (!cur.empty()) fail(ErrorKind::Parse, "last clause lacks terminating 0");
  if (cnf.clauses.size() != declared) {
    fail(ErrorKind::Parse, "header declares " + std::to_string(declared) + " clauses, found " +
                               std::to_string(cnf.clauses.size()));
  }
  return cnf;
}

std::vector<int> parse_model(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string line;
  std::vector<int> v_lits, bare;
  bool saw_v = false;
  auto read = [](std::istringstream& ls, std::vector<int>& out) {
    std::string tok;
    while (ls >> tok) {
      char* end = nullptr;
      const long val = std::strtol(tok.c_str(), &end, 10);
      if (*end != '\0') fail(ErrorKind::Parse, "bad literal '" + tok + "'");
      if (val != 0) out.push_back(static_cast<int>(val));
    }
  };
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == 'c') continue;
    if (line[0] == 's') {
      if (line.find("UNSAT") != std::string::npos) return {};
      continue;
    }
    std::istringstream ls(line);
    if (line[0] == 'v') {
      saw_v = true;
      ls.ignore(1);
      read(ls, v_lits);
    } else {
      read(ls, bare);
    }
  }
  return saw_v ? v_lits : bare;
}

Coloring decode_model(const AvoidanceSpec& spec, const std::vector<int>& model) {
  const CnfLayout l = cnf_layout(spec);
  std::vector<std::int8_t> truth(static_cast<std::size_t>(l.x_vars) + 1, 0);
  for (int lit : model) {
    const int v = std::abs(lit);
    if (v <= l.x_vars) truth[v] = lit > 0 ? 1 : 0;
  }
  const Code m = Code{1} << spec.n;
  std::vector<Color> col(m);
  for (Code s = 0; s < m; ++s) {
    int found = -1;
    for (int c = 0; c < l.k; ++c) {
      if (!truth[l.x(s, c)]) continue;
      if (found >= 0) {
        fail(ErrorKind::InconsistentModel, "subset " + format_subset(s) + " has colors " + std::to_string(found + 1) +
                                               " and " + std::to_string(c + 1));
      }
      found = c;
    }
    if (found < 0) fail(ErrorKind::InconsistentModel, "subset " + format_subset(s) + " has no color");
    col[s] = static_cast<Color>(found);
  }
  return Coloring(spec.n, std::move(col), l.k);
}

namespace {

// Chronological-backtracking DPLL with two watched literals.
class Dpll {
 public:
  explicit Dpll(const Cnf& cnf) : nv_(cnf.num_vars), val_(nv_ + 1, -1), watches_(2 * (nv_ + 1)) {
    for (const auto& cl : cnf.clauses) {
      std::vector<int> c = cl;
      std::sort(c.begin(), c.end());
      c.erase(std::unique(c.begin(), c.end()), c.end());
      bool taut = false;
      for (std::size_t i = 0; i + 1 < c.size(); ++i)
        for (std::size_t j = i + 1; j < c.size(); ++j)
          if (c[i] == -c[j]) taut = true;
      if (taut) continue;
      if (c.empty()) {
        trivially_unsat_ = true;
        continue;
      }
      if (c.size() == 1) {
        units_.push_back(c[0]);
        continue;
      }
      const int id = static_cast<int>(clauses_.size());
      clauses_.push_back(std::move(c));
      watches_[idx(clauses_[id][0])].push_back(id);
      watches_[idx(clauses_[id][1])].push_back(id);
    }
  }

  SolveResult solve(std::uint64_t max_decisions) {
    SolveResult res;
    res.status = SolveResult::Status::Unsat;
    if (trivially_unsat_) return res;
    for (int u : units_) {
      if (value(u) == 0) return res;
      if (value(u) < 0) assign(u);
    }
    struct Decision {
      int lit;
      std::size_t trail_mark;
      bool flipped;
    };
    std::vector<Decision> stack;
    while (true) {
      if (!propagate()) {
        while (true) {
          if (stack.empty()) return res;
          Decision d = stack.back();
          stack.pop_back();
          undo(d.trail_mark);
          if (!d.flipped) {
            stack.push_back({-d.lit, d.trail_mark, true});
            assign(-d.lit);
            break;
          }
        }
        continue;
      }
      while (next_var_ <= nv_ && val_[next_var_] >= 0) ++next_var_;
      if (next_var_ > nv_) {
        res.status = SolveResult::Status::Sat;
        for (int v = 1; v <= nv_; ++v) res.model.push_back(val_[v] ? v : -v);
        return res;
      }
      if (++res.decisions > max_decisions) {
        res.status = SolveResult::Status::Unknown;
        return res;
      }
      stack.push_back({-next_var_, trail_.size(), false});
      assign(-next_var_);
    }
  }

 private:
  static int idx(int lit) { return 2 * std::abs(lit) + (lit < 0 ? 1 : 0); }
  int value(int lit) const {
    const int v = val_[std::abs(lit)];
    return v < 0 ? -1 : (v == (lit > 0 ? 1 : 0) ? 1 : 0);
  }
  void assign(int lit) {
    val_[std::abs(lit)] = lit > 0 ? 1 : 0;
    trail_.push_back(lit);
  }
  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const int v = std::abs(trail_.back());
      val_[v] = -1;
      if (v < next_var_) next_var_ = v;
      trail_.pop_back();
    }
    qhead_ = std::min(qhead_, mark);
  }
  bool propagate() {
    while (qhead_ < trail_.size()) {
      const int falsified = -trail_[qhead_++];
      auto& ws = watches_[idx(falsified)];
      for (std::size_t i = 0; i < ws.size();) {
        auto& c = clauses_[ws[i]];
        if (c[0] == falsified) std::swap(c[0], c[1]);
        if (value(c[0]) == 1) {
          ++i;
          continue;
        }
        bool moved = false;
        for (std::size_t j = 2; j < c.size(); ++j) {
          if (value(c[j]) != 0) {
            std::swap(c[1], c[j]);
            watches_[idx(c[1])].push_back(ws[i]);
            ws[i] = ws.back();
            ws.pop_back();
            moved = true;
            break;
          }
        }
        if (moved) continue;
        if (value(c[0]) == 0) {
          qhead_ = trail_.size();
          return false;
        }
        assign(c[0]);
        ++i;
      }
    }
    return true;
  }

  int nv_;
  std::vector<std::int8_t> val_;
  std::vector<std::vector<int>> watches_;
  std::vector<std::vector<int>> clauses_;
  std::vector<int> units_;
  std::vector<int> trail_;
  std::size_t qhead_ = 0;
  int next_var_ = 1;
  bool trivially_unsat_ = false;
};

}  // namespace

SolveResult solve_cnf(const Cnf& cnf, std::uint64_t max_decisions) { return Dpll(cnf).solve(max_decisions); }

}  // namespace rlw

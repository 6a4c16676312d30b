#include "rlw/search.hpp"

#include <chrono>
#include <cstdlib>
#include <thread>

#include "engine.hpp"
#include "rlw/error.hpp"

namespace rlw {

using detail::Engine;

std::string to_string(const Palette& p) {
  switch (p.kind) {
    case Palette::Kind::ExactK: return "exact:" + std::to_string(p.k);
    case Palette::Kind::AtMostK: return "atmost:" + std::to_string(p.k);
    case Palette::Kind::Unbounded: return "unbounded";
  }
  return "?";
}

Palette parse_palette(const std::string& text) {
  if (text == "unbounded") return Palette::unbounded();
  const auto colon = text.find(':');
  if (colon == std::string::npos) fail(ErrorKind::Parse, "palette must be exact:K, atmost:K or unbounded");
  const std::string head = text.substr(0, colon);
  int k = 0;
  try {
    std::size_t used = 0;
    k = std::stoi(text.substr(colon + 1), &used);
    if (used != text.size() - colon - 1) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    fail(ErrorKind::Parse, "bad palette size in '" + text + "'");
  }
  if (k < 1) fail(ErrorKind::Range, "palette size must be positive in '" + text + "'");
  if (head == "exact") return Palette::exact(k);
  if (head == "atmost") return Palette::at_most(k);
  fail(ErrorKind::Parse, "unknown palette '" + text + "'");
}

void AvoidanceSpec::validate() const {
  check_ground(n);
  if (!rainbow_target && !mono_target) fail(ErrorKind::Precondition, "spec needs a rainbow or a mono target");
  if (palette.finite() && palette.k < 1) fail(ErrorKind::Range, "palette size must be positive");
  if (palette.kind == Palette::Kind::ExactK && static_cast<std::size_t>(palette.k) > (std::size_t{1} << n)) {
    fail(ErrorKind::Range, "exact palette " + std::to_string(palette.k) + " exceeds 2^" + std::to_string(n));
  }
}

std::string canonical_text(const AvoidanceSpec& spec) {
  std::string s = "n=" + std::to_string(spec.n);
  s += ";palette=" + to_string(spec.palette);
  s += ";rainbow=" + (spec.rainbow_target ? spec.rainbow_target->label() : std::string("none"));
  s += ";mono=" + (spec.mono_target ? spec.mono_target->label() : std::string("none"));
  s += ";mode=" + std::string(to_string(spec.mode));
  return s;
}

bool satisfies(const Coloring& c, const AvoidanceSpec& spec, std::string* why) {
  auto no = [&](const std::string& reason) {
    if (why) *why = reason;
    return false;
  };
  if (c.n() != spec.n) return no("coloring is over B_" + std::to_string(c.n()));
  switch (spec.palette.kind) {
    case Palette::Kind::ExactK:
      if (c.k() != spec.palette.k || !c.exact()) return no("coloring is not an exact " + std::to_string(spec.palette.k) + "-coloring");
      break;
    case Palette::Kind::AtMostK:
      if (c.distinct_colors() > spec.palette.k) return no("coloring uses more than " + std::to_string(spec.palette.k) + " colors");
      break;
    case Palette::Kind::Unbounded: break;
  }
  if (spec.rainbow_target) {
    if (auto e = find_rainbow_copy(c, *spec.rainbow_target, spec.mode)) {
      std::string img;
      for (auto s : e->map) img += format_subset(s);
      return no("rainbow " + spec.rainbow_target->label() + " at " + img);
    }
  }
  if (spec.mono_target) {
    if (auto m = find_mono_copy(c, *spec.mono_target, spec.mode)) {
      return no("monochromatic " + spec.mono_target->label() + " in color " + std::to_string(m->color + 1));
    }
  }
  return true;
}

std::uint64_t default_budget() {
  if (const char* env = std::getenv("RLW_BUDGET")) {
    try {
      std::size_t used = 0;
      const double v = std::stod(env, &used);
      if (used > 0 && v >= 1) return static_cast<std::uint64_t>(v);
    } catch (const std::exception&) {
    }
  }
  return 100'000'000ULL;
}

const char* to_string(SearchStatus s) noexcept {
  switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::Absent: return "absent";
    case SearchStatus::Indeterminate: return "indeterminate";
  }
  return "?";
}

const char* to_string(NumberKind k) noexcept {
  switch (k) {
    case NumberKind::R: return "R";
    case NumberKind::RR: return "RR";
    case NumberKind::GR: return "GR";
  }
  return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

SearchOutcome sequential(const AvoidanceSpec& spec, const SearchOptions& options) {
  Engine eng(spec, options);
  SearchOutcome out;
  const auto r = eng.run([&](const Engine& e) {
    out.coloring = e.coloring();
    return true;
  });
  out.stats.nodes = eng.nodes();
  out.status = r == Engine::Result::Stopped     ? SearchStatus::Found
               : r == Engine::Result::Exhausted ? SearchStatus::Absent
                                                : SearchStatus::Indeterminate;
  return out;
}

// Splits at the shallowest depth with enough branches; prefixes are handed
// out in canonical order and the lowest prefix with a solution wins, which
// is the solution the sequential search would return.
SearchOutcome parallel(const AvoidanceSpec& spec, const SearchOptions& options) {
  const int workers = options.threads;
  Engine splitter(spec, options);
  std::vector<std::vector<std::int8_t>> prefixes;
  int depth = 1;
  for (; depth <= splitter.positions(); ++depth) {
    prefixes.clear();
    Engine probe(spec, options);
    probe.run(
        [&](const Engine& e) {
          prefixes.push_back(e.prefix(depth));
          return false;
        },
        depth);
    if (static_cast<int>(prefixes.size()) >= 4 * workers || depth == splitter.positions()) break;
  }
  std::atomic<std::uint64_t> nodes{0};  // budget meter, updated in batches
  std::atomic<std::uint64_t> expanded{0};
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{prefixes.size()};
  std::vector<std::optional<Coloring>> found(prefixes.size());
  // 0 = not run, 1 = exhausted, 2 = found, 3 = out of budget or cancelled
  std::vector<std::atomic<int>> state(prefixes.size());
  std::vector<std::atomic<bool>> cancel(prefixes.size());
  auto work = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= prefixes.size() || i > best.load()) return;
      Engine eng(spec, options);
      eng.share_budget(&nodes);
      eng.set_cancel(&cancel[i]);
      if (!eng.apply_prefix(prefixes[i])) {
        state[i] = 1;
        continue;
      }
      const auto r = eng.run([&](const Engine& e) {
        found[i] = e.coloring();
        return true;
      });
      expanded += eng.nodes();
      state[i] = r == Engine::Result::Exhausted ? 1 : r == Engine::Result::Stopped ? 2 : 3;
      if (r == Engine::Result::Stopped) {
        std::size_t cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
        for (std::size_t j = i + 1; j < prefixes.size(); ++j) cancel[j] = true;
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < workers; ++t) pool.emplace_back(work);
  for (auto& th : pool) th.join();
  SearchOutcome out;
  out.stats.nodes = expanded.load();
  const std::size_t b = best.load();
  for (std::size_t i = 0; i < prefixes.size() && i <= b; ++i) {
    const int st = state[i].load();
    if (st == 2) {
      out.status = SearchStatus::Found;
      out.coloring = found[i];
      return out;
    }
    if (st != 1) {
      out.status = SearchStatus::Indeterminate;
      return out;
    }
  }
  out.status = SearchStatus::Absent;
  return out;
}
}  // namespace

SearchOutcome exists_coloring(const AvoidanceSpec& spec, const SearchOptions& options) {
  const auto t0 = Clock::now();
  SearchOutcome out = options.threads > 1 ? parallel(spec, options) : sequential(spec, options);
  out.stats.wall_ms = ms_since(t0);
  return out;
}

EnumerationOutcome for_each_coloring(const AvoidanceSpec& spec, const std::function<bool(const Coloring&)>& visit,
                                     const SearchOptions& options) {
  const auto t0 = Clock::now();
  Engine eng(spec, options);
  EnumerationOutcome out;
  const auto r = eng.run([&](const Engine& e) {
    ++out.visited;
    return !visit(e.coloring());
  });
  out.complete = r == Engine::Result::Exhausted;
  out.stats.nodes = eng.nodes();
  out.stats.wall_ms = ms_since(t0);
  return out;
}

namespace {

NumberWitness probe(const AvoidanceSpec& spec, const SearchOptions& options, NumberResult& acc) {
  NumberWitness w;
  w.n = spec.n;
  const auto r = exists_coloring(spec, options);
  acc.stats.nodes += r.stats.nodes;
  w.status = r.status;
  w.avoider = r.coloring;
  return w;
}

// Scans n = 1.. until no avoider exists; the answer is that n.
NumberResult threshold_scan(NumberKind kind, AvoidanceSpec spec, int n_max, const SearchOptions& options) {
  const auto t0 = Clock::now();
  NumberResult res;
  res.kind = kind;
  for (int n = 1; n <= n_max; ++n) {
    spec.n = n;
    NumberWitness w = probe(spec, options, res);
    res.witnesses.push_back(w);
    res.verified_up_to = n;
    if (w.status == SearchStatus::Indeterminate) {
      res.indeterminate = true;
      res.notes.push_back("budget exhausted at n=" + std::to_string(n));
      break;
    }
    if (w.status == SearchStatus::Absent) {
      res.value = n;
      break;
    }
  }
  if (!res.value && !res.indeterminate) {
    res.notes.push_back("avoiders exist for every n <= " + std::to_string(n_max) + "; value exceeds " +
                        std::to_string(n_max));
  }
  res.stats.wall_ms = ms_since(t0);
  return res;
}

}  // namespace

NumberResult compute_ramsey(const PatternPoset& p, int k, CopyMode mode, int n_max, const SearchOptions& options) {
  if (k < 1) fail(ErrorKind::Range, "k must be positive");
  if (p.size() == 1) {
    NumberResult res;
    res.kind = NumberKind::R;
    res.value = 0;
    res.notes.push_back("a one-element pattern sits in every color class of B_0");
    return res;
  }
  AvoidanceSpec spec;
  spec.mono_target = p;
  spec.palette = Palette::at_most(k);
  spec.mode = mode;
  return threshold_scan(NumberKind::R, spec, n_max, options);
}

NumberResult compute_rr(const PatternPoset& q, const PatternPoset& p, int n_max, const SearchOptions& options,
                        CopyMode mode) {
  AvoidanceSpec spec;
  spec.rainbow_target = q;
  spec.mono_target = p;
  spec.palette = Palette::unbounded();
  spec.mode = mode;
  return threshold_scan(NumberKind::RR, spec, n_max, options);
}

NumberResult compute_gr(const PatternPoset& q, const PatternPoset& p, int k, std::pair<int, int> window,
                        const SearchOptions& options, CopyMode mode) {
  if (k < 2) fail(ErrorKind::Range, "k must be at least 2");
  auto [lo, hi] = window;
  if (lo < 1 || hi < lo) fail(ErrorKind::Range, "window must satisfy 1 <= lo <= hi");
  const auto t0 = Clock::now();
  NumberResult res;
  res.kind = NumberKind::GR;
  res.verified_up_to = hi;
  AvoidanceSpec spec;
  spec.rainbow_target = q;
  spec.mono_target = p;
  spec.palette = Palette::exact(k);
  spec.mode = mode;
  auto examine = [&](int n) {
    NumberWitness w;
    w.n = n;
    if (n < 31 && (std::size_t{1} << n) < static_cast<std::size_t>(k)) {
      w.vacuous = true;
      w.status = SearchStatus::Absent;
      return w;
    }
    spec.n = n;
    return probe(spec, options, res);
  };
  std::optional<int> top_avoider;
  std::optional<int> first_absent;
  for (int n = lo; n <= hi; ++n) {
    NumberWitness w = examine(n);
    res.witnesses.push_back(w);
    if (w.status == SearchStatus::Indeterminate) {
      res.indeterminate = true;
      res.notes.push_back("budget exhausted at N=" + std::to_string(n));
      break;
    }
    if (w.status == SearchStatus::Found) {
      if (first_absent && *first_absent < n) {
        res.notes.push_back("avoider at N=" + std::to_string(n) + " after none at N=" + std::to_string(*first_absent));
      }
      top_avoider = n;
    } else if (!first_absent && !w.vacuous) {
      first_absent = n;
    }
  }
  if (!res.indeterminate) {
    if (top_avoider) {
      if (*top_avoider == hi) {
        res.notes.push_back("avoider at the window top; value exceeds " + std::to_string(hi));
      } else {
        res.value = *top_avoider + 1;
      }
    } else {
      // Nothing in the window: look below it, nearest first.
      std::vector<NumberWitness> below;
      for (int n = lo - 1; n >= 1; --n) {
        NumberWitness w = examine(n);
        below.insert(below.begin(), w);
        if (w.status == SearchStatus::Indeterminate) {
          res.indeterminate = true;
          res.notes.push_back("budget exhausted at N=" + std::to_string(n));
          break;
        }
        if (w.status == SearchStatus::Found) {
          res.value = n + 1;
          break;
        }
      }
      res.witnesses.insert(res.witnesses.begin(), below.begin(), below.end());
      if (!res.value && !res.indeterminate) res.good = true;
    }
  }
  res.stats.wall_ms = ms_since(t0);
  return res;
}

}  // namespace rlw

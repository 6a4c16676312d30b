#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "rlw/dimacs.hpp"
#include "rlw/document.hpp"
#include "rlw/error.hpp"
#include "rlw/verify.hpp"

namespace rlw::cli {

namespace {

using Clock = std::chrono::steady_clock;

struct Common {
  bool json = false;
  std::string out_file;
  std::uint64_t budget = 0;
  int threads = 1;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_flag("--json", c.json, "Print the result document as JSON");
  sub->add_option("--out", c.out_file, "Also write the result document to this file");
  sub->add_option("--budget", c.budget, "Node budget (default: RLW_BUDGET or 1e8)");
  sub->add_option("--threads", c.threads, "Worker threads for existence searches")->check(CLI::Range(1, 256));
}

SearchOptions options_from(const Common& c) {
  SearchOptions o;
  if (c.budget) o.budget = c.budget;
  o.threads = c.threads;
  return o;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Usage, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) fail(ErrorKind::Usage, "cannot write '" + path + "'");
  f << text;
}

Json parse_json(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const std::exception& e) {
    fail(ErrorKind::Parse, what + " is not valid JSON: " + e.what());
  }
}

// A bare coloring object, or a result document carrying one.
Coloring coloring_from_any(const Json& j) {
  if (j.contains("colors")) return coloring_from_json(j);
  if (j.contains("result") && j.at("result").contains("coloring")) return coloring_from_json(j.at("result").at("coloring"));
  fail(ErrorKind::Schema, "no coloring found (expected {\"n\",\"k\",\"colors\"})");
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> v;
  std::string tok;
  std::istringstream is(text);
  while (std::getline(is, tok, ',')) {
    const auto b = tok.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    try {
      v.push_back(std::stoi(tok.substr(b)));
    } catch (const std::exception&) {
      fail(ErrorKind::Parse, "bad integer '" + tok + "'");
    }
  }
  return v;
}

struct ColoringInput {
  std::string file;
  std::string colors;
  int n = 0;
  int k = 0;

  void add(CLI::App* sub) {
    sub->add_option("--coloring", file, "Coloring JSON file {n,k,colors}");
    sub->add_option("--colors", colors, "Inline 1-based colors in (size, bitmask) order, comma separated");
    sub->add_option("--n", n, "Ground set size for --colors");
    sub->add_option("--k", k, "Palette size for --colors (default: largest color)");
  }

  Coloring load() const {
    if (!file.empty()) return coloring_from_any(parse_json(read_file(file), file));
    if (colors.empty()) fail(ErrorKind::Usage, "give --coloring FILE or --colors LIST");
    const auto v = parse_int_list(colors);
    int nn = n;
    if (nn == 0) {
      while ((std::size_t{1} << nn) < v.size()) ++nn;
    }
    int kk = k;
    for (int c : v) kk = std::max(kk, c);
    return Coloring::from_canonical(nn, kk, v);
  }
};

std::pair<int, int> parse_window(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) fail(ErrorKind::Usage, "--window expects LO:HI");
  try {
    return {std::stoi(text.substr(0, colon)), std::stoi(text.substr(colon + 1))};
  } catch (const std::exception&) {
    fail(ErrorKind::Usage, "--window expects LO:HI, got '" + text + "'");
  }
}

CopyMode parse_mode(const std::string& m) {
  if (m == "induced") return CopyMode::Induced;
  if (m == "weak") return CopyMode::Weak;
  fail(ErrorKind::Usage, "--mode must be induced or weak");
}

std::string colors_text(const Coloring& c) {
  std::string s;
  for (int x : c.to_canonical()) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

std::string coloring_lines(const Coloring& c) {
  std::string s;
  for (Code x : canonical_order(c.n())) s += "  " + format_subset(x) + " -> " + std::to_string(c(x) + 1) + "\n";
  return s;
}

FamilyMask parse_family(int n, const std::string& text) {
  FamilyMask f(n);
  std::string tok;
  std::istringstream is(text);
  while (std::getline(is, tok, ';')) {
    if (tok.find_first_not_of(" \t") == std::string::npos) continue;
    f.insert(parse_subset(n, tok).bits());
  }
  return f;
}

struct Emitter {
  std::ostream& out;
  const Common& common;
  Clock::time_point start = Clock::now();

  int emit(const std::string& command, Json instance, Json result, Json witnesses, const std::string& text,
           int code = kOk) {
    const double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    const Json doc = make_document(command, std::move(instance), std::move(result), std::move(witnesses),
                                   run_info_now(ms, common.threads));
    if (!common.out_file.empty()) write_file(common.out_file, doc.dump(2) + "\n");
    if (common.json) out << doc.dump(2) << "\n";
    else out << text;
    return code;
  }
};

std::string number_line(const std::string& name, const NumberResult& r) {
  std::string s = name + " ";
  if (r.indeterminate) s += "indeterminate (budget exhausted)";
  else if (r.good) s += "good within the window (verified up to " + std::to_string(r.verified_up_to) + ")";
  else if (r.value) s += "= " + std::to_string(*r.value) + " (verified up to " + std::to_string(r.verified_up_to) + ")";
  else s += "> " + std::to_string(r.verified_up_to);
  s += "\n";
  for (const auto& n : r.notes) s += "  note: " + n + "\n";
  s += "  nodes: " + std::to_string(r.stats.nodes) + "\n";
  return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rainbow and monochromatic pattern search in Boolean lattices", "rlw"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(tool_version()));
  Common common;
  std::function<int()> action;

  // search
  auto* search = app.add_subcommand("search", "Find a coloring avoiding a rainbow Q and a monochromatic P");
  int s_n = 0;
  std::string s_q, s_p, s_palette = "unbounded", s_mode = "induced";
  search->add_option("--n", s_n, "Ground set size")->required();
  search->add_option("--q", s_q, "Rainbow target, e.g. fork");
  search->add_option("--p", s_p, "Monochromatic target, e.g. chain:2");
  search->add_option("--palette", s_palette, "exact:K, atmost:K or unbounded");
  search->add_option("--mode", s_mode, "induced or weak");
  add_common(search, common);
  search->callback([&] {
    action = [&] {
      Emitter em{out, common};
      AvoidanceSpec spec;
      spec.n = s_n;
      if (!s_q.empty()) spec.rainbow_target = make_pattern(s_q);
      if (!s_p.empty()) spec.mono_target = make_pattern(s_p);
      spec.palette = parse_palette(s_palette);
      spec.mode = parse_mode(s_mode);
      const auto r = exists_coloring(spec, options_from(common));
      Json result = {{"status", to_string(r.status)}, {"nodes", r.stats.nodes}};
      Json wit = Json::array();
      std::string text = std::string(to_string(r.status));
      if (r.coloring) {
        result["coloring"] = to_json(*r.coloring);
        wit.push_back(avoider_witness("avoider", spec, *r.coloring));
        text += ": " + colors_text(*r.coloring) + "\n" + coloring_lines(*r.coloring);
      } else {
        text += r.status == SearchStatus::Absent ? " (exhaustive)\n" : " (budget exhausted)\n";
      }
      return em.emit("search", to_json(spec), result, wit, text,
                     r.status == SearchStatus::Indeterminate ? kIndeterminate : kOk);
    };
  });

  // number
  auto* number = app.add_subcommand("number", "Compute R_k, RR or GR_k by exhaustive search");
  number->require_subcommand(1);
  std::string nq, np, nmode = "induced", nwindow;
  int nk = 0, n_max = 6;
  auto number_cmd = [&](const std::string& which) {
    auto* sub = number->add_subcommand(which, "");
    if (which != "r") sub->add_option("--q", nq, "Rainbow target")->required();
    sub->add_option("--p", np, "Monochromatic target")->required();
    if (which != "rr") sub->add_option("--k", nk, "Number of colors")->required();
    if (which == "gr") sub->add_option("--window", nwindow, "LO:HI")->required();
    else sub->add_option("--n-max", n_max, "Largest n searched");
    sub->add_option("--mode", nmode, "induced or weak");
    add_common(sub, common);
    sub->callback([&, which] {
      action = [&, which] {
        Emitter em{out, common};
        const SearchOptions o = options_from(common);
        const PatternPoset p = make_pattern(np);
        const CopyMode mode = parse_mode(nmode);
        NumberResult r;
        AvoidanceSpec base;
        base.mode = mode;
        base.mono_target = p;
        Json inst = {{"kind", which}, {"p", p.label()}, {"mode", to_string(mode)}};
        std::string name;
        if (which == "r") {
          r = compute_ramsey(p, nk, mode, n_max, o);
          base.palette = Palette::at_most(nk);
          inst["k"] = nk;
          inst["n_max"] = n_max;
          name = "R_" + std::to_string(nk) + "(" + p.label() + ")";
        } else if (which == "rr") {
          const PatternPoset q = make_pattern(nq);
          r = compute_rr(q, p, n_max, o, mode);
          base.rainbow_target = q;
          base.palette = Palette::unbounded();
          inst["q"] = q.label();
          inst["n_max"] = n_max;
          name = "RR(" + q.label() + ":" + p.label() + ")";
        } else {
          const PatternPoset q = make_pattern(nq);
          const auto w = parse_window(nwindow);
          r = compute_gr(q, p, nk, w, o, mode);
          base.rainbow_target = q;
          base.palette = Palette::exact(nk);
          inst["q"] = q.label();
          inst["k"] = nk;
          inst["window"] = {w.first, w.second};
          name = "GR_" + std::to_string(nk) + "(" + q.label() + ":" + p.label() + ")";
        }
        return em.emit("number " + which, inst, to_json(r), number_witnesses(base, r), number_line(name, r),
                       r.indeterminate ? kIndeterminate : kOk);
      };
    });
  };
  number_cmd("r");
  number_cmd("rr");
  number_cmd("gr");

  // classify
  auto* classify = app.add_subcommand("classify", "Match a coloring against the structure catalog");
  classify->require_subcommand(1);
  ColoringInput cin;
  for (const std::string which : {"c3", "v2", "b2"}) {
    auto* sub = classify->add_subcommand(which, "");
    cin.add(sub);
    add_common(sub, common);
    sub->callback([&, which] {
      action = [&, which] {
        Emitter em{out, common};
        const Coloring c = cin.load();
        Json result;
        Json wit = Json::array();
        std::string text;
        const PatternPoset q = which == "c3" ? PatternPoset::chain(3)
                               : which == "v2" ? PatternPoset::fork()
                                               : PatternPoset::boolean(2);
        const auto rainbow = find_rainbow_copy(c, q);
        result["rainbow_copy"] = rainbow ? to_json(*rainbow) : Json(nullptr);
        std::optional<StructureInstance> inst;
        if (which == "c3") {
          if (check_c3_shape(c)) inst = C3Shape{};
        } else if (which == "v2") {
          inst = classify_v2(c);
        } else {
          inst = classify_b2(c);
        }
        if (inst) {
          result["instance"] = to_json(c.n(), *inst);
          wit.push_back(structure_witness("classified", c, *inst));
          text = type_name(*inst);
          const Json ij = to_json(c.n(), *inst);
          for (auto it = ij.begin(); it != ij.end(); ++it)
            if (it.key() != "type") text += " " + it.key() + "=" + (it->is_string() ? it->get<std::string>() : it->dump());
          text += "\n";
        } else {
          result["instance"] = nullptr;
          text = "no structure matched";
          if (rainbow) {
            text += "; rainbow " + q.label() + " at";
            for (const auto& s : rainbow->map) text += " " + format_subset(s);
          }
          text += "\n";
        }
        if (which == "b2" && c(0) == c(full_code(c.n()))) {
          const Type5Report t = check_type5(c);
          result["top_bottom"] = {{"holds", t.holds}, {"max_rainbow_chain", t.max_chain},
                                  {"failure", t.failure}};
        }
        return em.emit("classify " + which, {{"coloring", to_json(c)}}, result, wit, text);
      };
    });
  }

  // generate
  auto* generate = app.add_subcommand("generate", "Build a coloring of a catalog type");
  std::string g_type, g_x0, g_y0, g_a, g_family, g_colors, g_free = "low";
  int g_n = 0, g_top = 0;
  generate->add_option("type", g_type, "type1 type2 type3-1 type3-2 type4-1 type4-2 v2-case1")->required();
  generate->add_option("--n", g_n, "Ground set size")->required();
  generate->add_option("--x0", g_x0, "X0, e.g. {1}");
  generate->add_option("--y0", g_y0, "Y0, e.g. {1,2,3}");
  generate->add_option("--a", g_a, "A for v2-case1");
  generate->add_option("--family", g_family, "Y_family or X_family, sets separated by ';'");
  generate->add_option("--colors", g_colors, "1-based family colors, comma separated (default 1,2,...)");
  generate->add_option("--free", g_free, "Free-class sets take the low or high color")->check(CLI::IsMember({"low", "high"}));
  generate->add_option("--top", g_top, "Color of [n] for v2-case1 (1-based)");
  add_common(generate, common);
  generate->callback([&] {
    action = [&] {
      Emitter em{out, common};
      const int n = g_n;
      check_ground(n);
      auto sub = [&](const std::string& v, const char* flag) {
        if (v.empty()) fail(ErrorKind::Usage, std::string(flag) + " is required for " + g_type);
        return parse_subset(n, v);
      };
      StructureInstance inst;
      if (g_type == "type1") inst = Type1{sub(g_x0, "--x0"), sub(g_y0, "--y0")};
      else if (g_type == "type2") inst = Type2{sub(g_x0, "--x0"), sub(g_y0, "--y0")};
      else if (g_type == "type3-1") inst = Type3_1{sub(g_x0, "--x0"), sub(g_y0, "--y0")};
      else if (g_type == "type3-2") inst = Type3_2{sub(g_x0, "--x0"), sub(g_y0, "--y0")};
      else if (g_type == "type4-1") inst = Type4_1{sub(g_x0, "--x0"), parse_family(n, g_family)};
      else if (g_type == "type4-2") inst = Type4_2{sub(g_y0, "--y0"), parse_family(n, g_family)};
      else if (g_type == "v2-case1") inst = V2Case1{sub(g_a, "--a")};
      else fail(ErrorKind::Usage, "unknown type '" + g_type + "'");
      StructurePalette pal = default_palette(n, inst);
      if (!g_colors.empty()) {
        pal.family_colors.clear();
        for (int c : parse_int_list(g_colors)) {
          if (c < 1) fail(ErrorKind::Usage, "--colors are 1-based");
          pal.family_colors.push_back(static_cast<Color>(c - 1));
        }
      }
      pal.free.mode = g_free == "high" ? FreeChoice::Mode::AllHigh : FreeChoice::Mode::AllLow;
      if (g_top > 0) pal.top_color = static_cast<Color>(g_top - 1);
      const Coloring c = generate_structure(n, inst, pal);
      Json wit = Json::array();
      wit.push_back(structure_witness("generated", c, inst));
      return em.emit("generate", {{"n", n}, {"instance", to_json(n, inst)}}, {{"coloring", to_json(c)}}, wit,
                     to_json(c).dump() + "\n");
    };
  });

  // construct
  auto* construct = app.add_subcommand("construct", "Lower-bound constructions");
  construct->require_subcommand(1);
  int c_s = 0, c_k = 0, c_e = 0;
  std::string c_q, c_p;
  for (const std::string which : {"gr-c3", "gr-v2", "layered"}) {
    auto* sub = construct->add_subcommand(which, "");
    if (which == "layered") {
      sub->add_option("--e", c_e, "Levels per block")->required();
      sub->add_option("--q", c_q, "Rainbow target")->required();
      sub->add_option("--p", c_p, "Monochromatic target to check against");
    } else {
      sub->add_option("--s", c_s, "Chain length of the monochromatic target")->required();
      sub->add_option("--k", c_k, "Number of colors")->required();
    }
    add_common(sub, common);
    sub->callback([&, which] {
      action = [&, which] {
        Emitter em{out, common};
        AvoidanceSpec spec;
        Coloring c;
        Json inst = {{"construction", which}};
        if (which == "gr-c3") {
          c = lower_bound_gr_c3(c_s, c_k);
          spec.rainbow_target = PatternPoset::chain(3);
          spec.mono_target = PatternPoset::chain(c_s);
          spec.palette = Palette::exact(c_k);
          inst["s"] = c_s;
          inst["k"] = c_k;
        } else if (which == "gr-v2") {
          c = lower_bound_gr_v2(c_s, c_k);
          spec.rainbow_target = PatternPoset::fork();
          spec.mono_target = PatternPoset::chain(c_s);
          spec.palette = Palette::exact(c_k);
          inst["s"] = c_s;
          inst["k"] = c_k;
        } else {
          const PatternPoset q = make_pattern(c_q);
          c = layered_coloring(c_e, q);
          spec.rainbow_target = q;
          if (!c_p.empty()) spec.mono_target = make_pattern(c_p);
          spec.palette = Palette::unbounded();
          inst["e"] = c_e;
          inst["q"] = q.label();
          if (!c_p.empty()) inst["p"] = c_p;
        }
        spec.n = c.n();
        std::string why;
        const bool ok = satisfies(c, spec, &why);
        Json wit = Json::array();
        wit.push_back(avoider_witness("construction", spec, c));
        const std::string text = "B_" + std::to_string(c.n()) + ": " + colors_text(c) + "\n" +
                                 (ok ? "avoids " + canonical_text(spec) : "FAILS: " + why) + "\n";
        return em.emit("construct " + which, inst, {{"coloring", to_json(c)}, {"avoids", ok}}, wit, text,
                       ok ? kOk : kError);
      };
    });
  }

  // blob
  auto* blob = app.add_subcommand("blob", "Blob partition of B_{m n0 + m} and its color property");
  int b_m = 2, b_n0 = 1, b_samples = 0;
  std::uint64_t b_seed = 1;
  ColoringInput bin;
  blob->add_option("--m", b_m, "Dimension of the rainbow Boolean target");
  blob->add_option("--n0", b_n0, "Dimension of each blob");
  blob->add_option("--samples", b_samples, "Sample this many rainbow-free colorings and check each");
  blob->add_option("--seed", b_seed, "Sampler seed");
  blob->add_option("--coloring", bin.file, "Check one coloring instead");
  add_common(blob, common);
  blob->callback([&] {
    action = [&] {
      Emitter em{out, common};
      const auto parts = blob_partition(b_m, b_n0);
      Json pj = Json::array();
      std::string text;
      for (const auto& b : parts) {
        pj.push_back({{"label", b.label}, {"lo", format_subset(b.lo)}, {"hi", format_subset(b.hi)}});
        std::string lab;
        for (int i : b.label) lab += std::to_string(i);
        text += "X_" + lab + " = [" + format_subset(b.lo) + ", " + format_subset(b.hi) + "]\n";
      }
      Json result = {{"partition", pj}};
      Json wit = Json::array();
      int code = kOk;
      if (!bin.file.empty()) {
        const Coloring c = bin.load();
        const bool rainbow = find_rainbow_copy(c, PatternPoset::boolean(b_m)).has_value();
        const auto b = blob_with_few_colors(c, b_m, b_n0);
        result["rainbow_free"] = !rainbow;
        result["blob"] = b ? Json(format_subset(b->lo) + ".." + format_subset(b->hi)) : Json(nullptr);
        if (!rainbow && b) wit.push_back(blob_witness("input", b_m, b_n0, c, *b));
        text += std::string(rainbow ? "coloring has a rainbow B_" + std::to_string(b_m) : "rainbow-free") + "; " +
                (b ? "blob [" + format_subset(b->lo) + ", " + format_subset(b->hi) + "] has few colors"
                   : "no blob has few colors") + "\n";
      }
      if (b_samples > 0) {
        const auto s = blob_samples(b_m, b_n0, b_samples, b_seed);
        result["samples"] = {{"count", s.samples}, {"from_generators", s.from_generators},
                             {"counterexamples", s.counterexamples}, {"seed", b_seed}};
        for (const auto& [c, b] : s.examples) wit.push_back(blob_witness("sample", b_m, b_n0, c, b));
        text += std::to_string(s.samples) + " samples, " + std::to_string(s.counterexamples) + " counterexamples\n";
        if (s.counterexamples) code = kError;
      }
      return em.emit("blob", {{"m", b_m}, {"n0", b_n0}}, result, wit, text, code);
    };
  });

  // extremal
  auto* lub = app.add_subcommand("lubell", "Lubell function of a family");
  int l_n = 0;
  std::string l_family, l_levels;
  lub->add_option("--n", l_n, "Ground set size")->required();
  lub->add_option("--family", l_family, "Sets separated by ';'");
  lub->add_option("--levels", l_levels, "LO:HI, union of full levels");
  add_common(lub, common);
  lub->callback([&] {
    action = [&] {
      Emitter em{out, common};
      FamilyMask f(l_n);
      if (!l_levels.empty()) {
        const auto w = parse_window(l_levels);
        f = levels(l_n, w.first, w.second);
      } else {
        f = parse_family(l_n, l_family);
      }
      const auto v = lubell(l_n, f);
      return em.emit("lubell", {{"n", l_n}, {"family", to_json(f)}}, {{"lubell", to_json(v)}}, Json::array(),
                     v.to_string() + "\n");
    };
  });

  auto* lu = app.add_subcommand("lu", "Maximum Lubell value of an induced-P-free family");
  int lu_n = 0;
  std::string lu_p;
  lu->add_option("--n", lu_n, "Ground set size (at most 5)")->required();
  lu->add_option("--p", lu_p, "Forbidden pattern")->required();
  add_common(lu, common);
  lu->callback([&] {
    action = [&] {
      Emitter em{out, common};
      const PatternPoset p = make_pattern(lu_p);
      const auto r = lu_max(lu_n, p, common.budget ? common.budget : 100'000'000ULL);
      return em.emit("lu", {{"n", lu_n}, {"p", p.label()}},
                     {{"value", to_json(r.value)}, {"witness", to_json(r.witness)}, {"complete", r.complete},
                      {"nodes", r.nodes}},
                     Json::array(), "Lu_" + std::to_string(lu_n) + "(" + p.label() + ") = " + r.value.to_string() +
                                        (r.complete ? "" : " (budget exhausted: lower bound)") + "\n  family " +
                                        format_family(r.witness) + "\n",
                     r.complete ? kOk : kIndeterminate);
    };
  });

  auto* ecmd = app.add_subcommand("e", "Largest m with every m consecutive levels induced-P-free");
  std::string e_p;
  int e_probe = 6;
  ecmd->add_option("--p", e_p, "Pattern")->required();
  ecmd->add_option("--n-probe", e_probe, "Largest n examined");
  add_common(ecmd, common);
  ecmd->callback([&] {
    action = [&] {
      Emitter em{out, common};
      const PatternPoset p = make_pattern(e_p);
      const auto r = e_poset(p, e_probe);
      Json result = {{"e", r.e}, {"n_probe", r.n_probe}, {"saturated", r.saturated}};
      Json wit = Json::array();
      std::string text = "e(" + p.label() + ") = " + std::to_string(r.e) + " assuming stability beyond n=" +
                         std::to_string(e_probe) + (r.saturated ? " (saturated: lower bound)" : "") + "\n";
      if (r.failing) {
        const auto& f = *r.failing;
        result["failing"] = {{"n", f.n}, {"lo", f.lo}, {"levels", f.size}, {"copy", to_json(f.copy)}};
        wit.push_back(copy_witness("failing window", f.n, f.lo, f.lo + f.size - 1, p, f.copy));
        text += "  levels " + std::to_string(f.lo) + ".." + std::to_string(f.lo + f.size - 1) + " of B_" +
                std::to_string(f.n) + " hold a copy:";
        for (const auto& s : f.copy.map) text += " " + format_subset(s);
        text += "\n";
      }
      return em.emit("e", {{"p", p.label()}, {"n_probe", e_probe}}, result, wit, text);
    };
  });

  auto* gcmd = app.add_subcommand("g", "0, 1 or 2 by the extremes of Q");
  std::string g_q;
  gcmd->add_option("--q", g_q, "Pattern")->required();
  add_common(gcmd, common);
  gcmd->callback([&] {
    action = [&] {
      Emitter em{out, common};
      const PatternPoset q = make_pattern(g_q);
      const int g = g_poset(q);
      return em.emit("g", {{"q", q.label()}}, {{"g", g}}, Json::array(),
                     "g(" + q.label() + ") = " + std::to_string(g) + "\n");
    };
  });

  auto* gstc = app.add_subcommand("gst", "Most disjoint incomparable v-chains in B_n");
  int gst_v = 0, gst_n = 0;
  bool gst_ver = false;
  gstc->add_option("--v", gst_v, "Chain length")->required();
  gstc->add_option("--n", gst_n, "Ground set size")->required();
  gstc->add_flag("--verify", gst_ver, "Confirm by search");
  add_common(gstc, common);
  gstc->callback([&] {
    action = [&] {
      Emitter em{out, common};
      const auto f = gst(gst_v, gst_n);
      Json result = {{"formula", f}};
      std::string text = std::to_string(f);
      int code = kOk;
      if (gst_ver) {
        const auto c = gst_check(gst_v, gst_n);
        result["searched"] = c.searched;
        result["verified"] = c.ok;
        text += c.ok ? ", verified" : ", search found " + std::to_string(c.searched);
        if (!c.ok) code = kError;
      }
      return em.emit("gst", {{"v", gst_v}, {"n", gst_n}}, result, Json::array(), text + "\n", code);
    };
  });

  auto* caps = app.add_subcommand("caps", "Color caps for colorings without rainbow C_3 or B_2");
  int caps_n = 0;
  caps->add_option("--n", caps_n, "Ground set size")->required();
  add_common(caps, common);
  caps->callback([&] {
    action = [&] {
      Emitter em{out, common};
      Json result = {{"c3", color_cap_c3(caps_n)}};
      std::string text = "no rainbow C_3: k <= " + std::to_string(color_cap_c3(caps_n)) + "\n";
      if (caps_n > 2) {
        result["b2"] = color_cap_b2(caps_n);
        text += "no rainbow B_2: k <= " + std::to_string(color_cap_b2(caps_n)) + "\n";
      }
      return em.emit("caps", {{"n", caps_n}}, result, Json::array(), text);
    };
  });

  // claim
  auto* claim = app.add_subcommand("claim", "Check a closed-form statement against search");
  std::string cl_name, cl_p, cl_q, cl_window;
  std::vector<std::string> cl_params;
  int cl_nmax = 0, cl_samples = 10000;
  std::uint64_t cl_seed = 1;
  bool cl_predict = false;
  claim->add_option("name", cl_name, "Claim name, or 'list'")->required();
  claim->add_option("--param", cl_params, "name=value (repeatable)");
  claim->add_option("--p", cl_p, "Pattern P where the claim takes one");
  claim->add_option("--q", cl_q, "Pattern Q where the claim takes one");
  claim->add_option("--window", cl_window, "GR window LO:HI");
  claim->add_option("--n-max", cl_nmax, "Largest n for RR and R searches");
  claim->add_option("--samples", cl_samples, "Samples for the blob claim");
  claim->add_option("--seed", cl_seed, "Sampler seed");
  claim->add_flag("--predict-only", cl_predict, "Evaluate the formula from the given parameters only");
  add_common(claim, common);
  claim->callback([&] {
    action = [&] {
      Emitter em{out, common};
      if (cl_name == "list") {
        std::string text;
        Json list = Json::array();
        for (ClaimId id : all_claims()) {
          std::string ps;
          for (const auto& p : claim_parameters(id)) ps += (ps.empty() ? "" : ",") + p;
          text += to_string(id) + " [" + ps + "]  " + describe(id) + "\n";
          list.push_back({{"claim", to_string(id)}, {"params", claim_parameters(id)}, {"statement", describe(id)}});
        }
        return em.emit("claim list", Json::object(), {{"claims", list}}, Json::array(), text);
      }
      const ClaimId id = parse_claim(cl_name);
      ClaimInputs in;
      for (const auto& kv : cl_params) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) fail(ErrorKind::Usage, "--param expects name=value, got '" + kv + "'");
        try {
          in.params[kv.substr(0, eq)] = {std::stoll(kv.substr(eq + 1)), "input"};
        } catch (const std::exception&) {
          fail(ErrorKind::Usage, "--param value must be an integer: '" + kv + "'");
        }
      }
      if (!cl_p.empty()) in.p = make_pattern(cl_p);
      if (!cl_q.empty()) in.q = make_pattern(cl_q);
      if (!cl_window.empty()) in.window = parse_window(cl_window);
      in.n_max = cl_nmax;
      in.samples = cl_samples;
      in.seed = cl_seed;
      if (cl_predict) {
        const Prediction p = predicted_value(id, in.params);
        Json wit = Json::array();
        wit.push_back(formula_witness("prediction", id, p.used, p));
        return em.emit("claim " + to_string(id), {{"claim", to_string(id)}, {"params", to_json(in.params)}},
                       {{"predicted", to_json(p)}}, wit, to_string(id) + ": " + p.text() + "  (" + p.formula + ")\n");
      }
      const ClaimReport rep = verify_claim(id, in, options_from(common));
      std::string text = to_string(id) + ": predicted " + (rep.predicted ? rep.predicted->text() : "-") + ", verdict " +
                         rep.verdict + "\n";
      for (const auto& p : rep.provenance) text += "  " + p + "\n";
      const int code = rep.verdict == "indeterminate" ? kIndeterminate : rep.verdict == "agree" ? kOk : kError;
      return em.emit("claim " + to_string(id), {{"claim", to_string(id)}, {"params", to_json(in.params)}},
                     to_json(rep), rep.witnesses, text, code);
    };
  });

  // dimacs
  auto* dimacs = app.add_subcommand("dimacs", "CNF export, model decoding and the internal solver");
  dimacs->require_subcommand(1);
  int d_n = 0;
  std::string d_q, d_p, d_palette, d_mode = "induced", d_model;
  for (const std::string which : {"export", "decode", "solve"}) {
    auto* sub = dimacs->add_subcommand(which, "");
    sub->add_option("--n", d_n, "Ground set size")->required();
    sub->add_option("--q", d_q, "Rainbow target");
    sub->add_option("--p", d_p, "Monochromatic target");
    sub->add_option("--palette", d_palette, "exact:K or atmost:K")->required();
    sub->add_option("--mode", d_mode, "induced or weak");
    if (which == "decode") sub->add_option("--model", d_model, "Model file (v-lines or literals)")->required();
    add_common(sub, common);
    sub->callback([&, which] {
      action = [&, which] {
        Emitter em{out, common};
        AvoidanceSpec spec;
        spec.n = d_n;
        if (!d_q.empty()) spec.rainbow_target = make_pattern(d_q);
        if (!d_p.empty()) spec.mono_target = make_pattern(d_p);
        spec.palette = parse_palette(d_palette);
        spec.mode = parse_mode(d_mode);
        if (which == "export") {
          const Cnf cnf = export_dimacs(spec);
          const std::string text = to_dimacs(cnf);
          if (!common.out_file.empty()) write_file(common.out_file, text);
          if (common.json) {
            const CnfLayout l = cnf_layout(spec);
            out << Json({{"spec", to_json(spec)}, {"variables", cnf.num_vars}, {"x_vars", l.x_vars},
                         {"e_vars", l.e_vars}, {"clauses", cnf.clauses.size()}})
                       .dump(2)
                << "\n";
          } else if (common.out_file.empty()) {
            out << text;
          }
          return kOk;
        }
        std::vector<int> model;
        Json result;
        if (which == "decode") {
          model = parse_model(read_file(d_model));
        } else {
          const SolveResult s = solve_cnf(export_dimacs(spec));
          result["solver"] = s.status == SolveResult::Status::Sat     ? "sat"
                             : s.status == SolveResult::Status::Unsat ? "unsat"
                                                                      : "unknown";
          result["decisions"] = s.decisions;
          if (s.status != SolveResult::Status::Sat) {
            return em.emit("dimacs solve", to_json(spec), result, Json::array(),
                           result["solver"].get<std::string>() + "\n",
                           s.status == SolveResult::Status::Unknown ? kIndeterminate : kOk);
          }
          model = s.model;
        }
        if (model.empty()) fail(ErrorKind::InconsistentModel, "model is empty or unsatisfiable");
        const Coloring c = decode_model(spec, model);
        std::string why;
        const bool ok = satisfies(c, spec, &why);
        result["coloring"] = to_json(c);
        result["satisfies"] = ok;
        Json wit = Json::array();
        wit.push_back(avoider_witness("decoded model", spec, c));
        return em.emit("dimacs " + which, to_json(spec), result, wit,
                       colors_text(c) + "\n" + (ok ? "satisfies the spec" : "VIOLATES: " + why) + "\n",
                       ok ? kOk : kError);
      };
    });
  }

  // verify
  auto* verify = app.add_subcommand("verify", "Re-check a result document");
  std::string v_file;
  verify->add_option("file", v_file, "Result document")->required();
  add_common(verify, common);
  verify->callback([&] {
    action = [&] {
      const Json doc = parse_json(read_file(v_file), v_file);
      const VerifyReport r = verify_document(doc);
      if (common.json) {
        out << to_json(r).dump(2) << "\n";
      } else {
        for (const auto& i : r.items) out << (i.pass ? "pass  " : "FAIL  ") << i.name << ": " << i.detail << "\n";
        for (const auto& n : r.notes) out << "note  " << n << "\n";
        out << (r.pass() ? "verified" : "verification failed") << "\n";
      }
      if (!common.out_file.empty()) write_file(common.out_file, to_json(r).dump(2) + "\n");
      return r.pass() ? kOk : kError;
    };
  });

  std::vector<const char*> argv{"rlw"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kError;
  }
  try {
    return action ? action() : kError;
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return kError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
}

}  // namespace rlw::cli

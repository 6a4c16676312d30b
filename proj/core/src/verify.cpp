#include "rlw/verify.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "rlw/error.hpp"

namespace rlw {

bool VerifyReport::pass() const {
  return hash_ok && std::all_of(items.begin(), items.end(), [](const VerifyItem& i) { return i.pass; });
}

Json to_json(const VerifyReport& r) {
  Json j;
  j["pass"] = r.pass();
  j["hash_ok"] = r.hash_ok;
  Json items = Json::array();
  for (const auto& i : r.items) items.push_back({{"name", i.name}, {"pass", i.pass}, {"detail", i.detail}});
  j["items"] = items;
  j["notes"] = r.notes;
  return j;
}

namespace {

std::string join_subsets(const Embedding& e) {
  std::string s;
  for (const auto& x : e.map) s += (s.empty() ? "" : " ") + format_subset(x);
  return s;
}

VerifyItem check_avoider(const Json& w) {
  VerifyItem item;
  const AvoidanceSpec spec = spec_from_json(member(w, "spec"));
  const Coloring c = coloring_from_json(member(w, "coloring"));
  std::string why;
  item.pass = satisfies(c, spec, &why);
  item.detail = item.pass ? "avoids " + canonical_text(spec) : why;
  return item;
}

// The rainbow target whose absence the structure describes.
std::optional<PatternPoset> structure_target(const StructureInstance& inst) {
  if (std::holds_alternative<C3Shape>(inst)) return PatternPoset::chain(3);
  if (std::holds_alternative<V2Case1>(inst) || std::holds_alternative<V2Case2>(inst)) return PatternPoset::fork();
  return PatternPoset::boolean(2);
}

VerifyItem check_structure(const Json& w) {
  VerifyItem item;
  const Coloring c = coloring_from_json(member(w, "coloring"));
  const StructureInstance inst = instance_from_json(c.n(), member(w, "instance"));
  if (!matches_structure(c, inst)) {
    item.detail = "coloring does not match " + type_name(inst);
    return item;
  }
  const auto q = structure_target(inst);
  if (auto e = find_rainbow_copy(c, *q)) {
    item.detail = "rainbow " + q->label() + " at " + join_subsets(*e);
    return item;
  }
  item.pass = true;
  item.detail = type_name(inst) + " matches, no rainbow " + q->label();
  return item;
}

VerifyItem check_copy(const Json& w) {
  VerifyItem item;
  const int n = member(w, "n").get<int>();
  const auto lv = member(w, "levels");
  const int lo = lv.at(0).get<int>(), hi = lv.at(1).get<int>();
  const PatternPoset p = make_pattern(member(w, "pattern").get<std::string>());
  const Embedding e = embedding_from_json(n, member(w, "embedding"));
  if (static_cast<int>(e.map.size()) != p.size()) {
    item.detail = "embedding has " + std::to_string(e.map.size()) + " images for " + std::to_string(p.size()) + " elements";
    return item;
  }
  std::vector<Code> images;
  for (const auto& s : e.map) {
    if (s.size() < lo || s.size() > hi) {
      item.detail = format_subset(s) + " lies outside levels " + std::to_string(lo) + ".." + std::to_string(hi);
      return item;
    }
    images.push_back(s.bits());
  }
  item.pass = is_embedding(images, p, e.mode);
  item.detail = item.pass ? std::string(to_string(e.mode)) + " copy of " + p.label() + " in levels " +
                                std::to_string(lo) + ".." + std::to_string(hi) + " of B_" + std::to_string(n)
                          : "images do not form a copy of " + p.label();
  return item;
}

VerifyItem check_formula(const Json& w) {
  VerifyItem item;
  const ClaimId id = parse_claim(member(w, "claim").get<std::string>());
  const Prediction p = predicted_value(id, params_from_json(member(w, "params")));
  const Json again = to_json(p);
  item.pass = again == member(w, "predicted");
  item.detail = item.pass ? to_string(id) + " " + p.text() : "re-evaluated " + again.dump() + " differs";
  return item;
}

VerifyItem check_blob(const Json& w) {
  VerifyItem item;
  const int m = member(w, "m").get<int>(), n0 = member(w, "n0").get<int>();
  const Coloring c = coloring_from_json(member(w, "coloring"));
  if (c.n() != m * n0 + m) {
    item.detail = "coloring is not over B_" + std::to_string(m * n0 + m);
    return item;
  }
  if (auto e = find_rainbow_copy(c, PatternPoset::boolean(m))) {
    item.detail = "rainbow B_" + std::to_string(m) + " at " + join_subsets(*e);
    return item;
  }
  const Json& b = member(w, "blob");
  const SubsetId lo = parse_subset(c.n(), member(b, "lo").get<std::string>());
  const SubsetId hi = parse_subset(c.n(), member(b, "hi").get<std::string>());
  const auto label = member(b, "label").get<std::vector<int>>();
  bool listed = false;
  for (const auto& part : blob_partition(m, n0)) listed |= part.label == label && part.lo == lo && part.hi == hi;
  if (!listed) {
    item.detail = "named sublattice is not part of the blob partition";
    return item;
  }
  std::set<Color> seen;
  interval(c.n(), lo, hi, Bounds::Closed).for_each([&](Code s) { seen.insert(c(s)); });
  const int limit = (1 << m) - 1;
  item.pass = static_cast<int>(seen.size()) <= limit;
  item.detail = "blob [" + format_subset(lo) + "," + format_subset(hi) + "] uses " + std::to_string(seen.size()) +
                " colors, limit " + std::to_string(limit);
  return item;
}

}  // namespace

VerifyReport verify_document(const Json& doc) {
  if (!doc.is_object() || !doc.contains("schema") || doc.at("schema") != kSchemaVersion) {
    fail(ErrorKind::Schema, std::string("unsupported document schema (expected ") + kSchemaVersion + ")");
  }
  VerifyReport r;
  const std::string stored = doc.contains("content_hash") ? doc.at("content_hash").get<std::string>() : "";
  const std::string again = content_hash(doc);
  r.hash_ok = stored == again;
  r.items.push_back({"content hash", r.hash_ok,
                     r.hash_ok ? again : "tampered: stored " + stored + ", recomputed " + again});
  if (doc.contains("tool") && doc.at("tool").contains("version")) {
    const std::string v = doc.at("tool").at("version").get<std::string>();
    if (v != tool_version()) r.notes.push_back("document written by version " + v + ", verified with " + tool_version());
  }
  const Json& ws = member(doc, "witnesses");
  if (!ws.is_array()) fail(ErrorKind::Schema, "witnesses must be an array");
  for (std::size_t i = 0; i < ws.size(); ++i) {
    const Json& w = ws[i];
    VerifyItem item;
    try {
      const std::string kind = member(w, "kind").get<std::string>();
      if (kind == "avoider") item = check_avoider(w);
      else if (kind == "structure") item = check_structure(w);
      else if (kind == "copy") item = check_copy(w);
      else if (kind == "formula") item = check_formula(w);
      else if (kind == "blob") item = check_blob(w);
      else item.detail = "unknown witness kind '" + kind + "'";
    } catch (const std::exception& e) {
      item.pass = false;
      item.detail = std::string("malformed witness: ") + e.what();
    }
    item.name = "witness " + std::to_string(i);
    if (w.is_object() && w.contains("label") && w.at("label").is_string())
      item.name += " (" + w.at("label").get<std::string>() + ")";
    r.items.push_back(std::move(item));
  }
  return r;
}

ColorCapSearch max_exact_colors(const PatternPoset& q, int n, const SearchOptions& options) {
  check_ground(n);
  ColorCapSearch out;
  const long long top = 1LL << n;
  if (top > 64) fail(ErrorKind::Capacity, "exact palettes above 64 colors are not searchable");
  bool unsure = false;
  int best = 0;
  for (int k = 1; k <= top; ++k) {
    AvoidanceSpec spec;
    spec.n = n;
    spec.rainbow_target = q;
    spec.palette = Palette::exact(k);
    const auto r = exists_coloring(spec, options);
    out.per_k.emplace_back(k, r.status);
    if (r.status == SearchStatus::Indeterminate) unsure = true;
    if (r.status == SearchStatus::Found) {
      best = k;
      out.witness = r.coloring;
    }
  }
  if (!unsure) out.max_k = best;
  return out;
}

namespace {

std::vector<StructureInstance> b2_instances(int n) {
  std::vector<StructureInstance> out;
  const Code top = full_code(n);
  for (Code x = 0; x <= top; ++x) {
    for (Code y = 0; y <= top; ++y) {
      const SubsetId X(n, x), Y(n, y);
      for (StructureInstance inst :
           {StructureInstance(Type1{X, Y}), StructureInstance(Type2{X, Y}), StructureInstance(Type3_1{X, Y}),
            StructureInstance(Type3_2{X, Y})}) {
        try {
          validate_instance(n, inst);
          out.push_back(inst);
        } catch (const Error&) {
        }
      }
    }
  }
  return out;
}

FamilyMask random_subfamily(const FamilyMask& range, std::mt19937_64& rng) {
  const auto codes = range.codes();
  FamilyMask f(range.n());
  while (f.empty()) {
    for (Code c : codes)
      if (rng() & 1u) f.insert(c);
  }
  return f;
}

std::optional<Coloring> generated_sample(int n, const std::vector<StructureInstance>& fixed, std::mt19937_64& rng) {
  // Type 4 instances need a family parameter, drawn fresh each time.
  const std::size_t slots = fixed.size() + 2;
  const std::size_t pick = rng() % slots;
  StructureInstance inst;
  if (pick < fixed.size()) {
    inst = fixed[pick];
  } else if (pick == fixed.size()) {
    if (n < 3) return std::nullopt;
    Code x;
    do x = static_cast<Code>(rng() % (full_code(n) + 1)); while (popcount(x) < 1 || popcount(x) > n - 2);
    inst = Type4_1{SubsetId(n, x),
                   random_subfamily(interval(n, SubsetId(n, x), SubsetId::full(n), Bounds::OpenLo), rng)};
  } else {
    if (n < 3) return std::nullopt;
    Code y;
    do y = static_cast<Code>(rng() % (full_code(n) + 1)); while (popcount(y) < 2 || popcount(y) > n - 1);
    inst = Type4_2{SubsetId(n, y), random_subfamily(interval(n, SubsetId::empty(n), SubsetId(n, y), Bounds::Open), rng)};
  }
  const FamilyLayout layout = structure_layout(n, inst);
  const std::size_t f = layout.families.size();
  std::vector<Color> colors(f + rng() % 3);
  for (std::size_t i = 0; i < colors.size(); ++i) colors[i] = static_cast<Color>(i);
  std::shuffle(colors.begin(), colors.end(), rng);
  StructurePalette pal;
  pal.family_colors.assign(colors.begin(), colors.begin() + static_cast<long>(f));
  pal.free.mode = FreeChoice::Mode::PerSet;
  layout.free_class.for_each([&](Code s) { pal.free.per_set[s] = static_cast<int>(rng() & 1u); });
  const Coloring raw = generate_structure(n, inst, pal);
  // Compact the colors so the sample is an exact coloring.
  std::vector<Color> remap(raw.k(), ~Color{0});
  Color next = 0;
  std::vector<Color> col(raw.by_code().size());
  for (std::size_t s = 0; s < col.size(); ++s) {
    Color& r = remap[raw(static_cast<Code>(s))];
    if (r == ~Color{0}) r = next++;
    col[s] = r;
  }
  return Coloring(n, std::move(col), static_cast<int>(next));
}

}  // namespace

BlobSampleReport blob_samples(int m, int n0, int samples, std::uint64_t seed) {
  const auto parts = blob_partition(m, n0);
  (void)parts;
  const int n = m * n0 + m;
  const PatternPoset bm = PatternPoset::boolean(m);
  std::mt19937_64 rng(seed);
  const auto fixed = m == 2 ? b2_instances(n) : std::vector<StructureInstance>{};
  BlobSampleReport rep;
  const std::size_t universe = std::size_t{1} << n;
  long long tries = 0;
  const long long max_tries = 1000LL * samples + 1000;
  while (rep.samples < samples) {
    std::optional<Coloring> c;
    bool generated = false;
    if (m == 2 && rep.samples % 2 == 0) {
      c = generated_sample(n, fixed, rng);
      generated = c.has_value();
    }
    if (!c) {
      if (++tries > max_tries) fail(ErrorKind::Capacity, "rejection sampling found too few rainbow-free colorings");
      const int k = (1 << m) + static_cast<int>(rng() % 3);
      std::vector<Color> col(universe);
      for (auto& x : col) x = (rng() & 1u) ? 0 : static_cast<Color>(rng() % k);
      Coloring raw(n, std::move(col), k);
      c = raw;
    }
    if (find_rainbow_copy(*c, bm)) continue;
    ++rep.samples;
    if (generated) ++rep.from_generators;
    if (auto b = blob_with_few_colors(*c, m, n0)) {
      if (rep.examples.size() < 3) rep.examples.emplace_back(*c, *b);
    } else {
      ++rep.counterexamples;
      if (rep.counterexample_colorings.size() < 3) rep.counterexample_colorings.push_back(*c);
    }
  }
  return rep;
}

namespace {

std::string judge(const Prediction& p, const NumberResult& r) {
  if (r.indeterminate) return "indeterminate";
  if (p.shape == Prediction::Shape::Good) return r.good ? "agree" : "disagree";
  if (r.good) return "disagree";
  if (r.value) return p.admits(*r.value) ? "agree" : "disagree";
  // The value exceeds the verified range.
  const long long v = r.verified_up_to;
  switch (p.shape) {
    case Prediction::Shape::Exact:
    case Prediction::Shape::Upper:
    case Prediction::Shape::Range: return *p.hi <= v ? "disagree" : "indeterminate";
    case Prediction::Shape::Lower: return *p.lo <= v + 1 ? "agree" : "indeterminate";
    case Prediction::Shape::Good: break;
  }
  return "indeterminate";
}

long long input(const ClaimInputs& in, const std::string& name, std::optional<long long> fallback = std::nullopt) {
  const auto it = in.params.find(name);
  if (it != in.params.end()) return it->second.value;
  if (fallback) return *fallback;
  fail(ErrorKind::MissingSubvalue, "claim input '" + name + "' is required");
}

std::string window_text(std::pair<int, int> w) {
  return "[" + std::to_string(w.first) + "," + std::to_string(w.second) + "]";
}

std::string number_text(const NumberResult& r) {
  if (r.indeterminate) return "indeterminate";
  if (r.good) return "good up to " + std::to_string(r.verified_up_to);
  if (r.value) return std::to_string(*r.value);
  return "> " + std::to_string(r.verified_up_to);
}

}  // namespace

ClaimReport verify_claim(ClaimId id, const ClaimInputs& in, const SearchOptions& options) {
  ClaimReport rep;
  rep.claim = id;
  rep.params = in.params;
  auto& prov = rep.provenance;

  auto finish_number = [&](const Prediction& p, const NumberResult& r, const AvoidanceSpec& base, const std::string& what) {
    rep.predicted = p;
    rep.checked_against = to_json(r);
    rep.verified_up_to = r.verified_up_to;
    rep.verdict = judge(p, r);
    prov.push_back(what + " = " + number_text(r) + " (verified up to " + std::to_string(r.verified_up_to) + ")");
    for (auto& w : number_witnesses(base, r)) rep.witnesses.push_back(w);
    rep.witnesses.push_back(formula_witness("prediction", id, p.used, p));
  };
  auto gr = [&](const PatternPoset& q, const PatternPoset& pp, int k, std::pair<int, int> window, const Prediction& p) {
    const auto w = in.window.value_or(window);
    const NumberResult r = compute_gr(q, pp, k, w, options);
    AvoidanceSpec base;
    base.rainbow_target = q;
    base.mono_target = pp;
    base.palette = Palette::exact(k);
    finish_number(p, r, base,
                  "GR_" + std::to_string(k) + "(" + q.label() + ":" + pp.label() + ") on window " + window_text(w));
  };
  auto searched_ramsey = [&](const PatternPoset& p, int k, const std::string& name) -> std::optional<long long> {
    const int n_max = 8;
    const NumberResult r = compute_ramsey(p, k, CopyMode::Induced, n_max, options);
    prov.push_back("R_" + std::to_string(k) + "(" + p.label() + ") = " + number_text(r));
    if (!r.value) return std::nullopt;
    rep.params[name] = {*r.value, "compute_ramsey(" + p.label() + ", k=" + std::to_string(k) + "), exhaustive"};
    return *r.value;
  };
  auto searched_e = [&](const PatternPoset& p) {
    const EPosetResult e = e_poset(p, 6);
    std::string note = "e_poset(" + p.label() + ", n_probe=6)";
    if (e.saturated) note += ", saturated: lower bound only";
    rep.params["e"] = {e.e, note};
    prov.push_back("e(" + p.label() + ") = " + std::to_string(e.e) + " from " + note);
    if (e.failing) {
      rep.witnesses.push_back(copy_witness("e(" + p.label() + ") + 1 levels hold a copy", e.failing->n, e.failing->lo,
                                           e.failing->lo + e.failing->size - 1, p, e.failing->copy));
    }
    return e.e;
  };
  auto indeterminate = [&](const std::string& why) {
    rep.verdict = "indeterminate";
    prov.push_back(why);
  };

  switch (id) {
    case ClaimId::GrChainChain: {
      const int s = static_cast<int>(input(in, "s")), k = static_cast<int>(input(in, "k"));
      const Prediction p = predicted_value(id, rep.params);
      gr(PatternPoset::chain(3), PatternPoset::chain(s), k, {1, s + 1}, p);
      break;
    }
    case ClaimId::GrForkChainK3: {
      const int s = static_cast<int>(input(in, "s"));
      const Prediction p = predicted_value(id, rep.params);
      gr(PatternPoset::fork(), PatternPoset::chain(s), 3, {1, std::max(2, 2 * s - 1)}, p);
      break;
    }
    case ClaimId::GrForkChainK4: {
      const int s = static_cast<int>(input(in, "s"));
      const Prediction p = predicted_value(id, rep.params);
      gr(PatternPoset::fork(), PatternPoset::chain(s), 4, {1, std::max(4, s + 1)}, p);
      break;
    }
    case ClaimId::GrForkChainGood: {
      const int s = static_cast<int>(input(in, "s")), k = static_cast<int>(input(in, "k"));
      const Prediction p = predicted_value(id, rep.params);
      gr(PatternPoset::fork(), PatternPoset::chain(s), k, {1, 4}, p);
      break;
    }
    case ClaimId::GrB2BnUpper: {
      const int n = static_cast<int>(input(in, "n")), k = static_cast<int>(input(in, "k"));
      const auto bn = PatternPoset::boolean(n);
      const auto r3 = searched_ramsey(bn, 3, "r3");
      if (!r3) {
        indeterminate("R_3(B_" + std::to_string(n) + ") not determined");
        break;
      }
      const Prediction p = predicted_value(id, rep.params);
      gr(PatternPoset::boolean(2), bn, k, {1, static_cast<int>(*r3 + n)}, p);
      break;
    }
    case ClaimId::RrBmBnUpper: {
      const int m = static_cast<int>(input(in, "m")), n = static_cast<int>(input(in, "n"));
      const auto bn = PatternPoset::boolean(n);
      const auto r = searched_ramsey(bn, (1 << m) - 1, "r");
      if (!r) {
        indeterminate("R_" + std::to_string((1 << m) - 1) + "(B_" + std::to_string(n) + ") not determined");
        break;
      }
      const Prediction p = predicted_value(id, rep.params);
      const int n_max = in.n_max ? in.n_max : static_cast<int>(std::min<long long>(*p.hi, 6));
      const auto bm = PatternPoset::boolean(m);
      const NumberResult rr = compute_rr(bm, bn, n_max, options);
      AvoidanceSpec base{0, bm, bn, Palette::unbounded(), CopyMode::Induced};
      finish_number(p, rr, base, "RR(" + bm.label() + ":" + bn.label() + ")");
      break;
    }
    case ClaimId::RrB2BnSandwich: {
      const int n = static_cast<int>(input(in, "n"));
      const auto bn = PatternPoset::boolean(n);
      const auto r3 = searched_ramsey(bn, 3, "r3");
      if (!r3) {
        indeterminate("R_3(B_" + std::to_string(n) + ") not determined");
        break;
      }
      const Prediction p = predicted_value(id, rep.params);
      const int n_max = in.n_max ? in.n_max : static_cast<int>(*p.hi);
      const auto b2 = PatternPoset::boolean(2);
      const NumberResult rr = compute_rr(b2, bn, n_max, options);
      AvoidanceSpec base{0, b2, bn, Palette::unbounded(), CopyMode::Induced};
      finish_number(p, rr, base, "RR(" + b2.label() + ":" + bn.label() + ")");
      break;
    }
    case ClaimId::RrForkFormula: {
      const PatternPoset pp = in.p ? *in.p : PatternPoset::chain(static_cast<int>(input(in, "s", 2)));
      const int e = searched_e(pp);
      const UilbReport u = is_uilb(pp, 4);
      prov.push_back(std::string("uniformly Lubell-bounded up to n=") + std::to_string(u.verified_up_to) + ": " +
                     (u.holds ? "yes" : "no"));
      if (!u.holds) prov.push_back("hypothesis fails; the formula need not apply");
      const Prediction p = predicted_value(id, rep.params);
      const int n_max = in.n_max ? in.n_max : 2 * e + 1;
      const auto fork = PatternPoset::fork();
      const NumberResult rr = compute_rr(fork, pp, n_max, options);
      AvoidanceSpec base{0, fork, pp, Palette::unbounded(), CopyMode::Induced};
      finish_number(p, rr, base, "RR(fork:" + pp.label() + ")");
      break;
    }
    case ClaimId::C3ColorCap:
    case ClaimId::B2ColorCap: {
      const int n = static_cast<int>(input(in, "n"));
      const Prediction p = predicted_value(id, rep.params);
      rep.predicted = p;
      const auto q = id == ClaimId::C3ColorCap ? PatternPoset::chain(3) : PatternPoset::boolean(2);
      const ColorCapSearch s = max_exact_colors(q, n, options);
      Json per = Json::array();
      for (const auto& [k, st] : s.per_k) per.push_back({{"k", k}, {"status", to_string(st)}});
      rep.checked_against = {{"max_exact_k", s.max_k ? Json(*s.max_k) : Json(nullptr)}, {"per_k", per}};
      rep.verified_up_to = n;
      if (!s.max_k) {
        indeterminate("some palette size was indeterminate");
      } else {
        rep.verdict = p.admits(*s.max_k) ? "agree" : "disagree";
        prov.push_back("largest exact k without rainbow " + q.label() + " on B_" + std::to_string(n) + " = " +
                       std::to_string(*s.max_k) + (*s.max_k == *p.hi ? " (cap attained)" : " (cap not attained)"));
        if (s.witness) {
          AvoidanceSpec spec{n, q, std::nullopt, Palette::exact(*s.max_k), CopyMode::Induced};
          rep.witnesses.push_back(avoider_witness("exact " + std::to_string(*s.max_k) + "-coloring", spec, *s.witness));
        }
      }
      rep.witnesses.push_back(formula_witness("prediction", id, p.used, p));
      break;
    }
    case ClaimId::DisjointChainCount: {
      const int v = static_cast<int>(input(in, "v")), n = static_cast<int>(input(in, "n"));
      const Prediction p = predicted_value(id, rep.params);
      rep.predicted = p;
      const GstCheck g = gst_check(v, n);
      rep.checked_against = {{"searched", g.searched}, {"formula", g.formula}};
      rep.verified_up_to = n;
      rep.verdict = p.admits(g.searched) ? "agree" : "disagree";
      prov.push_back("largest u with an induced copy of u disjoint " + std::to_string(v) + "-chains in B_" +
                     std::to_string(n) + " = " + std::to_string(g.searched));
      if (g.searched > 0) {
        const auto pat = PatternPoset::disjoint_chains(g.searched, v);
        if (auto e = find_induced_copy(n, FamilyMask::all(n), pat))
          rep.witnesses.push_back(copy_witness("largest family of chains", n, 0, n, pat, *e));
      }
      rep.witnesses.push_back(formula_witness("prediction", id, p.used, p));
      break;
    }
    case ClaimId::RrLowerGeneral: {
      const PatternPoset q = in.q ? *in.q : PatternPoset::fork();
      const PatternPoset pp = in.p ? *in.p : PatternPoset::chain(2);
      searched_e(pp);
      rep.params["q"] = {q.size(), "|" + q.label() + "|"};
      rep.params["g"] = {g_poset(q), "g_poset(" + q.label() + ")"};
      const Prediction p = predicted_value(id, rep.params);
      const int n_max = in.n_max ? in.n_max : std::min<int>(6, static_cast<int>(*p.lo) + 1);
      const NumberResult rr = compute_rr(q, pp, n_max, options);
      AvoidanceSpec base{0, q, pp, Palette::unbounded(), CopyMode::Induced};
      finish_number(p, rr, base, "RR(" + q.label() + ":" + pp.label() + ")");
      break;
    }
    case ClaimId::RkUniformLubell: {
      const PatternPoset pp = in.p ? *in.p : PatternPoset::chain(static_cast<int>(input(in, "s", 2)));
      const int k = static_cast<int>(input(in, "k"));
      const int e = searched_e(pp);
      const Prediction p = predicted_value(id, rep.params);
      const int n_max = in.n_max ? in.n_max : k * e + 1;
      const NumberResult r = compute_ramsey(pp, k, CopyMode::Induced, n_max, options);
      AvoidanceSpec base{0, std::nullopt, pp, Palette::at_most(k), CopyMode::Induced};
      finish_number(p, r, base, "R_" + std::to_string(k) + "(" + pp.label() + ")");
      break;
    }
    case ClaimId::BlobColors: {
      const int m = static_cast<int>(input(in, "m", 2));
      const int n0 = static_cast<int>(input(in, "n0", 1));
      rep.params["m"] = {m, rep.params.count("m") ? rep.params["m"].provenance : "default"};
      const Prediction p = predicted_value(id, rep.params);
      rep.predicted = p;
      const BlobSampleReport s = blob_samples(m, n0, in.samples, in.seed);
      rep.checked_against = {{"samples", s.samples},
                             {"from_generators", s.from_generators},
                             {"counterexamples", s.counterexamples},
                             {"n0", n0},
                             {"seed", in.seed}};
      rep.verified_up_to = m * n0 + m;
      rep.verdict = s.counterexamples == 0 ? "agree" : "disagree";
      prov.push_back(std::to_string(s.samples) + " rainbow-B_" + std::to_string(m) + "-free colorings of B_" +
                     std::to_string(m * n0 + m) + " sampled, " + std::to_string(s.counterexamples) +
                     " without a blob of at most " + std::to_string(*p.hi) + " colors");
      if (n0 == 1) prov.push_back("with n0 = 1 every blob is a 2-element B_1, so the bound holds trivially");
      for (const auto& [c, b] : s.examples) rep.witnesses.push_back(blob_witness("sample", m, n0, c, b));
      rep.witnesses.push_back(formula_witness("prediction", id, p.used, p));
      break;
    }
  }
  return rep;
}

Json to_json(const ClaimReport& r) {
  Json j;
  j["claim"] = to_string(r.claim);
  j["statement"] = describe(r.claim);
  j["params"] = to_json(r.params);
  j["predicted"] = r.predicted ? to_json(*r.predicted) : Json(nullptr);
  j["checked_against"] = r.checked_against;
  j["verdict"] = r.verdict;
  j["verified_up_to"] = r.verified_up_to ? Json(*r.verified_up_to) : Json(nullptr);
  j["provenance"] = r.provenance;
  return j;
}

}  // namespace rlw

#include "rlw/serialize.hpp"

#include "rlw/error.hpp"

namespace rlw {

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(ErrorKind::Schema, std::string("missing field '") + key + "'");
  return j.at(key);
}

namespace {

int int_member(const Json& j, const char* key) {
  const Json& v = member(j, key);
  if (!v.is_number_integer()) fail(ErrorKind::Schema, std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

std::string str_member(const Json& j, const char* key) {
  const Json& v = member(j, key);
  if (!v.is_string()) fail(ErrorKind::Schema, std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

SubsetId subset_member(int n, const Json& j, const char* key) { return parse_subset(n, str_member(j, key)); }

}  // namespace

Json to_json(const Coloring& c) {
  Json j;
  j["n"] = c.n();
  j["k"] = c.k();
  j["colors"] = c.to_canonical();
  return j;
}

Coloring coloring_from_json(const Json& j) {
  const int n = int_member(j, "n");
  const int k = int_member(j, "k");
  const Json& colors = member(j, "colors");
  if (!colors.is_array()) fail(ErrorKind::Schema, "field 'colors' must be an array");
  std::vector<int> v;
  for (const auto& x : colors) {
    if (!x.is_number_integer()) fail(ErrorKind::Schema, "colors must be integers");
    v.push_back(x.get<int>());
  }
  return Coloring::from_canonical(n, k, v);
}

Json to_json(const FamilyMask& f) {
  Json a = Json::array();
  for (Code c : f.canonical_codes()) a.push_back(format_subset(c));
  return a;
}

FamilyMask family_from_json(int n, const Json& j) {
  if (!j.is_array()) fail(ErrorKind::Schema, "a family must be an array of subsets");
  FamilyMask f(n);
  for (const auto& s : j) {
    if (!s.is_string()) fail(ErrorKind::Schema, "subsets must be strings");
    f.insert(parse_subset(n, s.get<std::string>()).bits());
  }
  return f;
}

Json to_json(const Embedding& e) {
  Json j;
  j["mode"] = to_string(e.mode);
  Json m = Json::array();
  for (const auto& s : e.map) m.push_back(format_subset(s));
  j["map"] = m;
  return j;
}

Embedding embedding_from_json(int n, const Json& j) {
  Embedding e;
  const std::string mode = str_member(j, "mode");
  if (mode == "induced") e.mode = CopyMode::Induced;
  else if (mode == "weak") e.mode = CopyMode::Weak;
  else fail(ErrorKind::Schema, "unknown copy mode '" + mode + "'");
  const Json& m = member(j, "map");
  if (!m.is_array()) fail(ErrorKind::Schema, "embedding map must be an array");
  for (const auto& s : m) {
    if (!s.is_string()) fail(ErrorKind::Schema, "subsets must be strings");
    e.map.push_back(parse_subset(n, s.get<std::string>()));
  }
  return e;
}

Json to_json(int /*n*/, const StructureInstance& inst) {
  Json j;
  j["type"] = type_name(inst);
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, V2Case1>) {
          j["A"] = format_subset(x.A);
        } else if constexpr (std::is_same_v<T, Type1> || std::is_same_v<T, Type2> || std::is_same_v<T, Type3_1> ||
                             std::is_same_v<T, Type3_2>) {
          j["X0"] = format_subset(x.X0);
          j["Y0"] = format_subset(x.Y0);
        } else if constexpr (std::is_same_v<T, Type4_1>) {
          j["X0"] = format_subset(x.X0);
          j["Y_family"] = to_json(x.Y_family);
        } else if constexpr (std::is_same_v<T, Type4_2>) {
          j["Y0"] = format_subset(x.Y0);
          j["X_family"] = to_json(x.X_family);
        } else if constexpr (std::is_same_v<T, Type5>) {
          Json chains = Json::array();
          for (const auto& ch : x.chains) {
            Json a = Json::array();
            for (const auto& s : ch) a.push_back(format_subset(s));
            chains.push_back(a);
          }
          j["chains"] = chains;
        }
      },
      inst);
  return j;
}

StructureInstance instance_from_json(int n, const Json& j) {
  const std::string type = str_member(j, "type");
  StructureInstance inst;
  if (type == "C3Shape") inst = C3Shape{};
  else if (type == "V2Case1") inst = V2Case1{subset_member(n, j, "A")};
  else if (type == "V2Case2") inst = V2Case2{};
  else if (type == "Type1") inst = Type1{subset_member(n, j, "X0"), subset_member(n, j, "Y0")};
  else if (type == "Type2") inst = Type2{subset_member(n, j, "X0"), subset_member(n, j, "Y0")};
  else if (type == "Type3_1") inst = Type3_1{subset_member(n, j, "X0"), subset_member(n, j, "Y0")};
  else if (type == "Type3_2") inst = Type3_2{subset_member(n, j, "X0"), subset_member(n, j, "Y0")};
  else if (type == "Type4_1") inst = Type4_1{subset_member(n, j, "X0"), family_from_json(n, member(j, "Y_family"))};
  else if (type == "Type4_2") inst = Type4_2{subset_member(n, j, "Y0"), family_from_json(n, member(j, "X_family"))};
  else if (type == "Type5") {
    Type5 t;
    const Json& chains = member(j, "chains");
    if (!chains.is_array()) fail(ErrorKind::Schema, "chains must be an array");
    for (const auto& ch : chains) {
      std::vector<SubsetId> v;
      for (const auto& s : ch) v.push_back(parse_subset(n, s.get<std::string>()));
      t.chains.push_back(v);
    }
    inst = t;
  } else {
    fail(ErrorKind::Schema, "unknown structure type '" + type + "'");
  }
  validate_instance(n, inst);
  return inst;
}

Json to_json(const AvoidanceSpec& spec) {
  Json j;
  j["n"] = spec.n;
  j["rainbow"] = spec.rainbow_target ? Json(spec.rainbow_target->label()) : Json(nullptr);
  j["mono"] = spec.mono_target ? Json(spec.mono_target->label()) : Json(nullptr);
  j["palette"] = to_string(spec.palette);
  j["mode"] = to_string(spec.mode);
  return j;
}

AvoidanceSpec spec_from_json(const Json& j) {
  AvoidanceSpec s;
  s.n = int_member(j, "n");
  const Json& r = member(j, "rainbow");
  if (!r.is_null()) s.rainbow_target = make_pattern(r.get<std::string>());
  const Json& m = member(j, "mono");
  if (!m.is_null()) s.mono_target = make_pattern(m.get<std::string>());
  s.palette = parse_palette(str_member(j, "palette"));
  const std::string mode = str_member(j, "mode");
  if (mode == "induced") s.mode = CopyMode::Induced;
  else if (mode == "weak") s.mode = CopyMode::Weak;
  else fail(ErrorKind::Schema, "unknown copy mode '" + mode + "'");
  s.validate();
  return s;
}

Json to_json(const NumberResult& r) {
  Json j;
  j["kind"] = to_string(r.kind);
  j["value"] = r.value ? Json(*r.value) : Json(nullptr);
  j["good"] = r.good;
  j["indeterminate"] = r.indeterminate;
  j["verified_up_to"] = r.verified_up_to;
  Json w = Json::array();
  for (const auto& x : r.witnesses) {
    Json e;
    e["n"] = x.n;
    e["status"] = to_string(x.status);
    if (x.vacuous) e["vacuous"] = true;
    if (x.avoider) e["avoider"] = to_json(*x.avoider);
    w.push_back(e);
  }
  j["witnesses"] = w;
  j["stats"] = {{"nodes", r.stats.nodes}};
  j["notes"] = r.notes;
  return j;
}

Json to_json(const ClaimParams& params) {
  Json j = Json::object();
  for (const auto& [k, v] : params) j[k] = {{"value", v.value}, {"provenance", v.provenance}};
  return j;
}

ClaimParams params_from_json(const Json& j) {
  if (!j.is_object()) fail(ErrorKind::Schema, "params must be an object");
  ClaimParams p;
  for (auto it = j.begin(); it != j.end(); ++it) {
    ParamValue v;
    if (it.value().is_number_integer()) {
      v.value = it.value().get<long long>();
    } else {
      v.value = member(it.value(), "value").get<long long>();
      if (it.value().contains("provenance")) v.provenance = it.value().at("provenance").get<std::string>();
    }
    p[it.key()] = v;
  }
  return p;
}

Json to_json(const Prediction& p) {
  Json j;
  j["shape"] = to_string(p.shape);
  j["lo"] = p.lo ? Json(*p.lo) : Json(nullptr);
  j["hi"] = p.hi ? Json(*p.hi) : Json(nullptr);
  j["text"] = p.text();
  j["formula"] = p.formula;
  j["params"] = to_json(p.used);
  return j;
}

Json to_json(const ExactRational& q) { return q.to_string(); }

}  // namespace rlw

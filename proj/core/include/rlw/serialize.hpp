#pragma once

// JSON forms.  Colors are 1-based, subsets are "{1,3}" strings, colorings
// list colors in (size, bitmask) order.

#include <nlohmann/json.hpp>

#include "rlw/claims.hpp"
#include "rlw/coloring.hpp"
#include "rlw/embedding.hpp"
#include "rlw/extremal.hpp"
#include "rlw/search.hpp"
#include "rlw/structures.hpp"

namespace rlw {

using Json = nlohmann::ordered_json;

Json to_json(const Coloring& c);
Coloring coloring_from_json(const Json& j);

Json to_json(const FamilyMask& f);
FamilyMask family_from_json(int n, const Json& j);

Json to_json(const Embedding& e);
Embedding embedding_from_json(int n, const Json& j);

Json to_json(int n, const StructureInstance& inst);
StructureInstance instance_from_json(int n, const Json& j);

Json to_json(const AvoidanceSpec& spec);
AvoidanceSpec spec_from_json(const Json& j);

// Stats carry node counts only; timings live in the document's run block.
Json to_json(const NumberResult& r);

Json to_json(const ClaimParams& params);
ClaimParams params_from_json(const Json& j);
Json to_json(const Prediction& p);

Json to_json(const ExactRational& q);  // "p/q"

// Reads a required member, throwing a schema error naming it.
const Json& member(const Json& j, const char* key);

}  // namespace rlw

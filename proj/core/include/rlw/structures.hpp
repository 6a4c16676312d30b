#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rlw/coloring.hpp"
#include "rlw/embedding.hpp"
#include "rlw/lattice.hpp"

namespace rlw {

// Shapes of colorings without a rainbow C_3, fork or B_2.
struct C3Shape {};
struct V2Case1 {
  SubsetId A;
};
struct V2Case2 {};
struct Type1 {
  SubsetId X0, Y0;
};
struct Type2 {
  SubsetId X0, Y0;
};
struct Type3_1 {
  SubsetId X0, Y0;
};
struct Type3_2 {
  SubsetId X0, Y0;
};
struct Type4_1 {
  SubsetId X0;
  FamilyMask Y_family;
};
struct Type4_2 {
  SubsetId Y0;
  FamilyMask X_family;
};
// Predicate shape; chains holds the rainbow 4-chains and the non-extendable
// rainbow 3-chains at the top that were checked.
struct Type5 {
  std::vector<std::vector<SubsetId>> chains;
};

using StructureInstance =
    std::variant<C3Shape, V2Case1, V2Case2, Type1, Type2, Type3_1, Type3_2, Type4_1, Type4_2, Type5>;

std::string type_name(const StructureInstance& inst);

// Throws a precondition error if the parameter invariants fail for n.
void validate_instance(int n, const StructureInstance& inst);

// The families of a generable instance in their defining order, together
// with the free class and the two families whose colors it may take.
struct FamilyLayout {
  std::vector<FamilyMask> families;
  std::vector<std::string> names;  // "F1", "F2", ...
  FamilyMask free_class;
  std::array<int, 2> free_allowed{0, 0};  // indices into families: low, high
  bool top_separate = false;              // V2Case1: [n] is outside every family
};

FamilyLayout structure_layout(int n, const StructureInstance& inst);

struct FreeChoice {
  enum class Mode { AllLow, AllHigh, PerSet };
  Mode mode = Mode::AllLow;
  std::map<Code, int> per_set;  // code -> 0 (low) or 1 (high); unspecified sets use low
};

struct StructurePalette {
  std::vector<Color> family_colors;  // 0-based, one per family
  FreeChoice free;
  std::optional<Color> top_color;    // V2Case1 only; defaults to a fresh color
};

// Colors 0,1,2,... in family order; free class all-low.
StructurePalette default_palette(int n, const StructureInstance& inst);

Coloring generate_structure(int n, const StructureInstance& inst, const StructurePalette& palette);
bool matches_structure(const Coloring& c, const StructureInstance& inst);

bool check_c3_shape(const Coloring& c);
std::optional<StructureInstance> classify_v2(const Coloring& c);
std::optional<StructureInstance> classify_b2(const Coloring& c);

// Detail of the top-equals-bottom check.
struct Type5Report {
  bool holds = false;
  int max_chain = 0;
  bool chain_cap = false;       // every rainbow chain has at most 4 sets
  bool clause_four = false;     // family conditions around each rainbow 4-chain
  bool clause_three = false;    // 3 colors near each non-extendable (W,Y,[n])
  bool mirror_three = false;    // same for (∅,W,Y); informational
  std::vector<std::vector<SubsetId>> four_chains;
  std::vector<std::vector<SubsetId>> three_chains;
  std::string failure;
};

Type5Report check_type5(const Coloring& c);

// The family partition around a rainbow chain W < X < Y < [n] with W nonempty:
// the four families get colors 0..3, the two side classes the first family's
// color, every remaining set color 0.
Coloring type5_from_chain(int n, SubsetId w, SubsetId x, SubsetId y);

// Exact k-coloring of B_{s-1} with no rainbow C_3 and no monochromatic C_s.
Coloring lower_bound_gr_c3(int s, int k);
// k = 3: B_{2s-2}; k = 4: B_{s-1}.  No rainbow fork, no monochromatic C_s.
Coloring lower_bound_gr_v2(int s, int k);

// Levels cut into blocks of e consecutive levels, one color per block; an
// extra color on [n] (resp. ∅) when q lacks a maximum (resp. minimum).  The
// result has no rainbow q once q has |q| elements and at least |q|-1 blocks,
// and no monochromatic p whenever every e consecutive levels are p-free.
Coloring layered_coloring(int e, const PatternPoset& q);

struct BlobSublattice {
  std::vector<int> label;  // increasing indices in [m]
  SubsetId lo, hi;
};

std::vector<BlobSublattice> blob_partition(int m, int n0);

// First blob sublattice (in partition order) on which c uses at most
// 2^m - 1 colors.  c must be over B_{m n0 + m}.
std::optional<BlobSublattice> blob_with_few_colors(const Coloring& c, int m, int n0);

}  // namespace rlw

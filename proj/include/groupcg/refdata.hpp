#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "groupcg/clebsch.hpp"
#include "groupcg/group.hpp"
#include "groupcg/numerics.hpp"

// Embedded copies of the published reference tables (Cayley tables,
// character tables, Clebsch-Gordan matrices) plus the constants used to
// generate the built-in groups.
namespace groupcg::refdata {

// Raw text of a file under references/ (compiled in); throws UnknownReference.
std::string_view reference_text(std::string_view path);

// Parsed and validated reference Cayley table.
const Group& reference_group(BuiltinGroup name);

// Element order used when generating Q8/Q16/Q32 from the dicyclic
// presentation; entry j is (k, t) for c^k (t=0) or c^k j (t=1).
const std::vector<std::pair<int, int>>& dicyclic_element_order(BuiltinGroup name);

// Relabeling taking central_quotient(Q8 x Q8, {(1,1),(2,2)}) onto the
// published 32.42 table; found once by search_isomorphism and frozen here.
const std::vector<int>& renumber_quotient_to_g32_42();

const std::vector<std::vector<int>>& expected_classes(BuiltinGroup name);

struct SeriesEquation {
  int alpha = 0, beta = 0;
  std::vector<int> gammas;  // each summand once; products here are
                            // multiplicity-free
};
const std::vector<SeriesEquation>& expected_series(BuiltinGroup name);

struct ReferenceCharacters {
  std::string table_id;
  std::vector<int> class_sizes;
  std::vector<std::vector<cplx>> rows;
  std::vector<int> dims;
};
// Available for Q8 and G32_42; throws UnknownReference otherwise.
ReferenceCharacters reference_characters(BuiltinGroup name);

// Seed matrices for the published irreps; completed by reptheory.
struct IrrepSeed {
  int label = 0;
  int dim = 0;
  std::map<int, CMatrix> at;  // element index -> matrix
};
std::vector<IrrepSeed> irrep_seeds(BuiltinGroup name);

struct ReferenceCG {
  std::string table_id;     // "IV", "XXII", ...
  std::string description;  // "Q8 5x5"
  BuiltinGroup group = BuiltinGroup::Q8;
  int alpha = 0, beta = 0;
  std::vector<CGBlock> blocks;
  std::vector<std::string> notes;  // typo flags, caption remarks
  std::string derivation;          // empty for tables printed as such
};

// All published CG tables, expanded to one entry per (group, alpha, beta)
// they cover: direct copies, caption aliases, gamma-relabeled variants and
// entrywise conjugates.
std::vector<ReferenceCG> cg_references();

}  // namespace groupcg::refdata

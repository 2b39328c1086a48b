#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "groupcg/clebsch.hpp"
#include "groupcg/group.hpp"
#include "groupcg/reptheory.hpp"

namespace groupcg {

using ordered_json = nlohmann::ordered_json;

// ---- structured (JSON) encodings ----

// {alpha, beta, blocks: [{gamma, replica, columns: [[[re,im],...],...]}],
//  residual, unitary_defect}
ordered_json cg_to_json(const CGMatrix& cg);

struct ParsedCG {
  int alpha = 0, beta = 0;
  std::vector<CGBlock> blocks;
  double residual = 0.0, unitary_defect = 0.0;
};
ParsedCG cg_from_json(const nlohmann::json& doc);
std::vector<CGBlock> cg_blocks_from_json(const nlohmann::json& doc);

// .irrep: {group, label, dim, matrices: element -> dim x dim of [re,im]}
ordered_json representation_to_json(const Representation& r,
                                    std::string_view group_name);
// Missing elements are filled by completion against the supplied group.
Representation representation_from_json(const nlohmann::json& doc,
                                        std::shared_ptr<const Group> group);

ordered_json decomposition_to_json(const Decomposition& d, const CharacterTable& t);
ordered_json character_table_to_json(const CharacterTable& t);

// ---- CSV ----

// classes as columns, header row of class sizes
std::string character_table_csv(const CharacterTable& t);

// ---- plain-text renderings (entries via snap) ----

std::string render_character_table(const CharacterTable& t, const Tolerances& tol = {});
std::string render_cg_text(const CGMatrix& cg, const Tolerances& tol = {});
std::string render_decomposition(const Decomposition& d, const CharacterTable& t);
std::string render_classes(const Group& g, const ClassPartition& p);
std::string render_orders(const Group& g);
std::string render_representation(const Representation& r, const Tolerances& tol = {});

}  // namespace groupcg

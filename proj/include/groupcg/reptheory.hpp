#pragma once

#include <map>
#include <memory>
#include <vector>

#include "groupcg/group.hpp"
#include "groupcg/numerics.hpp"

namespace groupcg {

// Unitary matrix representation: one dim x dim matrix per group element.
struct Representation {
  std::shared_ptr<const Group> group;
  int label = 0;  // R^(label), per-group numbering
  int dim = 0;
  std::vector<CMatrix> mats;  // index 0 unused; mats[j] for element j

  const CMatrix& at(int element) const { return mats[element]; }
};

// Homomorphism over all pairs, unitarity, identity. Throws ClosureFailure.
void check_representation(const Representation& r, const Tolerances& tol = {});

// Fills elements missing from seeds by closure along the multiplication
// table (covers the even-index rule g_k = g_2 g_{k-1} and products of listed
// elements), then runs the full representation check.
Representation complete_representation(std::shared_ptr<const Group> group,
                                       int label, int dim,
                                       const std::map<int, CMatrix>& seeds,
                                       const Tolerances& tol = {});

// The published irreducible representations: 5 for Q8, 7 for Q16, 11 for
// Q32, 17 for 32.42, labeled as in the tables.
std::vector<Representation> builtin_irreps(BuiltinGroup name);
std::vector<Representation> builtin_irreps(std::string_view name);

// Trace per class, taken at the minimal representative; verifies constancy
// across each class (NotClassFunction otherwise).
std::vector<cplx> character(const Representation& r, const ClassPartition& classes,
                            const Tolerances& tol = {});

// <chi, chi> = 1 test.
bool verify_irreducible(const Representation& r, const ClassPartition& classes);

struct CharacterTable {
  std::shared_ptr<const Group> group;
  ClassPartition classes;
  std::vector<int> labels;                // row labels
  std::vector<int> dims;                  // degree per row
  std::vector<std::vector<cplx>> chi;     // rows x classes

  std::size_t irrep_count() const { return chi.size(); }
  int row_of_label(int label) const;      // throws UnknownIrrep
};

CharacterTable character_table_from_irreps(const std::vector<Representation>& irreps);

// Burnside/Dixon class-algebra method: simultaneous eigenvectors of the
// class-sum matrices via a seeded random Hermitian combination. Rows ordered
// by (degree, lexicographic characters).
CharacterTable character_table_dixon(const Group& g, unsigned seed = 42);

struct Decomposition {
  int alpha = 0, beta = 0;
  std::vector<int> m;  // per table row
};

// m_gamma = (1/|G|) sum_g chi_{a x b}(g) conj(chi_gamma(g)), class-wise.
Decomposition decompose(int alpha, int beta, const CharacterTable& table);

bool is_simply_reducible(const CharacterTable& table);

// Entrywise match after some row bijection (used for Dixon vs published).
bool tables_match_up_to_row_permutation(const CharacterTable& a,
                                        const CharacterTable& b, double tol);

}  // namespace groupcg

#pragma once

#include <string>
#include <vector>

#include "groupcg/numerics.hpp"
#include "groupcg/reptheory.hpp"

namespace groupcg {

// (1/|G|) sum_g R^a_{jj'} R^b_{kk'} conj(R^g_{ll'}) over multi-indices
// (j,k,l) x (j',k',l'), l fastest varying. Hermitian, PSD; its rank equals
// the multiplicity of gamma in alpha x beta.
struct MercerMatrix {
  int alpha = 0, beta = 0, gamma = 0;
  int na = 0, nb = 0, ng = 0;
  CMatrix m;
};

MercerMatrix assemble_mercer(const Representation& a, const Representation& b,
                             const Representation& g);  // GroupMismatch

// One block of CG columns: n_alpha*n_beta x n_gamma, row multi-index (j,k)
// with j major.
struct CGBlock {
  int gamma = 0;
  int replica = 0;
  CMatrix columns;
};

// Eigenvectors of mm above eig_zero_tol, reshaped to column blocks, unit
// normalized and phase fixed (first row of column 1 with magnitude above
// eq_tol made real positive; one scalar per block). Checks the intertwining
// relation for every group element. Throws RankMismatch / IntertwinerFailure.
std::vector<CGBlock> cg_block(const MercerMatrix& mm, const Representation& a,
                              const Representation& b, const Representation& g,
                              int expected_multiplicity, const Tolerances& tol = {});

struct CGMatrix {
  int alpha = 0, beta = 0;
  int na = 0, nb = 0;
  std::vector<CGBlock> blocks;  // gamma ascending, replica ascending
  CMatrix assembled;            // na*nb x na*nb unitary
  double unitary_defect = 0.0;
  double residual = 0.0;        // verify_block_diag result
};

CGMatrix cg_matrix(const Representation& a, const Representation& b,
                   const std::vector<Representation>& irreps,
                   const CharacterTable& table, const Tolerances& tol = {});

// max over g of |U^+ (R^a x R^b)(g) U - direct_sum R^gamma(g)|_max.
double verify_block_diag(const CGMatrix& cg, const Representation& a,
                         const Representation& b,
                         const std::vector<Representation>& irreps);

struct ColumnMatch {
  int gamma = 0;
  int ref_column = 0;       // 1-based within the gamma block of the reference
  int computed_column = 0;  // 1-based within the gamma block of the computed
  cplx phase;
};

struct CompareReport {
  bool ok = true;
  std::vector<ColumnMatch> matches;
  std::vector<std::string> notes;
};

// Per-column comparison against reference blocks carrying gamma labels: each
// reference column must equal some distinct computed column of the same gamma
// after multiplication by a unit scalar. Throws ShapeMismatch.
CompareReport compare_up_to_phase(const CGMatrix& computed,
                                  const std::vector<CGBlock>& reference,
                                  double tol = 1e-8);

}  // namespace groupcg

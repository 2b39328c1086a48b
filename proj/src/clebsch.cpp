#include "groupcg/clebsch.hpp"

#include <algorithm>
#include <cmath>

#include "groupcg/error.hpp"

namespace groupcg {

namespace {

bool same_group(const Group& a, const Group& b) {
  return a.order == b.order && a.table == b.table;
}

}  // namespace

MercerMatrix assemble_mercer(const Representation& a, const Representation& b,
                             const Representation& g) {
  if (!same_group(*a.group, *b.group) || !same_group(*a.group, *g.group))
    fail("GroupMismatch", "representations come from different groups");

  const int n = static_cast<int>(a.group->order);
  MercerMatrix mm;
  mm.alpha = a.label;
  mm.beta = b.label;
  mm.gamma = g.label;
  mm.na = a.dim;
  mm.nb = b.dim;
  mm.ng = g.dim;
  const int D = a.dim * b.dim * g.dim;
  mm.m = CMatrix(D, D);

  // rows (j,k,l) x columns (j',k',l'), l fastest varying
  for (int e = 1; e <= n; ++e) {
    const CMatrix& ra = a.at(e);
    const CMatrix& rb = b.at(e);
    const CMatrix& rg = g.at(e);
    for (int j = 0; j < a.dim; ++j)
      for (int jp = 0; jp < a.dim; ++jp) {
        const cplx va = ra(j, jp);
        if (va == cplx{}) continue;
        for (int k = 0; k < b.dim; ++k)
          for (int kp = 0; kp < b.dim; ++kp) {
            const cplx vab = va * rb(k, kp);
            if (vab == cplx{}) continue;
            for (int l = 0; l < g.dim; ++l)
              for (int lp = 0; lp < g.dim; ++lp)
                mm.m((j * b.dim + k) * g.dim + l, (jp * b.dim + kp) * g.dim + lp) +=
                    vab * std::conj(rg(l, lp));
          }
      }
  }
  mm.m = mm.m * cplx(1.0 / n);
  return mm;
}

std::vector<CGBlock> cg_block(const MercerMatrix& mm, const Representation& a,
                              const Representation& b, const Representation& g,
                              int expected_multiplicity, const Tolerances& tol) {
  const EigResult eig = hermitian_eig(mm.m, tol);

  int rank = 0;
  for (double v : eig.values)
    if (v > tol.eig_zero_tol) ++rank;
  if (rank != expected_multiplicity)
    fail("RankMismatch", std::to_string(rank) + " nonzero eigenvalues vs m = " +
                             std::to_string(expected_multiplicity) + " for gamma " +
                             std::to_string(mm.gamma) + " in " +
                             std::to_string(mm.alpha) + "x" + std::to_string(mm.beta));

  const int rows = mm.na * mm.nb;
  std::vector<CGBlock> blocks;
  for (int r = 0; r < rank; ++r) {
    CGBlock block;
    block.gamma = mm.gamma;
    block.columns = CMatrix(rows, mm.ng);
    for (int jk = 0; jk < rows; ++jk)
      for (int l = 0; l < mm.ng; ++l)
        block.columns(jk, l) = eig.vectors(jk * mm.ng + l, r);

    // per-l column norms of one eigenvector agree; rescale to unit columns
    double norm0 = 0.0;
    for (int jk = 0; jk < rows; ++jk) norm0 += std::norm(block.columns(jk, 0));
    norm0 = std::sqrt(norm0);
    for (int l = 1; l < mm.ng; ++l) {
      double norml = 0.0;
      for (int jk = 0; jk < rows; ++jk) norml += std::norm(block.columns(jk, l));
      if (std::abs(std::sqrt(norml) - norm0) > 1e-8)
        fail("RankMismatch", "column norms differ inside one eigenvector block");
    }
    block.columns = block.columns * cplx(1.0 / norm0);

    // one scalar per block: first usable row of column 1 made real positive
    cplx phase = 1.0;
    for (int jk = 0; jk < rows; ++jk) {
      const cplx z = block.columns(jk, 0);
      if (std::abs(z) > tol.eq_tol) {
        phase = std::conj(z) / std::abs(z);
        break;
      }
    }
    block.columns = block.columns * phase;
    blocks.push_back(std::move(block));
  }

  // replica convention: descending first-nonzero-row index
  auto first_row = [&tol](const CGBlock& blk) {
    for (std::size_t jk = 0; jk < blk.columns.rows(); ++jk)
      if (std::abs(blk.columns(jk, 0)) > tol.eq_tol) return static_cast<int>(jk);
    return static_cast<int>(blk.columns.rows());
  };
  std::stable_sort(blocks.begin(), blocks.end(),
                   [&first_row](const CGBlock& x, const CGBlock& y) {
                     return first_row(x) > first_row(y);
                   });
  for (int r = 0; r < static_cast<int>(blocks.size()); ++r) blocks[r].replica = r;

  // intertwining: (R^a x R^b)(g) V = V R^g(g) for every element
  const int n = static_cast<int>(a.group->order);
  for (const CGBlock& block : blocks)
    for (int e = 1; e <= n; ++e) {
      const CMatrix lhs = kron(a.at(e), b.at(e)) * block.columns;
      const CMatrix rhs = block.columns * g.at(e);
      if (max_abs_diff(lhs, rhs) > 1e-8)
        fail("IntertwinerFailure", "relation fails at element " + std::to_string(e) +
                                       " for gamma " + std::to_string(mm.gamma) +
                                       " in " + std::to_string(mm.alpha) + "x" +
                                       std::to_string(mm.beta));
    }
  return blocks;
}

CGMatrix cg_matrix(const Representation& a, const Representation& b,
                   const std::vector<Representation>& irreps,
                   const CharacterTable& table, const Tolerances& tol) {
  const Decomposition dec = decompose(a.label, b.label, table);

  CGMatrix cg;
  cg.alpha = a.label;
  cg.beta = b.label;
  cg.na = a.dim;
  cg.nb = b.dim;

  for (const Representation& g : irreps) {
    const int m = dec.m[table.row_of_label(g.label)];
    if (m == 0) continue;
    const MercerMatrix mm = assemble_mercer(a, b, g);
    for (CGBlock& block : cg_block(mm, a, b, g, m, tol))
      cg.blocks.push_back(std::move(block));
  }

  const int dim = a.dim * b.dim;
  cg.assembled = CMatrix(dim, dim);
  int col = 0;
  for (const CGBlock& block : cg.blocks)
    for (std::size_t l = 0; l < block.columns.cols(); ++l, ++col)
      for (int jk = 0; jk < dim; ++jk) cg.assembled(jk, col) = block.columns(jk, l);
  if (col != dim)
    fail("RankMismatch", "blocks of " + std::to_string(cg.alpha) + "x" +
                             std::to_string(cg.beta) + " cover " + std::to_string(col) +
                             " of " + std::to_string(dim) + " columns");

  cg.unitary_defect =
      max_abs_diff(cg.assembled.adjoint() * cg.assembled, CMatrix::identity(dim));
  if (cg.unitary_defect > tol.eq_tol)
    fail("UnitarityFailure", "defect " + std::to_string(cg.unitary_defect) + " for " +
                                 std::to_string(cg.alpha) + "x" + std::to_string(cg.beta));
  cg.residual = verify_block_diag(cg, a, b, irreps);
  return cg;
}

double verify_block_diag(const CGMatrix& cg, const Representation& a,
                         const Representation& b,
                         const std::vector<Representation>& irreps) {
  auto irrep_of = [&irreps](int label) -> const Representation& {
    for (const Representation& r : irreps)
      if (r.label == label) return r;
    fail("UnknownIrrep", "no irrep labeled " + std::to_string(label));
  };

  const int n = static_cast<int>(a.group->order);
  const int dim = cg.na * cg.nb;
  const CMatrix adjoint = cg.assembled.adjoint();
  double worst = 0.0;
  for (int e = 1; e <= n; ++e) {
    CMatrix direct_sum(dim, dim);
    int pos = 0;
    for (const CGBlock& block : cg.blocks) {
      const CMatrix& rg = irrep_of(block.gamma).at(e);
      const int ng = static_cast<int>(rg.rows());
      for (int i = 0; i < ng; ++i)
        for (int j = 0; j < ng; ++j) direct_sum(pos + i, pos + j) = rg(i, j);
      pos += ng;
    }
    const CMatrix transformed = adjoint * kron(a.at(e), b.at(e)) * cg.assembled;
    worst = std::max(worst, max_abs_diff(transformed, direct_sum));
  }
  return worst;
}

CompareReport compare_up_to_phase(const CGMatrix& computed,
                                  const std::vector<CGBlock>& reference,
                                  double tol) {
  const std::size_t dim = computed.assembled.rows();
  std::size_t ref_cols = 0;
  for (const CGBlock& block : reference) {
    if (block.columns.rows() != dim)
      fail("ShapeMismatch", "reference columns have length " +
                                std::to_string(block.columns.rows()) + ", expected " +
                                std::to_string(dim));
    ref_cols += block.columns.cols();
  }
  if (ref_cols != dim)
    fail("ShapeMismatch", "reference has " + std::to_string(ref_cols) +
                              " columns, expected " + std::to_string(dim));

  CompareReport report;

  // computed columns per gamma
  struct Candidate {
    int column;  // 1-based within gamma
    std::vector<cplx> values;
    bool used = false;
  };
  std::map<int, std::vector<Candidate>> by_gamma;
  for (const CGBlock& block : computed.blocks)
    for (std::size_t l = 0; l < block.columns.cols(); ++l) {
      Candidate c;
      c.column = static_cast<int>(by_gamma[block.gamma].size()) + 1;
      for (std::size_t r = 0; r < dim; ++r) c.values.push_back(block.columns(r, l));
      by_gamma[block.gamma].push_back(std::move(c));
    }

  for (const CGBlock& block : reference) {
    auto it = by_gamma.find(block.gamma);
    for (std::size_t l = 0; l < block.columns.cols(); ++l) {
      bool found = false;
      if (it != by_gamma.end()) {
        // phase from the largest reference entry
        std::size_t pivot = 0;
        for (std::size_t r = 0; r < dim; ++r)
          if (std::abs(block.columns(r, l)) > std::abs(block.columns(pivot, l)))
            pivot = r;
        for (Candidate& cand : it->second) {
          if (cand.used) continue;
          const cplx refpivot = block.columns(pivot, l);
          if (std::abs(refpivot) < tol) continue;
          const cplx phase = cand.values[pivot] / refpivot;
          if (std::abs(std::abs(phase) - 1.0) > tol) continue;
          double dev = 0.0;
          for (std::size_t r = 0; r < dim; ++r)
            dev = std::max(dev, std::abs(cand.values[r] - phase * block.columns(r, l)));
          if (dev <= tol) {
            cand.used = true;
            report.matches.push_back({block.gamma, static_cast<int>(l) + 1,
                                      cand.column, phase});
            found = true;
            break;
          }
        }
      }
      if (!found) {
        report.ok = false;
        report.notes.push_back("no computed column of gamma " +
                               std::to_string(block.gamma) +
                               " matches reference column " + std::to_string(l + 1));
      }
    }
  }
  return report;
}

}  // namespace groupcg

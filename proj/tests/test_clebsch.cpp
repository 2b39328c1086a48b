#include <cmath>

#include "doctest.h"
#include "groupcg/clebsch.hpp"
#include "groupcg/error.hpp"
#include "groupcg/refdata.hpp"

using namespace groupcg;

namespace {

struct Context {
  std::vector<Representation> irreps;
  CharacterTable table;
};

Context make_context(BuiltinGroup b) {
  Context ctx;
  ctx.irreps = builtin_irreps(b);
  ctx.table = character_table_from_irreps(ctx.irreps);
  return ctx;
}

const Representation& by_label(const std::vector<Representation>& irreps, int label) {
  for (const Representation& r : irreps)
    if (r.label == label) return r;
  throw std::logic_error("missing label");
}

}  // namespace

TEST_CASE("Mercer matrix for Q8 5x5 against the trivial irrep") {
  const Context q8 = make_context(BuiltinGroup::Q8);
  const MercerMatrix mm =
      assemble_mercer(by_label(q8.irreps, 5), by_label(q8.irreps, 5),
                      by_label(q8.irreps, 1));
  CHECK(mm.m.rows() == 4);
  CHECK(max_abs_diff(mm.m, mm.m.adjoint()) <= 1e-10);
  const EigResult eig = hermitian_eig(mm.m);
  int rank = 0;
  for (double v : eig.values) {
    CHECK(v >= -1e-8);
    if (v > 1e-8) ++rank;
  }
  CHECK(rank == 1);
}

TEST_CASE("Mercer matrix vanishes when the multiplicity is zero") {
  const Context q8 = make_context(BuiltinGroup::Q8);
  const MercerMatrix mm =
      assemble_mercer(by_label(q8.irreps, 5), by_label(q8.irreps, 5),
                      by_label(q8.irreps, 5));
  CHECK(mm.m.rows() == 8);
  CHECK(mm.m.max_abs() < 1e-12);
  CHECK(cg_block(mm, by_label(q8.irreps, 5), by_label(q8.irreps, 5),
                 by_label(q8.irreps, 5), 0)
            .empty());
}

TEST_CASE("Mercer matrix of three trivial irreps is [1]") {
  const Context q8 = make_context(BuiltinGroup::Q8);
  const Representation& one = by_label(q8.irreps, 1);
  const MercerMatrix mm = assemble_mercer(one, one, one);
  CHECK(mm.m.rows() == 1);
  CHECK(std::abs(mm.m(0, 0) - cplx(1)) < 1e-12);
}

TEST_CASE("assemble_mercer rejects mixed groups") {
  const Context q8 = make_context(BuiltinGroup::Q8);
  const Context q16 = make_context(BuiltinGroup::Q16);
  CHECK_THROWS_WITH_AS(assemble_mercer(by_label(q8.irreps, 5), by_label(q16.irreps, 5),
                                       by_label(q8.irreps, 1)),
                       doctest::Contains("GroupMismatch"), Error);
}

TEST_CASE("cg_block extracts the published trivial-irrep columns") {
  const double s = 1.0 / std::sqrt(2.0);

  const Context q8 = make_context(BuiltinGroup::Q8);
  {
    const auto blocks = cg_block(
        assemble_mercer(by_label(q8.irreps, 5), by_label(q8.irreps, 5),
                        by_label(q8.irreps, 1)),
        by_label(q8.irreps, 5), by_label(q8.irreps, 5), by_label(q8.irreps, 1), 1);
    REQUIRE(blocks.size() == 1);
    // phase convention: first usable row real positive -> (0, s, -s, 0)
    const CMatrix& col = blocks[0].columns;
    CHECK(std::abs(col(0, 0)) < 1e-10);
    CHECK(std::abs(col(1, 0) - cplx(s)) < 1e-10);
    CHECK(std::abs(col(2, 0) + cplx(s)) < 1e-10);
    CHECK(std::abs(col(3, 0)) < 1e-10);
  }

  const Context q16 = make_context(BuiltinGroup::Q16);
  {
    const auto blocks = cg_block(
        assemble_mercer(by_label(q16.irreps, 5), by_label(q16.irreps, 5),
                        by_label(q16.irreps, 1)),
        by_label(q16.irreps, 5), by_label(q16.irreps, 5), by_label(q16.irreps, 1), 1);
    REQUIRE(blocks.size() == 1);
    const CMatrix& col = blocks[0].columns;
    CHECK(std::abs(col(0, 0) - cplx(s)) < 1e-10);
    CHECK(std::abs(col(1, 0)) < 1e-10);
    CHECK(std::abs(col(2, 0)) < 1e-10);
    CHECK(std::abs(col(3, 0) - cplx(s)) < 1e-10);
  }
}

TEST_CASE("cg_block checks the expected rank") {
  const Context q8 = make_context(BuiltinGroup::Q8);
  CHECK_THROWS_WITH_AS(
      cg_block(assemble_mercer(by_label(q8.irreps, 5), by_label(q8.irreps, 5),
                               by_label(q8.irreps, 1)),
               by_label(q8.irreps, 5), by_label(q8.irreps, 5), by_label(q8.irreps, 1),
               2),
      doctest::Contains("RankMismatch"), Error);
}

TEST_CASE("cg_matrix for Q8 5x5 matches the published table up to +-1 phases") {
  const Context q8 = make_context(BuiltinGroup::Q8);
  const CGMatrix cg = cg_matrix(by_label(q8.irreps, 5), by_label(q8.irreps, 5),
                                q8.irreps, q8.table);
  CHECK(cg.unitary_defect <= 1e-10);
  CHECK(cg.residual <= 1e-8);
  REQUIRE(cg.blocks.size() == 4);
  for (std::size_t i = 0; i < 4; ++i) CHECK(cg.blocks[i].gamma == static_cast<int>(i + 1));

  for (const refdata::ReferenceCG& ref : refdata::cg_references()) {
    if (ref.group != BuiltinGroup::Q8) continue;
    const CompareReport report = compare_up_to_phase(cg, ref.blocks);
    CHECK(report.ok);
    for (const ColumnMatch& m : report.matches) {
      CHECK(std::abs(m.phase.imag()) < 1e-8);
      CHECK(std::abs(std::abs(m.phase.real()) - 1.0) < 1e-8);
    }
  }
}

TEST_CASE("cg_matrix block labels for Q32 8x9") {
  const Context q32 = make_context(BuiltinGroup::Q32);
  const CGMatrix cg = cg_matrix(by_label(q32.irreps, 8), by_label(q32.irreps, 9),
                                q32.irreps, q32.table);
  REQUIRE(cg.blocks.size() == 3);
  CHECK(cg.blocks[0].gamma == 2);
  CHECK(cg.blocks[1].gamma == 3);
  CHECK(cg.blocks[2].gamma == 7);
  CHECK(cg.blocks[2].columns.cols() == 2);
}

TEST_CASE("32.42 17x17 has all entries in {0, +-1/2} after the phase convention") {
  const Context g42 = make_context(BuiltinGroup::G32_42);
  const CGMatrix cg = cg_matrix(by_label(g42.irreps, 17), by_label(g42.irreps, 17),
                                g42.irreps, g42.table);
  CHECK(cg.assembled.rows() == 16);
  int halves = 0;
  for (std::size_t i = 0; i < 16; ++i)
    for (std::size_t j = 0; j < 16; ++j) {
      const double a = std::abs(cg.assembled(i, j));
      const bool zero = a < 1e-10;
      const bool half = std::abs(a - 0.5) < 1e-10;
      CHECK((zero || half));
      halves += half;
    }
  CHECK(halves == 64);  // four nonzero entries per column
}

TEST_CASE("verify_block_diag flags the identity as no CG matrix") {
  const Context q8 = make_context(BuiltinGroup::Q8);
  CGMatrix fake;
  fake.alpha = 5;
  fake.beta = 5;
  fake.na = 2;
  fake.nb = 2;
  fake.assembled = CMatrix::identity(4);
  for (int g = 1; g <= 4; ++g) {
    CGBlock b;
    b.gamma = g;
    b.columns = CMatrix(4, 1);
    b.columns(g - 1, 0) = 1.0;
    fake.blocks.push_back(std::move(b));
  }
  const double residual = verify_block_diag(fake, by_label(q8.irreps, 5),
                                            by_label(q8.irreps, 5), q8.irreps);
  CHECK(residual >= 1.0);
}

TEST_CASE("one-dimensional products have CG matrix [1] and residual 0") {
  const Context q8 = make_context(BuiltinGroup::Q8);
  const CGMatrix cg = cg_matrix(by_label(q8.irreps, 2), by_label(q8.irreps, 3),
                                q8.irreps, q8.table);
  REQUIRE(cg.blocks.size() == 1);
  CHECK(cg.blocks[0].gamma == 4);
  CHECK(std::abs(cg.assembled(0, 0) - cplx(1)) < 1e-12);
  CHECK(cg.residual <= 1e-12);
}

TEST_CASE("compare_up_to_phase against itself gives unit phases") {
  const Context q16 = make_context(BuiltinGroup::Q16);
  const CGMatrix cg = cg_matrix(by_label(q16.irreps, 6), by_label(q16.irreps, 7),
                                q16.irreps, q16.table);
  const CompareReport report = compare_up_to_phase(cg, cg.blocks);
  CHECK(report.ok);
  for (const ColumnMatch& m : report.matches) CHECK(std::abs(m.phase - cplx(1)) < 1e-12);
}

TEST_CASE("compare_up_to_phase rejects shape mismatches") {
  const Context q8 = make_context(BuiltinGroup::Q8);
  const CGMatrix cg = cg_matrix(by_label(q8.irreps, 5), by_label(q8.irreps, 5),
                                q8.irreps, q8.table);
  std::vector<CGBlock> wrong;
  CGBlock b;
  b.gamma = 1;
  b.columns = CMatrix(3, 1);
  wrong.push_back(b);
  CHECK_THROWS_WITH_AS(compare_up_to_phase(cg, wrong),
                       doctest::Contains("ShapeMismatch"), Error);
}

TEST_CASE("conjugate pairing: Q16 5x7 equals the conjugate of 5x6 columnwise") {
  const Context q16 = make_context(BuiltinGroup::Q16);
  const CGMatrix cg56 = cg_matrix(by_label(q16.irreps, 5), by_label(q16.irreps, 6),
                                  q16.irreps, q16.table);
  const CGMatrix cg57 = cg_matrix(by_label(q16.irreps, 5), by_label(q16.irreps, 7),
                                  q16.irreps, q16.table);
  std::vector<CGBlock> conj = cg56.blocks;
  for (CGBlock& b : conj) b.columns = b.columns.conjugate();
  CHECK(compare_up_to_phase(cg57, conj).ok);
}

TEST_CASE("phase canonicalization is idempotent") {
  const Context q32 = make_context(BuiltinGroup::Q32);
  const Tolerances tol;
  for (int alpha : {5, 8}) {
    const CGMatrix cg = cg_matrix(by_label(q32.irreps, alpha), by_label(q32.irreps, 10),
                                  q32.irreps, q32.table);
    for (const CGBlock& b : cg.blocks) {
      // first usable entry of column 1 already real positive
      for (std::size_t r = 0; r < b.columns.rows(); ++r) {
        const cplx z = b.columns(r, 0);
        if (std::abs(z) > tol.eq_tol) {
          CHECK(z.imag() == doctest::Approx(0.0).epsilon(1e-12));
          CHECK(z.real() > 0.0);
          break;
        }
      }
      // unit columns
      for (std::size_t c = 0; c < b.columns.cols(); ++c) {
        double norm = 0;
        for (std::size_t r = 0; r < b.columns.rows(); ++r)
          norm += std::norm(b.columns(r, c));
        CHECK(std::sqrt(norm) == doctest::Approx(1.0).epsilon(1e-10));
      }
    }
  }
}

#include <cmath>
#include <set>

#include "doctest.h"
#include "groupcg/error.hpp"
#include "groupcg/refdata.hpp"
#include "groupcg/reptheory.hpp"

using namespace groupcg;

namespace {

const Representation& by_label(const std::vector<Representation>& irreps, int label) {
  for (const Representation& r : irreps)
    if (r.label == label) return r;
  throw std::logic_error("missing label");
}

Representation kron_representation(const Representation& a, const Representation& b) {
  Representation out;
  out.group = a.group;
  out.label = 0;
  out.dim = a.dim * b.dim;
  out.mats.resize(a.mats.size());
  for (std::size_t e = 1; e < a.mats.size(); ++e) out.mats[e] = kron(a.mats[e], b.mats[e]);
  return out;
}

}  // namespace

TEST_CASE("builtin irrep lists are complete and valid") {
  const std::size_t counts[] = {5, 7, 11, 17};
  int idx = 0;
  for (BuiltinGroup b : kAllBuiltins) {
    const auto irreps = builtin_irreps(b);
    CHECK(irreps.size() == counts[idx++]);
    int dim2 = 0;
    for (const Representation& r : irreps) {
      check_representation(r);  // throws on failure
      dim2 += r.dim * r.dim;
    }
    CHECK(dim2 == static_cast<int>(irreps.front().group->order));
  }
}

TEST_CASE("published irrep matrix entries") {
  const cplx i{0, 1};

  const auto q8 = builtin_irreps(BuiltinGroup::Q8);
  const CMatrix& r5g3 = by_label(q8, 5).at(3);
  CHECK(std::abs(r5g3(0, 0) - i) < 1e-15);
  CHECK(std::abs(r5g3(1, 1) + i) < 1e-15);
  CHECK(std::abs(r5g3(0, 1)) + std::abs(r5g3(1, 0)) < 1e-15);

  const auto q16 = builtin_irreps(BuiltinGroup::Q16);
  const CMatrix& r6g9 = by_label(q16, 6).at(9);
  CHECK(std::abs(r6g9(0, 1) - std::polar(1.0, 2 * 3.14159265358979323846 * 3 / 8)) <
        1e-12);
  CHECK(std::abs(r6g9(1, 0) - std::polar(1.0, 2 * 3.14159265358979323846 / 8)) <
        1e-12);
  CHECK(std::abs(r6g9(0, 0)) + std::abs(r6g9(1, 1)) < 1e-15);

  const auto g42 = builtin_irreps(BuiltinGroup::G32_42);
  CHECK(max_abs_diff(by_label(g42, 17).at(2), -CMatrix::identity(4)) < 1e-15);
}

TEST_CASE("completion rejects inconsistent seed data") {
  auto group = std::make_shared<const Group>(builtin(BuiltinGroup::Q8));
  auto seeds_list = refdata::irrep_seeds(BuiltinGroup::Q8);
  std::map<int, CMatrix> seeds = seeds_list.back().at;  // the 2-dim irrep
  seeds.at(3) = -seeds.at(3);
  CHECK_THROWS_WITH_AS(complete_representation(group, 5, 2, seeds),
                       doctest::Contains("ClosureFailure"), Error);
}

TEST_CASE("characters of the published irreps") {
  const auto q8 = builtin_irreps(BuiltinGroup::Q8);
  const ClassPartition classes = conjugacy_classes(*q8.front().group);
  const std::vector<cplx> chi5 = character(by_label(q8, 5), classes);
  const std::vector<cplx> want = {2, -2, 0, 0, 0};
  REQUIRE(chi5.size() == 5);
  for (int c = 0; c < 5; ++c) CHECK(std::abs(chi5[c] - want[c]) < 1e-12);

  for (const cplx& z : character(by_label(q8, 1), classes))
    CHECK(std::abs(z - cplx(1)) < 1e-15);

  const auto g42 = builtin_irreps(BuiltinGroup::G32_42);
  const ClassPartition classes42 = conjugacy_classes(*g42.front().group);
  const std::vector<cplx> chi17 = character(by_label(g42, 17), classes42);
  CHECK(std::abs(chi17[0] - cplx(4)) < 1e-12);
  CHECK(std::abs(chi17[1] + cplx(4)) < 1e-12);
  for (std::size_t c = 2; c < chi17.size(); ++c) CHECK(std::abs(chi17[c]) < 1e-12);
}

TEST_CASE("character rejects non class functions") {
  auto q8 = builtin_irreps(BuiltinGroup::Q8);
  Representation r5 = by_label(q8, 5);
  const ClassPartition classes = conjugacy_classes(*r5.group);
  r5.mats[4] = CMatrix::identity(2);  // g4 shares a class with g3
  CHECK_THROWS_WITH_AS(character(r5, classes),
                       doctest::Contains("NotClassFunction"), Error);
}

TEST_CASE("irreducibility criterion") {
  for (BuiltinGroup b : kAllBuiltins) {
    const auto irreps = builtin_irreps(b);
    const ClassPartition classes = conjugacy_classes(*irreps.front().group);
    for (const Representation& r : irreps) CHECK(verify_irreducible(r, classes));
  }

  const auto q8 = builtin_irreps(BuiltinGroup::Q8);
  const ClassPartition classes = conjugacy_classes(*q8.front().group);
  const Representation product = kron_representation(by_label(q8, 5), by_label(q8, 5));
  CHECK_FALSE(verify_irreducible(product, classes));
  // norm^2 of the product character is 4
  const std::vector<cplx> chi = character(product, classes);
  double norm2 = 0;
  for (std::size_t c = 0; c < classes.count(); ++c)
    norm2 += classes.classes[c].size() * std::norm(chi[c]);
  CHECK(norm2 / 8.0 == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("Q8 class algebra: C3 * C3 = 2 C1 + 2 C2") {
  const Group q8 = builtin(BuiltinGroup::Q8);
  std::map<int, int> count;
  for (int u : {3, 4})
    for (int v : {3, 4}) ++count[q8.mul(u, v)];
  CHECK(count == std::map<int, int>{{1, 2}, {2, 2}});
}

TEST_CASE("class-algebra character tables match the published characters") {
  for (BuiltinGroup b : kAllBuiltins) {
    const auto irreps = builtin_irreps(b);
    const CharacterTable from_irreps = character_table_from_irreps(irreps);
    const CharacterTable dixon = character_table_dixon(*irreps.front().group);
    CHECK(tables_match_up_to_row_permutation(dixon, from_irreps, 1e-8));
    CHECK(dixon.irrep_count() == dixon.classes.count());

    int dim2 = 0;
    for (int d : dixon.dims) dim2 += d * d;
    CHECK(dim2 == static_cast<int>(dixon.group->order));

    // row and column orthogonality
    const double n = static_cast<double>(dixon.group->order);
    const std::size_t k = dixon.irrep_count();
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t bb = 0; bb < k; ++bb) {
        cplx sum = 0;
        for (std::size_t c = 0; c < k; ++c)
          sum += double(dixon.classes.classes[c].size()) * dixon.chi[a][c] *
                 std::conj(dixon.chi[bb][c]);
        CHECK(std::abs(sum - (a == bb ? cplx(n) : cplx(0))) < 1e-8 * n);
      }
    for (std::size_t c = 0; c < k; ++c)
      for (std::size_t c2 = 0; c2 < k; ++c2) {
        cplx sum = 0;
        for (std::size_t a = 0; a < k; ++a)
          sum += dixon.chi[a][c] * std::conj(dixon.chi[a][c2]);
        const cplx want =
            c == c2 ? cplx(n / double(dixon.classes.classes[c].size())) : cplx(0);
        CHECK(std::abs(sum - want) < 1e-8 * n);
      }
  }
}

TEST_CASE("dixon output is deterministic and seed-independent up to row order") {
  const Group q16 = builtin(BuiltinGroup::Q16);
  const CharacterTable a = character_table_dixon(q16, 42);
  const CharacterTable b = character_table_dixon(q16, 42);
  REQUIRE(a.irrep_count() == b.irrep_count());
  for (std::size_t r = 0; r < a.irrep_count(); ++r)
    for (std::size_t c = 0; c < a.classes.count(); ++c)
      CHECK(a.chi[r][c] == b.chi[r][c]);

  const CharacterTable other = character_table_dixon(q16, 7);
  CHECK(tables_match_up_to_row_permutation(a, other, 1e-8));
  CHECK(a.dims == std::vector<int>{1, 1, 1, 1, 2, 2, 2});
}

TEST_CASE("decompose reproduces the published multiplicities") {
  const auto q8 = builtin_irreps(BuiltinGroup::Q8);
  const CharacterTable t8 = character_table_from_irreps(q8);
  CHECK(decompose(5, 5, t8).m == std::vector<int>{1, 1, 1, 1, 0});
  for (int alpha = 1; alpha <= 5; ++alpha) {
    std::vector<int> want(5, 0);
    want[t8.row_of_label(alpha)] = 1;
    CHECK(decompose(1, alpha, t8).m == want);
  }

  const auto q32 = builtin_irreps(BuiltinGroup::Q32);
  const CharacterTable t32 = character_table_from_irreps(q32);
  const Decomposition d = decompose(8, 10, t32);
  std::vector<int> want(11, 0);
  want[t32.row_of_label(5)] = 1;
  want[t32.row_of_label(7)] = 1;
  CHECK(d.m == want);

  // symmetry over every pair
  for (int a = 1; a <= 11; ++a)
    for (int b = a; b <= 11; ++b)
      CHECK(decompose(a, b, t32).m == decompose(b, a, t32).m);
}

TEST_CASE("simple reducibility") {
  for (BuiltinGroup b : kAllBuiltins)
    CHECK(is_simply_reducible(character_table_from_irreps(builtin_irreps(b))));

  const Group c2 = parse_cayley(std::string_view("2\n1 2\n2 1\n"));
  const Group klein = direct_product(c2, c2);
  CHECK(is_simply_reducible(character_table_dixon(klein)));
}

TEST_CASE("row_of_label rejects unknown labels") {
  const CharacterTable t = character_table_from_irreps(builtin_irreps(BuiltinGroup::Q8));
  CHECK_THROWS_WITH_AS(decompose(1, 9, t), doctest::Contains("UnknownIrrep"), Error);
}

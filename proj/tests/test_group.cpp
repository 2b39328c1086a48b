#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "doctest.h"
#include "groupcg/error.hpp"
#include "groupcg/group.hpp"
#include "groupcg/refdata.hpp"

using namespace groupcg;

namespace {

Group from_rows(const std::vector<std::vector<int>>& rows) {
  Group g;
  g.order = rows.size();
  g.table = rows;
  for (std::size_t j = 1; j <= g.order; ++j) g.labels.push_back("g" + std::to_string(j));
  return g;
}

// order-5 loop with identity and two-sided inverses that is not associative
const std::vector<std::vector<int>> kNonAssociativeLoop = {{1, 2, 3, 4, 5},
                                                           {2, 1, 4, 5, 3},
                                                           {3, 5, 1, 2, 4},
                                                           {4, 3, 5, 1, 2},
                                                           {5, 4, 2, 3, 1}};

Group symmetric_group_3() {
  // permutations of {0,1,2}: identity first, transpositions, 3-cycles
  const std::vector<std::array<int, 3>> perms = {{0, 1, 2}, {1, 0, 2}, {2, 1, 0},
                                                 {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
  auto index_of = [&perms](const std::array<int, 3>& p) {
    for (std::size_t i = 0; i < perms.size(); ++i)
      if (perms[i] == p) return static_cast<int>(i) + 1;
    return 0;
  };
  std::vector<std::vector<int>> rows(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      std::array<int, 3> comp{};
      for (int x = 0; x < 3; ++x) comp[x] = perms[a][perms[b][x]];
      rows[a][b] = index_of(comp);
    }
  return from_rows(rows);
}

}  // namespace

TEST_CASE("parse_cayley reads the published Q8 table") {
  const Group g = parse_cayley(refdata::reference_text("q8.cayley"));
  CHECK(g.order == 8);
  CHECK(g.mul(3, 5) == 8);
  CHECK(g.label(3) == "i");
}

TEST_CASE("parse_cayley accepts the trivial group") {
  const Group g = parse_cayley(std::string_view("1\n1\n"));
  CHECK(g.order == 1);
  CHECK(g.labels == std::vector<std::string>{"g1"});
}

TEST_CASE("parse_cayley reports syntax errors") {
  CHECK_THROWS_WITH_AS(parse_cayley(std::string_view("2\n1 2\n2 x\n")),
                       doctest::Contains("SyntaxError"), Error);
  CHECK_THROWS_WITH_AS(parse_cayley(std::string_view("2\n1 2\n2\n")),
                       doctest::Contains("SyntaxError"), Error);
  CHECK_THROWS_WITH_AS(parse_cayley(std::string_view("")),
                       doctest::Contains("SyntaxError"), Error);
}

TEST_CASE("parse_cayley rejects an altered Q8 table with the violated axiom") {
  std::string text{refdata::reference_text("q8.cayley")};
  Group good = parse_cayley(text);
  good.table[2][4] = 7;  // Table II entry [3][5]: 8 -> 7
  std::ostringstream broken;
  broken << good.order << "\n";
  for (const auto& row : good.table) {
    for (std::size_t k = 0; k < row.size(); ++k) broken << row[k] << " ";
    broken << "\n";
  }
  try {
    parse_cayley(std::string_view(broken.str()));
    FAIL("expected AxiomError");
  } catch (const Error& e) {
    CHECK(e.name() == "AxiomError");
    CHECK(std::string(e.what()).find("latin-square") != std::string::npos);
  }
}

TEST_CASE("validate passes every built-in group") {
  for (BuiltinGroup b : kAllBuiltins) CHECK(validate(builtin(b)).ok);
}

TEST_CASE("validate finds duplicated rows") {
  Group g = from_rows({{1, 2}, {1, 2}});
  const ValidationReport r = validate(g);
  CHECK_FALSE(r.ok);
  CHECK(r.axiom == "latin-square");
}

TEST_CASE("validate reports an associativity witness on a non-associative loop") {
  const ValidationReport r = validate(from_rows(kNonAssociativeLoop));
  CHECK_FALSE(r.ok);
  CHECK(r.axiom == "associativity");
  CHECK(r.witness.find("2") != std::string::npos);
}

TEST_CASE("element orders") {
  const Group q8 = builtin(BuiltinGroup::Q8);
  std::vector<int> orders;
  for (int j = 1; j <= 8; ++j) orders.push_back(element_order(q8, j));
  CHECK(orders == std::vector<int>{1, 2, 4, 4, 4, 4, 4, 4});

  const Group q16 = builtin(BuiltinGroup::Q16);
  CHECK(element_order(q16, 13) == 8);
}

TEST_CASE("conjugacy classes match the published lists") {
  for (BuiltinGroup b : kAllBuiltins) {
    const Group g = builtin(b);
    const ClassPartition p = conjugacy_classes(g);
    CHECK(p.classes == refdata::expected_classes(b));

    std::size_t total = 0;
    for (const auto& cls : p.classes) {
      total += cls.size();
      CHECK(g.order % cls.size() == 0);
      // class elements share their order; conjugation closure
      const int ord = element_order(g, cls.front());
      std::set<int> members(cls.begin(), cls.end());
      for (int x : cls) {
        CHECK(element_order(g, x) == ord);
        for (int h = 1; h <= static_cast<int>(g.order); ++h)
          CHECK(members.count(g.mul(g.mul(h, x), g.inverse(h))));
      }
    }
    CHECK(total == g.order);
  }
}

TEST_CASE("builtin spot values") {
  CHECK(builtin(BuiltinGroup::Q8).mul(3, 5) == 8);
  CHECK(builtin(BuiltinGroup::Q32).mul(17, 17) == 2);
  CHECK(builtin(BuiltinGroup::G32_42).mul(17, 17) == 1);
  CHECK_THROWS_WITH_AS(builtin("Q64"), doctest::Contains("UnknownGroup"), Error);
}

TEST_CASE("Q8 satisfies the hypercomplex relations in the table's orientation") {
  const Group q8 = builtin(BuiltinGroup::Q8);
  CHECK(q8.mul(2, 2) == 1);                              // (-1)^2 = 1
  for (int x : {3, 5, 7}) CHECK(q8.mul(x, x) == 2);      // i^2 = j^2 = k^2 = -1
  // the printed table pairs i,j to k with the roles of the factors swapped
  CHECK(q8.mul(5, 3) == 7);
  CHECK(q8.mul(3, 5) == 8);
}

TEST_CASE("direct_product basics") {
  const Group trivial = parse_cayley(std::string_view("1\n1\n"));
  const Group q8 = builtin(BuiltinGroup::Q8);
  CHECK(direct_product(trivial, q8).table == q8.table);

  const Group p = direct_product(q8, q8);
  CHECK(p.order == 64);
  CHECK(validate(p).ok);
  for (int x = 1; x <= 8; ++x)
    for (int y = 1; y <= 8; ++y) {
      const int ox = element_order(q8, x), oy = element_order(q8, y);
      CHECK(element_order(p, (x - 1) * 8 + y) == std::lcm(ox, oy));
    }
}

TEST_CASE("central_quotient of Q8 by the center") {
  const Group q8 = builtin(BuiltinGroup::Q8);
  const Group v4 = central_quotient(q8, {1, 2});
  CHECK(v4.order == 4);
  CHECK(validate(v4).ok);
  for (int a = 2; a <= 4; ++a) CHECK(v4.mul(a, a) == 1);
}

TEST_CASE("central_quotient by the trivial subgroup copies the group") {
  const Group q8 = builtin(BuiltinGroup::Q8);
  CHECK(central_quotient(q8, {1}).table == q8.table);
}

TEST_CASE("central_quotient rejects bad kernels") {
  const Group q8 = builtin(BuiltinGroup::Q8);
  CHECK_THROWS_WITH_AS(central_quotient(q8, {1, 3}),
                       doctest::Contains("NotASubgroup"), Error);
  const Group s3 = symmetric_group_3();
  REQUIRE(validate(s3).ok);
  // {identity, one transposition} is a subgroup but not normal
  CHECK_THROWS_WITH_AS(central_quotient(s3, {1, 2}),
                       doctest::Contains("NotNormal"), Error);
}

TEST_CASE("quotient construction reaches the published 32.42 table") {
  const Group q8 = builtin(BuiltinGroup::Q8);
  const Group quotient = central_quotient(direct_product(q8, q8), {1, 10});
  const Group& published = refdata::reference_group(BuiltinGroup::G32_42);
  CHECK(tables_equal_under(quotient, published,
                           refdata::renumber_quotient_to_g32_42()));
}

TEST_CASE("the frozen relabeling is regenerated by the search") {
  const Group q8 = builtin(BuiltinGroup::Q8);
  const Group quotient = central_quotient(direct_product(q8, q8), {1, 10});
  const auto found =
      search_isomorphism(quotient, refdata::reference_group(BuiltinGroup::G32_42));
  REQUIRE(found.has_value());
  CHECK(*found == refdata::renumber_quotient_to_g32_42());
}

TEST_CASE("cayley_graph_dot for Q8 with generators 5 and 3") {
  const Group q8 = builtin(BuiltinGroup::Q8);
  const std::string dot = cayley_graph_dot(q8, {5, 3}, {"blue", "red"});
  std::size_t nodes = 0, edges = 0, blue = 0, red = 0;
  std::istringstream in(dot);
  std::string line;
  while (std::getline(in, line)) {
    if (line.find("label=") != std::string::npos) ++nodes;
    if (line.find("->") != std::string::npos) ++edges;
    if (line.find("color=blue") != std::string::npos) ++blue;
    if (line.find("color=red") != std::string::npos) ++red;
  }
  CHECK(nodes == 8);
  CHECK(edges == 16);
  CHECK(blue == 8);
  CHECK(red == 8);
  CHECK(dot.find("dir=none") == std::string::npos);  // generators of order 4

  // strongly connected: {g5, g3} generates Q8
  std::set<int> reached = {1};
  std::vector<int> frontier = {1};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int j : frontier)
      for (int s : {5, 3})
        if (reached.insert(q8.mul(j, s)).second) next.push_back(q8.mul(j, s));
    frontier = next;
  }
  CHECK(reached.size() == 8);
}

TEST_CASE("cayley_graph_dot degenerate and undirected cases") {
  const Group trivial = parse_cayley(std::string_view("1\n1\n"));
  const std::string dot = cayley_graph_dot(trivial, {}, {});
  CHECK(dot.find("label=") != std::string::npos);
  CHECK(dot.find("->") == std::string::npos);

  const Group g42 = builtin(BuiltinGroup::G32_42);
  const std::string dot42 =
      cayley_graph_dot(g42, {3, 5, 11, 17}, {"blue", "red", "green", "brown"});
  std::size_t nodes = 0, undirected = 0;
  std::istringstream in(dot42);
  std::string line;
  while (std::getline(in, line)) {
    if (line.find("label=") != std::string::npos) ++nodes;
    if (line.find("dir=none") != std::string::npos) ++undirected;
  }
  CHECK(nodes == 32);
  CHECK(undirected == 64);

  CHECK_THROWS_WITH_AS(cayley_graph_dot(g42, {3, 5}, {"blue"}),
                       doctest::Contains("ColorCountMismatch"), Error);
}

TEST_CASE("format_cayley round trip") {
  for (BuiltinGroup b : kAllBuiltins) {
    const Group g = builtin(b);
    const Group back = parse_cayley(std::string_view(format_cayley(g)));
    CHECK(back.table == g.table);
    CHECK(back.labels == g.labels);
  }
}

TEST_CASE("100 random single-entry perturbations are all rejected with witnesses") {
  std::mt19937 rng(2024);
  int done = 0;
  while (done < 100) {
    const BuiltinGroup which = kAllBuiltins[rng() % 4];
    Group g = builtin(which);
    const int n = static_cast<int>(g.order);
    const int r = static_cast<int>(rng() % n), c = static_cast<int>(rng() % n);
    const int wrong = 1 + static_cast<int>(rng() % n);
    if (g.table[r][c] == wrong) continue;
    g.table[r][c] = wrong;
    const ValidationReport report = validate(g);
    CHECK_FALSE(report.ok);
    CHECK_FALSE(report.axiom.empty());
    CHECK_FALSE(report.witness.empty());
    ++done;
  }
}

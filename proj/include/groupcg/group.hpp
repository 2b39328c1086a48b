#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace groupcg {

// Finite group given by its multiplication table. Element indices are
// 1-based everywhere; table[j-1][k-1] is the index l with g_j * g_k = g_l.
struct Group {
  std::size_t order = 0;
  std::vector<std::vector<int>> table;
  std::vector<std::string> labels;

  int mul(int a, int b) const { return table[a - 1][b - 1]; }
  int inverse(int a) const;
  const std::string& label(int j) const { return labels[j - 1]; }
};

struct ValidationReport {
  bool ok = true;
  std::string axiom;    // empty when ok
  std::string witness;  // offending indices, human readable
  std::string message() const;
};

// Checks shape, Latin-square rows/columns, identity, inverses and (last,
// exhaustively) associativity. Returns the first violation; never throws.
ValidationReport validate(const Group& g);

// Text format: optional '#' comment lines, then n, then n rows of n indices,
// then an optional row of labels. Throws SyntaxError / AxiomError.
Group parse_cayley(std::istream& in);
Group parse_cayley(std::string_view text);
std::string format_cayley(const Group& g, std::string_view comment = {});

int element_order(const Group& g, int j);

struct ClassPartition {
  std::vector<std::vector<int>> classes;  // each sorted; ordered by minimum
  std::vector<int> class_of;              // element (1-based) -> class (1-based)
  std::size_t count() const { return classes.size(); }
};

ClassPartition conjugacy_classes(const Group& g);

enum class BuiltinGroup { Q8, Q16, Q32, G32_42 };

constexpr BuiltinGroup kAllBuiltins[] = {BuiltinGroup::Q8, BuiltinGroup::Q16,
                                         BuiltinGroup::Q32, BuiltinGroup::G32_42};

std::string_view builtin_name(BuiltinGroup name);
std::optional<BuiltinGroup> builtin_from_name(std::string_view name);

// Exact reproductions of the published tables. Q8/Q16/Q32 are generated from
// the generalized-quaternion presentation, 32.42 as a central quotient of
// Q8 x Q8; each result is checked entrywise against the embedded reference.
Group builtin(BuiltinGroup name);
Group builtin(std::string_view name);  // throws UnknownGroup

// Index of (x, y) is (x-1)*|b| + y; componentwise multiplication.
Group direct_product(const Group& a, const Group& b);

// Quotient by a normal subgroup; cosets ordered by minimal element, coset of
// the identity first. Throws NotASubgroup / NotNormal / IllDefined.
Group central_quotient(const Group& g, const std::vector<int>& kernel);

// Digraph in DOT syntax; one edge j -> table[j][s] per vertex and generator,
// colored per generator. Self-inverse generators become undirected edges.
std::string cayley_graph_dot(const Group& g, const std::vector<int>& generators,
                             const std::vector<std::string>& colors);

// Entrywise equality of b against a relabeled by perm (1-based, a -> b).
bool tables_equal_under(const Group& a, const Group& b,
                        const std::vector<int>& perm);

// Deterministic backtracking search for a relabeling making the tables equal.
std::optional<std::vector<int>> search_isomorphism(const Group& a, const Group& b);

}  // namespace groupcg

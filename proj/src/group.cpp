#include "groupcg/group.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "groupcg/error.hpp"
#include "groupcg/refdata.hpp"

namespace groupcg {

int Group::inverse(int a) const {
  for (int b = 1; b <= static_cast<int>(order); ++b)
    if (mul(a, b) == 1) return b;
  fail("AxiomError", "element " + std::to_string(a) + " has no inverse");
}

std::string ValidationReport::message() const {
  if (ok) return "all group axioms hold";
  return axiom + " violated (" + witness + ")";
}

ValidationReport validate(const Group& g) {
  const int n = static_cast<int>(g.order);
  auto failure = [](std::string axiom, std::string witness) {
    ValidationReport r;
    r.ok = false;
    r.axiom = std::move(axiom);
    r.witness = std::move(witness);
    return r;
  };

  if (n < 1) return failure("shape", "order must be at least 1");
  if (static_cast<int>(g.table.size()) != n)
    return failure("shape", "expected " + std::to_string(n) + " rows");
  for (int j = 0; j < n; ++j) {
    if (static_cast<int>(g.table[j].size()) != n)
      return failure("shape", "row " + std::to_string(j + 1) + " is ragged");
    for (int k = 0; k < n; ++k)
      if (g.table[j][k] < 1 || g.table[j][k] > n)
        return failure("shape", "entry [" + std::to_string(j + 1) + "][" +
                                    std::to_string(k + 1) + "] = " +
                                    std::to_string(g.table[j][k]) +
                                    " out of range");
  }
  if (!g.labels.empty() && static_cast<int>(g.labels.size()) != n)
    return failure("shape", "label count differs from order");

  std::vector<int> seen(n + 1);
  for (int j = 1; j <= n; ++j) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int k = 1; k <= n; ++k) {
      int l = g.mul(j, k);
      if (seen[l]++)
        return failure("latin-square", "value " + std::to_string(l) +
                                           " repeats in row " + std::to_string(j));
    }
  }
  for (int k = 1; k <= n; ++k) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int j = 1; j <= n; ++j) {
      int l = g.mul(j, k);
      if (seen[l]++)
        return failure("latin-square", "value " + std::to_string(l) +
                                           " repeats in column " + std::to_string(k));
    }
  }
  for (int k = 1; k <= n; ++k) {
    if (g.mul(1, k) != k)
      return failure("identity", "table[1][" + std::to_string(k) + "] = " +
                                     std::to_string(g.mul(1, k)));
    if (g.mul(k, 1) != k)
      return failure("identity", "table[" + std::to_string(k) + "][1] = " +
                                     std::to_string(g.mul(k, 1)));
  }
  for (int a = 1; a <= n; ++a) {
    bool two_sided = false;
    for (int b = 1; b <= n && !two_sided; ++b)
      two_sided = g.mul(a, b) == 1 && g.mul(b, a) == 1;
    if (!two_sided)
      return failure("inverse", "element " + std::to_string(a) +
                                    " lacks a two-sided inverse");
  }
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      for (int c = 1; c <= n; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
          return failure("associativity",
                         "(" + std::to_string(a) + "*" + std::to_string(b) +
                             ")*" + std::to_string(c) + " != " +
                             std::to_string(a) + "*(" + std::to_string(b) + "*" +
                             std::to_string(c) + ")");
  return {};
}

namespace {

std::vector<std::string> tokenize_data_lines(std::istream& in) {
  // returns one entry per non-comment, non-blank line
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    const auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos) continue;
    if (line[pos] == '#') continue;
    lines.push_back(line);
  }
  return lines;
}

}  // namespace

Group parse_cayley(std::istream& in) {
  auto lines = tokenize_data_lines(in);
  if (lines.empty()) fail("SyntaxError", "empty input");

  auto parse_int = [](const std::string& tok, const std::string& where) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      fail("SyntaxError", "non-integer token '" + tok + "' in " + where);
    }
    if (used != tok.size())
      fail("SyntaxError", "non-integer token '" + tok + "' in " + where);
    return v;
  };

  std::istringstream first(lines[0]);
  std::string tok;
  first >> tok;
  const int n = parse_int(tok, "header");
  if (n < 1) fail("SyntaxError", "order must be positive, got " + tok);
  std::string extra;
  if (first >> extra) fail("SyntaxError", "trailing token '" + extra + "' in header");
  if (static_cast<int>(lines.size()) < n + 1)
    fail("SyntaxError", "expected " + std::to_string(n) + " table rows, found " +
                            std::to_string(lines.size() - 1));

  Group g;
  g.order = static_cast<std::size_t>(n);
  g.table.resize(n);
  for (int j = 0; j < n; ++j) {
    std::istringstream row(lines[1 + j]);
    while (row >> tok)
      g.table[j].push_back(parse_int(tok, "row " + std::to_string(j + 1)));
    if (static_cast<int>(g.table[j].size()) != n)
      fail("SyntaxError", "row " + std::to_string(j + 1) + " has " +
                              std::to_string(g.table[j].size()) + " entries, expected " +
                              std::to_string(n));
  }
  if (static_cast<int>(lines.size()) > n + 1) {
    if (static_cast<int>(lines.size()) > n + 2)
      fail("SyntaxError", "unexpected content after the label row");
    std::istringstream row(lines[n + 1]);
    while (row >> tok) g.labels.push_back(tok);
    if (static_cast<int>(g.labels.size()) != n)
      fail("SyntaxError", "label row has " + std::to_string(g.labels.size()) +
                              " entries, expected " + std::to_string(n));
  } else {
    for (int j = 1; j <= n; ++j) g.labels.push_back("g" + std::to_string(j));
  }

  const ValidationReport report = validate(g);
  if (!report.ok) fail("AxiomError", report.message());
  return g;
}

Group parse_cayley(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_cayley(in);
}

std::string format_cayley(const Group& g, std::string_view comment) {
  std::ostringstream out;
  if (!comment.empty()) out << "# " << comment << "\n";
  out << g.order << "\n";
  for (std::size_t j = 0; j < g.order; ++j) {
    for (std::size_t k = 0; k < g.order; ++k)
      out << g.table[j][k] << (k + 1 < g.order ? " " : "");
    out << "\n";
  }
  if (!g.labels.empty()) {
    for (std::size_t j = 0; j < g.order; ++j)
      out << g.labels[j] << (j + 1 < g.order ? " " : "");
    out << "\n";
  }
  return out.str();
}

int element_order(const Group& g, int j) {
  if (j < 1 || j > static_cast<int>(g.order))
    fail("UnknownElement", "index " + std::to_string(j));
  int x = j, k = 1;
  while (x != 1) {
    x = g.mul(x, j);
    ++k;
  }
  return k;
}

ClassPartition conjugacy_classes(const Group& g) {
  const int n = static_cast<int>(g.order);
  std::vector<int> invs(n + 1);
  for (int a = 1; a <= n; ++a) invs[a] = g.inverse(a);

  ClassPartition p;
  p.class_of.assign(n + 1, 0);
  for (int x = 1; x <= n; ++x) {
    if (p.class_of[x]) continue;
    std::set<int> orbit;
    for (int h = 1; h <= n; ++h) orbit.insert(g.mul(g.mul(h, x), invs[h]));
    p.classes.emplace_back(orbit.begin(), orbit.end());
    for (int e : orbit) p.class_of[e] = static_cast<int>(p.classes.size());
  }
  // iteration order above already yields classes sorted by minimal element
  return p;
}

std::string_view builtin_name(BuiltinGroup name) {
  switch (name) {
    case BuiltinGroup::Q8: return "Q8";
    case BuiltinGroup::Q16: return "Q16";
    case BuiltinGroup::Q32: return "Q32";
    case BuiltinGroup::G32_42: return "G32_42";
  }
  fail("UnknownGroup", "invalid builtin id");
}

std::optional<BuiltinGroup> builtin_from_name(std::string_view name) {
  for (BuiltinGroup b : kAllBuiltins)
    if (name == builtin_name(b)) return b;
  return std::nullopt;
}

namespace {

// Dicyclic arithmetic: elements (k, t) stand for c^k (t = 0) or c^k j (t = 1)
// with c of order m, j^2 = c^(m/2), j c j^-1 = c^-1.
struct Dicyclic {
  int m;
  std::pair<int, int> mul(std::pair<int, int> x, std::pair<int, int> y) const {
    auto [k, s] = x;
    auto [l, u] = y;
    if (s == 0) return {(k + l) % m, u};
    if (u == 0) return {((k - l) % m + m) % m, 1};
    return {((k - l + m / 2) % m + m) % m, 0};
  }
};

Group generalized_quaternion(BuiltinGroup which) {
  const std::vector<std::pair<int, int>>& order = refdata::dicyclic_element_order(which);
  const int n = static_cast<int>(order.size());
  const Dicyclic dc{n / 2};
  std::map<std::pair<int, int>, int> index;
  for (int j = 0; j < n; ++j) index[order[j]] = j + 1;

  Group g;
  g.order = static_cast<std::size_t>(n);
  g.table.assign(n, std::vector<int>(n));
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      g.table[j][k] = index.at(dc.mul(order[j], order[k]));
  for (int j = 1; j <= n; ++j) g.labels.push_back("g" + std::to_string(j));
  if (which == BuiltinGroup::Q8)
    g.labels = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  return g;
}

}  // namespace

Group builtin(BuiltinGroup name) {
  Group g;
  if (name == BuiltinGroup::G32_42) {
    const Group q8 = builtin(BuiltinGroup::Q8);
    const Group product = direct_product(q8, q8);
    // kernel {(1,1), (2,2)} = {(1,1), (-1,-1)}
    const Group quotient = central_quotient(product, {1, 10});
    const std::vector<int>& perm = refdata::renumber_quotient_to_g32_42();
    const int n = 32;
    g.order = n;
    g.table.assign(n, std::vector<int>(n));
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b)
        g.table[perm[a - 1] - 1][perm[b - 1] - 1] = perm[quotient.mul(a, b) - 1];
    for (int j = 1; j <= n; ++j) g.labels.push_back("g" + std::to_string(j));
  } else {
    g = generalized_quaternion(name);
  }

  const Group& reference = refdata::reference_group(name);
  if (g.table != reference.table)
    fail("ClosureFailure", std::string("generated table for ") +
                               std::string(builtin_name(name)) +
                               " disagrees with the embedded reference");
  return g;
}

Group builtin(std::string_view name) {
  if (auto b = builtin_from_name(name)) return builtin(*b);
  fail("UnknownGroup", "'" + std::string(name) +
                           "' (expected Q8, Q16, Q32 or G32_42)");
}

Group direct_product(const Group& a, const Group& b) {
  const int na = static_cast<int>(a.order), nb = static_cast<int>(b.order);
  Group g;
  g.order = static_cast<std::size_t>(na) * nb;
  g.table.assign(g.order, std::vector<int>(g.order));
  auto idx = [nb](int x, int y) { return (x - 1) * nb + y; };
  for (int x1 = 1; x1 <= na; ++x1)
    for (int y1 = 1; y1 <= nb; ++y1)
      for (int x2 = 1; x2 <= na; ++x2)
        for (int y2 = 1; y2 <= nb; ++y2)
          g.table[idx(x1, y1) - 1][idx(x2, y2) - 1] =
              idx(a.mul(x1, x2), b.mul(y1, y2));
  for (int x = 1; x <= na; ++x)
    for (int y = 1; y <= nb; ++y)
      g.labels.push_back("(" + a.label(x) + "," + b.label(y) + ")");
  return g;
}

Group central_quotient(const Group& g, const std::vector<int>& kernel) {
  const int n = static_cast<int>(g.order);
  std::set<int> k(kernel.begin(), kernel.end());
  if (k.empty() || !k.count(1))
    fail("NotASubgroup", "kernel must contain the identity");
  for (int a : k) {
    if (a < 1 || a > n) fail("NotASubgroup", "element " + std::to_string(a) + " out of range");
    for (int b : k)
      if (!k.count(g.mul(a, b)))
        fail("NotASubgroup", std::to_string(a) + "*" + std::to_string(b) + " = " +
                                 std::to_string(g.mul(a, b)) + " escapes the kernel");
    if (!k.count(g.inverse(a)))
      fail("NotASubgroup", "inverse of " + std::to_string(a) + " escapes the kernel");
  }
  for (int h = 1; h <= n; ++h) {
    const int hinv = g.inverse(h);
    for (int a : k)
      if (!k.count(g.mul(g.mul(h, a), hinv)))
        fail("NotNormal", "conjugate of " + std::to_string(a) + " by " +
                              std::to_string(h) + " escapes the kernel");
  }

  // cosets ordered by minimal element; identity coset comes first
  std::vector<std::vector<int>> cosets;
  std::vector<int> coset_of(n + 1, 0);
  for (int a = 1; a <= n; ++a) {
    if (coset_of[a]) continue;
    std::set<int> cs;
    for (int x : k) cs.insert(g.mul(a, x));
    cosets.emplace_back(cs.begin(), cs.end());
    for (int e : cs) coset_of[e] = static_cast<int>(cosets.size());
  }

  const int q = static_cast<int>(cosets.size());
  Group out;
  out.order = static_cast<std::size_t>(q);
  out.table.assign(q, std::vector<int>(q));
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) {
      const int expected = coset_of[g.mul(cosets[a][0], cosets[b][0])];
      for (int x : cosets[a])
        for (int y : cosets[b])
          if (coset_of[g.mul(x, y)] != expected)
            fail("IllDefined", "products of coset " + std::to_string(a + 1) +
                                   " and coset " + std::to_string(b + 1) +
                                   " land in different cosets (witness " +
                                   std::to_string(x) + "*" + std::to_string(y) + ")");
      out.table[a][b] = expected;
    }
  for (int a = 0; a < q; ++a)
    out.labels.push_back("[" + g.label(cosets[a][0]) + "]");
  return out;
}

std::string cayley_graph_dot(const Group& g, const std::vector<int>& generators,
                             const std::vector<std::string>& colors) {
  if (colors.size() != generators.size())
    fail("ColorCountMismatch", std::to_string(generators.size()) +
                                   " generators vs " + std::to_string(colors.size()) +
                                   " colors");
  for (int s : generators)
    if (s < 1 || s > static_cast<int>(g.order))
      fail("UnknownElement", "generator index " + std::to_string(s));

  std::ostringstream out;
  out << "digraph cayley {\n";
  for (std::size_t j = 1; j <= g.order; ++j)
    out << "  n" << j << " [label=\"" << g.label(static_cast<int>(j)) << "\"];\n";
  for (std::size_t si = 0; si < generators.size(); ++si) {
    const int s = generators[si];
    const bool self_inverse = g.mul(s, s) == 1;
    for (int j = 1; j <= static_cast<int>(g.order); ++j) {
      const int l = g.mul(j, s);
      if (self_inverse && l < j) continue;  // one undirected edge per pair
      out << "  n" << j << " -> n" << l << " [color=" << colors[si];
      if (self_inverse) out << ", dir=none";
      out << "];\n";
    }
  }
  out << "}\n";
  return out.str();
}

bool tables_equal_under(const Group& a, const Group& b, const std::vector<int>& perm) {
  if (a.order != b.order || perm.size() != a.order) return false;
  const int n = static_cast<int>(a.order);
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y)
      if (b.mul(perm[x - 1], perm[y - 1]) != perm[a.mul(x, y) - 1]) return false;
  return true;
}

namespace {

bool extend_isomorphism(const Group& a, const Group& b,
                        const std::vector<int>& ord_a, const std::vector<int>& ord_b,
                        std::vector<int>& perm, std::vector<bool>& used) {
  const int n = static_cast<int>(a.order);
  int x = 0;
  for (int j = 1; j <= n; ++j)
    if (!perm[j - 1]) { x = j; break; }
  if (!x) return tables_equal_under(a, b, perm);
  for (int t = 1; t <= n; ++t) {
    if (used[t] || ord_a[x] != ord_b[t]) continue;
    perm[x - 1] = t;
    used[t] = true;
    bool ok = true;
    for (int u = 1; u <= n && ok; ++u) {
      if (!perm[u - 1]) continue;
      const int p = a.mul(x, u), q = b.mul(t, perm[u - 1]);
      ok = perm[p - 1] ? perm[p - 1] == q : !used[q];
      if (!ok) break;
      const int p2 = a.mul(u, x), q2 = b.mul(perm[u - 1], t);
      ok = perm[p2 - 1] ? perm[p2 - 1] == q2 : !used[q2];
    }
    if (ok && extend_isomorphism(a, b, ord_a, ord_b, perm, used)) return true;
    perm[x - 1] = 0;
    used[t] = false;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> search_isomorphism(const Group& a, const Group& b) {
  if (a.order != b.order) return std::nullopt;
  const int n = static_cast<int>(a.order);
  std::vector<int> ord_a(n + 1), ord_b(n + 1);
  for (int j = 1; j <= n; ++j) {
    ord_a[j] = element_order(a, j);
    ord_b[j] = element_order(b, j);
  }
  std::vector<int> perm(n, 0);
  std::vector<bool> used(n + 1, false);
  perm[0] = 1;
  used[1] = true;
  if (extend_isomorphism(a, b, ord_a, ord_b, perm, used)) return perm;
  return std::nullopt;
}

}  // namespace groupcg

#include "groupcg/reptheory.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "groupcg/error.hpp"
#include "groupcg/refdata.hpp"

namespace groupcg {

void check_representation(const Representation& r, const Tolerances& tol) {
  const Group& g = *r.group;
  const int n = static_cast<int>(g.order);
  if (static_cast<int>(r.mats.size()) != n + 1)
    fail("ClosureFailure", "representation R(" + std::to_string(r.label) +
                               ") does not cover every element");
  if (max_abs_diff(r.at(1), CMatrix::identity(r.dim)) > tol.eq_tol)
    fail("ClosureFailure", "R(" + std::to_string(r.label) +
                               ") does not map the identity to I");
  for (int a = 1; a <= n; ++a) {
    if (!r.at(a).all_finite() || !is_unitary(r.at(a), tol))
      fail("ClosureFailure", "R(" + std::to_string(r.label) + ") at element " +
                                 std::to_string(a) + " is not unitary");
    for (int b = 1; b <= n; ++b)
      if (max_abs_diff(r.at(a) * r.at(b), r.at(g.mul(a, b))) > tol.eq_tol)
        fail("ClosureFailure", "R(" + std::to_string(r.label) +
                                   ") is not a homomorphism at pair (" +
                                   std::to_string(a) + ", " + std::to_string(b) + ")");
  }
}

Representation complete_representation(std::shared_ptr<const Group> group,
                                       int label, int dim,
                                       const std::map<int, CMatrix>& seeds,
                                       const Tolerances& tol) {
  const Group& g = *group;
  const int n = static_cast<int>(g.order);
  Representation r;
  r.group = std::move(group);
  r.label = label;
  r.dim = dim;
  r.mats.resize(n + 1);

  std::vector<bool> known(n + 1, false);
  for (const auto& [e, m] : seeds) {
    if (e < 1 || e > n) fail("ClosureFailure", "seed element out of range");
    r.mats[e] = m;
    known[e] = true;
  }

  bool changed = true;
  while (changed) {
    changed = false;
    for (int a = 1; a <= n; ++a) {
      if (!known[a]) continue;
      for (int b = 1; b <= n; ++b) {
        if (!known[b]) continue;
        const int c = g.mul(a, b);
        const CMatrix prod = r.mats[a] * r.mats[b];
        if (!known[c]) {
          r.mats[c] = prod;
          known[c] = true;
          changed = true;
        } else if (max_abs_diff(prod, r.mats[c]) > tol.eq_tol) {
          fail("ClosureFailure",
               "listed matrices are inconsistent with the table at " +
                   std::to_string(a) + "*" + std::to_string(b) + " = " +
                   std::to_string(c));
        }
      }
    }
  }
  for (int e = 1; e <= n; ++e)
    if (!known[e])
      fail("ClosureFailure", "seeds do not generate element " + std::to_string(e));

  check_representation(r, tol);
  return r;
}

std::vector<Representation> builtin_irreps(BuiltinGroup name) {
  auto group = std::make_shared<const Group>(builtin(name));
  std::vector<Representation> out;
  for (const refdata::IrrepSeed& seed : refdata::irrep_seeds(name))
    out.push_back(complete_representation(group, seed.label, seed.dim, seed.at));
  return out;
}

std::vector<Representation> builtin_irreps(std::string_view name) {
  if (auto b = builtin_from_name(name)) return builtin_irreps(*b);
  fail("UnknownGroup", "'" + std::string(name) + "'");
}

std::vector<cplx> character(const Representation& r, const ClassPartition& classes,
                            const Tolerances& tol) {
  std::vector<cplx> out;
  for (const std::vector<int>& cls : classes.classes) {
    const cplx chi = r.at(cls.front()).trace();
    for (int e : cls)
      if (std::abs(r.at(e).trace() - chi) > tol.eq_tol)
        fail("NotClassFunction", "trace differs inside the class of element " +
                                     std::to_string(cls.front()));
    out.push_back(chi);
  }
  return out;
}

bool verify_irreducible(const Representation& r, const ClassPartition& classes) {
  const std::vector<cplx> chi = character(r, classes);
  double norm2 = 0.0;
  for (std::size_t c = 0; c < classes.count(); ++c)
    norm2 += classes.classes[c].size() * std::norm(chi[c]);
  norm2 /= static_cast<double>(r.group->order);
  return std::abs(norm2 - 1.0) <= 1e-8;
}

int CharacterTable::row_of_label(int label) const {
  for (std::size_t r = 0; r < labels.size(); ++r)
    if (labels[r] == label) return static_cast<int>(r);
  fail("UnknownIrrep", "no irrep labeled " + std::to_string(label));
}

CharacterTable character_table_from_irreps(const std::vector<Representation>& irreps) {
  if (irreps.empty()) fail("UnknownIrrep", "empty irrep list");
  CharacterTable t;
  t.group = irreps.front().group;
  t.classes = conjugacy_classes(*t.group);
  for (const Representation& r : irreps) {
    t.labels.push_back(r.label);
    t.dims.push_back(r.dim);
    t.chi.push_back(character(r, t.classes));
  }
  return t;
}

namespace {

// Deterministic uniform doubles in [0, 1); mt19937 output is pinned by the
// standard, unlike uniform_real_distribution.
class UniformSource {
 public:
  explicit UniformSource(unsigned seed) : engine_(seed) {}
  double next() { return engine_() * (1.0 / 4294967296.0); }

 private:
  std::mt19937 engine_;
};

}  // namespace

CharacterTable character_table_dixon(const Group& g, unsigned seed) {
  const ValidationReport report = validate(g);
  if (!report.ok) fail("AxiomError", report.message());

  const int n = static_cast<int>(g.order);
  const ClassPartition classes = conjugacy_classes(g);
  const int k = static_cast<int>(classes.count());
  std::vector<int> sizes(k);
  for (int c = 0; c < k; ++c) sizes[c] = static_cast<int>(classes.classes[c].size());

  // class multiplication coefficients c_{ab}^d against the minimal
  // representative of class d
  std::vector<std::vector<std::vector<int>>> coeff(
      k, std::vector<std::vector<int>>(k, std::vector<int>(k, 0)));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      for (int u : classes.classes[a])
        for (int v : classes.classes[b]) {
          const int w = g.mul(u, v);
          const int d = classes.class_of[w] - 1;
          if (w == classes.classes[d].front()) ++coeff[a][b][d];
        }

  // H_a = D^-1 A_a D with (A_a)_{b,d} = c_{ab}^d and D = diag(sqrt |C_d|);
  // commuting normal matrices sharing the unitary eigenbasis
  // U_{d,gamma} = sqrt(|C_d|/|G|) chi_gamma(d).
  std::vector<CMatrix> H(k);
  for (int a = 0; a < k; ++a) {
    H[a] = CMatrix(k, k);
    for (int b = 0; b < k; ++b)
      for (int d = 0; d < k; ++d)
        H[a](b, d) = coeff[a][b][d] * std::sqrt(double(sizes[d]) / double(sizes[b]));
  }

  UniformSource rng(seed);
  const int retry_budget = 8;
  std::string last_failure;
  for (int attempt = 0; attempt < retry_budget; ++attempt) {
    CMatrix M(k, k);
    for (int a = 0; a < k; ++a) {
      const double re = rng.next(), im = rng.next();
      const CMatrix hermitian = (H[a] + H[a].adjoint()) * cplx(0.5);
      const CMatrix antihermitian = (H[a] - H[a].adjoint()) * cplx(0.0, -0.5);
      M = M + hermitian * cplx(re) + antihermitian * cplx(im);
    }
    const EigResult eig = hermitian_eig(M);

    bool degenerate = false;
    for (int c = 0; c + 1 < k; ++c)
      degenerate = degenerate || eig.values[c] - eig.values[c + 1] < 1e-6;
    if (degenerate) {
      last_failure = "random combination produced a degenerate spectrum";
      continue;
    }

    CharacterTable t;
    t.group = std::make_shared<const Group>(g);
    t.classes = classes;
    for (int col = 0; col < k; ++col) {
      std::vector<cplx> u(k);
      for (int d = 0; d < k; ++d) u[d] = eig.vectors(d, col);
      // identity-class component is n_gamma / sqrt(|G|) > 0: fixes the phase
      const cplx phase = u[0] / std::abs(u[0]);
      for (cplx& z : u) z *= std::conj(phase);
      const double deg_raw = std::sqrt(double(n)) * u[0].real();
      const double deg_rounded = std::lround(deg_raw);
      if (std::abs(deg_raw - deg_rounded) > 1e-6)
        fail("NonIntegralDegree", "degree estimate " + std::to_string(deg_raw));

      // refinement: class-algebra eigenvalues from Rayleigh quotients
      std::vector<cplx> row(k);
      for (int d = 0; d < k; ++d) {
        cplx omega = 0.0;
        for (int b = 0; b < k; ++b)
          for (int e = 0; e < k; ++e)
            omega += std::conj(u[b]) * H[d](b, e) * u[e];
        row[d] = deg_rounded * omega / double(sizes[d]);
      }
      t.dims.push_back(static_cast<int>(deg_rounded));
      t.chi.push_back(std::move(row));
    }

    // rows by (degree, lexicographic character); labels 1..k afterwards
    std::vector<int> order(k);
    std::iota(order.begin(), order.end(), 0);
    auto key = [&t](int r) {
      std::vector<long long> v = {t.dims[r]};
      for (const cplx& z : t.chi[r]) {
        v.push_back(std::llround(z.real() * 1e8));
        v.push_back(std::llround(z.imag() * 1e8));
      }
      return v;
    };
    std::sort(order.begin(), order.end(),
              [&key](int a, int b) { return key(a) < key(b); });
    CharacterTable sorted;
    sorted.group = t.group;
    sorted.classes = t.classes;
    for (int r = 0; r < k; ++r) {
      sorted.labels.push_back(r + 1);
      sorted.dims.push_back(t.dims[order[r]]);
      sorted.chi.push_back(t.chi[order[r]]);
    }
    return sorted;
  }
  fail("DegenerateRandomization", last_failure + " after " +
                                      std::to_string(retry_budget) + " attempts");
}

Decomposition decompose(int alpha, int beta, const CharacterTable& table) {
  const int ra = table.row_of_label(alpha);
  const int rb = table.row_of_label(beta);
  const int k = static_cast<int>(table.irrep_count());
  const double n = static_cast<double>(table.group->order);

  Decomposition d;
  d.alpha = alpha;
  d.beta = beta;
  for (int g = 0; g < k; ++g) {
    cplx sum = 0.0;
    for (int c = 0; c < k; ++c)
      sum += double(table.classes.classes[c].size()) * table.chi[ra][c] *
             table.chi[rb][c] * std::conj(table.chi[g][c]);
    sum /= n;
    const double rounded = std::lround(sum.real());
    if (std::abs(sum - cplx(rounded)) > 1e-6)
      fail("NonIntegralMultiplicity",
           "m for gamma " + std::to_string(table.labels[g]) + " in " +
               std::to_string(alpha) + "x" + std::to_string(beta));
    d.m.push_back(static_cast<int>(rounded));
  }

  int total = 0;
  for (int g = 0; g < k; ++g) total += d.m[g] * table.dims[g];
  if (total != table.dims[ra] * table.dims[rb])
    fail("NonIntegralMultiplicity", "dimension sum violated for " +
                                        std::to_string(alpha) + "x" +
                                        std::to_string(beta));
  return d;
}

bool is_simply_reducible(const CharacterTable& table) {
  for (int a : table.labels)
    for (int b : table.labels)
      for (int m : decompose(a, b, table).m)
        if (m > 1) return false;
  return true;
}

bool tables_match_up_to_row_permutation(const CharacterTable& a,
                                        const CharacterTable& b, double tol) {
  if (a.irrep_count() != b.irrep_count()) return false;
  if (a.classes.count() != b.classes.count()) return false;
  const int k = static_cast<int>(a.irrep_count());
  std::vector<bool> used(k, false);
  for (int ra = 0; ra < k; ++ra) {
    bool found = false;
    for (int rb = 0; rb < k && !found; ++rb) {
      if (used[rb]) continue;
      bool same = true;
      for (std::size_t c = 0; c < a.classes.count() && same; ++c)
        same = std::abs(a.chi[ra][c] - b.chi[rb][c]) <= tol;
      if (same) {
        used[rb] = true;
        found = true;
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace groupcg

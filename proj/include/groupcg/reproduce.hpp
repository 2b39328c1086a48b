#pragma once

#include <optional>
#include <string>
#include <vector>

#include "groupcg/refdata.hpp"

namespace groupcg {

struct ReproduceItem {
  std::string name;
  bool pass = true;
  std::string detail;
};

struct ReproduceOptions {
  std::optional<BuiltinGroup> only;
  unsigned seed = 42;
};

// The full verification matrix: generated tables vs embedded copies, class
// lists, character tables, every published series equation, CG unitarity and
// block diagonalization for every irrep pair, Mercer ranks for every
// (alpha, beta, gamma) triple, every embedded CG table (including derived
// conjugates and relabelings) and the 32.42 quotient construction.
std::vector<ReproduceItem> reproduce_reference_tables(
    const ReproduceOptions& opts, const std::vector<refdata::ReferenceCG>& cg_refs);

inline std::vector<ReproduceItem> reproduce_reference_tables(
    const ReproduceOptions& opts = {}) {
  return reproduce_reference_tables(opts, refdata::cg_references());
}

// One "PASS name (detail)" / "FAIL name (detail)" line per item plus a
// summary line.
std::string format_reproduce_report(const std::vector<ReproduceItem>& items);

}  // namespace groupcg

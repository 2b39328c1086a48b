#include <algorithm>

#include "doctest.h"
#include "groupcg/reproduce.hpp"

using namespace groupcg;

TEST_CASE("the Q8 slice of the verification matrix passes") {
  ReproduceOptions opts;
  opts.only = BuiltinGroup::Q8;
  const auto items = reproduce_reference_tables(opts);
  CHECK(items.size() > 20);
  for (const ReproduceItem& item : items) {
    INFO(item.name, ": ", item.detail);
    CHECK(item.pass);
  }
}

TEST_CASE("verification output is deterministic") {
  ReproduceOptions opts;
  opts.only = BuiltinGroup::Q16;
  const std::string a = format_reproduce_report(reproduce_reference_tables(opts));
  const std::string b = format_reproduce_report(reproduce_reference_tables(opts));
  CHECK(a == b);
}

TEST_CASE("a corrupted embedded table is caught and named") {
  std::vector<refdata::ReferenceCG> refs = refdata::cg_references();
  for (refdata::ReferenceCG& ref : refs) {
    if (ref.table_id == "IV" && ref.derivation.empty()) {
      ref.blocks[0].columns(1, 0) += cplx(1e-3);
      break;
    }
  }
  ReproduceOptions opts;
  opts.only = BuiltinGroup::Q8;
  const auto items = reproduce_reference_tables(opts, refs);
  std::vector<const ReproduceItem*> failures;
  for (const ReproduceItem& item : items)
    if (!item.pass) failures.push_back(&item);
  REQUIRE(failures.size() == 1);
  CHECK(failures[0]->name.find("Table IV") != std::string::npos);
}

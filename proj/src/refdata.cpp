#include "groupcg/refdata.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "json.hpp"

#include "groupcg/error.hpp"
#include "groupcg/reference_files.hpp"

namespace groupcg::refdata {

namespace {

using json = nlohmann::json;

cplx root_of_unity(int k, int denom) {
  return std::polar(1.0, 2.0 * std::numbers::pi * k / denom);
}

CMatrix m2(cplx a, cplx b, cplx c, cplx d) {
  CMatrix m(2, 2);
  m(0, 0) = a; m(0, 1) = b; m(1, 0) = c; m(1, 1) = d;
  return m;
}

CMatrix m1(cplx a) {
  CMatrix m(1, 1);
  m(0, 0) = a;
  return m;
}

CMatrix diag2(cplx a, cplx b) { return m2(a, 0, 0, b); }

// 4x4 from 2x2 sub-matrices
CMatrix blocks4(const CMatrix& a, const CMatrix& b, const CMatrix& c,
                const CMatrix& d) {
  CMatrix m(4, 4);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      m(i, j) = a(i, j);
      m(i, j + 2) = b(i, j);
      m(i + 2, j) = c(i, j);
      m(i + 2, j + 2) = d(i, j);
    }
  return m;
}

const CMatrix kTau0 = m2(1, 0, 0, 1);
const CMatrix kTau1 = m2(0, 1, 1, 0);
const CMatrix kTau2 = m2(0, -1, 1, 0);
const CMatrix kTau3 = m2(1, 0, 0, -1);

}  // namespace

std::string_view reference_text(std::string_view path) {
  for (const auto& [name, content] : detail::kReferenceFiles)
    if (name == path) return content;
  fail("UnknownReference", "no embedded reference '" + std::string(path) + "'");
}

const Group& reference_group(BuiltinGroup name) {
  static const std::map<BuiltinGroup, Group> groups = [] {
    std::map<BuiltinGroup, Group> out;
    out.emplace(BuiltinGroup::Q8, parse_cayley(reference_text("q8.cayley")));
    out.emplace(BuiltinGroup::Q16, parse_cayley(reference_text("q16.cayley")));
    out.emplace(BuiltinGroup::Q32, parse_cayley(reference_text("q32.cayley")));
    out.emplace(BuiltinGroup::G32_42, parse_cayley(reference_text("g32_42.cayley")));
    return out;
  }();
  return groups.at(name);
}

const std::vector<std::pair<int, int>>& dicyclic_element_order(BuiltinGroup name) {
  static const std::vector<std::pair<int, int>> q8 = {
      {0, 0}, {2, 0}, {1, 0}, {3, 0}, {0, 1}, {2, 1}, {3, 1}, {1, 1}};
  static const std::vector<std::pair<int, int>> q16 = {
      {0, 0}, {4, 0}, {2, 0}, {6, 0}, {0, 1}, {4, 1}, {6, 1}, {2, 1},
      {3, 1}, {7, 1}, {1, 1}, {5, 1}, {7, 0}, {3, 0}, {1, 0}, {5, 0}};
  static const std::vector<std::pair<int, int>> q32 = {
      {0, 0},  {8, 0},  {4, 0},  {12, 0}, {6, 0},  {14, 0}, {10, 0}, {2, 0},
      {0, 1},  {8, 1},  {12, 1}, {4, 1},  {10, 1}, {2, 1},  {6, 1},  {14, 1},
      {5, 1},  {13, 1}, {1, 1},  {9, 1},  {15, 1}, {7, 1},  {11, 1}, {3, 1},
      {13, 0}, {5, 0},  {1, 0},  {9, 0},  {3, 0},  {11, 0}, {7, 0},  {15, 0}};
  switch (name) {
    case BuiltinGroup::Q8: return q8;
    case BuiltinGroup::Q16: return q16;
    case BuiltinGroup::Q32: return q32;
    default: fail("UnknownGroup", "no dicyclic presentation for 32.42");
  }
}

const std::vector<int>& renumber_quotient_to_g32_42() {
  static const std::vector<int> perm = {
      1, 2, 13, 14, 19, 20, 31, 32, 15, 16, 4,  3,  29, 30, 18, 17,
      23, 24, 28, 27, 6, 5,  9,  10, 26, 25, 22, 21, 11, 12, 7,  8};
  return perm;
}

const std::vector<std::vector<int>>& expected_classes(BuiltinGroup name) {
  static const std::vector<std::vector<int>> q8 = {{1}, {2}, {3, 4}, {5, 6}, {7, 8}};
  static const std::vector<std::vector<int>> q16 = {
      {1}, {2}, {3, 4}, {5, 6, 7, 8}, {9, 10, 11, 12}, {13, 15}, {14, 16}};
  static const std::vector<std::vector<int>> q32 = {
      {1}, {2}, {3, 4}, {5, 7}, {6, 8}, {9, 10, 11, 12, 13, 14, 15, 16},
      {17, 18, 19, 20, 21, 22, 23, 24}, {25, 29}, {26, 30}, {27, 32}, {28, 31}};
  static const std::vector<std::vector<int>> g42 = [] {
    std::vector<std::vector<int>> out = {{1}, {2}};
    for (int j = 3; j <= 17; ++j) out.push_back({2 * j - 3, 2 * j - 2});
    return out;
  }();
  switch (name) {
    case BuiltinGroup::Q8: return q8;
    case BuiltinGroup::Q16: return q16;
    case BuiltinGroup::Q32: return q32;
    case BuiltinGroup::G32_42: return g42;
  }
  fail("UnknownGroup", "invalid builtin id");
}

const std::vector<SeriesEquation>& expected_series(BuiltinGroup name) {
  static const std::vector<SeriesEquation> q8 = {
      {1, 1, {1}}, {1, 2, {2}}, {1, 3, {3}}, {1, 4, {4}}, {1, 5, {5}},
      {2, 3, {4}}, {2, 4, {3}}, {3, 4, {2}}, {5, 5, {1, 2, 3, 4}}};
  static const std::vector<SeriesEquation> q16 = {
      {1, 1, {1}}, {2, 2, {1}}, {3, 3, {1}}, {4, 4, {1}},
      {2, 3, {4}}, {2, 4, {3}},
      {1, 5, {5}}, {2, 5, {5}}, {3, 5, {5}}, {4, 5, {5}},
      {2, 6, {7}}, {2, 7, {6}}, {3, 4, {2}}, {3, 6, {7}},
      {3, 7, {6}}, {4, 6, {6}}, {4, 7, {7}},
      {5, 5, {1, 2, 3, 4}}, {5, 6, {6, 7}}, {5, 7, {6, 7}},
      {6, 6, {1, 4, 5}}, {6, 7, {2, 3, 5}}, {7, 7, {1, 4, 5}}};
  static const std::vector<SeriesEquation> q32 = {
      {2, 2, {1}}, {3, 3, {1}}, {4, 4, {1}},
      {2, 3, {4}}, {2, 4, {3}},
      {2, 5, {5}}, {3, 5, {5}}, {4, 5, {5}},
      {2, 6, {7}}, {3, 6, {7}}, {2, 7, {6}}, {3, 7, {6}},
      {2, 8, {9}}, {2, 9, {8}}, {2, 10, {11}}, {2, 11, {10}},
      {3, 4, {2}}, {3, 8, {9}}, {3, 9, {8}}, {3, 10, {11}}, {3, 11, {10}},
      {4, 6, {6}}, {4, 7, {7}}, {4, 8, {8}}, {4, 9, {9}}, {4, 10, {10}}, {4, 11, {11}},
      {5, 5, {1, 2, 3, 4}}, {5, 6, {6, 7}}, {5, 7, {6, 7}},
      {5, 8, {10, 11}}, {5, 9, {10, 11}}, {5, 10, {8, 9}}, {5, 11, {8, 9}},
      {6, 6, {1, 4, 5}}, {6, 7, {2, 3, 5}}, {6, 8, {8, 11}}, {6, 9, {9, 10}},
      {6, 10, {9, 11}}, {6, 11, {8, 10}},
      {7, 7, {1, 4, 5}}, {7, 8, {9, 10}}, {7, 9, {8, 11}}, {7, 10, {8, 10}},
      {7, 11, {9, 11}},
      {8, 8, {1, 4, 6}}, {8, 9, {2, 3, 7}}, {8, 10, {5, 7}}, {8, 11, {5, 6}},
      {9, 9, {1, 4, 6}}, {9, 10, {5, 6}}, {9, 11, {5, 7}},
      {10, 10, {1, 4, 7}}, {10, 11, {2, 3, 6}}, {11, 11, {1, 4, 7}}};
  static const std::vector<SeriesEquation> g42 = [] {
    std::vector<SeriesEquation> out;
    for (int a = 1; a <= 16; ++a) out.push_back({a, 17, {17}});
    SeriesEquation big{17, 17, {}};
    for (int g = 1; g <= 16; ++g) big.gammas.push_back(g);
    out.push_back(big);
    return out;
  }();
  switch (name) {
    case BuiltinGroup::Q8: return q8;
    case BuiltinGroup::Q16: return q16;
    case BuiltinGroup::Q32: return q32;
    case BuiltinGroup::G32_42: return g42;
  }
  fail("UnknownGroup", "invalid builtin id");
}

namespace {

cplx parse_csv_value(const std::string& tok) {
  // integers or "a+bi" / "a-bi" / "bi"
  std::istringstream in(tok);
  double re = 0.0, im = 0.0;
  if (tok.find('i') == std::string::npos) {
    in >> re;
    return {re, 0.0};
  }
  std::string body = tok.substr(0, tok.size() - 1);
  std::size_t split = body.find_last_of("+-");
  if (split == std::string::npos || split == 0) {
    im = std::stod(body.empty() || body == "-" ? body + "1" : body);
    return {0.0, im};
  }
  re = std::stod(body.substr(0, split));
  std::string imtok = body.substr(split);
  if (imtok == "+" || imtok == "-") imtok += "1";
  im = std::stod(imtok);
  return {re, im};
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

ReferenceCharacters reference_characters(BuiltinGroup name) {
  std::string path, table_id;
  if (name == BuiltinGroup::Q8) {
    path = "q8_characters.csv";
    table_id = "III";
  } else if (name == BuiltinGroup::G32_42) {
    path = "g32_42_characters.csv";
    table_id = "XXVII";
  } else {
    fail("UnknownReference", "no published character table file for " +
                                 std::string(builtin_name(name)));
  }
  ReferenceCharacters out;
  out.table_id = table_id;
  std::istringstream in{std::string(reference_text(path))};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto cells = split_csv(line);
    if (cells[0] == "class") continue;
    if (cells[0] == "size") {
      for (std::size_t c = 1; c < cells.size(); ++c)
        out.class_sizes.push_back(std::stoi(cells[c]));
      continue;
    }
    std::vector<cplx> row;
    for (std::size_t c = 1; c < cells.size(); ++c)
      row.push_back(parse_csv_value(cells[c]));
    out.dims.push_back(static_cast<int>(std::lround(row[0].real())));
    out.rows.push_back(std::move(row));
  }
  return out;
}

namespace {

std::vector<IrrepSeed> one_dim_seeds_from_characters(BuiltinGroup name, int count) {
  // 1-dim irreps: the representation value at an element is the character of
  // its class.
  const ReferenceCharacters chars = reference_characters(name);
  const auto& classes = expected_classes(name);
  std::vector<IrrepSeed> out;
  for (int a = 0; a < count; ++a) {
    IrrepSeed seed{a + 1, 1, {}};
    for (std::size_t c = 0; c < classes.size(); ++c)
      for (int e : classes[c]) seed.at.emplace(e, m1(chars.rows[a][c]));
    out.push_back(std::move(seed));
  }
  return out;
}

std::vector<IrrepSeed> q8_seeds() {
  auto out = one_dim_seeds_from_characters(BuiltinGroup::Q8, 4);
  IrrepSeed r5{5, 2, {}};
  const CMatrix g3 = diag2(cplx(0, 1), cplx(0, -1));
  const CMatrix g5 = m2(0, -1, 1, 0);
  const CMatrix g7 = m2(0, cplx(0, 1), cplx(0, 1), 0);
  r5.at.emplace(1, CMatrix::identity(2));
  r5.at.emplace(2, -CMatrix::identity(2));
  r5.at.emplace(3, g3);
  r5.at.emplace(4, -g3);
  r5.at.emplace(5, g5);
  r5.at.emplace(6, -g5);
  r5.at.emplace(7, g7);
  r5.at.emplace(8, -g7);
  out.push_back(std::move(r5));
  return out;
}

std::vector<IrrepSeed> q16_seeds() {
  const cplx e8 = root_of_unity(1, 8);
  const cplx e8_3 = root_of_unity(3, 8);
  const cplx i{0, 1};
  // published columns: elements 1, 2, 3, 5, 7, 9, 11, 13, 15
  const std::vector<int> cols = {1, 2, 3, 5, 7, 9, 11, 13, 15};
  const std::vector<std::vector<double>> ones = {
      {1, 1, 1, 1, 1, 1, 1, 1, 1},
      {1, 1, 1, 1, 1, -1, -1, -1, -1},
      {1, 1, 1, -1, -1, 1, 1, -1, -1},
      {1, 1, 1, -1, -1, -1, -1, 1, 1}};
  std::vector<IrrepSeed> out;
  for (int a = 0; a < 4; ++a) {
    IrrepSeed s{a + 1, 1, {}};
    for (std::size_t c = 0; c < cols.size(); ++c) s.at.emplace(cols[c], m1(ones[a][c]));
    out.push_back(std::move(s));
  }
  auto mat_seed = [&cols](int label, std::vector<CMatrix> mats) {
    IrrepSeed s{label, 2, {}};
    for (std::size_t c = 0; c < cols.size(); ++c) s.at.emplace(cols[c], mats[c]);
    return s;
  };
  out.push_back(mat_seed(5, {CMatrix::identity(2), CMatrix::identity(2),
                             -CMatrix::identity(2), kTau3, -kTau3, kTau1, -kTau1,
                             m2(0, -1, 1, 0), m2(0, 1, -1, 0)}));
  out.push_back(mat_seed(6, {CMatrix::identity(2), -CMatrix::identity(2),
                             diag2(i, -i), m2(0, -1, 1, 0), m2(0, i, i, 0),
                             m2(0, e8_3, e8, 0), m2(0, e8, e8_3, 0),
                             diag2(e8_3, -e8), diag2(-e8, e8_3)}));
  out.push_back(mat_seed(7, {CMatrix::identity(2), -CMatrix::identity(2),
                             diag2(i, -i), m2(0, -1, 1, 0), m2(0, i, i, 0),
                             m2(0, -e8_3, -e8, 0), m2(0, -e8, -e8_3, 0),
                             diag2(-e8_3, e8), diag2(e8, -e8_3)}));
  return out;
}

std::vector<IrrepSeed> q32_seeds() {
  const cplx e8 = root_of_unity(1, 8);
  const cplx e8_3 = root_of_unity(3, 8);
  const cplx e16 = root_of_unity(1, 16);
  const cplx e16_3 = root_of_unity(3, 16);
  const cplx e16_5 = root_of_unity(5, 16);
  const cplx e16_7 = root_of_unity(7, 16);
  const cplx i{0, 1};
  // published columns: elements 2, 3, 5, 6, 9, 17, 25, 26, 27, 28 (plus identity)
  const std::vector<int> cols = {2, 3, 5, 6, 9, 17, 25, 26, 27, 28};
  const std::vector<std::vector<double>> ones = {
      {1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
      {1, 1, 1, 1, 1, -1, -1, -1, -1, -1},
      {1, 1, 1, 1, -1, 1, -1, -1, -1, -1},
      {1, 1, 1, 1, -1, -1, 1, 1, 1, 1}};
  std::vector<IrrepSeed> out;
  for (int a = 0; a < 4; ++a) {
    IrrepSeed s{a + 1, 1, {}};
    s.at.emplace(1, m1(1));
    for (std::size_t c = 0; c < cols.size(); ++c) s.at.emplace(cols[c], m1(ones[a][c]));
    out.push_back(std::move(s));
  }
  auto mat_seed = [&cols](int label, std::vector<CMatrix> mats) {
    IrrepSeed s{label, 2, {}};
    s.at.emplace(1, CMatrix::identity(2));
    for (std::size_t c = 0; c < cols.size(); ++c) s.at.emplace(cols[c], mats[c]);
    return s;
  };
  const CMatrix I = CMatrix::identity(2);
  out.push_back(mat_seed(5, {I, I, -I, -I, kTau3, kTau1, kTau2, kTau2, kTau2, kTau2}));
  out.push_back(mat_seed(6, {I, -I, diag2(i, -i), diag2(i, -i), kTau1,
                             m2(0, e8_3, -e8, 0), diag2(e8_3, -e8), diag2(e8_3, -e8),
                             diag2(-e8_3, e8), diag2(-e8_3, e8)}));
  out.push_back(mat_seed(7, {I, -I, diag2(i, -i), diag2(i, -i), kTau1,
                             m2(0, -e8_3, e8, 0), diag2(-e8_3, e8), diag2(-e8_3, e8),
                             diag2(e8_3, -e8), diag2(e8_3, -e8)}));
  out.push_back(mat_seed(8, {-I, diag2(i, -i), diag2(e8_3, -e8), diag2(-e8_3, e8),
                             kTau2, m2(0, e16_5, e16_3, 0), diag2(e16_5, -e16_3),
                             diag2(-e16_5, e16_3), diag2(-e16, e16_7),
                             diag2(e16, -e16_7)}));
  out.push_back(mat_seed(9, {-I, diag2(i, -i), diag2(e8_3, -e8), diag2(-e8_3, e8),
                             kTau2, m2(0, -e16_5, -e16_3, 0), diag2(-e16_5, e16_3),
                             diag2(e16_5, -e16_3), diag2(e16, -e16_7),
                             diag2(-e16, e16_7)}));
  out.push_back(mat_seed(10, {-I, diag2(i, -i), diag2(-e8_3, e8), diag2(e8_3, -e8),
                              kTau2, m2(0, -e16, -e16_7, 0), diag2(-e16, e16_7),
                              diag2(e16, -e16_7), diag2(-e16_5, e16_3),
                              diag2(e16_5, -e16_3)}));
  out.push_back(mat_seed(11, {-I, diag2(i, -i), diag2(-e8_3, e8), diag2(e8_3, -e8),
                              kTau2, m2(0, e16, e16_7, 0), diag2(e16, -e16_7),
                              diag2(-e16, e16_7), diag2(e16_5, -e16_3),
                              diag2(-e16_5, e16_3)}));
  return out;
}

std::vector<IrrepSeed> g32_42_seeds() {
  auto out = one_dim_seeds_from_characters(BuiltinGroup::G32_42, 16);
  const CMatrix Z(2, 2);
  IrrepSeed r17{17, 4, {}};
  r17.at.emplace(1, CMatrix::identity(4));
  r17.at.emplace(2, -CMatrix::identity(4));
  r17.at.emplace(3, blocks4(kTau0, Z, Z, -kTau0));
  r17.at.emplace(5, blocks4(kTau3, Z, Z, kTau3));
  r17.at.emplace(7, blocks4(kTau3, Z, Z, -kTau3));
  r17.at.emplace(9, blocks4(kTau1, Z, Z, kTau1));
  r17.at.emplace(11, blocks4(kTau1, Z, Z, -kTau1));
  r17.at.emplace(13, blocks4(kTau2, Z, Z, kTau2));
  r17.at.emplace(15, blocks4(kTau2, Z, Z, -kTau2));
  r17.at.emplace(17, blocks4(Z, kTau3, kTau3, Z));
  r17.at.emplace(19, blocks4(Z, -kTau3, kTau3, Z));
  r17.at.emplace(21, blocks4(Z, kTau0, kTau0, Z));
  r17.at.emplace(23, blocks4(Z, -kTau0, kTau0, Z));
  r17.at.emplace(25, blocks4(Z, -kTau2, -kTau2, Z));
  r17.at.emplace(27, blocks4(Z, kTau2, -kTau2, Z));
  r17.at.emplace(29, blocks4(Z, -kTau1, -kTau1, Z));
  r17.at.emplace(31, blocks4(Z, kTau1, -kTau1, Z));
  out.push_back(std::move(r17));
  return out;
}

}  // namespace

std::vector<IrrepSeed> irrep_seeds(BuiltinGroup name) {
  switch (name) {
    case BuiltinGroup::Q8: return q8_seeds();
    case BuiltinGroup::Q16: return q16_seeds();
    case BuiltinGroup::Q32: return q32_seeds();
    case BuiltinGroup::G32_42: return g32_42_seeds();
  }
  fail("UnknownGroup", "invalid builtin id");
}

namespace {

const char* kCGFiles[] = {
    "cg/q8_5_5.json",   "cg/q16_5_5.json", "cg/q16_5_6.json", "cg/q16_6_6.json",
    "cg/q16_6_7.json",  "cg/q32_5_6.json", "cg/q32_5_8.json", "cg/q32_5_10.json",
    "cg/q32_6_6.json",  "cg/q32_6_7.json", "cg/q32_6_8.json", "cg/q32_6_9.json",
    "cg/q32_6_10.json", "cg/q32_6_11.json", "cg/q32_8_8.json", "cg/q32_8_9.json",
    "cg/q32_8_10.json", "cg/q32_8_11.json", "cg/g32_42_17_17.json"};

std::vector<CGBlock> blocks_from_json(const json& doc) {
  std::vector<CGBlock> blocks;
  for (const json& b : doc.at("blocks")) {
    CGBlock block;
    block.gamma = b.at("gamma").get<int>();
    block.replica = b.at("replica").get<int>();
    const json& cols = b.at("columns");
    const std::size_t ncols = cols.size();
    const std::size_t nrows = cols.at(0).size();
    block.columns = CMatrix(nrows, ncols);
    for (std::size_t c = 0; c < ncols; ++c)
      for (std::size_t r = 0; r < nrows; ++r)
        block.columns(r, c) = cplx(cols[c][r][0].get<double>(),
                                   cols[c][r][1].get<double>());
    blocks.push_back(std::move(block));
  }
  return blocks;
}

std::string pair_description(BuiltinGroup g, int alpha, int beta) {
  std::ostringstream out;
  out << builtin_name(g) << " " << alpha << "x" << beta;
  return out.str();
}

}  // namespace

std::vector<ReferenceCG> cg_references() {
  std::vector<ReferenceCG> out;
  for (const char* path : kCGFiles) {
    const json doc = json::parse(reference_text(path));
    ReferenceCG base;
    base.table_id = doc.at("table").get<std::string>();
    base.group = *builtin_from_name(doc.at("group").get<std::string>());
    base.alpha = doc.at("alpha").get<int>();
    base.beta = doc.at("beta").get<int>();
    base.description = pair_description(base.group, base.alpha, base.beta);
    base.blocks = blocks_from_json(doc);
    if (doc.contains("typos"))
      for (const json& t : doc["typos"]) {
        std::ostringstream note;
        note << "entry printed as " << t.at("printed").get<std::string>()
             << " at row " << t.at("row").get<int>() << ", gamma "
             << t.at("gamma").get<int>() << ", l " << t.at("l").get<int>()
             << " compared as " << t.at("compared_as").get<std::string>();
        base.notes.push_back(note.str());
      }
    if (doc.contains("notes"))
      for (const json& n : doc["notes"]) base.notes.push_back(n.get<std::string>());
    out.push_back(base);

    if (doc.contains("also_covers"))
      for (const json& a : doc["also_covers"]) {
        ReferenceCG alias = base;
        alias.group = *builtin_from_name(a.at("group").get<std::string>());
        alias.alpha = a.at("alpha").get<int>();
        alias.beta = a.at("beta").get<int>();
        alias.description = pair_description(alias.group, alias.alpha, alias.beta);
        alias.derivation = "same table as " + base.description;
        out.push_back(std::move(alias));
      }
    if (doc.contains("conjugate_covers"))
      for (const json& a : doc["conjugate_covers"]) {
        ReferenceCG alias = base;
        alias.alpha = a.at("alpha").get<int>();
        alias.beta = a.at("beta").get<int>();
        alias.description = pair_description(alias.group, alias.alpha, alias.beta);
        alias.derivation = "entrywise conjugate of " + base.description;
        for (CGBlock& b : alias.blocks) b.columns = b.columns.conjugate();
        out.push_back(std::move(alias));
      }
    if (doc.contains("relabeled_covers"))
      for (const json& a : doc["relabeled_covers"]) {
        ReferenceCG alias = base;
        alias.alpha = a.at("alpha").get<int>();
        alias.beta = a.at("beta").get<int>();
        alias.description = pair_description(alias.group, alias.alpha, alias.beta);
        alias.derivation = "gamma relabeling of " + base.description;
        for (const auto& [from, to] : a.at("gamma_map").items())
          for (CGBlock& b : alias.blocks)
            if (b.gamma == std::stoi(from)) b.gamma = to.get<int>();
        out.push_back(std::move(alias));
      }
  }
  return out;
}

}  // namespace groupcg::refdata

#include "groupcg/io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "groupcg/error.hpp"

namespace groupcg {

namespace {

ordered_json complex_pair(cplx z) { return ordered_json::array({z.real(), z.imag()}); }

ordered_json columns_json(const CMatrix& columns) {
  ordered_json cols = ordered_json::array();
  for (std::size_t c = 0; c < columns.cols(); ++c) {
    ordered_json col = ordered_json::array();
    for (std::size_t r = 0; r < columns.rows(); ++r)
      col.push_back(complex_pair(columns(r, c)));
    cols.push_back(std::move(col));
  }
  return cols;
}

std::string csv_value(cplx z) {
  char buf[80];
  const double re = z.real(), im = z.imag();
  if (std::abs(im) < 1e-12) {
    std::snprintf(buf, sizeof(buf), "%.12g", re);
  } else if (std::abs(re) < 1e-12) {
    std::snprintf(buf, sizeof(buf), "%.12gi", im);
  } else {
    std::snprintf(buf, sizeof(buf), "%.12g%+.12gi", re, im);
  }
  return buf;
}

}  // namespace

ordered_json cg_to_json(const CGMatrix& cg) {
  ordered_json doc;
  doc["alpha"] = cg.alpha;
  doc["beta"] = cg.beta;
  ordered_json blocks = ordered_json::array();
  for (const CGBlock& b : cg.blocks) {
    ordered_json block;
    block["gamma"] = b.gamma;
    block["replica"] = b.replica;
    block["columns"] = columns_json(b.columns);
    blocks.push_back(std::move(block));
  }
  doc["blocks"] = std::move(blocks);
  doc["residual"] = cg.residual;
  doc["unitary_defect"] = cg.unitary_defect;
  return doc;
}

std::vector<CGBlock> cg_blocks_from_json(const nlohmann::json& doc) {
  std::vector<CGBlock> blocks;
  for (const nlohmann::json& b : doc.at("blocks")) {
    CGBlock block;
    block.gamma = b.at("gamma").get<int>();
    block.replica = b.value("replica", 0);
    const nlohmann::json& cols = b.at("columns");
    if (cols.empty()) fail("ShapeMismatch", "block without columns");
    block.columns = CMatrix(cols.at(0).size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (cols[c].size() != block.columns.rows())
        fail("ShapeMismatch", "ragged columns in CG block");
      for (std::size_t r = 0; r < block.columns.rows(); ++r)
        block.columns(r, c) =
            cplx(cols[c][r][0].get<double>(), cols[c][r][1].get<double>());
    }
    blocks.push_back(std::move(block));
  }
  return blocks;
}

ParsedCG cg_from_json(const nlohmann::json& doc) {
  ParsedCG out;
  out.alpha = doc.at("alpha").get<int>();
  out.beta = doc.at("beta").get<int>();
  out.blocks = cg_blocks_from_json(doc);
  out.residual = doc.value("residual", 0.0);
  out.unitary_defect = doc.value("unitary_defect", 0.0);
  return out;
}

ordered_json representation_to_json(const Representation& r,
                                    std::string_view group_name) {
  ordered_json doc;
  doc["group"] = std::string(group_name);
  doc["label"] = r.label;
  doc["dim"] = r.dim;
  ordered_json mats;
  for (std::size_t e = 1; e < r.mats.size(); ++e) {
    ordered_json mat = ordered_json::array();
    for (int i = 0; i < r.dim; ++i) {
      ordered_json row = ordered_json::array();
      for (int j = 0; j < r.dim; ++j) row.push_back(complex_pair(r.mats[e](i, j)));
      mat.push_back(std::move(row));
    }
    mats[std::to_string(e)] = std::move(mat);
  }
  doc["matrices"] = std::move(mats);
  return doc;
}

Representation representation_from_json(const nlohmann::json& doc,
                                        std::shared_ptr<const Group> group) {
  const int label = doc.at("label").get<int>();
  const int dim = doc.at("dim").get<int>();
  std::map<int, CMatrix> seeds;
  for (const auto& [key, mat] : doc.at("matrices").items()) {
    CMatrix m(dim, dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j)
        m(i, j) = cplx(mat[i][j][0].get<double>(), mat[i][j][1].get<double>());
    if (!m.all_finite()) fail("SyntaxError", "non-finite entry in matrix " + key);
    seeds.emplace(std::stoi(key), std::move(m));
  }
  return complete_representation(std::move(group), label, dim, seeds);
}

ordered_json decomposition_to_json(const Decomposition& d, const CharacterTable& t) {
  ordered_json doc;
  doc["alpha"] = d.alpha;
  doc["beta"] = d.beta;
  ordered_json m;
  for (std::size_t g = 0; g < d.m.size(); ++g)
    m[std::to_string(t.labels[g])] = d.m[g];
  doc["multiplicities"] = std::move(m);
  return doc;
}

ordered_json character_table_to_json(const CharacterTable& t) {
  ordered_json doc;
  ordered_json classes = ordered_json::array();
  for (const auto& c : t.classes.classes) classes.push_back(c);
  doc["classes"] = std::move(classes);
  ordered_json rows;
  for (std::size_t r = 0; r < t.irrep_count(); ++r) {
    ordered_json row = ordered_json::array();
    for (const cplx& z : t.chi[r]) row.push_back(complex_pair(z));
    rows["R" + std::to_string(t.labels[r])] = std::move(row);
  }
  doc["characters"] = std::move(rows);
  return doc;
}

std::string character_table_csv(const CharacterTable& t) {
  std::ostringstream out;
  out << "class";
  for (std::size_t c = 1; c <= t.classes.count(); ++c) out << ",C" << c;
  out << "\nsize";
  for (const auto& c : t.classes.classes) out << "," << c.size();
  out << "\n";
  for (std::size_t r = 0; r < t.irrep_count(); ++r) {
    out << "R" << t.labels[r];
    for (const cplx& z : t.chi[r]) out << "," << csv_value(z);
    out << "\n";
  }
  return out.str();
}

namespace {

// display width = code point count (all glyphs used here are single width)
std::size_t utf8_width(const std::string& s) {
  std::size_t w = 0;
  for (char c : s)
    if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) ++w;
  return w;
}

std::string render_table(const std::vector<std::vector<std::string>>& cells) {
  std::vector<std::size_t> width;
  for (const auto& row : cells)
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c >= width.size()) width.resize(c + 1, 0);
      width[c] = std::max(width[c], utf8_width(row[c]));
    }
  std::ostringstream out;
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size())
        line.append(width[c] - utf8_width(row[c]) + 2, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << "\n";
  }
  return out.str();
}

}  // namespace

std::string render_character_table(const CharacterTable& t, const Tolerances& tol) {
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> head = {""};
  std::vector<std::string> sizes = {"|C|"};
  for (std::size_t c = 0; c < t.classes.count(); ++c) {
    head.push_back("C" + std::to_string(c + 1));
    sizes.push_back(std::to_string(t.classes.classes[c].size()));
  }
  cells.push_back(head);
  cells.push_back(sizes);
  for (std::size_t r = 0; r < t.irrep_count(); ++r) {
    std::vector<std::string> row = {"R(" + std::to_string(t.labels[r]) + ")"};
    for (const cplx& z : t.chi[r]) row.push_back(snap(z, tol));
    cells.push_back(row);
  }
  return render_table(cells);
}

std::string render_cg_text(const CGMatrix& cg, const Tolerances& tol) {
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> gammas = {"j", "k"};
  std::vector<std::string> ls = {"", ""};
  bool need_l_row = false;
  for (const CGBlock& b : cg.blocks) {
    for (std::size_t l = 1; l <= b.columns.cols(); ++l) {
      gammas.push_back(l == 1 ? "R(" + std::to_string(b.gamma) + ")" +
                                    (b.replica ? "#" + std::to_string(b.replica + 1) : "")
                              : "");
      ls.push_back(b.columns.cols() > 1 ? std::to_string(l) : "");
    }
    if (b.columns.cols() > 1) need_l_row = true;
  }
  cells.push_back(gammas);
  if (need_l_row) cells.push_back(ls);
  for (int j = 1; j <= cg.na; ++j)
    for (int k = 1; k <= cg.nb; ++k) {
      std::vector<std::string> row = {std::to_string(j), std::to_string(k)};
      const int jk = (j - 1) * cg.nb + (k - 1);
      for (const CGBlock& b : cg.blocks)
        for (std::size_t l = 0; l < b.columns.cols(); ++l)
          row.push_back(snap(b.columns(jk, l), tol));
      cells.push_back(row);
    }
  std::ostringstream out;
  out << "CG matrix of R(" << cg.alpha << ") x R(" << cg.beta << ")\n"
      << render_table(cells) << "unitary defect " << cg.unitary_defect
      << ", block-diagonalization residual " << cg.residual << "\n";
  return out.str();
}

std::string render_decomposition(const Decomposition& d, const CharacterTable& t) {
  std::ostringstream out;
  out << "R(" << d.alpha << ") x R(" << d.beta << ") =";
  bool first = true;
  for (std::size_t g = 0; g < d.m.size(); ++g) {
    for (int rep = 0; rep < d.m[g]; ++rep) {
      out << (first ? " " : " + ") << "R(" << t.labels[g] << ")";
      first = false;
    }
  }
  if (first) out << " 0";
  out << "\n";
  return out.str();
}

std::string render_classes(const Group& g, const ClassPartition& p) {
  std::ostringstream out;
  for (std::size_t c = 0; c < p.count(); ++c) {
    out << "C" << c + 1 << " = {";
    for (std::size_t e = 0; e < p.classes[c].size(); ++e)
      out << (e ? ", " : "") << g.label(p.classes[c][e]);
    out << "}\n";
  }
  return out.str();
}

std::string render_orders(const Group& g) {
  std::vector<std::vector<std::string>> cells = {{"element", "label", "order"}};
  for (int j = 1; j <= static_cast<int>(g.order); ++j)
    cells.push_back({std::to_string(j), g.label(j),
                     std::to_string(element_order(g, j))});
  return render_table(cells);
}

std::string render_representation(const Representation& r, const Tolerances& tol) {
  std::ostringstream out;
  out << "R(" << r.label << "), dimension " << r.dim << "\n";
  for (std::size_t e = 1; e < r.mats.size(); ++e) {
    out << r.group->label(static_cast<int>(e)) << ": ";
    for (int i = 0; i < r.dim; ++i) {
      out << "[";
      for (int j = 0; j < r.dim; ++j)
        out << (j ? ", " : "") << snap(r.mats[e](i, j), tol);
      out << "]";
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace groupcg

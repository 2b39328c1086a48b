// Command-line front end: group generation and validation, conjugacy
// classes, element orders, character tables, Kronecker decompositions,
// Clebsch-Gordan matrices, verification against the embedded reference
// tables, and Cayley-graph export.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "groupcg/error.hpp"
#include "groupcg/io.hpp"
#include "groupcg/refdata.hpp"
#include "groupcg/reproduce.hpp"

namespace {

using namespace groupcg;

struct GroupSource {
  std::string builtin_name;
  std::string file;

  void add_options(CLI::App* cmd) {
    auto* g = cmd->add_option("--group", builtin_name,
                              "built-in group: Q8, Q16, Q32 or G32_42");
    auto* f = cmd->add_option("--file", file, "Cayley table file (.cayley)");
    g->excludes(f);
    f->excludes(g);
  }

  bool is_builtin() const { return !builtin_name.empty(); }

  std::shared_ptr<const Group> load() const {
    if (!builtin_name.empty())
      return std::make_shared<const Group>(builtin(builtin_name));
    if (!file.empty()) {
      std::ifstream in(file);
      if (!in) fail("SyntaxError", "cannot open '" + file + "'");
      return std::make_shared<const Group>(parse_cayley(in));
    }
    fail("UnknownGroup", "exactly one of --group or --file is required");
  }
};

// Irreps with matrices exist for the built-in groups only; for .cayley files
// characters (and hence decompositions) still work via the class-algebra
// route.
struct RepContext {
  std::shared_ptr<const Group> group;
  std::vector<Representation> irreps;
  CharacterTable table;
};

RepContext load_reps(const GroupSource& src) {
  if (!src.is_builtin())
    fail("UnknownGroup",
         "irreducible representation matrices are only available for the "
         "built-in groups");
  RepContext ctx;
  ctx.irreps = builtin_irreps(src.builtin_name);
  ctx.group = ctx.irreps.front().group;
  ctx.table = character_table_from_irreps(ctx.irreps);
  return ctx;
}

void require_label(const CharacterTable& table, int label) {
  table.row_of_label(label);  // throws UnknownIrrep
}

std::vector<int> parse_generator_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ','))
    if (!tok.empty()) out.push_back(std::stoi(tok));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite group Clebsch-Gordan toolkit"};
  app.require_subcommand(1);

  GroupSource source;
  int alpha = 0, beta = 0;
  unsigned seed = 42;
  std::string format = "text";
  std::string generators;
  std::string only;

  auto* gen = app.add_subcommand("gen", "print a group as a .cayley table");
  source.add_options(gen);

  auto* validate_cmd = app.add_subcommand("validate", "check the group axioms");
  source.add_options(validate_cmd);

  auto* classes_cmd = app.add_subcommand("classes", "conjugacy classes");
  source.add_options(classes_cmd);

  auto* orders_cmd = app.add_subcommand("orders", "element orders");
  source.add_options(orders_cmd);

  auto* chartab_cmd =
      app.add_subcommand("chartab", "character table (class-algebra method)");
  source.add_options(chartab_cmd);
  chartab_cmd->add_option("--format", format, "text, csv or json");
  chartab_cmd->add_option("--seed", seed, "randomization seed");

  auto* irreps_cmd =
      app.add_subcommand("irreps", "published irreducible representations");
  source.add_options(irreps_cmd);
  irreps_cmd->add_option("--alpha", alpha, "only this irrep label");
  irreps_cmd->add_option("--format", format, "text or json");

  auto* decompose_cmd =
      app.add_subcommand("decompose", "multiplicities of a Kronecker product");
  source.add_options(decompose_cmd);
  decompose_cmd->add_option("--alpha", alpha, "first irrep label")->required();
  decompose_cmd->add_option("--beta", beta, "second irrep label")->required();
  decompose_cmd->add_option("--format", format, "text or json");
  decompose_cmd->add_option("--seed", seed, "randomization seed (file groups)");

  auto* cg_cmd = app.add_subcommand("cg", "Clebsch-Gordan matrix of a product");
  source.add_options(cg_cmd);
  cg_cmd->add_option("--alpha", alpha, "first irrep label")->required();
  cg_cmd->add_option("--beta", beta, "second irrep label")->required();
  cg_cmd->add_option("--format", format, "text or json");

  auto* verify_cmd = app.add_subcommand(
      "verify", "re-derive and check every embedded reference table");
  verify_cmd->add_option("--only", only, "restrict to one group");
  verify_cmd->add_option("--seed", seed, "randomization seed");

  auto* graph_cmd = app.add_subcommand("graph", "Cayley graph in DOT syntax");
  source.add_options(graph_cmd);
  graph_cmd->add_option("--generators", generators, "comma separated element list")
      ->required();
  graph_cmd->add_option("--format", format, "dot");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (*gen) {
      std::cout << format_cayley(*source.load());
    } else if (*validate_cmd) {
      const ValidationReport report = validate(*source.load());
      if (!report.ok) fail("AxiomError", report.message());
      std::cout << "OK: " << report.message() << "\n";
    } else if (*classes_cmd) {
      auto group = source.load();
      std::cout << render_classes(*group, conjugacy_classes(*group));
    } else if (*orders_cmd) {
      std::cout << render_orders(*source.load());
    } else if (*chartab_cmd) {
      const CharacterTable table = character_table_dixon(*source.load(), seed);
      if (format == "csv")
        std::cout << character_table_csv(table);
      else if (format == "json")
        std::cout << character_table_to_json(table).dump(1) << "\n";
      else
        std::cout << render_character_table(table);
    } else if (*irreps_cmd) {
      const RepContext ctx = load_reps(source);
      if (alpha != 0) require_label(ctx.table, alpha);
      if (format == "json") {
        ordered_json out = ordered_json::array();
        for (const Representation& r : ctx.irreps)
          if (alpha == 0 || r.label == alpha)
            out.push_back(representation_to_json(r, source.builtin_name));
        std::cout << (out.size() == 1 ? out[0] : out).dump(1) << "\n";
      } else {
        for (const Representation& r : ctx.irreps)
          if (alpha == 0 || r.label == alpha) std::cout << render_representation(r);
      }
    } else if (*decompose_cmd) {
      CharacterTable table;
      if (source.is_builtin()) {
        table = character_table_from_irreps(builtin_irreps(source.builtin_name));
      } else {
        table = character_table_dixon(*source.load(), seed);
      }
      require_label(table, alpha);
      require_label(table, beta);
      const Decomposition d = decompose(alpha, beta, table);
      if (format == "json")
        std::cout << decomposition_to_json(d, table).dump(1) << "\n";
      else
        std::cout << render_decomposition(d, table);
    } else if (*cg_cmd) {
      const RepContext ctx = load_reps(source);
      require_label(ctx.table, alpha);
      require_label(ctx.table, beta);
      const Representation& a = ctx.irreps[ctx.table.row_of_label(alpha)];
      const Representation& b = ctx.irreps[ctx.table.row_of_label(beta)];
      const CGMatrix cg = cg_matrix(a, b, ctx.irreps, ctx.table);
      if (format == "json")
        std::cout << cg_to_json(cg).dump(1) << "\n";
      else
        std::cout << render_cg_text(cg);
    } else if (*verify_cmd) {
      ReproduceOptions opts;
      opts.seed = seed;
      if (!only.empty()) {
        opts.only = builtin_from_name(only);
        if (!opts.only) fail("UnknownGroup", "'" + only + "'");
      }
      const auto items = reproduce_reference_tables(opts);
      std::cout << format_reproduce_report(items);
      for (const ReproduceItem& item : items)
        if (!item.pass) return 1;
    } else if (*graph_cmd) {
      auto group = source.load();
      const std::vector<int> gens = parse_generator_list(generators);
      static const char* kPalette[] = {"blue", "red", "green", "brown",
                                       "purple", "orange", "cyan", "magenta"};
      std::vector<std::string> colors;
      for (std::size_t i = 0; i < gens.size(); ++i)
        colors.push_back(kPalette[i % std::size(kPalette)]);
      std::cout << cayley_graph_dot(*group, gens, colors);
    }
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

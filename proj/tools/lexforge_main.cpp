#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lexforge/amalgam.hpp"
#include "lexforge/analysis.hpp"
#include "lexforge/dot.hpp"
#include "lexforge/extension.hpp"
#include "lexforge/generic.hpp"
#include "lexforge/json_io.hpp"
#include "lexforge/structure.hpp"
#include "lexforge/tree.hpp"

namespace {

using namespace lexforge;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("parse", "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Json load_json(const std::string& path) {
  return parse_json_text(read_input(path));
}

LexStructure load_structure(const std::string& path) {
  return structure_or_bundle_from_json(load_json(path));
}

Rat parse_rat(const std::string& text) {
  auto r = Rat::from_flexible_string(text);
  if (!r) throw Error("parse", "not a rational: " + text);
  return *r;
}

std::vector<Rat> parse_values(const std::string& csv) {
  std::vector<Rat> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rat(item));
  return out;
}

std::optional<Rat> parse_opt_rat(const std::string& text) {
  if (text.empty()) return std::nullopt;
  return parse_rat(text);
}

void emit(const Json& j) { std::cout << dump_json(j); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"toolkit for finite colored linear orders with a first-difference pair function"};
  app.require_subcommand(1);

  // shared option storage
  std::string file_a, file_b, file_c;
  std::string values_csv, m_text, left_text, right_text;
  int n = 0, k = 1, rounds = 0, cut = 0, color = 0, split = 0;
  std::optional<int> born_before;
  std::uint64_t seed = 0;
  bool as_tree = false;

  auto* cmd_validate = app.add_subcommand("validate", "check a structure file against the class axioms");
  cmd_validate->add_option("file", file_a, "structure JSON (- for stdin)")->required();

  auto* cmd_gen = app.add_subcommand("gen", "generate a random valid structure");
  cmd_gen->add_option("--n", n, "number of points")->required();
  cmd_gen->add_option("--values", values_csv, "comma list of rationals");
  cmd_gen->add_option("--seed", seed, "rng seed")->required();

  auto* cmd_lex = app.add_subcommand("lex", "build the lexicographic reference model");
  cmd_lex->add_option("--k", k, "alphabet size")->required();
  cmd_lex->add_option("--n", n, "string length")->required();
  cmd_lex->add_option("--values", values_csv, "n strictly increasing rationals");

  auto* cmd_amalgamate = app.add_subcommand("amalgamate", "amalgamate B and C over A");
  cmd_amalgamate->add_option("a", file_a, "shared substructure A")->required();
  cmd_amalgamate->add_option("b", file_b, "extension B")->required();
  cmd_amalgamate->add_option("c", file_c, "extension C")->required();
  cmd_amalgamate->add_option("--split", split, "middle-set cut position (default 0)");
  cmd_amalgamate->add_option("--seed", seed, "accepted for uniformity; the construction is deterministic");

  auto* cmd_jep = app.add_subcommand("jep", "jointly embed two structures");
  cmd_jep->add_option("b", file_b, "first structure")->required();
  cmd_jep->add_option("c", file_c, "second structure")->required();

  auto* cmd_saturate = app.add_subcommand("saturate", "saturate the extension axioms");
  cmd_saturate->add_option("file", file_a, "seed structure")->required();
  cmd_saturate->add_option("--values", values_csv, "value pool")->required();
  cmd_saturate->add_option("--rounds", rounds, "saturation rounds")->required();
  cmd_saturate->add_option("--seed", seed, "rng seed")->required();

  auto* cmd_axioms = app.add_subcommand("axioms", "check the extension axioms");
  cmd_axioms->add_option("file", file_a, "structure or saturation bundle")->required();
  cmd_axioms->add_option("--values", values_csv, "value pool")->required();
  cmd_axioms->add_option("--born-before", born_before, "only anchors born before this round");

  auto* cmd_ef = app.add_subcommand("ef", "back-and-forth game equivalence");
  cmd_ef->add_option("a", file_a, "first structure")->required();
  cmd_ef->add_option("b", file_b, "second structure")->required();
  cmd_ef->add_option("--k", k, "rounds")->required();
  cmd_ef->add_option("--values", values_csv, "move value pool");

  auto* cmd_cuts = app.add_subcommand("cuts", "list all cuts of a structure");
  cmd_cuts->add_option("file", file_a, "structure JSON")->required();

  auto* cmd_insert = app.add_subcommand("insert", "insert a point into a cut");
  cmd_insert->add_option("file", file_a, "structure JSON")->required();
  cmd_insert->add_option("--cut", cut, "cut index (points below the new one)")->required();
  cmd_insert->add_option("--color", color, "0 or 1")->required();
  cmd_insert->add_option("--left", left_text, "pair value to the point below the cut");
  cmd_insert->add_option("--right", right_text, "pair value to the point above the cut");

  auto* cmd_complete = app.add_subcommand("complete", "fill every internal cut with a 1-colored point");
  cmd_complete->add_option("file", file_a, "structure JSON")->required();

  auto* cmd_embed = app.add_subcommand("embed", "constant-value linear order");
  cmd_embed->add_option("--n", n, "number of points")->required();
  cmd_embed->add_option("--m", m_text, "the constant pair value")->required();

  auto* cmd_tree = app.add_subcommand("tree", "leaf order and branch-to-cut map of a tree");
  cmd_tree->add_option("file", file_a, "tree JSON (nested child lists)")->required();

  auto* cmd_dot = app.add_subcommand("export-dot", "Graphviz rendering");
  cmd_dot->add_option("file", file_a, "structure or tree JSON")->required();
  cmd_dot->add_flag("--tree", as_tree, "treat the input as a tree");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (*cmd_validate) {
      auto report = validate(load_structure(file_a));
      emit(to_json(report));
      return report.ok ? 0 : 1;
    }
    if (*cmd_gen) {
      emit(to_json(random_structure(n, parse_values(values_csv), seed)));
    } else if (*cmd_lex) {
      emit(to_json(lex_model(k, n, parse_values(values_csv))));
    } else if (*cmd_amalgamate) {
      AmalgamStrategy strategy;
      strategy.c0_split = split;
      const auto b = load_structure(file_b);
      const auto c = load_structure(file_c);
      auto j = to_json(amalgamate(load_structure(file_a), b, c, strategy));
      j["b"] = to_json(b);
      j["c"] = to_json(c);
      emit(j);
    } else if (*cmd_jep) {
      const auto b = load_structure(file_b);
      const auto c = load_structure(file_c);
      auto j = to_json(joint_embed(b, c));
      j["b"] = to_json(b);
      j["c"] = to_json(c);
      emit(j);
    } else if (*cmd_saturate) {
      emit(to_json(
          saturate(load_structure(file_a), parse_values(values_csv), rounds, seed)));
    } else if (*cmd_axioms) {
      const Json j = load_json(file_a);
      GenerationFilter filter;
      if (born_before) {
        std::map<PointId, int> births;
        if (j.is_object() && j.contains("log"))
          births = saturation_from_json(j).log.births;
        const int bound = *born_before;
        filter = [births, bound](PointId id) {
          auto it = births.find(id);
          return (it == births.end() ? 0 : it->second) < bound;
        };
      }
      auto report = check_extension_axioms(structure_or_bundle_from_json(j),
                                           parse_values(values_csv), filter);
      emit(to_json(report));
    } else if (*cmd_ef) {
      const bool equivalent = ef_game(load_structure(file_a), load_structure(file_b),
                                      k, parse_values(values_csv));
      emit(Json{{"equivalent", equivalent}});
    } else if (*cmd_cuts) {
      emit(to_json(enumerate_cuts(load_structure(file_a))));
    } else if (*cmd_insert) {
      auto s = load_structure(file_a);
      auto cuts = enumerate_cuts(s);
      if (cut < 0 || cut >= static_cast<int>(cuts.size()))
        throw Error("domain", "cut index out of range");
      emit(to_json(insert_into_cut(s, cuts[cut], color_from_int(color),
                                   parse_opt_rat(left_text),
                                   parse_opt_rat(right_text))));
    } else if (*cmd_complete) {
      emit(to_json(complete_structure(load_structure(file_a))));
    } else if (*cmd_embed) {
      emit(to_json(embed_linear_order(n, parse_rat(m_text))));
    } else if (*cmd_tree) {
      emit(to_json(tree_to_order(tree_from_json(load_json(file_a)))));
    } else if (*cmd_dot) {
      if (as_tree) std::cout << to_dot(tree_from_json(load_json(file_a)));
      else std::cout << to_dot(load_structure(file_a));
    }
    return 0;
  } catch (const Error& e) {
    emit(Json{{"error", e.kind()}, {"detail", e.what()}});
    return 1;
  } catch (const std::exception& e) {
    emit(Json{{"error", "internal"}, {"detail", e.what()}});
    return 1;
  }
}

// Command-line front end: load JSON instances, run the library checks, emit
// deterministic JSON reports, export axis slices as CSV.
// Exit status: 0 = property holds, 1 = property fails, 2 = input/usage error.

#include "monocell/gen.hpp"
#include "monocell/grid.hpp"
#include "monocell/json_io.hpp"
#include "monocell/mono.hpp"
#include "monocell/topo.hpp"
#include "monocell/toric.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

using namespace monocell;
using jsonio::json;

namespace {

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw plcore::InputError("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw plcore::InputError("parse error in '" + path + "': " + e.what());
  }
  return j;
}

void emit(const json& j, const std::string& out_path) {
  std::string text = j.dump(2);
  text += '\n';
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) throw plcore::InputError("cannot write '" + out_path + "'");
    out << text;
  }
}

plcore::Complex load_set(const std::string& path) {
  json j = load_json(path);
  if (jsonio::is_graph_instance(j)) {
    auto g = jsonio::graph_from_json(j);
    return g.complex;
  }
  return jsonio::complex_from_json(j);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact PL monotonicity checks"};
  app.require_subcommand(1);

  std::string input, out_path, mode, kind = "map", a_path, mutate;
  int axis = 1, resolution = 4, n = 2, k = 1;
  std::uint64_t seed = 0;
  std::vector<std::string> values;

  auto* sm = app.add_subcommand("check-semimonotone",
                                "decide semi-monotonicity of a set");
  sm->add_option("input", input)->required();
  sm->add_option("--out", out_path);

  auto* fn = app.add_subcommand("check-fn", "decide function monotonicity");
  fn->add_option("input", input)->required();
  fn->add_option("--route", mode)
      ->check(CLI::IsMember({"definition", "connectivity", "levelsets"}));
  fn->add_option("--out", out_path);

  auto* mp = app.add_subcommand("check-map", "decide map monotonicity");
  mp->add_option("input", input)->required();
  mp->add_option("--mode", mode)
      ->check(CLI::IsMember({"inductive", "connectivity", "both"}));
  mp->add_option("--out", out_path);

  auto* mt = app.add_subcommand("matroid", "basis system and exchange axiom");
  mt->add_option("input", input)->required();
  mt->add_option("--out", out_path);

  auto* tc = app.add_subcommand("toric", "certify a toric cube sample");
  tc->add_option("--A", a_path, "exponent data JSON")->required();
  tc->add_option("--resolution", resolution);
  tc->add_option("--out", out_path);

  auto* ev = app.add_subcommand("evidence", "regular-cell evidence profile");
  ev->add_option("input", input)->required();
  ev->add_option("--out", out_path);

  auto* gn = app.add_subcommand("generate", "emit a corpus instance");
  gn->add_option("--kind", kind)
      ->check(CLI::IsMember({"semimonotone", "function", "map"}));
  gn->add_option("--seed", seed);
  gn->add_option("--n", n);
  gn->add_option("--k", k);
  gn->add_option("--resolution", resolution);
  gn->add_option("--mutate", mutate)
      ->check(CLI::IsMember({"notch-domain", "flatten-slice", "collide-levels"}));
  gn->add_option("--out", out_path);

  auto* sl = app.add_subcommand("slice", "export axis slices as CSV");
  sl->add_option("input", input)->required();
  sl->add_option("--axis", axis, "1-based axis")->required();
  sl->add_option("--values", values, "rational slice values")->required();
  sl->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (sm->parsed()) {
      auto v = mono::is_semi_monotone(load_set(input));
      emit(jsonio::to_json(v), out_path);
      return v.holds ? 0 : 1;
    }
    if (fn->parsed()) {
      auto g = jsonio::graph_from_json(load_json(input));
      mono::Verdict v;
      if (mode == "definition")
        v = mono::is_monotone_function(g, mono::FnRoute::Definition);
      else if (mode == "connectivity")
        v = mono::is_monotone_function(g, mono::FnRoute::Connectivity);
      else if (mode == "levelsets")
        v = mono::is_monotone_function(g, mono::FnRoute::LevelSets);
      else
        v = mono::is_monotone_function(g);
      emit(jsonio::to_json(v), out_path);
      return v.holds ? 0 : 1;
    }
    if (mp->parsed()) {
      auto g = jsonio::graph_from_json(load_json(input));
      mono::Verdict v;
      if (mode == "inductive")
        v = mono::is_monotone_map(g, mono::MapMode::Inductive);
      else if (mode == "connectivity")
        v = mono::is_monotone_map(g, mono::MapMode::Connectivity);
      else
        v = mono::is_monotone_map(g);
      emit(jsonio::to_json(v), out_path);
      return v.holds ? 0 : 1;
    }
    if (mt->parsed()) {
      auto g = jsonio::graph_from_json(load_json(input));
      auto m = matroid::basis_system(g);
      auto ax = matroid::check_matroid_axioms(m);
      json j = jsonio::to_json(m);
      j["exchange_axiom"] = ax.ok;
      if (!ax.ok)
        j["counterexample"] = {
            {"H", ax.h_set}, {"G", ax.g_set}, {"h", ax.h_elem}};
      emit(j, out_path);
      return ax.ok ? 0 : 1;
    }
    if (tc->parsed()) {
      auto e = jsonio::exponents_from_json(load_json(a_path));
      auto rep = toric::toric_check(e, resolution);
      emit(jsonio::to_json(rep), out_path);
      return rep.pass ? 0 : 1;
    }
    if (ev->parsed()) {
      json j = load_json(input);
      plcore::GraphComplex g;
      if (jsonio::is_graph_instance(j)) {
        g = jsonio::graph_from_json(j);
      } else {
        g.complex = jsonio::complex_from_json(j);
        for (int a = 0; a < g.complex.ambient_dim; ++a)
          g.domain_axes.push_back(a);
      }
      auto rep = topo::regular_cell_evidence(g);
      emit(jsonio::to_json(rep), out_path);
      return rep.pass ? 0 : 1;
    }
    if (gn->parsed()) {
      gen::GenConfig cfg{.seed = seed, .n = n, .k = k,
                         .resolution = resolution};
      json j;
      if (kind == "semimonotone") {
        auto x = gen::gen_semi_monotone(cfg);
        if (mutate == "notch-domain")
          x = gen::mutate_negative(x, gen::Mutation::NotchDomain);
        else if (!mutate.empty())
          throw plcore::InputError("mutation does not apply to sets");
        j = jsonio::to_json(x);
      } else {
        auto g = kind == "function" ? gen::gen_monotone_function(cfg)
                                    : gen::gen_monotone_map(cfg);
        if (mutate == "flatten-slice")
          g = gen::mutate_negative(g, gen::Mutation::FlattenSlice);
        else if (mutate == "collide-levels")
          g = gen::mutate_negative(g, gen::Mutation::CollideLevels);
        else if (mutate == "notch-domain")
          throw plcore::InputError("notch-domain applies to sets");
        j = jsonio::to_json(g);
      }
      emit(j, out_path);
      return 0;
    }
    // slice
    plcore::Complex x = load_set(input);
    if (axis < 1 || axis > x.ambient_dim)
      throw plcore::InputError("axis out of range");
    std::string csv = "axis,value,cell_id,vertex_index,coords...\n";
    for (const auto& vs : values) {
      Rat c = rat_from_string(vs);
      plcore::ConeDescriptor cone;
      cone.atoms = {plcore::ConeAtom{axis - 1, plcore::RelOp::EQ, c}};
      plcore::Complex s = plcore::intersect_cone(x, cone);
      for (size_t cell = 0; cell < s.top_simplices.size(); ++cell) {
        const auto& simplex = s.top_simplices[cell];
        for (size_t vi = 0; vi < simplex.size(); ++vi) {
          csv += std::to_string(axis) + "," + vs + "," + std::to_string(cell) +
                 "," + std::to_string(vi);
          for (const auto& coord : s.vertices[simplex[vi]])
            csv += "," + std::to_string(coord.convert_to<double>());
          csv += "\n";
        }
      }
    }
    if (out_path.empty()) {
      std::cout << csv;
    } else {
      std::ofstream out(out_path);
      if (!out) throw plcore::InputError("cannot write '" + out_path + "'");
      out << csv;
    }
    return 0;
  } catch (const plcore::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const plcore::UnsupportedError& e) {
    std::cerr << "unsupported input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

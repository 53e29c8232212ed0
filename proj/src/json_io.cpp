#include "monocell/json_io.hpp"

#include <string>

namespace monocell::jsonio {

using plcore::InputError;

namespace {

json rat_json(const Rat& r) { return rat_to_string(r); }

json point_json(const plcore::Point& p) {
  json a = json::array();
  for (const auto& x : p) a.push_back(rat_json(x));
  return a;
}

Rat rat_at(const json& j) {
  if (!j.is_string()) throw InputError("rational must be a \"p/q\" string");
  try {
    return rat_from_string(j.get<std::string>());
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
}

const json& field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end())
    throw InputError(std::string("missing field '") + key + "'");
  return *it;
}

std::string rel_str(plcore::RelOp r) {
  switch (r) {
    case plcore::RelOp::LT: return "<";
    case plcore::RelOp::EQ: return "=";
    default: return ">";
  }
}

}  // namespace

json to_json(const Complex& k) {
  json j;
  j["ambient_dim"] = k.ambient_dim;
  j["vertices"] = json::array();
  for (const auto& v : k.vertices) j["vertices"].push_back(point_json(v));
  j["top_simplices"] = k.top_simplices;
  return j;
}

json to_json(const GraphComplex& g) {
  json j = to_json(g.complex);
  j["domain_axes"] = g.domain_axes;
  j["codomain_axes"] = g.codomain_axes;
  return j;
}

json to_json(const mono::Verdict& v) {
  json j;
  j["holds"] = v.holds;
  j["trace"] = v.trace;
  if (v.witness) {
    json w;
    if (v.witness->cone) {
      json atoms = json::array();
      for (const auto& a : v.witness->cone->atoms)
        atoms.push_back({{"axis", a.axis},
                         {"rel", rel_str(a.rel)},
                         {"threshold", rat_json(a.threshold)}});
      w["cone"] = atoms;
    }
    w["points"] = json::array();
    for (const auto& p : v.witness->points) w["points"].push_back(point_json(p));
    if (v.witness->axis) w["axis"] = *v.witness->axis;
    w["detail"] = v.witness->detail;
    j["witness"] = w;
  }
  return j;
}

json to_json(const matroid::Matroid& m) {
  json j;
  j["ground"] = m.ground;
  j["rank"] = m.rank;
  j["bases"] = json::array();
  for (const auto& b : m.bases) j["bases"].push_back(b);
  return j;
}

json to_json(const topo::EvidenceReport& r) {
  return {{"connected", r.connected},
          {"chi_closure", r.chi_closure},
          {"chi_frontier", r.chi_frontier},
          {"homology_closure", r.homology_closure},
          {"homology_frontier", r.homology_frontier},
          {"pass", r.pass}};
}

json to_json(const toric::ToricReport& r) {
  return {{"dim", r.dim},
          {"map_verdict", to_json(r.map_verdict)},
          {"sample_matroid", to_json(r.sample_matroid)},
          {"expected_matroid", to_json(r.expected_matroid)},
          {"matroid_match", r.matroid_match},
          {"evidence", to_json(r.evidence)},
          {"pass", r.pass}};
}

Complex complex_from_json(const json& j) {
  if (!j.is_object()) throw InputError("instance must be a JSON object");
  int amb = field(j, "ambient_dim").get<int>();
  std::vector<plcore::Point> verts;
  for (const auto& v : field(j, "vertices")) {
    plcore::Point p;
    for (const auto& x : v) p.push_back(rat_at(x));
    verts.push_back(std::move(p));
  }
  std::vector<std::vector<int>> tops;
  for (const auto& s : field(j, "top_simplices"))
    tops.push_back(s.get<std::vector<int>>());
  return plcore::make_complex(amb, std::move(verts), std::move(tops));
}

GraphComplex graph_from_json(const json& j) {
  GraphComplex g;
  g.complex = complex_from_json(j);
  g.domain_axes = field(j, "domain_axes").get<std::vector<int>>();
  g.codomain_axes = field(j, "codomain_axes").get<std::vector<int>>();
  if (auto err = plcore::validate(g)) throw InputError(*err);
  return g;
}

toric::ExponentData exponents_from_json(const json& j) {
  toric::ExponentData e;
  e.d = field(j, "d").get<int>();
  for (const auto& row : field(j, "rows"))
    e.rows.push_back(row.get<std::vector<int>>());
  toric::check_exponents(e);
  return e;
}

bool is_graph_instance(const json& j) {
  return j.is_object() && j.contains("domain_axes");
}

}  // namespace monocell::jsonio

#pragma once

// JSON serialization: instances (Complex/GraphComplex, exponent data) and
// reports (verdicts, matroids, evidence, toric). Rationals travel as "p/q"
// strings and round-trip bit-exactly; key order is sorted, so repeated runs
// emit identical bytes.

#include "monocell/gen.hpp"
#include "monocell/mono.hpp"
#include "monocell/topo.hpp"
#include "monocell/toric.hpp"

#include <json.hpp>

namespace monocell::jsonio {

using nlohmann::json;
using plcore::Complex;
using plcore::GraphComplex;

json to_json(const Complex& k);
json to_json(const GraphComplex& g);
json to_json(const mono::Verdict& v);
json to_json(const matroid::Matroid& m);
json to_json(const topo::EvidenceReport& r);
json to_json(const toric::ToricReport& r);

// Throw InputError with the offending key on malformed input.
Complex complex_from_json(const json& j);
GraphComplex graph_from_json(const json& j);
toric::ExponentData exponents_from_json(const json& j);

// True when the object carries domain/codomain axes.
bool is_graph_instance(const json& j);

}  // namespace monocell::jsonio

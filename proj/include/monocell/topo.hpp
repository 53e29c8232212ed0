#pragma once

// Topological evidence: Euler characteristics, rational homology ranks, the
// ball/sphere evidence profile for regular cells, and the closure-gluing
// identity for axis slices.

#include "monocell/graph.hpp"

#include <vector>

namespace monocell::topo {

using plcore::Complex;
using plcore::GraphComplex;

// Alternating sum of face counts over the full face lattice.
int euler_characteristic(const Complex& k);

// Rational simplicial homology ranks h_0..h_dim of the closed realization.
// Throws UnsupportedError when the face lattice exceeds the cap (default
// 20000, override with MONOCELL_FACE_CAP).
std::vector<int> homology_ranks(const Complex& k);

struct EvidenceReport {
  bool connected = false;  // of the open realization
  int chi_closure = 0;
  int chi_frontier = 0;
  std::vector<int> homology_closure;
  std::vector<int> homology_frontier;
  bool pass = false;
};

// Pass iff the closure looks like a ball (connected, chi = 1, ranks
// (1,0,...,0)) and the frontier like a sphere (ranks (1,0,...,0,1) for
// n >= 2, two points for n = 1). Evidence, not a homeomorphism proof.
EvidenceReport regular_cell_evidence(const GraphComplex& f);

// Closure-gluing identity at the axis slice {x_axis = c} (0-based column):
// cl(F_+) n cl(F_-) = cl(F_0) as point sets, and F_0 is connected.
bool glue_check(const GraphComplex& f, int axis, const Rat& c);

}  // namespace monocell::topo

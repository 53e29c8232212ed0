#pragma once

// Systems of basis sets attached to a map: which size-n coordinate subsets
// project injectively from the graph. Matroid axioms are verified, never
// assumed. Ground elements are axis labels so that matroids of different
// graphs (fibers, projections) can be compared.

#include "monocell/graph.hpp"

#include <set>
#include <string>

namespace monocell::matroid {

using plcore::GraphComplex;

struct Matroid {
  std::vector<std::string> ground;               // in report order
  std::set<std::vector<std::string>> bases;      // each basis sorted
  int rank = 0;

  bool operator==(const Matroid& other) const {
    return bases == other.bases && rank == other.rank;
  }
};

// Subsets of {0..m-1} of size n, in colexicographic order.
std::vector<std::vector<int>> subsets_colex(int m, int n);

// Labels per column of the graph: x_1..x_n for domain axes (in domain
// order), y_1..y_k for codomain axes.
std::vector<std::string> default_labels(const GraphComplex& f);

// All size-n axis subsets H with the projection to H injective on the open
// realization. `labels` overrides the per-column names (used when a fiber
// keeps its parent's labels).
Matroid basis_system(const GraphComplex& f,
                     const std::vector<std::string>& labels = {});

struct ExchangeCheck {
  bool ok = true;
  std::vector<std::string> h_set, g_set;  // counterexample (H, G, h)
  std::string h_elem;
};

// Basis-exchange axiom over all pairs.
ExchangeCheck check_matroid_axioms(const Matroid& m);

// Contraction by an independent label set followed by restriction.
Matroid minor(const Matroid& m, const std::vector<std::string>& contract,
              const std::vector<std::string>& restrict_to);

struct TangentMatroid {
  Matroid matroid;
  // Set when the per-simplex linear matroids have no inclusion-maximum; the
  // returned basis family is then their union.
  bool incomparable = false;
};

// Linear matroid of the tangent space on each top simplex (columns of
// [I_n | J^T] indexed by axis); the inclusion-maximal family plays the role
// of the value at a generic point.
TangentMatroid tangent_matroid(const GraphComplex& f,
                               const std::vector<std::string>& labels = {});

// True iff the projected image has dimension |axes| (axes are columns).
bool independence_check(const GraphComplex& f, const std::vector<int>& axes);

}  // namespace monocell::matroid

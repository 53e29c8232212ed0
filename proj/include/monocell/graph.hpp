#pragma once

// GraphComplex: a complex in ambient dimension n+k together with a partition
// of the axes into n domain axes and k codomain axes, whose open realization
// is the graph of a bounded continuous PL map. Axis indices are columns of
// the underlying complex (0-based).

#include "monocell/complex.hpp"

namespace monocell::plcore {

struct GraphComplex {
  Complex complex;
  std::vector<int> domain_axes;    // size n, sorted
  std::vector<int> codomain_axes;  // size k, sorted

  int n() const { return static_cast<int>(domain_axes.size()); }
  int k() const { return static_cast<int>(codomain_axes.size()); }
};

// Checks the partition, the dimension (= n), and injectivity of the domain
// projection on the open realization.
std::optional<std::string> validate(const GraphComplex& f);

// Same underlying complex with domain_axes = t and codomain the complement.
// Precondition: the projection to t is injective (throws InputError with the
// witness rendered into the message otherwise).
GraphComplex project_injective(const GraphComplex& f,
                               const std::vector<int>& t);

// The domain of the map as a complex in ambient dimension n (codomain
// coordinates dropped).
Complex domain_complex(const GraphComplex& f);

// Gradient of the affine function "codomain axis y" with respect to the
// domain axes on one top simplex; nullopt if the simplex projects
// degenerately to the domain.
std::optional<Vec> simplex_gradient(const GraphComplex& f,
                                    const std::vector<int>& simplex,
                                    int codomain_axis);

// Axis labels for reports: x_1..x_n in domain order, y_1..y_k in codomain
// order, by column index.
std::string axis_label(const GraphComplex& f, int axis);

}  // namespace monocell::plcore

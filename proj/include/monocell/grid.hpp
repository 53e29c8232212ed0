#pragma once

// Kuhn (Freudenthal) triangulation of a product grid given by per-axis
// sorted value lists. Conforming across cells; used by the toric sampler
// and the instance generators.

#include "monocell/complex.hpp"

namespace monocell::plcore {

Complex kuhn_grid(const std::vector<std::vector<Rat>>& axis_values);

}  // namespace monocell::plcore

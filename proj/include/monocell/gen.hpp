#pragma once

// Seed-deterministic instance generators for the property corpus, plus
// adversarial mutators that break a targeted property.

#include "monocell/graph.hpp"

#include <cstdint>

namespace monocell::gen {

using plcore::Complex;
using plcore::GraphComplex;

struct GenConfig {
  std::uint64_t seed = 0;
  int n = 2;                          // domain dimension, <= 3
  int k = 1;                          // codomain dimension, <= 2
  int resolution = 3;                 // cells per axis / strip layers, <= 6
  long long denominator_bound = 64;   // of random rationals
};

void check_config(const GenConfig& cfg);

// Recursive strip construction: an interval for n = 1, otherwise the region
// between two affine functions over a generated (n-1)-dimensional instance,
// triangulated in `resolution` layers. Postcondition: semi-monotone.
Complex gen_semi_monotone(const GenConfig& cfg);

// Separable sum of per-axis strictly monotone (or constant) vertex value
// sequences over a randomized box grid. Postcondition: monotone function.
GraphComplex gen_monotone_function(const GenConfig& cfg);

// Affine map over a randomized box grid or a generated strip domain; box
// domains are optionally composed with per-axis strictly increasing PL
// reparameterizations. Postcondition: monotone map under both oracles.
GraphComplex gen_monotone_map(const GenConfig& cfg);

enum class Mutation { NotchDomain, FlattenSlice, CollideLevels };

// NotchDomain: drops a top cell so that some axis slice disconnects.
Complex mutate_negative(const Complex& x, Mutation strategy);

// FlattenSlice: zeroes the slope of one strictly monotone axis on one grid
// band (coordinate behavior becomes None). CollideLevels: replaces the
// codomain by (x_1, x_2 * w(x_1)) with w vanishing past the median grid
// value, so fiber basis systems differ across levels.
GraphComplex mutate_negative(const GraphComplex& f, Mutation strategy);

}  // namespace monocell::gen

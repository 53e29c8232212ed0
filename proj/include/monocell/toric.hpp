#pragma once

// Toric cubes: exact monomial evaluation, the log-linear matroid, PL samples
// on log-uniform grids, and the combined certification report.

#include "monocell/matroid.hpp"
#include "monocell/mono.hpp"
#include "monocell/topo.hpp"

#include <vector>

namespace monocell::toric {

using plcore::Complex;
using plcore::GraphComplex;
using plcore::Point;

struct ExponentData {
  int d = 0;                           // parameters
  std::vector<std::vector<int>> rows;  // one exponent row per cube coordinate
  int n() const { return static_cast<int>(rows.size()); }
};

// Throws InputError on negative entries, empty data, or ragged rows.
void check_exponents(const ExponentData& e);

// (t^{a_1}, ..., t^{a_n}) for t in the open cube (0,1)^d, exactly.
Point toric_eval(const ExponentData& e, const Point& t);

// The matrix of z -> (a_1.z, ..., a_n.z) after z_i = log t_i.
Mat log_linear(const ExponentData& e);

int exponent_rank(const ExponentData& e);

// Linear matroid of the rows of A on labels x_1..x_n: a size-rank subset is
// a basis iff its rows are independent. Zero rows are loops.
matroid::Matroid toric_matroid(const ExponentData& e);

// Graph over the parameters: samples f_A at a log-uniform r-point-per-axis
// grid in (eps, 1-eps)^d, eps = 1/(4r), Kuhn-triangulated. Domain axes are
// the t columns, codomain the cube coordinates.
GraphComplex toric_parameterization(const ExponentData& e, int r);

// The sampled cube itself: the parameterization with the t columns dropped,
// over a basis of toric_matroid as domain. Requires rank(A) = d (or 0, the
// single-point cube).
GraphComplex toric_pl_sample(const ExponentData& e, int r);

struct ToricReport {
  int dim = 0;  // rank of A
  mono::Verdict map_verdict;
  matroid::Matroid sample_matroid;
  matroid::Matroid expected_matroid;
  bool matroid_match = false;
  topo::EvidenceReport evidence;
  bool pass = false;
};

ToricReport toric_check(const ExponentData& e, int r);

}  // namespace monocell::toric

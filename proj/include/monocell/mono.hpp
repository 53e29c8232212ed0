#pragma once

// The monotonicity hierarchy: semi-monotone sets, sub/supermonotone and
// monotone functions, quasi-affine maps, and monotone maps with two
// independent decision routes. Every failing verdict carries a re-checkable
// witness (a disconnecting coordinate cone with two separated points, or a
// violating axis / axis subset).

#include "monocell/graph.hpp"
#include "monocell/matroid.hpp"

#include <optional>
#include <string>
#include <utility>

namespace monocell::mono {

using plcore::Complex;
using plcore::ConeDescriptor;
using plcore::GraphComplex;
using plcore::Point;

struct Witness {
  std::optional<ConeDescriptor> cone;  // disconnecting subspace, if any
  std::vector<Point> points;           // two points in distinct components
  std::optional<int> axis;             // violating axis (column), if any
  std::string detail;
};

struct Verdict {
  bool holds = true;
  std::optional<Witness> witness;       // present iff !holds
  std::vector<std::string> trace;       // cones / sub-checks performed

  static Verdict yes(std::vector<std::string> tr = {}) {
    Verdict v;
    v.trace = std::move(tr);
    return v;
  }
  static Verdict no(Witness w, std::vector<std::string> tr = {}) {
    Verdict v;
    v.holds = false;
    v.witness = std::move(w);
    v.trace = std::move(tr);
    return v;
  }
};

enum class Behavior { Increasing, Decreasing, Independent, None };
std::string to_string(Behavior b);

enum class SemiRoute { Direct, Recursive };
enum class LevelDir { Below, Above };
enum class FnRoute { Definition, Connectivity, LevelSets };
enum class MapMode { Inductive, Connectivity };
enum class EnvelopeKind { Inf, Sup };

// Semi-monotone: every intersection with an affine coordinate subspace is
// connected. Direct: grid values per axis are taken from the input complex.
// Recursive: grids are re-derived on each slice. The no-argument overload
// runs both and requires agreement.
Verdict is_semi_monotone(const Complex& k, SemiRoute route);
Verdict is_semi_monotone(const Complex& k);

// Slope sign of the (single) codomain value along domain axis position j
// (0-based into domain_axes), uniform across top simplices or None.
Behavior coordinate_behavior(const GraphComplex& f, int j);

// Below: every strict sublevel set is semi-monotone; Above: superlevel.
Verdict is_level_monotone(const GraphComplex& f, LevelDir dir);

Verdict is_monotone_function(const GraphComplex& f, FnRoute route);
// All three routes, which must agree (logic error otherwise).
Verdict is_monotone_function(const GraphComplex& f);

// For every size-n axis subset T: injectivity of the projection to T holds
// iff the image of the projection is n-dimensional.
Verdict is_quasi_affine(const GraphComplex& f);

// Inductive: the recursive definition, slicing codomain levels and comparing
// basis systems across levels. Connectivity: quasi-affineness is required
// (InputError otherwise) and every affine-coordinate-subspace section of the
// graph must be connected.
Verdict is_monotone_map(const GraphComplex& f, MapMode mode);
// Both modes when applicable; they must agree.
Verdict is_monotone_map(const GraphComplex& f);

// Graph slice at codomain values. Assignments use column indices of f.
// Returns nullopt when the fiber misses the open graph. Labels of surviving
// axes are preserved from `labels` (defaults to x_i/y_i of f), so fiber
// matroids can be compared with contractions of the parent matroid.
struct Fiber {
  GraphComplex graph;
  std::vector<std::string> labels;  // per column of graph.complex
};
std::optional<Fiber> fiber_restrict(
    const GraphComplex& f, const std::vector<std::pair<int, Rat>>& assignments,
    const std::vector<std::string>& labels = {});

// PL lower/upper envelope over the last domain axis. Supported for projected
// domains of dimension <= 2.
GraphComplex envelope(const GraphComplex& f, EnvelopeKind which);

// Components of openreal(x) minus the graph of sigma (a codimension-1
// monotone-function graph inside x). Exactly two, each semi-monotone; the
// postcondition is checked.
std::pair<Complex, Complex> split_by_graph(const Complex& x,
                                           const GraphComplex& sigma);

// One sign condition stage: a PL function on f given by values at the
// vertices of f's complex, with the target relation.
struct Cut {
  Vec vertex_values;
  plcore::RelOp rel;
};

// Subcomplex of f realizing the conjunction of the sign conditions. Each
// equality-intersection stage must repeat the previous set or cut it by a
// codimension-1 monotone graph.
Complex sign_condition_region(const GraphComplex& f,
                              const std::vector<Cut>& cuts);

// Shared internals (also used by the topological evidence module).
namespace detail {

// Closure of openreal(k) ∩ C as a complex: the inclusion-maximal faces of
// the sliced complex that avoid frontier(k) and the strict-atom boundaries.
Complex open_slice_closure(const Complex& k, const ConeDescriptor& c);

std::string cone_to_string(const ConeDescriptor& c);
std::string cone_to_string(const ConeDescriptor& c,
                           const std::vector<std::string>& labels);

}  // namespace detail

}  // namespace monocell::mono

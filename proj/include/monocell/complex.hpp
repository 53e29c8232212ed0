#pragma once

// Rational simplicial complexes and the operations the monotonicity checkers
// are built from: hyperplane slicing / half-space clipping with conforming
// re-triangulation, frontier subcomplexes, connectivity of open realizations,
// critical-value grids, and exact point membership.
//
// Conventions:
//  * A Complex is a finite set of top simplices over a shared vertex list.
//    Its closed realization is the union of the closed simplices; its open
//    realization is the closed realization minus the frontier subcomplex.
//  * Axis indices are 0-based internally. JSON and report output uses the
//    1-based labels x_1..x_n, y_1..y_k.

#include "monocell/linalg.hpp"

#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace monocell::plcore {

using Point = Vec;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnsupportedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Complex {
  int ambient_dim = 0;
  std::vector<Point> vertices;
  std::vector<std::vector<int>> top_simplices;  // each sorted ascending

  bool empty() const { return top_simplices.empty(); }
  int dim() const {
    int d = -1;
    for (const auto& s : top_simplices)
      d = std::max(d, static_cast<int>(s.size()) - 1);
    return d;
  }
  bool pure() const {
    if (top_simplices.empty()) return true;
    size_t sz = top_simplices.front().size();
    for (const auto& s : top_simplices)
      if (s.size() != sz) return false;
    return true;
  }
};

enum class RelOp { LT, EQ, GT };

struct ConeAtom {
  int axis = 0;  // 0-based
  RelOp rel = RelOp::EQ;
  Rat threshold;
};

// Coordinate cone: at most one atom per axis, axes strictly increasing.
// An atom list with only EQ relations describes an affine coordinate
// subspace; the empty list describes the whole space.
struct ConeDescriptor {
  std::vector<ConeAtom> atoms;
};

void check_cone(const ConeDescriptor& c, int ambient_dim);

// Canonicalizes simplices (sorted, deduplicated) and drops unreferenced
// vertices. Does not run the full validity check.
Complex make_complex(int ambient_dim, std::vector<Point> vertices,
                     std::vector<std::vector<int>> tops);

// Full validity: affinely independent simplices, no duplicate vertices,
// pairwise simplex intersections are shared faces.
std::optional<std::string> validate(const Complex& k);

// All faces of all dimensions, sorted.
std::vector<std::vector<int>> all_faces(const Complex& k);

// Frontier subcomplex: closure of the (d-1)-faces that are incident to a
// number of top simplices other than two. In a valid pure complex a point in
// the relative interior of such a face has no neighborhood (inside the
// d-dimensional realization) covered by the incident stars, and conversely.
Complex frontier(const Complex& k);

// True iff `face` (sorted vertex indices) is a subset of some top simplex of
// `sub`. Both must use the same vertex index space.
bool face_in_subcomplex(const std::vector<int>& face, const Complex& sub);

struct OpenComponents {
  int count = 0;
  std::vector<std::vector<int>> faces;  // non-frontier faces
  std::vector<int> component_of_face;   // parallel to faces
  std::vector<Point> representatives;   // one barycenter per component
};

// Connected components of the open realization, via the incidence graph of
// the non-frontier faces. The empty complex has 0 components (and counts as
// connected).
OpenComponents open_components(const Complex& k);

// Components of the union of the relative interiors of the faces for which
// `removed` is false, decided by the barycenter (exact whenever the removed
// set is a union of cells of a conforming subdivision).
OpenComponents components_with_removal(
    const Complex& k, const std::function<bool(const Point&)>& removed);

// Components of openreal(k) ∩ C for a coordinate cone C. EQ atoms slice,
// strict atoms clip; faces of the sliced complex landing in the frontier of
// k or on the boundary hyperplane of a strict atom are removed before
// counting.
OpenComponents open_components_in_cone(const Complex& k,
                                       const ConeDescriptor& c);

// Sorted distinct vertex coordinates along an axis.
std::vector<Rat> critical_values(const Complex& k, int axis);
// critical values plus midpoints of consecutive gaps
std::vector<Rat> canonical_grid(const Complex& k, int axis);

// Closed realization of |k| ∩ closure(C), re-triangulated conformally.
Complex intersect_cone(const Complex& k, const ConeDescriptor& c);

// Conforming refinement of k cut along the hyperplane {normal·x = rhs}: the
// union of both clipped halves. The realization is unchanged.
Complex subdivide_by_hyperplane(const Complex& k, const Vec& normal,
                                const Rat& rhs);

// Inward-free normal of an (ambient-1)-dimensional simplex: a nonzero vector
// orthogonal to its affine hull, with the offset so the hull is
// {normal·x = rhs}. Nullopt when the simplex is degenerate or of the wrong
// dimension.
std::optional<std::pair<Vec, Rat>> simplex_hyperplane(
    const std::vector<Point>& simplex, int ambient_dim);

// |k| ∩ {normal·x = rhs} (mode 0), ∩ {normal·x <= rhs} (mode -1) or
// ∩ {normal·x >= rhs} (mode +1), for an arbitrary affine functional. The
// triangulation rule depends only on each face's vertex set, so adjacent
// cells stay conforming.
Complex clip_halfspace(const Complex& k, const Vec& normal, const Rat& rhs,
                       int mode);

Point barycenter(const Complex& k, const std::vector<int>& face);
bool simplex_contains(const std::vector<Point>& simplex, const Point& p);
bool contains_point(const Complex& k, const Point& p);
bool openreal_contains(const Complex& k, const Point& p);

// Drops all coordinates not in `axes` (in the given order). Only meaningful
// when the projection is injective on the realization.
Complex project(const Complex& k, const std::vector<int>& axes);

// Max over top simplices of the affine rank of the projected vertex set.
int image_dimension(const Complex& k, const std::vector<int>& axes);

struct InjectivityResult {
  bool injective = true;
  Point p, q;  // witness pair when not injective
};

// Exact test: is the projection to `axes` injective on the open realization?
// Decided by rational linear feasibility over pairs of open faces.
InjectivityResult injective_on(const Complex& k, const std::vector<int>& axes);

// Point-set equality of closed realizations, decided by mutual containment
// of vertices and face barycenters. Exact when the two complexes are
// conforming refinements of a common subdivision (which is how all callers
// obtain them); a heuristic otherwise.
bool same_closed_realization(const Complex& a, const Complex& b);

}  // namespace monocell::plcore

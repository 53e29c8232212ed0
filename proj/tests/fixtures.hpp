#pragma once

// Shared test fixtures: grid-triangulated boxes (Kuhn triangulation),
// function graphs over grids, and the recurring example shapes.

#include "monocell/graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

namespace monocell::fixtures {

using plcore::Complex;
using plcore::GraphComplex;

// Kuhn (Freudenthal) triangulation of an axis-aligned grid of boxes. The
// grid has res[a] cells along axis a between lo[a] and hi[a]; `keep` selects
// which cells to include (by cell index vector). Conforming across cells.
inline Complex grid_box(
    const std::vector<Rat>& lo, const std::vector<Rat>& hi,
    const std::vector<int>& res,
    const std::function<bool(const std::vector<int>&)>& keep = nullptr) {
  const size_t d = lo.size();
  std::map<std::vector<int>, int> vertex_id;
  std::vector<Vec> vertices;
  auto intern = [&](const std::vector<int>& idx) {
    auto it = vertex_id.find(idx);
    if (it != vertex_id.end()) return it->second;
    Vec p(d);
    for (size_t a = 0; a < d; ++a)
      p[a] = lo[a] + (hi[a] - lo[a]) * Rat(idx[a]) / Rat(res[a]);
    int id = static_cast<int>(vertices.size());
    vertices.push_back(std::move(p));
    vertex_id.emplace(idx, id);
    return id;
  };
  std::vector<std::vector<int>> tops;
  std::vector<int> cell(d, 0);
  std::vector<size_t> perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  for (bool more = true; more;) {
    if (!keep || keep(cell)) {
      std::vector<size_t> p = perm;
      do {
        std::vector<int> simplex;
        std::vector<int> idx = cell;
        simplex.push_back(intern(idx));
        for (size_t s = 0; s < d; ++s) {
          ++idx[p[s]];
          simplex.push_back(intern(idx));
        }
        tops.push_back(std::move(simplex));
      } while (std::next_permutation(p.begin(), p.end()));
    }
    more = false;
    for (size_t a = 0; a < d; ++a) {
      if (++cell[a] < res[a]) {
        more = true;
        break;
      }
      cell[a] = 0;
    }
  }
  return plcore::make_complex(static_cast<int>(d), vertices, tops);
}

inline Complex unit_square(int res = 1) {
  return grid_box({Rat(0), Rat(0)}, {Rat(1), Rat(1)}, {res, res});
}

inline Complex unit_interval() {
  return plcore::make_complex(1, {{Rat(0)}, {Rat(1)}}, {{0, 1}});
}

inline Complex triangle() {
  return plcore::make_complex(
      2, {{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(0), Rat(1)}}, {{0, 1, 2}});
}

// Grid-triangulated triangle {x_1,x_2 >= 0, x_1+x_2 <= 1}: Kuhn cells below
// the hypotenuse plus half-cells along it.
inline Complex triangle_grid(int res) {
  std::map<std::pair<int, int>, int> vertex_id;
  std::vector<Vec> vertices;
  auto intern = [&](int i, int j) {
    auto it = vertex_id.find({i, j});
    if (it != vertex_id.end()) return it->second;
    int id = static_cast<int>(vertices.size());
    vertices.push_back({Rat(i) / Rat(res), Rat(j) / Rat(res)});
    vertex_id.emplace(std::make_pair(i, j), id);
    return id;
  };
  std::vector<std::vector<int>> tops;
  for (int i = 0; i < res; ++i) {
    for (int j = 0; j + i < res; ++j) {
      tops.push_back({intern(i, j), intern(i + 1, j), intern(i, j + 1)});
      if (i + j + 2 <= res)
        tops.push_back(
            {intern(i + 1, j), intern(i, j + 1), intern(i + 1, j + 1)});
    }
  }
  return plcore::make_complex(2, vertices, tops);
}

// [0,3]x[0,2] minus the open notch (1,2)x(0,1), as unit cells.
inline Complex u_shape() {
  return grid_box({Rat(0), Rat(0)}, {Rat(3), Rat(2)}, {3, 2},
                  [](const std::vector<int>& c) {
                    return !(c[0] == 1 && c[1] == 0);
                  });
}

// Graph of a PL interpolant: samples `f` at the grid vertices of
// [lo,hi]^d with `res` cells per axis and lifts the Kuhn triangulation.
inline GraphComplex graph_on_grid(const std::vector<Rat>& lo,
                                  const std::vector<Rat>& hi,
                                  const std::vector<int>& res,
                                  const std::function<Vec(const Vec&)>& f) {
  Complex base = grid_box(lo, hi, res);
  const size_t d = lo.size();
  std::vector<Vec> vertices;
  size_t k = 0;
  for (const auto& v : base.vertices) {
    Vec val = f(v);
    k = val.size();
    Vec p = v;
    p.insert(p.end(), val.begin(), val.end());
    vertices.push_back(std::move(p));
  }
  GraphComplex g;
  g.complex = plcore::make_complex(static_cast<int>(d + k), vertices,
                                   base.top_simplices);
  for (size_t a = 0; a < d; ++a) g.domain_axes.push_back(static_cast<int>(a));
  for (size_t a = d; a < d + k; ++a)
    g.codomain_axes.push_back(static_cast<int>(a));
  return g;
}

// Graph over a triangulated domain that is not a full box: lifts an existing
// domain complex by vertex values.
inline GraphComplex graph_on_complex(const Complex& base,
                                     const std::function<Vec(const Vec&)>& f) {
  std::vector<Vec> vertices;
  size_t k = 0;
  for (const auto& v : base.vertices) {
    Vec val = f(v);
    k = val.size();
    Vec p = v;
    p.insert(p.end(), val.begin(), val.end());
    vertices.push_back(std::move(p));
  }
  GraphComplex g;
  g.complex =
      plcore::make_complex(base.ambient_dim + static_cast<int>(k), vertices,
                           base.top_simplices);
  for (int a = 0; a < base.ambient_dim; ++a) g.domain_axes.push_back(a);
  for (size_t a = base.ambient_dim; a < base.ambient_dim + k; ++a)
    g.codomain_axes.push_back(static_cast<int>(a));
  return g;
}

}  // namespace monocell::fixtures

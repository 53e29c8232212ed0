#include "monocell/complex.hpp"

#include "monocell/feasibility.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace monocell::plcore {

namespace {

struct VertexRegistry {
  std::map<Point, int> index;
  std::vector<Point> points;

  int intern(const Point& p) {
    auto [it, inserted] = index.emplace(p, static_cast<int>(points.size()));
    if (inserted) points.push_back(p);
    return it->second;
  }
};

bool is_subset(const std::vector<int>& a, const std::vector<int>& b) {
  // both sorted
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<Point> face_points(const Complex& k, const std::vector<int>& face) {
  std::vector<Point> pts;
  pts.reserve(face.size());
  for (int v : face) pts.push_back(k.vertices[v]);
  return pts;
}

}  // namespace

void check_cone(const ConeDescriptor& c, int ambient_dim) {
  int prev = -1;
  for (const auto& a : c.atoms) {
    if (a.axis < 0 || a.axis >= ambient_dim)
      throw InputError("cone atom axis out of range");
    if (a.axis <= prev)
      throw InputError("cone atoms must have strictly increasing axes");
    prev = a.axis;
  }
}

Complex make_complex(int ambient_dim, std::vector<Point> vertices,
                     std::vector<std::vector<int>> tops) {
  for (const auto& p : vertices)
    if (static_cast<int>(p.size()) != ambient_dim)
      throw InputError("vertex dimension does not match ambient dimension");
  std::set<std::vector<int>> canon;
  for (auto s : tops) {
    for (int v : s)
      if (v < 0 || v >= static_cast<int>(vertices.size()))
        throw InputError("simplex vertex index out of range");
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw InputError("simplex repeats a vertex");
    canon.insert(std::move(s));
  }
  // Drop unreferenced vertices and renumber.
  std::vector<int> remap(vertices.size(), -1);
  Complex out;
  out.ambient_dim = ambient_dim;
  for (const auto& s : canon)
    for (int v : s)
      if (remap[v] < 0) {
        remap[v] = static_cast<int>(out.vertices.size());
        out.vertices.push_back(vertices[v]);
      }
  for (const auto& s : canon) {
    std::vector<int> t;
    t.reserve(s.size());
    for (int v : s) t.push_back(remap[v]);
    std::sort(t.begin(), t.end());
    out.top_simplices.push_back(std::move(t));
  }
  std::sort(out.top_simplices.begin(), out.top_simplices.end());
  return out;
}

std::optional<std::string> validate(const Complex& k) {
  for (size_t i = 0; i < k.vertices.size(); ++i)
    for (size_t j = i + 1; j < k.vertices.size(); ++j)
      if (k.vertices[i] == k.vertices[j]) return "duplicate vertex coordinates";
  for (const auto& s : k.top_simplices) {
    auto pts = face_points(k, s);
    if (affine_rank(pts) != static_cast<int>(s.size()) - 1)
      return "top simplex is affinely dependent";
  }
  // Pairwise intersections must be shared faces: no point may have
  // barycentric support outside the common vertex set in either simplex.
  for (size_t i = 0; i < k.top_simplices.size(); ++i) {
    for (size_t j = i + 1; j < k.top_simplices.size(); ++j) {
      const auto& s = k.top_simplices[i];
      const auto& t = k.top_simplices[j];
      std::vector<int> common;
      std::set_intersection(s.begin(), s.end(), t.begin(), t.end(),
                            std::back_inserter(common));
      const size_t ns = s.size(), nt = t.size(), nv = ns + nt;
      for (int side = 0; side < 2; ++side) {
        const auto& probe = side == 0 ? s : t;
        if (probe.size() == common.size()) continue;  // face of the other
        std::vector<LinConstraint> cons;
        auto var = [&](int which, size_t idx) {
          return which == 0 ? idx : ns + idx;
        };
        for (int which = 0; which < 2; ++which) {
          const auto& simp = which == 0 ? s : t;
          LinConstraint sum;
          sum.coeffs.assign(nv, Rat(0));
          for (size_t a = 0; a < simp.size(); ++a) {
            sum.coeffs[var(which, a)] = 1;
            LinConstraint pos;
            pos.coeffs.assign(nv, Rat(0));
            pos.coeffs[var(which, a)] = -1;
            pos.rel = Rel::LE;
            pos.rhs = 0;
            cons.push_back(std::move(pos));
          }
          sum.rel = Rel::EQ;
          sum.rhs = 1;
          cons.push_back(std::move(sum));
        }
        for (int c = 0; c < k.ambient_dim; ++c) {
          LinConstraint eq;
          eq.coeffs.assign(nv, Rat(0));
          for (size_t a = 0; a < ns; ++a) eq.coeffs[a] = k.vertices[s[a]][c];
          for (size_t a = 0; a < nt; ++a)
            eq.coeffs[ns + a] -= k.vertices[t[a]][c];
          eq.rel = Rel::EQ;
          eq.rhs = 0;
          cons.push_back(std::move(eq));
        }
        // Mass outside the common vertices, on the probe side.
        LinConstraint outside;
        outside.coeffs.assign(nv, Rat(0));
        const auto& simp = side == 0 ? s : t;
        for (size_t a = 0; a < simp.size(); ++a)
          if (!std::binary_search(common.begin(), common.end(), simp[a]))
            outside.coeffs[var(side, a)] = -1;
        outside.rel = Rel::LT;
        outside.rhs = 0;
        cons.push_back(std::move(outside));
        if (solve_feasibility(std::move(cons), nv).feasible)
          return "two top simplices intersect outside a shared face";
      }
    }
  }
  return std::nullopt;
}

std::vector<std::vector<int>> all_faces(const Complex& k) {
  std::set<std::vector<int>> faces;
  for (const auto& s : k.top_simplices) {
    const size_t n = s.size();
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      std::vector<int> f;
      for (size_t b = 0; b < n; ++b)
        if (mask & (1u << b)) f.push_back(s[b]);
      faces.insert(std::move(f));
    }
  }
  return {faces.begin(), faces.end()};
}

Complex frontier(const Complex& k) {
  // Facet -> number of same-dimension tops containing it.
  std::map<std::vector<int>, int> ridge_count;
  for (const auto& s : k.top_simplices) {
    if (s.size() < 2) continue;
    for (size_t drop = 0; drop < s.size(); ++drop) {
      std::vector<int> r;
      for (size_t a = 0; a < s.size(); ++a)
        if (a != drop) r.push_back(s[a]);
      ridge_count[std::move(r)] = 0;
    }
  }
  for (auto& [ridge, count] : ridge_count)
    for (const auto& s : k.top_simplices)
      if (s.size() == ridge.size() + 1 && is_subset(ridge, s)) ++count;
  Complex out;
  out.ambient_dim = k.ambient_dim;
  out.vertices = k.vertices;
  for (const auto& [ridge, count] : ridge_count)
    if (count != 2) out.top_simplices.push_back(ridge);
  std::sort(out.top_simplices.begin(), out.top_simplices.end());
  return out;
}

bool face_in_subcomplex(const std::vector<int>& face, const Complex& sub) {
  for (const auto& s : sub.top_simplices)
    if (is_subset(face, s)) return true;
  return false;
}

namespace {

OpenComponents components_of_faces(const Complex& k,
                                   std::vector<std::vector<int>> open_faces) {
  OpenComponents out;
  out.faces = std::move(open_faces);
  const size_t n = out.faces.size();
  std::map<std::vector<int>, size_t> id;
  for (size_t i = 0; i < n; ++i) id[out.faces[i]] = i;
  std::vector<size_t> parent(n);
  for (size_t i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](size_t a, size_t b) { parent[find(a)] = find(b); };
  for (size_t i = 0; i < n; ++i) {
    const auto& g = out.faces[i];
    const size_t m = g.size();
    for (unsigned mask = 1; mask + 1 < (1u << m); ++mask) {
      std::vector<int> f;
      for (size_t b = 0; b < m; ++b)
        if (mask & (1u << b)) f.push_back(g[b]);
      auto it = id.find(f);
      if (it != id.end()) unite(i, it->second);
    }
  }
  out.component_of_face.assign(n, -1);
  std::map<size_t, int> root_label;
  for (size_t i = 0; i < n; ++i) {
    size_t r = find(i);
    auto [it, inserted] =
        root_label.emplace(r, static_cast<int>(root_label.size()));
    out.component_of_face[i] = it->second;
    if (inserted) out.representatives.push_back(barycenter(k, out.faces[i]));
  }
  out.count = static_cast<int>(root_label.size());
  return out;
}

}  // namespace

OpenComponents open_components(const Complex& k) {
  Complex fr = frontier(k);
  std::vector<std::vector<int>> open_faces;
  for (auto& f : all_faces(k))
    if (!face_in_subcomplex(f, fr)) open_faces.push_back(std::move(f));
  return components_of_faces(k, std::move(open_faces));
}

OpenComponents components_with_removal(
    const Complex& k, const std::function<bool(const Point&)>& removed) {
  std::vector<std::vector<int>> open_faces;
  for (auto& f : all_faces(k))
    if (!removed(barycenter(k, f))) open_faces.push_back(std::move(f));
  return components_of_faces(k, std::move(open_faces));
}

OpenComponents open_components_in_cone(const Complex& k,
                                       const ConeDescriptor& c) {
  check_cone(c, k.ambient_dim);
  Complex fr = frontier(k);
  std::vector<std::vector<Point>> frontier_cells;
  for (const auto& s : fr.top_simplices)
    frontier_cells.push_back(face_points(fr, s));
  Complex sliced = intersect_cone(k, c);
  std::vector<std::vector<int>> open_faces;
  for (auto& f : all_faces(sliced)) {
    Point b = barycenter(sliced, f);
    bool removed = false;
    for (const auto& atom : c.atoms) {
      if (atom.rel == RelOp::EQ) continue;
      if (b[atom.axis] == atom.threshold) {
        removed = true;  // on the closure boundary of a strict atom
        break;
      }
    }
    if (!removed)
      for (const auto& cell : frontier_cells)
        if (simplex_contains(cell, b)) {
          removed = true;
          break;
        }
    if (!removed) open_faces.push_back(std::move(f));
  }
  return components_of_faces(sliced, std::move(open_faces));
}

std::vector<Rat> critical_values(const Complex& k, int axis) {
  if (axis < 0 || axis >= k.ambient_dim)
    throw InputError("axis out of range");
  std::set<Rat> vals;
  for (const auto& v : k.vertices) vals.insert(v[axis]);
  return {vals.begin(), vals.end()};
}

std::vector<Rat> canonical_grid(const Complex& k, int axis) {
  auto vals = critical_values(k, axis);
  std::vector<Rat> grid;
  for (size_t i = 0; i < vals.size(); ++i) {
    grid.push_back(vals[i]);
    if (i + 1 < vals.size()) grid.push_back((vals[i] + vals[i + 1]) / 2);
  }
  return grid;
}

namespace {

// Triangulation of conv(face) ∩ constraint by the pulling rule keyed on
// lexicographic vertex order. The result depends only on (face, constraint),
// which keeps adjacent cells conforming.
struct ClipResult {
  std::vector<Point> verts;                // sorted lexicographically
  std::vector<std::vector<Point>> cells;   // triangulation, dim = rank(verts)
};

ClipResult clip_face(const std::vector<Point>& face, const Vec& normal,
                     const Rat& rhs, int mode) {
  ClipResult out;
  const size_t n = face.size();
  std::vector<Rat> s(n);
  for (size_t i = 0; i < n; ++i) s[i] = dot(normal, face[i]) - rhs;
  std::set<Point> verts;
  for (size_t i = 0; i < n; ++i) {
    bool keep = mode == 0 ? s[i] == 0 : (mode < 0 ? s[i] <= 0 : s[i] >= 0);
    if (keep) verts.insert(face[i]);
  }
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      if (sign(s[i]) * sign(s[j]) >= 0) continue;  // must straddle strictly
      Rat t = s[i] / (s[i] - s[j]);
      Point w(face[i].size());
      for (size_t c = 0; c < w.size(); ++c)
        w[c] = face[i][c] + t * (face[j][c] - face[i][c]);
      verts.insert(std::move(w));
    }
  }
  out.verts.assign(verts.begin(), verts.end());
  if (out.verts.empty()) return out;
  int r = affine_rank(out.verts);
  if (out.verts.size() == static_cast<size_t>(r) + 1) {
    out.cells.push_back(out.verts);
    return out;
  }
  // Pulling from the lexicographically smallest vertex.
  const Point& v0 = out.verts.front();
  std::set<std::vector<Point>> seen_facets;
  auto cone_over = [&](const ClipResult& facet) {
    if (facet.verts.empty()) return;
    if (affine_rank(facet.verts) != r - 1) return;
    if (std::binary_search(facet.verts.begin(), facet.verts.end(), v0)) return;
    if (!seen_facets.insert(facet.verts).second) return;
    for (const auto& cell : facet.cells) {
      std::vector<Point> coned = cell;
      coned.push_back(v0);
      std::sort(coned.begin(), coned.end());
      out.cells.push_back(std::move(coned));
    }
  };
  for (size_t drop = 0; drop < n; ++drop) {
    std::vector<Point> sub;
    for (size_t i = 0; i < n; ++i)
      if (i != drop) sub.push_back(face[i]);
    cone_over(clip_face(sub, normal, rhs, mode));
  }
  if (mode != 0) cone_over(clip_face(face, normal, rhs, 0));
  return out;
}

Complex rebuild(int ambient, const std::vector<std::vector<Point>>& cells) {
  VertexRegistry reg;
  std::set<std::vector<int>> simplices;
  for (const auto& cell : cells) {
    std::vector<int> s;
    s.reserve(cell.size());
    for (const auto& p : cell) s.push_back(reg.intern(p));
    std::sort(s.begin(), s.end());
    simplices.insert(std::move(s));
  }
  // Keep only inclusion-maximal cells.
  std::vector<std::vector<int>> tops;
  for (const auto& s : simplices) {
    bool maximal = true;
    for (const auto& t : simplices)
      if (&t != &s && t.size() > s.size() && is_subset(s, t)) {
        maximal = false;
        break;
      }
    if (maximal) tops.push_back(s);
  }
  return make_complex(ambient, reg.points, std::move(tops));
}

}  // namespace

Complex clip_halfspace(const Complex& k, const Vec& normal, const Rat& rhs,
                       int mode) {
  std::vector<std::vector<Point>> cells;
  for (const auto& s : k.top_simplices) {
    auto res = clip_face(face_points(k, s), normal, rhs, mode);
    for (auto& cell : res.cells) cells.push_back(std::move(cell));
  }
  return rebuild(k.ambient_dim, cells);
}

Complex subdivide_by_hyperplane(const Complex& k, const Vec& normal,
                                const Rat& rhs) {
  std::vector<std::vector<Point>> cells;
  for (const auto& s : k.top_simplices) {
    auto pts = face_points(k, s);
    for (int mode : {-1, 1}) {
      auto res = clip_face(pts, normal, rhs, mode);
      for (auto& cell : res.cells) cells.push_back(std::move(cell));
    }
  }
  return rebuild(k.ambient_dim, cells);
}

std::optional<std::pair<Vec, Rat>> simplex_hyperplane(
    const std::vector<Point>& simplex, int ambient_dim) {
  if (simplex.empty() ||
      static_cast<int>(simplex.size()) != ambient_dim ||
      affine_rank(simplex) != ambient_dim - 1)
    return std::nullopt;
  // Kernel vector of the difference matrix.
  Mat rows;
  for (size_t i = 1; i < simplex.size(); ++i) {
    Vec d(ambient_dim);
    for (int c = 0; c < ambient_dim; ++c)
      d[c] = simplex[i][c] - simplex[0][c];
    rows.push_back(std::move(d));
  }
  const size_t nr = rows.size();
  std::vector<int> pivot_col(nr, -1);
  size_t r = 0;
  for (int c = 0; c < ambient_dim && r < nr; ++c) {
    size_t p = r;
    while (p < nr && rows[p][c] == 0) ++p;
    if (p == nr) continue;
    std::swap(rows[p], rows[r]);
    for (size_t q = 0; q < nr; ++q) {
      if (q == r || rows[q][c] == 0) continue;
      Rat factor = rows[q][c] / rows[r][c];
      for (int cc = 0; cc < ambient_dim; ++cc)
        rows[q][cc] -= factor * rows[r][cc];
    }
    pivot_col[r] = c;
    ++r;
  }
  int free_col = -1;
  {
    std::vector<bool> pivoted(ambient_dim, false);
    for (size_t i = 0; i < r; ++i) pivoted[pivot_col[i]] = true;
    for (int c = 0; c < ambient_dim; ++c)
      if (!pivoted[c]) {
        free_col = c;
        break;
      }
  }
  if (free_col < 0) return std::nullopt;
  Vec normal(ambient_dim, Rat(0));
  normal[free_col] = 1;
  for (size_t i = 0; i < r; ++i)
    normal[pivot_col[i]] = -rows[i][free_col] / rows[i][pivot_col[i]];
  return std::make_pair(normal, dot(normal, simplex[0]));
}

Complex intersect_cone(const Complex& k, const ConeDescriptor& c) {
  check_cone(c, k.ambient_dim);
  Complex cur = k;
  for (const auto& atom : c.atoms) {
    Vec normal(k.ambient_dim, Rat(0));
    normal[atom.axis] = 1;
    int mode = atom.rel == RelOp::EQ ? 0 : (atom.rel == RelOp::LT ? -1 : 1);
    cur = clip_halfspace(cur, normal, atom.threshold, mode);
    if (cur.empty()) break;
  }
  return cur;
}

Point barycenter(const Complex& k, const std::vector<int>& face) {
  Point b(k.ambient_dim, Rat(0));
  for (int v : face)
    for (int c = 0; c < k.ambient_dim; ++c) b[c] += k.vertices[v][c];
  Rat inv = Rat(1) / Rat(static_cast<long long>(face.size()));
  for (auto& x : b) x *= inv;
  return b;
}

bool simplex_contains(const std::vector<Point>& simplex, const Point& p) {
  if (simplex.empty()) return false;
  const size_t d = simplex.size() - 1;
  const size_t m = p.size();
  if (d == 0) return simplex[0] == p;
  Mat a(m, Vec(d));
  Vec b(m);
  for (size_t r = 0; r < m; ++r) {
    for (size_t c = 0; c < d; ++c)
      a[r][c] = simplex[c + 1][r] - simplex[0][r];
    b[r] = p[r] - simplex[0][r];
  }
  auto lam = solve_linear(std::move(a), std::move(b));
  if (!lam) return false;
  Rat total(0);
  for (const auto& l : *lam) {
    if (l < 0) return false;
    total += l;
  }
  return total <= 1;
}

bool contains_point(const Complex& k, const Point& p) {
  for (const auto& s : k.top_simplices)
    if (simplex_contains(face_points(k, s), p)) return true;
  return false;
}

bool openreal_contains(const Complex& k, const Point& p) {
  if (!contains_point(k, p)) return false;
  return !contains_point(frontier(k), p);
}

Complex project(const Complex& k, const std::vector<int>& axes) {
  VertexRegistry reg;
  std::vector<int> remap(k.vertices.size());
  for (size_t i = 0; i < k.vertices.size(); ++i) {
    Point q;
    q.reserve(axes.size());
    for (int a : axes) q.push_back(k.vertices[i][a]);
    remap[i] = reg.intern(q);
  }
  std::vector<std::vector<int>> tops;
  for (const auto& s : k.top_simplices) {
    std::vector<int> t;
    for (int v : s) t.push_back(remap[v]);
    std::sort(t.begin(), t.end());
    t.erase(std::unique(t.begin(), t.end()), t.end());
    tops.push_back(std::move(t));
  }
  return make_complex(static_cast<int>(axes.size()), reg.points,
                      std::move(tops));
}

int image_dimension(const Complex& k, const std::vector<int>& axes) {
  int best = k.empty() ? -1 : 0;
  for (const auto& s : k.top_simplices) {
    std::vector<Point> pts;
    for (int v : s) {
      Point q;
      for (int a : axes) q.push_back(k.vertices[v][a]);
      pts.push_back(std::move(q));
    }
    best = std::max(best, affine_rank(pts));
  }
  return best;
}

InjectivityResult injective_on(const Complex& k,
                               const std::vector<int>& axes) {
  InjectivityResult out;
  if (static_cast<size_t>(k.ambient_dim) == axes.size()) return out;
  std::vector<int> off_axes;
  {
    std::vector<bool> used(k.ambient_dim, false);
    for (int a : axes) used[a] = true;
    for (int a = 0; a < k.ambient_dim; ++a)
      if (!used[a]) off_axes.push_back(a);
  }
  Complex fr = frontier(k);
  std::vector<std::vector<int>> open_faces;
  for (auto& f : all_faces(k))
    if (!face_in_subcomplex(f, fr)) open_faces.push_back(std::move(f));

  // Per-face coordinate ranges for cheap interval pruning.
  auto ranges = [&](const std::vector<int>& f) {
    std::vector<std::pair<Rat, Rat>> r(k.ambient_dim);
    for (int c = 0; c < k.ambient_dim; ++c) {
      r[c] = {k.vertices[f[0]][c], k.vertices[f[0]][c]};
      for (int v : f) {
        r[c].first = std::min(r[c].first, k.vertices[v][c]);
        r[c].second = std::max(r[c].second, k.vertices[v][c]);
      }
    }
    return r;
  };
  std::vector<std::vector<std::pair<Rat, Rat>>> box;
  box.reserve(open_faces.size());
  for (const auto& f : open_faces) box.push_back(ranges(f));

  for (size_t i = 0; i < open_faces.size(); ++i) {
    for (size_t j = i; j < open_faces.size(); ++j) {
      const auto& f1 = open_faces[i];
      const auto& f2 = open_faces[j];
      if (i == j && f1.size() == 1) continue;
      bool prune = false;
      for (int a : axes)
        if (box[i][a].second < box[j][a].first ||
            box[j][a].second < box[i][a].first) {
          prune = true;
          break;
        }
      if (prune) continue;
      bool can_differ = false;
      for (int a : off_axes)
        if (!(box[i][a].first == box[i][a].second &&
              box[j][a].first == box[j][a].second &&
              box[i][a].first == box[j][a].first)) {
          can_differ = true;
          break;
        }
      if (!can_differ) continue;

      const size_t n1 = f1.size(), n2 = f2.size(), nv = n1 + n2;
      std::vector<LinConstraint> base;
      for (int which = 0; which < 2; ++which) {
        const auto& f = which == 0 ? f1 : f2;
        size_t offset = which == 0 ? 0 : n1;
        LinConstraint sum;
        sum.coeffs.assign(nv, Rat(0));
        for (size_t a = 0; a < f.size(); ++a) {
          sum.coeffs[offset + a] = 1;
          LinConstraint pos;
          pos.coeffs.assign(nv, Rat(0));
          pos.coeffs[offset + a] = -1;
          pos.rel = Rel::LT;
          pos.rhs = 0;
          base.push_back(std::move(pos));
        }
        sum.rel = Rel::EQ;
        sum.rhs = 1;
        base.push_back(std::move(sum));
      }
      for (int t : axes) {
        LinConstraint eq;
        eq.coeffs.assign(nv, Rat(0));
        for (size_t a = 0; a < n1; ++a) eq.coeffs[a] = k.vertices[f1[a]][t];
        for (size_t a = 0; a < n2; ++a)
          eq.coeffs[n1 + a] -= k.vertices[f2[a]][t];
        eq.rel = Rel::EQ;
        eq.rhs = 0;
        base.push_back(std::move(eq));
      }
      for (int a : off_axes) {
        for (int dir : {1, -1}) {
          if (i == j && dir < 0) continue;  // symmetric within one face
          auto cons = base;
          LinConstraint diff;
          diff.coeffs.assign(nv, Rat(0));
          for (size_t x = 0; x < n1; ++x)
            diff.coeffs[x] = -Rat(dir) * k.vertices[f1[x]][a];
          for (size_t x = 0; x < n2; ++x)
            diff.coeffs[n1 + x] += Rat(dir) * k.vertices[f2[x]][a];
          diff.rel = Rel::LT;
          diff.rhs = 0;
          cons.push_back(std::move(diff));
          auto res = solve_feasibility(std::move(cons), nv);
          if (res.feasible) {
            out.injective = false;
            out.p.assign(k.ambient_dim, Rat(0));
            out.q.assign(k.ambient_dim, Rat(0));
            for (size_t x = 0; x < n1; ++x)
              for (int c = 0; c < k.ambient_dim; ++c)
                out.p[c] += res.witness[x] * k.vertices[f1[x]][c];
            for (size_t x = 0; x < n2; ++x)
              for (int c = 0; c < k.ambient_dim; ++c)
                out.q[c] += res.witness[n1 + x] * k.vertices[f2[x]][c];
            return out;
          }
        }
      }
    }
  }
  return out;
}

bool same_closed_realization(const Complex& a, const Complex& b) {
  auto covered = [](const Complex& x, const Complex& y) {
    for (const auto& v : x.vertices)
      if (!contains_point(y, v)) return false;
    for (const auto& f : all_faces(x))
      if (!contains_point(y, barycenter(x, f))) return false;
    return true;
  };
  return covered(a, b) && covered(b, a);
}

}  // namespace monocell::plcore

#include "monocell/mono.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace monocell::mono {

using plcore::ConeAtom;
using plcore::InputError;
using plcore::RelOp;
using plcore::UnsupportedError;

namespace {

std::vector<Point> face_points(const Complex& k, const std::vector<int>& face) {
  std::vector<Point> pts;
  pts.reserve(face.size());
  for (int v : face) pts.push_back(k.vertices[v]);
  return pts;
}

std::vector<std::vector<Point>> boundary_cells(const Complex& k) {
  Complex fr = plcore::frontier(k);
  std::vector<std::vector<Point>> cells;
  for (const auto& s : fr.top_simplices) cells.push_back(face_points(fr, s));
  return cells;
}

std::vector<int> drop_remap(const std::vector<int>& cols, int dropped) {
  std::vector<int> out;
  for (int c : cols)
    if (c != dropped) out.push_back(c > dropped ? c - 1 : c);
  return out;
}

std::vector<int> all_cols_except(int ambient, int dropped) {
  std::vector<int> out;
  for (int c = 0; c < ambient; ++c)
    if (c != dropped) out.push_back(c);
  return out;
}

std::vector<int> dependent_positions(const GraphComplex& f, int cod_col) {
  std::vector<bool> dep(f.n(), false);
  for (const auto& s : f.complex.top_simplices) {
    auto g = plcore::simplex_gradient(f, s, cod_col);
    if (!g) throw InputError("top simplex projects degenerately to domain");
    for (int j = 0; j < f.n(); ++j)
      if ((*g)[j] != 0) dep[j] = true;
  }
  std::vector<int> out;
  for (int j = 0; j < f.n(); ++j)
    if (dep[j]) out.push_back(j);
  return out;
}

Complex closure_of_kept_faces(const Complex& base,
                              std::vector<std::vector<int>> keep) {
  std::vector<std::vector<int>> tops;
  for (const auto& f : keep) {
    bool maximal = true;
    for (const auto& g : keep)
      if (g.size() > f.size() &&
          std::includes(g.begin(), g.end(), f.begin(), f.end())) {
        maximal = false;
        break;
      }
    if (maximal) tops.push_back(f);
  }
  return plcore::make_complex(base.ambient_dim, base.vertices,
                              std::move(tops));
}

}  // namespace

std::optional<Fiber> fiber_restrict(
    const GraphComplex& f, const std::vector<std::pair<int, Rat>>& assignments,
    const std::vector<std::string>& labels_in) {
  if (auto err = plcore::validate(f)) throw InputError(*err);
  if (!is_monotone_map(f, MapMode::Inductive).holds)
    throw InputError("fiber restriction requires a monotone map");
  std::vector<std::string> lab =
      labels_in.empty() ? matroid::default_labels(f) : labels_in;
  auto asg = assignments;
  // Descending column order: dropping a higher column leaves lower ones in
  // place, so earlier assignments keep their meaning.
  std::sort(asg.begin(), asg.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });
  for (size_t i = 1; i < asg.size(); ++i)
    if (asg[i].first == asg[i - 1].first)
      throw InputError("duplicate assignment to one axis");

  GraphComplex g = f;
  for (const auto& [col, b] : asg) {
    if (!std::binary_search(g.codomain_axes.begin(), g.codomain_axes.end(),
                            col))
      throw InputError("assignment to a non-codomain axis");
    const int amb = g.complex.ambient_dim;
    auto valid = dependent_positions(g, col);

    if (valid.empty()) {
      // Constant component: the fiber is the (piecewise) matching part of
      // the graph, with the constant coordinate dropped.
      std::vector<std::vector<int>> tops;
      for (const auto& s : g.complex.top_simplices)
        if (g.complex.vertices[s[0]][col] == b) tops.push_back(s);
      if (tops.empty()) return std::nullopt;
      Complex sub = plcore::make_complex(amb, g.complex.vertices, tops);
      g.complex = plcore::project(sub, all_cols_except(amb, col));
      g.domain_axes = drop_remap(g.domain_axes, col);
      g.codomain_axes = drop_remap(g.codomain_axes, col);
      lab.erase(lab.begin() + col);
      continue;
    }

    ConeDescriptor cone;
    cone.atoms = {ConeAtom{col, RelOp::EQ, b}};
    Complex level = detail::open_slice_closure(g.complex, cone);
    if (level.empty()) return std::nullopt;
    const int jcol = g.domain_axes[valid.back()];
    const int jnew = jcol > col ? jcol - 1 : jcol;
    GraphComplex ng;
    ng.complex = plcore::project(level, all_cols_except(amb, col));
    for (int c : drop_remap(g.domain_axes, col))
      if (c != jnew) ng.domain_axes.push_back(c);
    ng.codomain_axes = drop_remap(g.codomain_axes, col);
    ng.codomain_axes.push_back(jnew);
    std::sort(ng.codomain_axes.begin(), ng.codomain_axes.end());
    g = std::move(ng);
    lab.erase(lab.begin() + col);
  }
  return Fiber{std::move(g), std::move(lab)};
}

namespace {

// ---- lower envelope over the last domain axis ----

struct Piece1 {
  Rat a0, a1;  // x' interval, a0 < a1
  Rat v0, v1;  // values at the endpoints
  Rat eval(const Rat& x) const {
    return v0 + (x - a0) * (v1 - v0) / (a1 - a0);
  }
};

struct Piece2 {
  std::vector<Point> tri;  // 3 points in the x' plane
  Vec grad;                // value = grad . x + off
  Rat off;
  Rat eval(const Point& p) const { return dot(grad, p) + off; }
};

GraphComplex finish_graph(int n, std::vector<Point> verts,
                          std::vector<std::vector<int>> tops) {
  GraphComplex out;
  out.complex = plcore::make_complex(n, std::move(verts), std::move(tops));
  for (int a = 0; a + 1 < n; ++a) out.domain_axes.push_back(a);
  out.codomain_axes = {n - 1};
  return out;
}

GraphComplex lower_envelope_1d(const std::vector<Piece1>& pieces) {
  std::set<Rat> breaks;
  for (const auto& p : pieces) {
    breaks.insert(p.a0);
    breaks.insert(p.a1);
  }
  for (size_t i = 0; i < pieces.size(); ++i) {
    for (size_t j = i + 1; j < pieces.size(); ++j) {
      Rat lo = std::max(pieces[i].a0, pieces[j].a0);
      Rat hi = std::min(pieces[i].a1, pieces[j].a1);
      if (!(lo < hi)) continue;
      Rat dlo = pieces[i].eval(lo) - pieces[j].eval(lo);
      Rat dhi = pieces[i].eval(hi) - pieces[j].eval(hi);
      if (sign(dlo) * sign(dhi) < 0)
        breaks.insert(lo + dlo * (hi - lo) / (dlo - dhi));
    }
  }
  std::vector<Rat> bs(breaks.begin(), breaks.end());
  std::vector<Point> verts;
  std::vector<std::vector<int>> tops;
  std::map<Point, int> id;
  auto intern = [&](Point p) {
    auto it = id.find(p);
    if (it != id.end()) return it->second;
    int v = static_cast<int>(verts.size());
    id.emplace(p, v);
    verts.push_back(std::move(p));
    return v;
  };
  std::optional<std::pair<Rat, Rat>> prev_right;
  for (size_t i = 0; i + 1 < bs.size(); ++i) {
    Rat mid = (bs[i] + bs[i + 1]) / 2;
    std::optional<Rat> e0, e1;
    for (const auto& p : pieces) {
      if (p.a0 <= mid && mid <= p.a1) {
        Rat w0 = p.eval(bs[i]), w1 = p.eval(bs[i + 1]);
        if (!e0 || w0 < *e0) e0 = w0;
        if (!e1 || w1 < *e1) e1 = w1;
      }
    }
    if (!e0) {
      prev_right.reset();
      continue;
    }
    if (prev_right && prev_right->first == bs[i] && prev_right->second != *e0)
      throw UnsupportedError("envelope is discontinuous");
    int va = intern({bs[i], *e0});
    int vb = intern({bs[i + 1], *e1});
    tops.push_back({va, vb});
    prev_right = {bs[i + 1], *e1};
  }
  return finish_graph(2, std::move(verts), std::move(tops));
}

using Poly = std::vector<Point>;  // convex, cyclic order, 2D points

Poly clip_poly(const Poly& p, const Vec& nrm, const Rat& rhs) {
  Poly out;
  const size_t n = p.size();
  for (size_t i = 0; i < n; ++i) {
    const Point& a = p[i];
    const Point& b = p[(i + 1) % n];
    Rat sa = dot(nrm, a) - rhs, sb = dot(nrm, b) - rhs;
    if (sa <= 0) out.push_back(a);
    if (sign(sa) * sign(sb) < 0) {
      Rat t = sa / (sa - sb);
      out.push_back({a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])});
    }
  }
  // Drop consecutive duplicates (intersections at existing vertices).
  Poly ded;
  for (const auto& q : out)
    if (ded.empty() || !(ded.back() == q)) ded.push_back(q);
  while (ded.size() > 1 && ded.front() == ded.back()) ded.pop_back();
  return ded;
}

std::pair<Poly, Poly> split_poly(const Poly& p, const Vec& nrm,
                                 const Rat& rhs) {
  Poly lo = clip_poly(p, nrm, rhs);
  Vec neg = {-nrm[0], -nrm[1]};
  Poly hi = clip_poly(p, neg, -rhs);
  return {std::move(lo), std::move(hi)};
}

GraphComplex lower_envelope_2d(const std::vector<Piece2>& pieces) {
  // Global cut lines: every piece edge, plus each pairwise equal-value line
  // where two overlapping pieces actually cross.
  std::set<std::pair<Vec, Rat>> lines;
  auto add_line = [&](Vec nrm, Rat rhs) {
    int lead = nrm[0] != 0 ? 0 : (nrm[1] != 0 ? 1 : -1);
    if (lead < 0) return;
    Rat scale = nrm[lead];
    lines.insert({{nrm[0] / scale, nrm[1] / scale}, rhs / scale});
  };
  auto tri_halfplanes = [&](const Poly& tri) {
    // (normal, rhs, inside is <=) per edge
    std::vector<std::pair<Vec, Rat>> hps;
    for (int e = 0; e < 3; ++e) {
      std::vector<Point> edge = {tri[e], tri[(e + 1) % 3]};
      auto hp = plcore::simplex_hyperplane(edge, 2);
      if (!hp) continue;
      const Point& w = tri[(e + 2) % 3];
      if (dot(hp->first, w) > hp->second)
        hps.push_back({{-hp->first[0], -hp->first[1]}, -hp->second});
      else
        hps.push_back(*hp);
    }
    return hps;
  };
  for (const auto& p : pieces)
    for (int e = 0; e < 3; ++e) {
      std::vector<Point> edge = {p.tri[e], p.tri[(e + 1) % 3]};
      if (auto hp = plcore::simplex_hyperplane(edge, 2))
        add_line(hp->first, hp->second);
    }
  for (size_t i = 0; i < pieces.size(); ++i) {
    for (size_t j = i + 1; j < pieces.size(); ++j) {
      Vec d = {pieces[i].grad[0] - pieces[j].grad[0],
               pieces[i].grad[1] - pieces[j].grad[1]};
      Rat doff = pieces[i].off - pieces[j].off;
      if (d[0] == 0 && d[1] == 0) continue;
      Poly overlap = pieces[i].tri;
      for (const auto& [nrm, rhs] : tri_halfplanes(pieces[j].tri))
        overlap = clip_poly(overlap, nrm, rhs);
      if (overlap.size() < 3 || affine_rank(overlap) < 2) continue;
      bool below = false, above = false;
      for (const auto& v : overlap) {
        int s = sign(dot(d, v) + doff);
        if (s < 0) below = true;
        if (s > 0) above = true;
      }
      if (below && above) add_line(d, -doff);
    }
  }

  // Cut a bounding box by every line; the pieces of the subdivision where at
  // least one facet covers carry the envelope.
  Rat x0 = pieces[0].tri[0][0], x1 = x0, y0 = pieces[0].tri[0][1], y1 = y0;
  for (const auto& p : pieces)
    for (const auto& v : p.tri) {
      x0 = std::min(x0, v[0]);
      x1 = std::max(x1, v[0]);
      y0 = std::min(y0, v[1]);
      y1 = std::max(y1, v[1]);
    }
  std::vector<Poly> polys = {{{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}}};
  for (const auto& [nrm, rhs] : lines) {
    std::vector<Poly> next;
    for (const auto& p : polys) {
      auto [lo, hi] = split_poly(p, nrm, rhs);
      if (lo.size() >= 3 && affine_rank(lo) == 2) next.push_back(std::move(lo));
      if (hi.size() >= 3 && affine_rank(hi) == 2) next.push_back(std::move(hi));
    }
    polys = std::move(next);
  }

  std::vector<Point> verts;
  std::vector<std::vector<int>> tops;
  std::map<Point, int> id;
  auto intern = [&](Point p) {
    auto it = id.find(p);
    if (it != id.end()) return it->second;
    int v = static_cast<int>(verts.size());
    id.emplace(p, v);
    verts.push_back(std::move(p));
    return v;
  };
  auto env_at = [&](const Point& q) -> std::optional<Rat> {
    std::optional<Rat> best;
    for (const auto& p : pieces)
      if (plcore::simplex_contains(p.tri, q)) {
        Rat v = p.eval(q);
        if (!best || v < *best) best = v;
      }
    return best;
  };
  for (const auto& poly : polys) {
    Point centroid(2, Rat(0));
    for (const auto& v : poly) {
      centroid[0] += v[0];
      centroid[1] += v[1];
    }
    centroid[0] /= Rat(static_cast<long long>(poly.size()));
    centroid[1] /= Rat(static_cast<long long>(poly.size()));
    const Piece2* active = nullptr;
    std::optional<Rat> best;
    for (const auto& p : pieces)
      if (plcore::simplex_contains(p.tri, centroid)) {
        Rat v = p.eval(centroid);
        if (!best || v < *best) {
          best = v;
          active = &p;
        }
      }
    if (!active) continue;
    // The active piece must match the pointwise envelope at every vertex,
    // otherwise the envelope jumps at the cell boundary.
    size_t m = 0;
    for (size_t i = 1; i < poly.size(); ++i)
      if (poly[i] < poly[m]) m = i;
    for (const auto& v : poly)
      if (active->eval(v) != *env_at(v))
        throw UnsupportedError("envelope is discontinuous");
    for (size_t i = 0; i + 1 < poly.size(); ++i) {
      size_t a = (m + i + 1) % poly.size();
      size_t b = (m + i + 2) % poly.size();
      if (a == m || b == m) continue;
      std::vector<Point> tri = {poly[m], poly[a], poly[b]};
      if (affine_rank(tri) != 2) continue;
      std::vector<int> cell;
      for (const auto& v : tri)
        cell.push_back(intern({v[0], v[1], active->eval(v)}));
      tops.push_back(std::move(cell));
    }
  }
  return finish_graph(3, std::move(verts), std::move(tops));
}

GraphComplex lower_envelope(const GraphComplex& f) {
  const int n = f.n();
  const int ycol = f.codomain_axes[0];
  std::vector<int> xcols(f.domain_axes.begin(), f.domain_axes.end() - 1);
  std::set<std::vector<Point>> seen;
  std::vector<std::vector<Point>> facets;
  for (const auto& s : f.complex.top_simplices) {
    for (size_t drop = 0; drop < s.size(); ++drop) {
      std::vector<Point> facet;
      for (size_t i = 0; i < s.size(); ++i)
        if (i != drop) facet.push_back(f.complex.vertices[s[i]]);
      std::sort(facet.begin(), facet.end());
      std::vector<Point> proj;
      for (const auto& v : facet) {
        Point q;
        for (int c : xcols) q.push_back(v[c]);
        proj.push_back(std::move(q));
      }
      if (affine_rank(proj) != n - 1) continue;
      if (seen.insert(facet).second) facets.push_back(facet);
    }
  }
  if (n == 2) {
    std::vector<Piece1> pieces;
    for (const auto& facet : facets) {
      Piece1 p;
      Rat a = facet[0][xcols[0]], b = facet[1][xcols[0]];
      Rat va = facet[0][ycol], vb = facet[1][ycol];
      if (a < b) {
        p = {a, b, va, vb};
      } else {
        p = {b, a, vb, va};
      }
      pieces.push_back(p);
    }
    return lower_envelope_1d(pieces);
  }
  std::vector<Piece2> pieces;
  for (const auto& facet : facets) {
    Piece2 p;
    Mat a(3, Vec(3, Rat(1)));
    Vec rhs(3);
    for (int i = 0; i < 3; ++i) {
      p.tri.push_back({facet[i][xcols[0]], facet[i][xcols[1]]});
      a[i][0] = p.tri[i][0];
      a[i][1] = p.tri[i][1];
      rhs[i] = facet[i][ycol];
    }
    auto sol = solve_linear(std::move(a), std::move(rhs));
    if (!sol) continue;  // degenerate projection already excluded by rank
    p.grad = {(*sol)[0], (*sol)[1]};
    p.off = (*sol)[2];
    pieces.push_back(std::move(p));
  }
  return lower_envelope_2d(pieces);
}

GraphComplex negate_value(const GraphComplex& f) {
  std::vector<Point> verts = f.complex.vertices;
  for (auto& v : verts)
    for (int c : f.codomain_axes) v[c] = -v[c];
  GraphComplex out = f;
  out.complex = plcore::make_complex(f.complex.ambient_dim, std::move(verts),
                                     f.complex.top_simplices);
  return out;
}

}  // namespace

GraphComplex envelope(const GraphComplex& f, EnvelopeKind which) {
  if (auto err = plcore::validate(f)) throw InputError(*err);
  if (f.k() != 1) throw InputError("envelope requires one codomain axis");
  const int n = f.n();
  if (n > 3)
    throw UnsupportedError("envelope supports domain dimension at most 3");
  if (n < 2)
    throw UnsupportedError("envelope needs a nonempty projected domain");
  if (f.complex.empty())
    return finish_graph(n, {}, {});

  GraphComplex out = which == EnvelopeKind::Inf
                         ? lower_envelope(f)
                         : negate_value(lower_envelope(negate_value(f)));
  if (auto err = plcore::validate(out))
    throw UnsupportedError("envelope is not a PL graph: " + *err);

  // The envelope of a one-sided-monotone function stays one-sided monotone.
  const LevelDir dir =
      which == EnvelopeKind::Inf ? LevelDir::Below : LevelDir::Above;
  bool pre = false, post = true;
  try {
    pre = is_level_monotone(f, dir).holds;
    if (pre) post = is_level_monotone(out, dir).holds;
  } catch (const InputError&) {
    pre = false;
  }
  if (pre && !post)
    throw std::logic_error("envelope lost one-sided monotonicity");
  return out;
}

std::pair<Complex, Complex> split_by_graph(const Complex& x,
                                           const GraphComplex& sigma) {
  if (auto err = plcore::validate(sigma)) throw InputError(*err);
  const int amb = x.ambient_dim;
  if (sigma.complex.ambient_dim != amb)
    throw InputError("ambient dimensions differ");
  if (sigma.k() != 1 || sigma.complex.empty() ||
      sigma.complex.dim() != amb - 1)
    throw InputError("expected a codimension-one function graph");
  if (!is_semi_monotone(x, SemiRoute::Recursive).holds)
    throw InputError("the set being split is not semi-monotone");

  Complex fr_x = plcore::frontier(x);
  Complex fr_s = plcore::frontier(sigma.complex);
  for (const auto& face : plcore::all_faces(sigma.complex)) {
    Point b = plcore::barycenter(sigma.complex, face);
    if (plcore::face_in_subcomplex(face, fr_s)) {
      if (!plcore::contains_point(fr_x, b))
        throw InputError("the graph frontier leaves the frontier of the set");
    } else if (!plcore::contains_point(x, b) ||
               plcore::contains_point(fr_x, b)) {
      throw InputError("the open graph leaves the open set");
    }
  }

  std::set<std::pair<Vec, Rat>> planes;
  for (const auto& s : sigma.complex.top_simplices) {
    auto hp = plcore::simplex_hyperplane(face_points(sigma.complex, s), amb);
    if (!hp) throw InputError("degenerate graph cell");
    int lead = 0;
    while (lead < amb && hp->first[lead] == 0) ++lead;
    Rat scale = hp->first[lead];
    Vec nrm = hp->first;
    for (auto& c : nrm) c /= scale;
    planes.insert({std::move(nrm), hp->second / scale});
  }
  Complex cur = x;
  for (const auto& [nrm, rhs] : planes)
    cur = plcore::subdivide_by_hyperplane(cur, nrm, rhs);

  std::vector<std::vector<Point>> fr_cells;
  for (const auto& s : fr_x.top_simplices)
    fr_cells.push_back(face_points(fr_x, s));
  auto removed = [&](const Point& b) {
    if (plcore::contains_point(sigma.complex, b)) return true;
    for (const auto& cell : fr_cells)
      if (plcore::simplex_contains(cell, b)) return true;
    return false;
  };
  auto oc = plcore::components_with_removal(cur, removed);
  if (oc.count != 2)
    throw InputError("removing the graph left " + std::to_string(oc.count) +
                     " components, expected 2");
  std::vector<Complex> parts;
  for (int comp = 0; comp < 2; ++comp) {
    std::vector<std::vector<int>> keep;
    for (size_t i = 0; i < oc.faces.size(); ++i)
      if (oc.component_of_face[i] == comp) keep.push_back(oc.faces[i]);
    parts.push_back(closure_of_kept_faces(cur, std::move(keep)));
    if (!is_semi_monotone(parts.back(), SemiRoute::Recursive).holds)
      throw InputError("a split component is not semi-monotone");
  }
  if (oc.representatives[1] < oc.representatives[0])
    std::swap(parts[0], parts[1]);
  return {std::move(parts[0]), std::move(parts[1])};
}

Complex sign_condition_region(const GraphComplex& f,
                              const std::vector<Cut>& cuts) {
  if (auto err = plcore::validate(f)) throw InputError(*err);
  const int amb = f.complex.ambient_dim;
  for (const auto& c : cuts)
    if (c.vertex_values.size() != f.complex.vertices.size())
      throw InputError("cut values do not match the vertex count");
  if (f.complex.empty()) return f.complex;

  // Lift every cut function to an extra coordinate; cuts become axis slices.
  const int m = static_cast<int>(cuts.size());
  std::vector<Point> lifted = f.complex.vertices;
  for (size_t i = 0; i < lifted.size(); ++i)
    for (const auto& c : cuts) lifted[i].push_back(c.vertex_values[i]);
  Complex L = plcore::make_complex(amb + m, lifted, f.complex.top_simplices);
  auto fr_cells = boundary_cells(L);
  std::vector<int> original_cols;
  for (int c = 0; c < amb; ++c) original_cols.push_back(c);

  // Hypothesis: each equality prefix repeats the previous set or cuts it by
  // a codimension-one monotone graph.
  Complex eq_cur = L;
  Complex eq_prev = f.complex;
  for (int j = 0; j < m; ++j) {
    ConeDescriptor cone;
    cone.atoms = {ConeAtom{amb + j, RelOp::EQ, Rat(0)}};
    Complex nxt = plcore::intersect_cone(eq_cur, cone);
    Complex nxt_proj = plcore::project(nxt, original_cols);
    const std::string stage = "sign condition stage " + std::to_string(j + 1);
    if (!nxt_proj.empty() &&
        !plcore::same_closed_realization(nxt_proj, eq_prev)) {
      if (nxt_proj.dim() != eq_prev.dim() - 1)
        throw InputError(stage +
                         ": equality set neither repeats the previous set "
                         "nor drops one dimension");
      const int d = nxt_proj.dim();
      bool monotone_graph = false;
      for (const auto& t : matroid::subsets_colex(amb, d)) {
        if (!plcore::injective_on(nxt_proj, t).injective) continue;
        GraphComplex g;
        g.complex = nxt_proj;
        g.domain_axes = t;
        for (int c = 0; c < amb; ++c)
          if (!std::binary_search(t.begin(), t.end(), c))
            g.codomain_axes.push_back(c);
        if (is_monotone_map(g, MapMode::Inductive).holds) {
          monotone_graph = true;
          break;
        }
      }
      if (!monotone_graph)
        throw InputError(stage + ": equality set is not a monotone graph");
    }
    eq_cur = std::move(nxt);
    eq_prev = std::move(nxt_proj);
  }

  Complex region_lifted = L;
  std::vector<ConeAtom> strict;
  for (int j = 0; j < m; ++j) {
    RelOp rel = cuts[j].rel;
    ConeAtom atom{amb + j, rel, Rat(0)};
    ConeDescriptor cone;
    cone.atoms = {atom};
    region_lifted = plcore::intersect_cone(region_lifted, cone);
    if (rel != RelOp::EQ) strict.push_back(atom);
  }
  std::vector<std::vector<int>> keep;
  for (auto& face : plcore::all_faces(region_lifted)) {
    Point b = plcore::barycenter(region_lifted, face);
    bool removed = false;
    for (const auto& a : strict)
      if (b[a.axis] == a.threshold) {
        removed = true;
        break;
      }
    if (!removed)
      for (const auto& cell : fr_cells)
        if (plcore::simplex_contains(cell, b)) {
          removed = true;
          break;
        }
    if (!removed) keep.push_back(std::move(face));
  }
  Complex region = plcore::project(
      closure_of_kept_faces(region_lifted, std::move(keep)), original_cols);
  if (region.empty()) return region;

  // The region must itself be monotone after choosing a basis of axes.
  const int d = region.dim();
  for (const auto& t : matroid::subsets_colex(amb, d)) {
    if (!plcore::injective_on(region, t).injective) continue;
    GraphComplex g;
    g.complex = region;
    g.domain_axes = t;
    for (int c = 0; c < amb; ++c)
      if (!std::binary_search(t.begin(), t.end(), c))
        g.codomain_axes.push_back(c);
    if (is_monotone_map(g, MapMode::Inductive).holds) return region;
  }
  throw InputError("sign condition region is not monotone after relabeling");
}

}  // namespace monocell::mono

#include "monocell/mono.hpp"

#include <algorithm>
#include <stdexcept>

namespace monocell::mono {

using plcore::ConeAtom;
using plcore::InputError;
using plcore::RelOp;

std::string to_string(Behavior b) {
  switch (b) {
    case Behavior::Increasing: return "increasing";
    case Behavior::Decreasing: return "decreasing";
    case Behavior::Independent: return "independent";
    default: return "mixed";
  }
}

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

// Shared state of one connectivity sweep: which sets count as removed from
// every section, and how the section thresholds are chosen.
struct ConnCtx {
  std::vector<std::vector<Point>> frontier_cells;
  std::vector<ConeAtom> strict_atoms;
  std::vector<int> free_axes;
  bool adaptive = true;
  std::vector<std::vector<Rat>> fixed_grids;  // by axis column
};

ConeDescriptor merged_cone(const ConnCtx& ctx,
                           const std::vector<ConeAtom>& eq_atoms) {
  ConeDescriptor c;
  c.atoms = ctx.strict_atoms;
  c.atoms.insert(c.atoms.end(), eq_atoms.begin(), eq_atoms.end());
  std::sort(c.atoms.begin(), c.atoms.end(),
            [](const ConeAtom& a, const ConeAtom& b) { return a.axis < b.axis; });
  return c;
}

bool removed_at(const ConnCtx& ctx, const Point& b) {
  for (const auto& a : ctx.strict_atoms)
    if (b[a.axis] == a.threshold) return true;
  for (const auto& cell : ctx.frontier_cells)
    if (plcore::simplex_contains(cell, b)) return true;
  return false;
}

// Connectivity of the open part of `s` and, recursively, of all its sections
// by coordinate hyperplanes on the remaining free axes. `s` must already be
// clipped by the strict atoms; the removal predicate erases their boundaries.
std::optional<Witness> conn_core(const ConnCtx& ctx, const Complex& s,
                                 std::vector<ConeAtom>& eq_atoms, size_t start,
                                 std::vector<std::string>& trace) {
  auto oc = plcore::components_with_removal(
      s, [&](const Point& b) { return removed_at(ctx, b); });
  ConeDescriptor cone = merged_cone(ctx, eq_atoms);
  trace.push_back(detail::cone_to_string(cone) + ": " +
                  std::to_string(oc.count) + " component(s)");
  if (oc.count > 1) {
    Witness w;
    w.cone = cone;
    w.points = {oc.representatives[0], oc.representatives[1]};
    w.detail = "section " + detail::cone_to_string(cone) + " has " +
               std::to_string(oc.count) + " components";
    return w;
  }
  if (s.empty()) return std::nullopt;
  for (size_t idx = start; idx < ctx.free_axes.size(); ++idx) {
    const int axis = ctx.free_axes[idx];
    const std::vector<Rat> grid =
        ctx.adaptive ? plcore::canonical_grid(s, axis) : ctx.fixed_grids[axis];
    for (const Rat& c : grid) {
      ConeDescriptor one;
      one.atoms = {ConeAtom{axis, RelOp::EQ, c}};
      Complex s2 = plcore::intersect_cone(s, one);
      if (s2.empty()) continue;
      eq_atoms.push_back(ConeAtom{axis, RelOp::EQ, c});
      auto w = conn_core(ctx, s2, eq_atoms, idx + 1, trace);
      eq_atoms.pop_back();
      if (w) return w;
    }
  }
  return std::nullopt;
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

// Domain-axis positions the codomain coordinate actually depends on.
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

std::string point_str(const Point& p) {
  std::string s = "(";
  for (size_t i = 0; i < p.size(); ++i)
    s += (i ? "," : "") + rat_to_string(p[i]);
  return s + ")";
}

// Strictness along each domain axis. On failure fills a Verdict; otherwise
// fills `behaviors`.
std::optional<Verdict> strictness_failure(const GraphComplex& f,
                                          std::vector<Behavior>& behaviors,
                                          std::vector<std::string>& trace) {
  behaviors.clear();
  for (int j = 0; j < f.n(); ++j) {
    Behavior b = coordinate_behavior(f, j);
    trace.push_back("slope along x_" + std::to_string(j + 1) + ": " +
                    to_string(b));
    if (b == Behavior::None) {
      Witness w;
      w.axis = f.domain_axes[j];
      w.detail = "mixed slope signs along x_" + std::to_string(j + 1);
      return Verdict::no(std::move(w), trace);
    }
    behaviors.push_back(b);
  }
  return std::nullopt;
}

std::optional<Witness> level_violation(const GraphComplex& f, LevelDir dir,
                                       std::vector<std::string>& trace) {
  const int cod = f.codomain_axes[0];
  ConnCtx ctx;
  ctx.frontier_cells = boundary_cells(f.complex);
  ctx.free_axes = f.domain_axes;
  const RelOp rel = dir == LevelDir::Below ? RelOp::LT : RelOp::GT;
  for (const Rat& b : plcore::canonical_grid(f.complex, cod)) {
    ctx.strict_atoms = {ConeAtom{cod, rel, b}};
    ConeDescriptor clip;
    clip.atoms = ctx.strict_atoms;
    Complex s0 = plcore::intersect_cone(f.complex, clip);
    std::vector<ConeAtom> eq;
    if (auto w = conn_core(ctx, s0, eq, 0, trace)) return w;
  }
  return std::nullopt;
}

Verdict fn_definition(const GraphComplex& f) {
  std::vector<std::string> trace;
  auto dom = plcore::domain_complex(f);
  auto ds = is_semi_monotone(dom, SemiRoute::Recursive);
  trace.push_back(std::string("domain semi-monotone: ") +
                  (ds.holds ? "yes" : "no"));
  if (!ds.holds) {
    Witness w = *ds.witness;
    w.detail = "domain is not semi-monotone: " + w.detail;
    return Verdict::no(std::move(w), trace);
  }
  std::vector<Behavior> behaviors;
  if (auto fail = strictness_failure(f, behaviors, trace)) return *fail;
  for (LevelDir dir : {LevelDir::Below, LevelDir::Above}) {
    trace.push_back(dir == LevelDir::Below ? "sublevel sets:"
                                           : "superlevel sets:");
    if (auto w = level_violation(f, dir, trace)) {
      w->detail = (dir == LevelDir::Below ? "sublevel" : "superlevel") +
                  std::string(" set is not semi-monotone: ") + w->detail;
      return Verdict::no(std::move(*w), trace);
    }
  }
  return Verdict::yes(trace);
}

Verdict fn_connectivity(const GraphComplex& f) {
  std::vector<std::string> trace;
  std::vector<Behavior> behaviors;
  if (auto fail = strictness_failure(f, behaviors, trace)) return *fail;
  ConnCtx ctx;
  ctx.frontier_cells = boundary_cells(f.complex);
  for (int a = 0; a < f.complex.ambient_dim; ++a) ctx.free_axes.push_back(a);
  std::vector<ConeAtom> eq;
  auto w = conn_core(ctx, f.complex, eq, 0, trace);
  if (w) {
    w->detail = "graph section disconnected: " + w->detail;
    return Verdict::no(std::move(*w), trace);
  }
  return Verdict::yes(trace);
}

Verdict fn_levelsets(const GraphComplex& f) {
  std::vector<std::string> trace;
  if (f.complex.empty()) return Verdict::yes(trace);
  auto dom = plcore::domain_complex(f);
  auto ds = is_semi_monotone(dom, SemiRoute::Recursive);
  trace.push_back(std::string("domain semi-monotone: ") +
                  (ds.holds ? "yes" : "no"));
  if (!ds.holds) {
    Witness w = *ds.witness;
    w.detail = "domain is not semi-monotone: " + w.detail;
    return Verdict::no(std::move(w), trace);
  }
  std::vector<Behavior> behaviors;
  if (auto fail = strictness_failure(f, behaviors, trace)) return *fail;
  const int cod = f.codomain_axes[0];

  bool all_independent = true;
  for (Behavior b : behaviors)
    if (b != Behavior::Independent) all_independent = false;
  if (all_independent) {
    for (const auto& v : f.complex.vertices)
      if (v[cod] != f.complex.vertices[0][cod]) {
        Witness w;
        w.axis = cod;
        w.detail = "value depends on no axis yet is not constant";
        return Verdict::no(std::move(w), trace);
      }
    trace.push_back("constant function");
    return Verdict::yes(trace);
  }

  if (f.n() == 1) {
    for (const Rat& b : plcore::canonical_grid(f.complex, cod)) {
      ConeDescriptor cone;
      cone.atoms = {ConeAtom{cod, RelOp::EQ, b}};
      Complex level = detail::open_slice_closure(f.complex, cone);
      if (level.empty()) continue;
      trace.push_back("level " + rat_to_string(b) + ": " +
                      std::to_string(level.vertices.size()) + " point(s)");
      if (level.vertices.size() > 1) {
        Witness w;
        w.cone = cone;
        w.points = {level.vertices[0], level.vertices[1]};
        w.detail = "level set is not a single point";
        return Verdict::no(std::move(w), trace);
      }
    }
    return Verdict::yes(trace);
  }

  int jstar = 0;
  while (behaviors[jstar] == Behavior::Independent) ++jstar;
  for (const Rat& b : plcore::canonical_grid(f.complex, cod)) {
    ConeDescriptor cone;
    cone.atoms = {ConeAtom{cod, RelOp::EQ, b}};
    Complex level = detail::open_slice_closure(f.complex, cone);
    if (level.empty()) continue;
    trace.push_back("level " + rat_to_string(b));
    Complex dropped =
        plcore::project(level, all_cols_except(f.complex.ambient_dim, cod));
    GraphComplex lf;
    lf.complex = dropped;
    const int jcol = f.domain_axes[jstar];
    for (int c : drop_remap(f.domain_axes, cod))
      lf.domain_axes.push_back(c);
    {
      // x_{jstar} becomes the value of the level-set graph.
      const int jnew = jcol > cod ? jcol - 1 : jcol;
      lf.domain_axes.erase(
          std::find(lf.domain_axes.begin(), lf.domain_axes.end(), jnew));
      lf.codomain_axes = {jnew};
    }
    if (!dropped.pure() || dropped.dim() != f.n() - 1) {
      Witness w;
      w.cone = cone;
      w.detail = "level set is not of codimension one";
      return Verdict::no(std::move(w), trace);
    }
    auto inj = plcore::injective_on(dropped, lf.domain_axes);
    if (!inj.injective) {
      Witness w;
      w.cone = cone;
      w.points = {inj.p, inj.q};
      w.detail = "level set is not a graph over the remaining domain axes";
      return Verdict::no(std::move(w), trace);
    }
    auto rec = fn_levelsets(lf);
    if (!rec.holds) {
      Witness w = *rec.witness;
      w.detail = "within level " + rat_to_string(b) + ": " + w.detail;
      return Verdict::no(std::move(w), trace);
    }
  }
  return Verdict::yes(trace);
}

Verdict map_inductive(const GraphComplex& f,
                      const std::vector<std::string>& labels) {
  std::vector<std::string> trace;
  if (f.complex.empty()) return Verdict::yes(trace);
  if (f.k() == 0) return is_semi_monotone(f.complex, SemiRoute::Recursive);
  if (f.k() == 1) return is_monotone_function(f, FnRoute::Definition);

  auto dom = plcore::domain_complex(f);
  auto ds = is_semi_monotone(dom, SemiRoute::Recursive);
  trace.push_back(std::string("domain semi-monotone: ") +
                  (ds.holds ? "yes" : "no"));
  if (!ds.holds) {
    Witness w = *ds.witness;
    w.detail = "domain is not semi-monotone: " + w.detail;
    return Verdict::no(std::move(w), trace);
  }

  if (f.n() == 1) {
    for (int i = 0; i < f.k(); ++i) {
      GraphComplex fi;
      fi.complex = plcore::project(
          f.complex, {f.domain_axes[0], f.codomain_axes[i]});
      fi.domain_axes = {0};
      fi.codomain_axes = {1};
      auto rec = is_monotone_function(fi, FnRoute::Definition);
      trace.push_back("component " + labels[f.codomain_axes[i]] + ": " +
                      (rec.holds ? "monotone" : "not monotone"));
      if (!rec.holds) {
        Witness w = *rec.witness;
        w.detail = "component " + labels[f.codomain_axes[i]] +
                   " is not a monotone function: " + w.detail;
        return Verdict::no(std::move(w), trace);
      }
    }
    return Verdict::yes(trace);
  }

  for (int i = 0; i < f.k(); ++i) {
    const int ci = f.codomain_axes[i];
    auto valid = dependent_positions(f, ci);
    if (valid.empty()) {
      trace.push_back("component " + labels[ci] + ": constant");
      continue;
    }
    std::vector<int> js = {valid.front()};
    if (valid.size() > 1) js.push_back(valid[1]);
    for (int j : js) {
      const int jcol = f.domain_axes[j];
      trace.push_back("component " + labels[ci] + ", slicing against " +
                      labels[jcol]);
      std::optional<matroid::Matroid> basis_ref;
      std::optional<Rat> b_ref;
      for (const Rat& b : plcore::canonical_grid(f.complex, ci)) {
        ConeDescriptor cone;
        cone.atoms = {ConeAtom{ci, RelOp::EQ, b}};
        Complex level = detail::open_slice_closure(f.complex, cone);
        if (level.empty()) continue;
        Complex dropped = plcore::project(
            level, all_cols_except(f.complex.ambient_dim, ci));
        std::vector<std::string> nlabels = labels;
        nlabels.erase(nlabels.begin() + ci);
        GraphComplex g;
        g.complex = dropped;
        const int jnew = jcol > ci ? jcol - 1 : jcol;
        for (int c : drop_remap(f.domain_axes, ci))
          if (c != jnew) g.domain_axes.push_back(c);
        g.codomain_axes = drop_remap(f.codomain_axes, ci);
        g.codomain_axes.push_back(jnew);
        std::sort(g.codomain_axes.begin(), g.codomain_axes.end());
        if (!dropped.pure() || dropped.dim() != f.n() - 1) {
          Witness w;
          w.cone = cone;
          w.axis = ci;
          w.detail = "slice at " + labels[ci] + " = " + rat_to_string(b) +
                     " is not of codimension one";
          return Verdict::no(std::move(w), trace);
        }
        auto inj = plcore::injective_on(dropped, g.domain_axes);
        if (!inj.injective) {
          Witness w;
          w.cone = cone;
          w.axis = ci;
          w.points = {inj.p, inj.q};
          w.detail = "slice at " + labels[ci] + " = " + rat_to_string(b) +
                     " is not the graph of a map";
          return Verdict::no(std::move(w), trace);
        }
        auto bs = matroid::basis_system(g, nlabels);
        if (!basis_ref) {
          basis_ref = bs;
          b_ref = b;
        } else if (!(bs == *basis_ref)) {
          Witness w;
          w.axis = ci;
          w.detail = "basis systems differ between " + labels[ci] + " = " +
                     rat_to_string(*b_ref) + " and " + labels[ci] + " = " +
                     rat_to_string(b);
          return Verdict::no(std::move(w), trace);
        }
        auto rec = map_inductive(g, nlabels);
        if (!rec.holds) {
          Witness w = *rec.witness;
          w.detail = "within " + labels[ci] + " = " + rat_to_string(b) + ": " +
                     w.detail;
          return Verdict::no(std::move(w), trace);
        }
      }
    }
  }
  return Verdict::yes(trace);
}

}  // namespace

namespace detail {

std::string cone_to_string(const ConeDescriptor& c,
                           const std::vector<std::string>& labels) {
  if (c.atoms.empty()) return "{ }";
  std::string out = "{";
  bool first = true;
  for (const auto& a : c.atoms) {
    if (!first) out += ", ";
    first = false;
    out += a.axis < static_cast<int>(labels.size())
               ? labels[a.axis]
               : "x_" + std::to_string(a.axis + 1);
    out += a.rel == RelOp::LT ? " < " : a.rel == RelOp::EQ ? " = " : " > ";
    out += rat_to_string(a.threshold);
  }
  return out + "}";
}

std::string cone_to_string(const ConeDescriptor& c) {
  return cone_to_string(c, {});
}

Complex open_slice_closure(const Complex& k, const ConeDescriptor& c) {
  plcore::check_cone(c, k.ambient_dim);
  auto cells = boundary_cells(k);
  Complex sliced = plcore::intersect_cone(k, c);
  std::vector<std::vector<int>> keep;
  for (auto& f : plcore::all_faces(sliced)) {
    Point b = plcore::barycenter(sliced, f);
    bool removed = false;
    for (const auto& atom : c.atoms) {
      if (atom.rel == RelOp::EQ) continue;
      if (b[atom.axis] == atom.threshold) {
        removed = true;
        break;
      }
    }
    if (!removed)
      for (const auto& cell : cells)
        if (plcore::simplex_contains(cell, b)) {
          removed = true;
          break;
        }
    if (!removed) keep.push_back(std::move(f));
  }
  // Closure of the kept relative interiors: the inclusion-maximal kept faces.
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
  return plcore::make_complex(sliced.ambient_dim, sliced.vertices,
                              std::move(tops));
}

}  // namespace detail

Verdict is_semi_monotone(const Complex& k, SemiRoute route) {
  if (!k.empty()) {
    if (auto err = plcore::validate(k)) throw InputError(*err);
    if (!k.pure() || k.dim() != k.ambient_dim)
      throw InputError("expected a pure full-dimensional complex");
  }
  ConnCtx ctx;
  ctx.frontier_cells = boundary_cells(k);
  for (int a = 0; a < k.ambient_dim; ++a) ctx.free_axes.push_back(a);
  if (route == SemiRoute::Direct) {
    ctx.adaptive = false;
    ctx.fixed_grids.resize(k.ambient_dim);
    for (int a = 0; a < k.ambient_dim; ++a)
      ctx.fixed_grids[a] = plcore::canonical_grid(k, a);
  }
  std::vector<std::string> trace;
  std::vector<ConeAtom> eq;
  auto w = conn_core(ctx, k, eq, 0, trace);
  return w ? Verdict::no(std::move(*w), trace) : Verdict::yes(trace);
}

Verdict is_semi_monotone(const Complex& k) {
  auto direct = is_semi_monotone(k, SemiRoute::Direct);
  auto recursive = is_semi_monotone(k, SemiRoute::Recursive);
  if (direct.holds != recursive.holds)
    throw std::logic_error("semi-monotonicity routes disagree");
  return direct;
}

Behavior coordinate_behavior(const GraphComplex& f, int j) {
  if (f.k() != 1)
    throw InputError("coordinate behavior requires exactly one codomain axis");
  if (j < 0 || j >= f.n()) throw InputError("domain axis position out of range");
  bool pos = false, neg = false, zero = false;
  for (const auto& s : f.complex.top_simplices) {
    auto g = plcore::simplex_gradient(f, s, f.codomain_axes[0]);
    if (!g) throw InputError("top simplex projects degenerately to domain");
    int sg = sign((*g)[j]);
    if (sg > 0) pos = true;
    else if (sg < 0) neg = true;
    else zero = true;
  }
  if (pos && !neg && !zero) return Behavior::Increasing;
  if (neg && !pos && !zero) return Behavior::Decreasing;
  if (!pos && !neg) return Behavior::Independent;
  return Behavior::None;
}

Verdict is_level_monotone(const GraphComplex& f, LevelDir dir) {
  if (auto err = plcore::validate(f)) throw InputError(*err);
  if (f.k() != 1)
    throw InputError("level checks require exactly one codomain axis");
  if (f.complex.empty()) return Verdict::yes();
  auto dom = plcore::domain_complex(f);
  if (!is_semi_monotone(dom, SemiRoute::Recursive).holds)
    throw InputError("domain is not semi-monotone");
  std::vector<std::string> trace;
  auto w = level_violation(f, dir, trace);
  return w ? Verdict::no(std::move(*w), trace) : Verdict::yes(trace);
}

Verdict is_monotone_function(const GraphComplex& f, FnRoute route) {
  if (auto err = plcore::validate(f)) throw InputError(*err);
  if (f.k() != 1)
    throw InputError("monotone functions have exactly one codomain axis");
  if (f.complex.empty()) return Verdict::yes();
  switch (route) {
    case FnRoute::Definition: return fn_definition(f);
    case FnRoute::Connectivity: return fn_connectivity(f);
    default: return fn_levelsets(f);
  }
}

Verdict is_monotone_function(const GraphComplex& f) {
  auto def = is_monotone_function(f, FnRoute::Definition);
  auto conn = is_monotone_function(f, FnRoute::Connectivity);
  auto lvl = is_monotone_function(f, FnRoute::LevelSets);
  if (def.holds != conn.holds || def.holds != lvl.holds)
    throw std::logic_error("monotone-function routes disagree");
  return def;
}

Verdict is_quasi_affine(const GraphComplex& f) {
  if (auto err = plcore::validate(f)) throw InputError(*err);
  if (f.complex.empty()) return Verdict::yes();
  auto labels = matroid::default_labels(f);
  std::vector<std::string> trace;
  for (const auto& t : matroid::subsets_colex(f.complex.ambient_dim, f.n())) {
    std::string tname;
    for (int a : t) tname += (tname.empty() ? "" : ",") + labels[a];
    auto inj = plcore::injective_on(f.complex, t);
    bool full = plcore::image_dimension(f.complex, t) == f.n();
    trace.push_back("{" + tname + "}: injective=" +
                    (inj.injective ? "yes" : "no") + " full-dim=" +
                    (full ? "yes" : "no"));
    if (inj.injective != full) {
      Witness w;
      if (!inj.injective) {
        w.points = {inj.p, inj.q};
        w.detail = "projection to {" + tname +
                   "} has a full-dimensional image but identifies " +
                   point_str(inj.p) + " and " + point_str(inj.q);
      } else {
        w.detail = "projection to {" + tname +
                   "} is injective but has a lower-dimensional image";
      }
      return Verdict::no(std::move(w), trace);
    }
  }
  return Verdict::yes(trace);
}

Verdict is_monotone_map(const GraphComplex& f, MapMode mode) {
  if (auto err = plcore::validate(f)) throw InputError(*err);
  if (mode == MapMode::Inductive)
    return map_inductive(f, matroid::default_labels(f));
  if (f.complex.empty()) return Verdict::yes();
  if (!is_quasi_affine(f).holds)
    throw InputError("connectivity mode requires a quasi-affine map");
  std::vector<std::string> trace;
  ConnCtx ctx;
  ctx.frontier_cells = boundary_cells(f.complex);
  for (int a = 0; a < f.complex.ambient_dim; ++a) ctx.free_axes.push_back(a);
  std::vector<ConeAtom> eq;
  auto w = conn_core(ctx, f.complex, eq, 0, trace);
  return w ? Verdict::no(std::move(*w), trace) : Verdict::yes(trace);
}

Verdict is_monotone_map(const GraphComplex& f) {
  auto ind = is_monotone_map(f, MapMode::Inductive);
  if (f.complex.empty()) return ind;
  if (!is_quasi_affine(f).holds) {
    if (ind.holds)
      throw std::logic_error("inductive mode accepted a non-quasi-affine map");
    return ind;
  }
  auto conn = is_monotone_map(f, MapMode::Connectivity);
  if (ind.holds != conn.holds)
    throw std::logic_error("monotone-map modes disagree");
  return ind;
}

}  // namespace monocell::mono

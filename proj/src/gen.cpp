#include "monocell/gen.hpp"

#include "monocell/grid.hpp"
#include "monocell/mono.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>
#include <string>

namespace monocell::gen {

using plcore::InputError;
using plcore::Point;

namespace {

using Rng = std::mt19937_64;

// rng()%m is used instead of std distributions: the distribution objects are
// implementation-defined, and instances must be reproducible from the seed.
Rat rand_pos(Rng& rng, long long den) {
  return Rat(static_cast<long long>(rng() % den) + 1) / Rat(den);
}

Rat rand_signed(Rng& rng, long long den) {
  return Rat(static_cast<long long>(rng() % (2 * den + 1)) - den) / Rat(den);
}

std::vector<Rat> increasing_values(Rng& rng, int count, long long den) {
  std::vector<Rat> vals = {rand_signed(rng, den)};
  for (int i = 1; i < count; ++i)
    vals.push_back(vals.back() + rand_pos(rng, den));
  return vals;
}

Complex strip(Rng& rng, int n, const GenConfig& cfg) {
  if (n == 1) {
    auto vals = increasing_values(rng, cfg.resolution + 1, cfg.denominator_bound);
    std::vector<Point> verts;
    std::vector<std::vector<int>> tops;
    for (size_t i = 0; i < vals.size(); ++i) {
      verts.push_back({vals[i]});
      if (i + 1 < vals.size())
        tops.push_back({static_cast<int>(i), static_cast<int>(i + 1)});
    }
    return plcore::make_complex(1, std::move(verts), std::move(tops));
  }
  Complex base = strip(rng, n - 1, cfg);
  auto affine = [&](Rng& r) {
    Vec c;
    for (int a = 0; a < n - 1; ++a)
      c.push_back(rand_signed(r, cfg.denominator_bound));
    c.push_back(rand_signed(r, cfg.denominator_bound));  // offset
    return c;
  };
  auto eval = [&](const Vec& c, const Point& p) {
    Rat v = c.back();
    for (int a = 0; a < n - 1; ++a) v += c[a] * p[a];
    return v;
  };
  Vec cf = affine(rng), cg = affine(rng);
  // lift g until it clears f everywhere (affine gap is settled at vertices)
  Rat shift(0);
  for (const auto& p : base.vertices)
    shift = std::max(shift, eval(cf, p) - eval(cg, p));
  shift += rand_pos(rng, cfg.denominator_bound);

  const int layers = cfg.resolution;
  std::map<std::pair<int, int>, int> id;
  std::vector<Point> verts;
  auto intern = [&](int v, int l) {
    auto it = id.find({v, l});
    if (it != id.end()) return it->second;
    const Point& p = base.vertices[v];
    Rat lo = eval(cf, p);
    Rat hi = eval(cg, p) + shift;
    Point q = p;
    q.push_back(lo + (hi - lo) * Rat(l) / Rat(layers));
    int nid = static_cast<int>(verts.size());
    verts.push_back(std::move(q));
    id.emplace(std::make_pair(v, l), nid);
    return nid;
  };
  std::vector<std::vector<int>> tops;
  for (const auto& s : base.top_simplices) {
    std::vector<int> vs = s;
    std::sort(vs.begin(), vs.end());
    for (int l = 0; l < layers; ++l) {
      for (size_t i = 0; i < vs.size(); ++i) {
        std::vector<int> cell;
        for (size_t a = 0; a <= i; ++a) cell.push_back(intern(vs[a], l));
        for (size_t a = i; a < vs.size(); ++a)
          cell.push_back(intern(vs[a], l + 1));
        tops.push_back(std::move(cell));
      }
    }
  }
  return plcore::make_complex(n, std::move(verts), std::move(tops));
}

std::vector<std::vector<Rat>> box_axes(Rng& rng, const GenConfig& cfg) {
  std::vector<std::vector<Rat>> axes;
  for (int a = 0; a < cfg.n; ++a)
    axes.push_back(
        increasing_values(rng, cfg.resolution + 1, cfg.denominator_bound));
  return axes;
}

GraphComplex lift(const Complex& dom, std::vector<Point> dom_coords,
                  const std::vector<Vec>& values, int k) {
  const int n = dom.ambient_dim;
  std::vector<Point> verts;
  for (size_t i = 0; i < dom_coords.size(); ++i) {
    Point p = std::move(dom_coords[i]);
    p.insert(p.end(), values[i].begin(), values[i].end());
    verts.push_back(std::move(p));
  }
  GraphComplex g;
  g.complex = plcore::make_complex(n + k, std::move(verts), dom.top_simplices);
  for (int a = 0; a < n; ++a) g.domain_axes.push_back(a);
  for (int a = 0; a < k; ++a) g.codomain_axes.push_back(n + a);
  if (auto err = plcore::validate(g)) throw InputError(*err);
  return g;
}

}  // namespace

void check_config(const GenConfig& cfg) {
  if (cfg.n < 1 || cfg.n > 3 || cfg.k < 0 || cfg.k > 2 || cfg.n + cfg.k > 4)
    throw InputError("generator dimensions out of range (n<=3, k<=2, n+k<=4)");
  if (cfg.resolution < 1 || cfg.resolution > 6)
    throw InputError("generator resolution out of range (1..6)");
  if (cfg.denominator_bound < 2)
    throw InputError("denominator bound too small");
}

Complex gen_semi_monotone(const GenConfig& cfg) {
  check_config(cfg);
  for (std::uint64_t attempt = 0; attempt < 8; ++attempt) {
    Rng rng(cfg.seed + (attempt << 32));
    Complex x = strip(rng, cfg.n, cfg);
    if (mono::is_semi_monotone(x).holds) return x;
  }
  throw std::logic_error("strip generator failed its postcondition");
}

GraphComplex gen_monotone_function(const GenConfig& cfg) {
  check_config(cfg);
  for (std::uint64_t attempt = 0; attempt < 8; ++attempt) {
    Rng rng(cfg.seed + (attempt << 32));
    auto axes = box_axes(rng, cfg);
    Complex dom = plcore::kuhn_grid(axes);
    // per-axis value ladders: strictly increasing, decreasing, or flat
    std::vector<std::vector<Rat>> ladder;
    for (int a = 0; a < cfg.n; ++a) {
      int mode = static_cast<int>(rng() % 3);
      std::vector<Rat> s(axes[a].size(), Rat(0));
      for (size_t i = 1; i < s.size(); ++i) {
        Rat step = rand_pos(rng, cfg.denominator_bound);
        s[i] = s[i - 1] + (mode == 0 ? step : mode == 1 ? -step : Rat(0));
      }
      ladder.push_back(std::move(s));
    }
    std::vector<Vec> values;
    for (const auto& p : dom.vertices) {
      Rat v(0);
      for (int a = 0; a < cfg.n; ++a) {
        auto it = std::lower_bound(axes[a].begin(), axes[a].end(), p[a]);
        v += ladder[a][it - axes[a].begin()];
      }
      values.push_back({v});
    }
    GraphComplex g = lift(dom, dom.vertices, values, 1);
    if (mono::is_monotone_function(g).holds) return g;
  }
  throw std::logic_error("function generator failed its postcondition");
}

GraphComplex gen_monotone_map(const GenConfig& cfg) {
  check_config(cfg);
  for (std::uint64_t attempt = 0; attempt < 8; ++attempt) {
    Rng rng(cfg.seed + (attempt << 32));
    bool use_strip = cfg.n >= 2 && (rng() & 1);
    Complex dom = use_strip ? strip(rng, cfg.n, cfg)
                            : plcore::kuhn_grid(box_axes(rng, cfg));
    std::vector<Vec> values(dom.vertices.size(), Vec{});
    for (int i = 0; i < cfg.k; ++i) {
      Vec c;
      for (int a = 0; a <= cfg.n; ++a)
        c.push_back(rand_signed(rng, cfg.denominator_bound));
      for (size_t v = 0; v < dom.vertices.size(); ++v) {
        Rat y = c[cfg.n];
        for (int a = 0; a < cfg.n; ++a) y += c[a] * dom.vertices[v][a];
        values[v].push_back(y);
      }
    }
    std::vector<Point> coords = dom.vertices;
    if (!use_strip && (rng() & 1)) {
      // per-axis strictly increasing PL reparameterization: replace each
      // grid value ladder by a fresh one (exact, cells span single bands)
      for (int a = 0; a < cfg.n; ++a) {
        std::vector<Rat> old;
        for (const auto& p : dom.vertices) old.push_back(p[a]);
        std::sort(old.begin(), old.end());
        old.erase(std::unique(old.begin(), old.end()), old.end());
        auto fresh = increasing_values(rng, static_cast<int>(old.size()),
                                       cfg.denominator_bound);
        for (auto& p : coords) {
          auto it = std::lower_bound(old.begin(), old.end(), p[a]);
          p[a] = fresh[it - old.begin()];
        }
      }
    }
    GraphComplex g = lift(dom, std::move(coords), values, cfg.k);
    if (mono::is_monotone_map(g).holds) return g;
  }
  throw std::logic_error("map generator failed its postcondition");
}

Complex mutate_negative(const Complex& x, Mutation strategy) {
  if (strategy != Mutation::NotchDomain)
    throw InputError("this mutation needs a graph instance");
  for (size_t drop = 0; drop < x.top_simplices.size(); ++drop) {
    if (x.top_simplices.size() < 2) break;
    std::vector<std::vector<int>> tops;
    for (size_t i = 0; i < x.top_simplices.size(); ++i)
      if (i != drop) tops.push_back(x.top_simplices[i]);
    try {
      Complex cand = plcore::make_complex(x.ambient_dim, x.vertices, tops);
      if (!mono::is_semi_monotone(cand, mono::SemiRoute::Recursive).holds)
        return cand;
    } catch (const InputError&) {
      // dropping this cell broke purity; try the next one
    }
  }
  throw InputError("no single-cell notch disconnects a slice");
}

GraphComplex mutate_negative(const GraphComplex& f, Mutation strategy) {
  if (auto err = plcore::validate(f)) throw InputError(*err);
  if (strategy == Mutation::NotchDomain)
    throw InputError("notch-domain applies to plain sets");

  if (strategy == Mutation::FlattenSlice) {
    if (f.k() != 1)
      throw InputError("flatten-slice needs a single codomain value");
    int pos = -1;
    for (int j = 0; j < f.n(); ++j) {
      auto b = mono::coordinate_behavior(f, j);
      if (b == mono::Behavior::Increasing || b == mono::Behavior::Decreasing) {
        pos = j;
        break;
      }
    }
    if (pos < 0) throw InputError("no strictly monotone axis to flatten");
    const int col = f.domain_axes[pos];
    const int ycol = f.codomain_axes[0];
    std::vector<Rat> vals;
    for (const auto& p : f.complex.vertices) vals.push_back(p[col]);
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    if (vals.size() < 3)
      throw InputError("flatten-slice needs at least two bands");
    std::map<Point, size_t> at_first;
    for (size_t i = 0; i < f.complex.vertices.size(); ++i) {
      Point key = f.complex.vertices[i];
      if (key[col] != vals[0]) continue;
      key[col] = Rat(0);
      key[ycol] = Rat(0);
      at_first.emplace(std::move(key), i);
    }
    std::vector<Point> verts = f.complex.vertices;
    for (auto& p : verts) {
      if (p[col] != vals[1]) continue;
      Point key = p;
      key[col] = Rat(0);
      key[ycol] = Rat(0);
      auto it = at_first.find(key);
      if (it == at_first.end())
        throw InputError("flatten-slice needs a product grid");
      p[ycol] = f.complex.vertices[it->second][ycol];
    }
    GraphComplex out = f;
    out.complex = plcore::make_complex(f.complex.ambient_dim, std::move(verts),
                                       f.complex.top_simplices);
    return out;
  }

  // CollideLevels
  if (f.n() < 2) throw InputError("collide-levels needs n >= 2");
  Complex dom = plcore::domain_complex(f);
  std::vector<Rat> vals;
  for (const auto& p : dom.vertices) vals.push_back(p[0]);
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  if (vals.size() < 3) throw InputError("collide-levels needs at least two bands");
  const Rat m = vals[vals.size() / 2];
  std::vector<Vec> values;
  for (const auto& p : dom.vertices) {
    Rat w = p[0] >= m ? Rat(0) : m - p[0];
    values.push_back({p[0], p[1] * w});
  }
  return lift(dom, dom.vertices, values, 2);
}

}  // namespace monocell::gen

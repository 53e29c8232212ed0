#include "monocell/toric.hpp"

#include "monocell/grid.hpp"

#include <algorithm>
#include <string>

namespace monocell::toric {

using plcore::InputError;

namespace {

std::vector<std::string> cube_labels(int n) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back("x_" + std::to_string(i));
  return out;
}

int row_rank(const ExponentData& e, const std::vector<int>& which) {
  std::vector<Vec> pts;
  pts.push_back(Vec(e.d, Rat(0)));  // affine_rank of {0} u rows = linear rank
  for (int i : which) {
    Vec row(e.d);
    for (int j = 0; j < e.d; ++j) row[j] = Rat(e.rows[i][j]);
    pts.push_back(std::move(row));
  }
  return affine_rank(pts);
}

// Log-uniform grid: eps * q^i for i = 0..r-1 with the largest 64th q such
// that the last value stays at most 1 - eps. Exact rationals throughout.
std::vector<Rat> log_grid(int r) {
  const Rat eps = Rat(1) / Rat(4 * r);
  const Rat ratio = (Rat(1) - eps) / eps;
  const long long den = 64;
  long long lo = den, hi = den;
  while (rat_pow(Rat(hi) / Rat(den), r - 1) <= ratio) hi *= 2;
  while (lo + 1 < hi) {
    long long mid = lo + (hi - lo) / 2;
    (rat_pow(Rat(mid) / Rat(den), r - 1) <= ratio ? lo : hi) = mid;
  }
  const Rat q = Rat(lo) / Rat(den);
  std::vector<Rat> vals;
  Rat t = eps;
  for (int i = 0; i < r; ++i) {
    vals.push_back(t);
    t *= q;
  }
  return vals;
}

}  // namespace

void check_exponents(const ExponentData& e) {
  if (e.d < 1 || e.n() < 1) throw InputError("exponent data is empty");
  for (const auto& row : e.rows) {
    if (static_cast<int>(row.size()) != e.d)
      throw InputError("exponent row length differs from d");
    for (int a : row)
      if (a < 0) throw InputError("exponents must be non-negative");
  }
}

Point toric_eval(const ExponentData& e, const Point& t) {
  check_exponents(e);
  if (static_cast<int>(t.size()) != e.d)
    throw InputError("parameter point has wrong dimension");
  for (const auto& x : t)
    if (x <= 0 || x >= 1)
      throw InputError("parameter point must lie in the open unit cube");
  Point out;
  for (const auto& row : e.rows) {
    Rat v(1);
    for (int j = 0; j < e.d; ++j)
      v *= rat_pow(t[j], static_cast<unsigned>(row[j]));
    out.push_back(std::move(v));
  }
  return out;
}

Mat log_linear(const ExponentData& e) {
  check_exponents(e);
  Mat a;
  for (const auto& row : e.rows) {
    Vec r(e.d);
    for (int j = 0; j < e.d; ++j) r[j] = Rat(row[j]);
    a.push_back(std::move(r));
  }
  return a;
}

int exponent_rank(const ExponentData& e) {
  check_exponents(e);
  std::vector<int> all(e.n());
  for (int i = 0; i < e.n(); ++i) all[i] = i;
  return row_rank(e, all);
}

matroid::Matroid toric_matroid(const ExponentData& e) {
  check_exponents(e);
  matroid::Matroid m;
  m.ground = cube_labels(e.n());
  m.rank = exponent_rank(e);
  for (const auto& sub : matroid::subsets_colex(e.n(), m.rank)) {
    if (row_rank(e, sub) != m.rank) continue;
    std::vector<std::string> basis;
    for (int i : sub) basis.push_back(m.ground[i]);
    std::sort(basis.begin(), basis.end());
    m.bases.insert(std::move(basis));
  }
  return m;
}

GraphComplex toric_parameterization(const ExponentData& e, int r) {
  check_exponents(e);
  if (r < 2) throw InputError("resolution must be at least 2");
  Complex base = plcore::kuhn_grid(
      std::vector<std::vector<Rat>>(e.d, log_grid(r)));
  std::vector<Point> verts;
  for (const auto& t : base.vertices) {
    Point p = t;
    Point x = toric_eval(e, t);
    p.insert(p.end(), x.begin(), x.end());
    verts.push_back(std::move(p));
  }
  GraphComplex g;
  g.complex = plcore::make_complex(e.d + e.n(), std::move(verts),
                                   base.top_simplices);
  for (int a = 0; a < e.d; ++a) g.domain_axes.push_back(a);
  for (int a = 0; a < e.n(); ++a) g.codomain_axes.push_back(e.d + a);
  if (auto err = plcore::validate(g))
    throw InputError("degenerate toric sample: " + *err);
  return g;
}

GraphComplex toric_pl_sample(const ExponentData& e, int r) {
  check_exponents(e);
  const int rank = exponent_rank(e);
  if (rank == 0) {
    // every exponent row is zero: the cube is the point (1,...,1)
    GraphComplex g;
    g.complex = plcore::make_complex(
        e.n(), {Point(e.n(), Rat(1))}, {{0}});
    for (int a = 0; a < e.n(); ++a) g.codomain_axes.push_back(a);
    return g;
  }
  if (rank != e.d)
    throw InputError("exponent matrix has rank " + std::to_string(rank) +
                     " < d; reparameterize with d = rank");
  GraphComplex param = toric_parameterization(e, r);
  std::vector<int> cube_cols;
  for (int a = 0; a < e.n(); ++a) cube_cols.push_back(e.d + a);
  Complex sample = plcore::project(param.complex, cube_cols);
  GraphComplex g;
  g.complex = std::move(sample);
  for (const auto& sub : matroid::subsets_colex(e.n(), e.d)) {
    if (row_rank(e, sub) != e.d) continue;
    g.domain_axes = sub;
    break;
  }
  for (int a = 0; a < e.n(); ++a)
    if (!std::binary_search(g.domain_axes.begin(), g.domain_axes.end(), a))
      g.codomain_axes.push_back(a);
  if (auto err = plcore::validate(g))
    throw InputError("degenerate basis selection: " + *err);
  return g;
}

ToricReport toric_check(const ExponentData& e, int r) {
  ToricReport rep;
  rep.dim = exponent_rank(e);
  GraphComplex sample = toric_pl_sample(e, r);
  rep.map_verdict = mono::is_monotone_map(sample);
  rep.sample_matroid = matroid::basis_system(sample, cube_labels(e.n()));
  rep.expected_matroid = toric_matroid(e);
  rep.matroid_match = rep.sample_matroid == rep.expected_matroid;
  rep.evidence = topo::regular_cell_evidence(sample);
  rep.pass = rep.map_verdict.holds && rep.matroid_match && rep.evidence.pass;
  return rep;
}

}  // namespace monocell::toric

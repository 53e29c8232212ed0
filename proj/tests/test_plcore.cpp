#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "monocell/feasibility.hpp"

#include <random>

using namespace monocell;
using namespace monocell::plcore;
using namespace monocell::fixtures;

namespace {

ConeDescriptor cone(std::initializer_list<ConeAtom> atoms) {
  ConeDescriptor c;
  c.atoms = atoms;
  return c;
}

Rat rnd_rat(std::mt19937_64& rng, long long denom = 64) {
  long long p = static_cast<long long>(rng() % (4 * denom + 1)) - 2 * denom;
  return Rat(Int(p), Int(denom));
}

}  // namespace

TEST_CASE("feasibility kernel basics") {
  // x > 0, x < 1 feasible with witness strictly inside.
  std::vector<LinConstraint> cons;
  cons.push_back({{Rat(-1)}, Rel::LT, Rat(0)});
  cons.push_back({{Rat(1)}, Rel::LT, Rat(1)});
  auto r = solve_feasibility(cons, 1);
  CHECK(r.feasible);
  CHECK(r.witness[0] > 0);
  CHECK(r.witness[0] < 1);

  // x > 0, x < 0 infeasible.
  cons.clear();
  cons.push_back({{Rat(-1)}, Rel::LT, Rat(0)});
  cons.push_back({{Rat(1)}, Rel::LT, Rat(0)});
  CHECK_FALSE(solve_feasibility(cons, 1).feasible);

  // x + y = 1, x >= 0, y >= 0, x - y > 0.
  cons.clear();
  cons.push_back({{Rat(1), Rat(1)}, Rel::EQ, Rat(1)});
  cons.push_back({{Rat(-1), Rat(0)}, Rel::LE, Rat(0)});
  cons.push_back({{Rat(0), Rat(-1)}, Rel::LE, Rat(0)});
  cons.push_back({{Rat(-1), Rat(1)}, Rel::LT, Rat(0)});
  r = solve_feasibility(cons, 2);
  CHECK(r.feasible);
  CHECK(r.witness[0] + r.witness[1] == 1);
  CHECK(r.witness[0] > r.witness[1]);

  // x = 0 and x = 1 inconsistent.
  cons.clear();
  cons.push_back({{Rat(1)}, Rel::EQ, Rat(0)});
  cons.push_back({{Rat(1)}, Rel::EQ, Rat(1)});
  CHECK_FALSE(solve_feasibility(cons, 1).feasible);
}

TEST_CASE("complex validity") {
  CHECK_FALSE(validate(unit_square()).has_value());
  CHECK_FALSE(validate(triangle()).has_value());
  CHECK_FALSE(validate(u_shape()).has_value());
  CHECK_FALSE(validate(unit_square(3)).has_value());

  // Two triangles overlapping in a non-face: invalid.
  Complex bad = make_complex(2,
                             {{Rat(0), Rat(0)},
                              {Rat(2), Rat(0)},
                              {Rat(0), Rat(2)},
                              {Rat(1), Rat(-1)},
                              {Rat(1), Rat(1)},
                              {Rat(3), Rat(1)}},
                             {{0, 1, 2}, {3, 4, 5}});
  CHECK(validate(bad).has_value());

  // Degenerate (collinear) triangle: invalid.
  Complex degen = make_complex(
      2, {{Rat(0), Rat(0)}, {Rat(1), Rat(1)}, {Rat(2), Rat(2)}}, {{0, 1, 2}});
  CHECK(validate(degen).has_value());
}

TEST_CASE("intersect_cone examples") {
  // Unit square sliced at x_2 = 1/2: the segment [0,1] x {1/2}.
  Complex s = intersect_cone(unit_square(), cone({{1, RelOp::EQ, rat(1, 2)}}));
  CHECK(s.dim() == 1);
  CHECK(contains_point(s, {rat(0), rat(1, 2)}));
  CHECK(contains_point(s, {rat(1), rat(1, 2)}));
  CHECK(contains_point(s, {rat(1, 3), rat(1, 2)}));
  CHECK_FALSE(contains_point(s, {rat(1, 3), rat(1, 3)}));
  CHECK(open_components(s).count == 1);

  // Triangle clipped to x_1 > 1/2: conv{(1/2,0),(1,0),(1/2,1/2)}.
  Complex t = intersect_cone(triangle(), cone({{0, RelOp::GT, rat(1, 2)}}));
  CHECK(t.dim() == 2);
  CHECK(contains_point(t, {rat(1, 2), rat(0)}));
  CHECK(contains_point(t, {rat(1), rat(0)}));
  CHECK(contains_point(t, {rat(1, 2), rat(1, 2)}));
  CHECK_FALSE(contains_point(t, {rat(1, 4), rat(1, 4)}));
  CHECK_FALSE(contains_point(t, {rat(3, 4), rat(1, 2)}));

  // U-shape sliced at x_2 = 1/2: two disjoint segments.
  Complex u = intersect_cone(u_shape(), cone({{1, RelOp::EQ, rat(1, 2)}}));
  CHECK(u.dim() == 1);
  CHECK(contains_point(u, {rat(1, 2), rat(1, 2)}));
  CHECK(contains_point(u, {rat(5, 2), rat(1, 2)}));
  CHECK_FALSE(contains_point(u, {rat(3, 2), rat(1, 2)}));
  CHECK(open_components(u).count == 2);

  // Malformed cone: duplicate axis.
  CHECK_THROWS_AS(
      intersect_cone(unit_square(),
                     cone({{0, RelOp::LT, rat(1)}, {0, RelOp::GT, rat(0)}})),
      InputError);
}

TEST_CASE("open_components examples") {
  CHECK(open_components(unit_square()).count == 1);
  CHECK(open_components(u_shape()).count == 1);
  CHECK(open_components(Complex{2, {}, {}}).count == 0);

  // Two triangles sharing only a vertex: open realizations are separate.
  Complex bowtie = make_complex(2,
                                {{Rat(0), Rat(0)},
                                 {Rat(-1), Rat(-1)},
                                 {Rat(-1), Rat(0)},
                                 {Rat(1), Rat(1)},
                                 {Rat(1), Rat(0)}},
                                {{0, 1, 2}, {0, 3, 4}});
  CHECK_FALSE(validate(bowtie).has_value());
  CHECK(open_components(bowtie).count == 2);
}

TEST_CASE("frontier examples") {
  // Unit square: boundary 4-gon.
  Complex fr = frontier(unit_square());
  CHECK(fr.dim() == 1);
  CHECK(contains_point(fr, {rat(1, 2), rat(0)}));
  CHECK(contains_point(fr, {rat(0), rat(1, 2)}));
  CHECK(contains_point(fr, {rat(1), rat(1, 2)}));
  CHECK(contains_point(fr, {rat(1, 2), rat(1)}));
  CHECK_FALSE(contains_point(fr, {rat(1, 2), rat(1, 2)}));

  // Segment: two endpoints.
  Complex fs = frontier(unit_interval());
  CHECK(fs.dim() == 0);
  CHECK(contains_point(fs, {rat(0)}));
  CHECK(contains_point(fs, {rat(1)}));
  CHECK_FALSE(contains_point(fs, {rat(1, 2)}));

  // Fan triangulation with an interior vertex: outer edges only.
  Complex fan = make_complex(2,
                             {{Rat(0), Rat(0)},
                              {Rat(1), Rat(0)},
                              {Rat(0), Rat(1)},
                              {rat(1, 4), rat(1, 4)}},
                             {{0, 1, 3}, {1, 2, 3}, {0, 2, 3}});
  CHECK_FALSE(validate(fan).has_value());
  Complex ff = frontier(fan);
  CHECK_FALSE(contains_point(ff, {rat(1, 4), rat(1, 4)}));
  CHECK(contains_point(ff, {rat(1, 2), rat(0)}));
  CHECK(contains_point(ff, {rat(1, 2), rat(1, 2)}));
  CHECK(contains_point(ff, {rat(0), rat(1, 2)}));
}

TEST_CASE("critical values and canonical grid") {
  auto cv = critical_values(unit_square(), 0);
  CHECK(cv == std::vector<Rat>{Rat(0), Rat(1)});
  auto cu = critical_values(u_shape(), 0);
  CHECK(cu == std::vector<Rat>{Rat(0), Rat(1), Rat(2), Rat(3)});
  CHECK(critical_values(triangle(), 1) == std::vector<Rat>{Rat(0), Rat(1)});
  auto grid = canonical_grid(unit_square(), 0);
  CHECK(grid == std::vector<Rat>{Rat(0), rat(1, 2), Rat(1)});
}

TEST_CASE("injective_on examples") {
  auto plus = graph_on_grid({Rat(0), Rat(0)}, {Rat(1), Rat(1)}, {1, 1},
                            [](const Vec& x) { return Vec{x[0] + x[1]}; });
  CHECK(injective_on(plus.complex, {0, 1}).injective);
  CHECK(injective_on(plus.complex, {0, 2}).injective);
  CHECK(injective_on(plus.complex, {1, 2}).injective);
  CHECK_FALSE(injective_on(plus.complex, {0}).injective);

  auto constant = graph_on_grid({Rat(0), Rat(0)}, {Rat(1), Rat(1)}, {1, 1},
                                [](const Vec&) { return Vec{rat(1, 2)}; });
  auto r = injective_on(constant.complex, {0, 2});
  CHECK_FALSE(r.injective);
  CHECK(r.p[0] == r.q[0]);
  CHECK(r.p[2] == r.q[2]);
  CHECK(r.p[1] != r.q[1]);
}

TEST_CASE("image_dimension examples") {
  CHECK(image_dimension(unit_square(), {0}) == 1);
  auto plus = graph_on_grid({Rat(0), Rat(0)}, {Rat(1), Rat(1)}, {1, 1},
                            [](const Vec& x) { return Vec{x[0] + x[1]}; });
  CHECK(image_dimension(plus.complex, {0, 1, 2}) == 2);
  Complex seg = make_complex(
      3, {{Rat(0), Rat(0), Rat(0)}, {Rat(1), Rat(1), Rat(2)}}, {{0, 1}});
  CHECK(image_dimension(seg, {0, 1}) == 1);

  // Monotone under inclusion of the axis set.
  CHECK(image_dimension(plus.complex, {0}) <=
        image_dimension(plus.complex, {0, 1}));
  CHECK(image_dimension(plus.complex, {0, 1}) <=
        image_dimension(plus.complex, {0, 1, 2}));
}

TEST_CASE("project_injective examples") {
  auto plus = graph_on_grid({Rat(0), Rat(0)}, {Rat(1), Rat(1)}, {1, 1},
                            [](const Vec& x) { return Vec{x[0] + x[1]}; });
  auto ex = project_injective(plus, {0, 2});
  CHECK(ex.domain_axes == std::vector<int>{0, 2});
  CHECK(ex.codomain_axes == std::vector<int>{1});
  CHECK_FALSE(validate(ex).has_value());

  auto ident = graph_on_grid({Rat(0)}, {Rat(1)}, {1},
                             [](const Vec& x) { return Vec{x[0]}; });
  auto exi = project_injective(ident, {1});
  CHECK_FALSE(validate(exi).has_value());

  auto dec = graph_on_grid({Rat(0)}, {Rat(1)}, {1},
                           [](const Vec& x) { return Vec{Rat(1) - x[0]}; });
  auto exd = project_injective(dec, {1});
  CHECK_FALSE(validate(exd).has_value());

  auto constant = graph_on_grid({Rat(0), Rat(0)}, {Rat(1), Rat(1)}, {1, 1},
                                [](const Vec&) { return Vec{rat(1, 2)}; });
  CHECK_THROWS_AS(project_injective(constant, {0, 2}), InputError);
}

TEST_CASE("slicing soundness by membership sampling") {
  std::mt19937_64 rng(7);
  auto shapes = std::vector<Complex>{unit_square(2), triangle(), u_shape()};
  for (const auto& k : shapes) {
    for (int axis = 0; axis < 2; ++axis) {
      auto grid = canonical_grid(k, axis);
      for (const auto& c : grid) {
        for (auto rel : {RelOp::LT, RelOp::EQ, RelOp::GT}) {
          Complex sliced = intersect_cone(k, cone({{axis, rel, c}}));
          for (int trial = 0; trial < 40; ++trial) {
            Point p{rnd_rat(rng), rnd_rat(rng)};
            if (rel == RelOp::EQ) p[axis] = c;
            bool in_closed_cone =
                rel == RelOp::EQ ||
                (rel == RelOp::LT ? p[axis] <= c : p[axis] >= c);
            bool expect = contains_point(k, p) && in_closed_cone;
            CHECK(contains_point(sliced, p) == expect);
          }
        }
      }
    }
  }
}

TEST_CASE("intersect_cone is idempotent") {
  for (const auto& k : {unit_square(2), u_shape()}) {
    for (auto rel : {RelOp::LT, RelOp::EQ, RelOp::GT}) {
      ConeDescriptor c = cone({{0, rel, rat(3, 2)}});
      Complex once = intersect_cone(k, c);
      Complex twice = intersect_cone(once, c);
      CHECK(same_closed_realization(once, twice));
    }
  }
}

TEST_CASE("frontier of frontier drops two dimensions for boxes") {
  Complex fr2 = frontier(frontier(unit_square(2)));
  CHECK(fr2.dim() <= 0);
  Complex cube = grid_box({Rat(0), Rat(0), Rat(0)}, {Rat(1), Rat(1), Rat(1)},
                          {1, 1, 1});
  CHECK(frontier(frontier(cube)).dim() <= 1);
}

TEST_CASE("open components in cones see removed frontier pieces") {
  // At x_2 = 1, the closed slice of the U-shape is one segment [0,3] x {1},
  // but the open set misses the notch boundary, leaving two components.
  auto oc = open_components_in_cone(u_shape(), cone({{1, RelOp::EQ, Rat(1)}}));
  CHECK(oc.count == 2);
  auto oc2 =
      open_components_in_cone(u_shape(), cone({{1, RelOp::EQ, rat(1, 2)}}));
  CHECK(oc2.count == 2);
  auto oc3 =
      open_components_in_cone(u_shape(), cone({{1, RelOp::GT, rat(1, 2)}}));
  CHECK(oc3.count == 1);
  auto oc4 =
      open_components_in_cone(u_shape(), cone({{0, RelOp::EQ, rat(3, 2)}}));
  CHECK(oc4.count == 1);
  auto oc5 = open_components_in_cone(
      u_shape(), cone({{0, RelOp::EQ, rat(3, 2)}, {1, RelOp::LT, Rat(1)}}));
  CHECK(oc5.count == 0);
}

TEST_CASE("clip by a non-axis hyperplane stays conforming") {
  Complex k = unit_square(2);
  Complex cut = clip_halfspace(k, {Rat(1), Rat(-1)}, Rat(0), -1);
  CHECK_FALSE(validate(cut).has_value());
  CHECK(contains_point(cut, {rat(1, 4), rat(1, 2)}));
  CHECK_FALSE(contains_point(cut, {rat(1, 2), rat(1, 4)}));
  Complex diag = clip_halfspace(k, {Rat(1), Rat(-1)}, Rat(0), 0);
  CHECK(diag.dim() == 1);
  CHECK(contains_point(diag, {rat(1, 3), rat(1, 3)}));
}

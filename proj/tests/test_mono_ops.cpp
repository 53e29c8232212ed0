#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"
#include "monocell/mono.hpp"

using namespace monocell;
using plcore::Complex;
using plcore::GraphComplex;
using plcore::InputError;
using plcore::Point;
using plcore::RelOp;
using plcore::UnsupportedError;
using mono::Cut;
using mono::EnvelopeKind;
using mono::LevelDir;
using mono::SemiRoute;

namespace {

Vec sum(const Vec& v) {
  Rat s(0);
  for (const auto& x : v) s += x;
  return {s};
}

GraphComplex segment_graph(const Point& a, const Point& b) {
  GraphComplex g;
  g.complex = plcore::make_complex(2, std::vector<Point>{a, b}, {{0, 1}});
  g.domain_axes = {0};
  g.codomain_axes = {1};
  return g;
}

GraphComplex set_view(Complex k) {
  GraphComplex g;
  g.complex = std::move(k);
  for (int a = 0; a < g.complex.ambient_dim; ++a) g.domain_axes.push_back(a);
  return g;
}

Cut cut_of(const GraphComplex& f, const std::function<Rat(const Vec&)>& g,
           RelOp rel) {
  Cut c;
  c.rel = rel;
  for (const auto& v : f.complex.vertices) c.vertex_values.push_back(g(v));
  return c;
}

bool throws_naming(const std::function<void()>& body, const std::string& part) {
  try {
    body();
  } catch (const InputError& e) {
    return std::string(e.what()).find(part) != std::string::npos;
  }
  return false;
}

}  // namespace

TEST_CASE("fiber of an affine function graph") {
  auto f = fixtures::graph_on_grid({Rat(0), Rat(0)}, {Rat(1), Rat(1)}, {1, 1},
                                   sum);
  auto fib = mono::fiber_restrict(f, {{2, rat(1, 2)}});
  REQUIRE(fib.has_value());
  CHECK(fib->graph.domain_axes == std::vector<int>{0});
  CHECK(fib->graph.codomain_axes == std::vector<int>{1});
  CHECK(fib->labels == std::vector<std::string>{"x_1", "x_2"});
  // graph of x_2 = 1/2 - x_1 over x_1 in (0,1/2)
  Complex expect = plcore::make_complex(
      2, {{Rat(0), rat(1, 2)}, {rat(1, 2), Rat(0)}}, {{0, 1}});
  CHECK(plcore::same_closed_realization(fib->graph.complex, expect));
  CHECK(mono::is_monotone_map(fib->graph).holds);

  CHECK_FALSE(mono::fiber_restrict(f, {{2, Rat(5)}}).has_value());
  CHECK_THROWS_AS((void)mono::fiber_restrict(f, {{0, rat(1, 2)}}), InputError);
}

TEST_CASE("fiber at a constant component keeps the rest of the graph") {
  auto f = fixtures::graph_on_grid(
      {Rat(0), Rat(0)}, {Rat(1), Rat(1)}, {1, 1},
      [](const Vec& v) -> Vec { return {v[0] + v[1], Rat(3)}; });
  auto fib = mono::fiber_restrict(f, {{3, Rat(3)}});
  REQUIRE(fib.has_value());
  CHECK(fib->graph.n() == 2);  // the assignment is not effective
  CHECK(fib->graph.codomain_axes == std::vector<int>{2});
  CHECK(fib->labels ==
        std::vector<std::string>{"x_1", "x_2", "y_1"});
  auto plain = fixtures::graph_on_grid({Rat(0), Rat(0)}, {Rat(1), Rat(1)},
                                       {1, 1}, sum);
  CHECK(plcore::same_closed_realization(fib->graph.complex, plain.complex));
  CHECK_FALSE(mono::fiber_restrict(f, {{3, Rat(5)}}).has_value());
}

TEST_CASE("fiber preconditions") {
  // x_1*x_2 / (1-x_1)*x_2 creased sheet is not a monotone function.
  auto bad = fixtures::graph_on_grid(
      {Rat(0), Rat(-1)}, {Rat(1), Rat(1)}, {2, 2}, [](const Vec& v) -> Vec {
        return {v[1] >= 0 ? Rat(v[0] * v[1]) : Rat((1 - v[0]) * v[1])};
      });
  CHECK_THROWS_AS((void)mono::fiber_restrict(bad, {{2, rat(1, 4)}}),
                  InputError);
}

TEST_CASE("fiber matroid is the contraction of the parent matroid") {
  auto f = fixtures::graph_on_grid({Rat(0), Rat(0), Rat(0)},
                                   {Rat(1), Rat(1), Rat(1)}, {1, 1, 1}, sum);
  auto parent = matroid::basis_system(f);
  auto fib = mono::fiber_restrict(f, {{3, rat(3, 2)}});
  REQUIRE(fib.has_value());
  CHECK(fib->graph.n() == 2);
  auto child = matroid::basis_system(fib->graph, fib->labels);
  CHECK(child == matroid::minor(parent, {"y_1"}, fib->labels));
}

TEST_CASE("envelopes over the last domain axis") {
  auto f = fixtures::graph_on_grid({Rat(0), Rat(0)}, {Rat(1), Rat(1)}, {1, 1},
                                   sum);
  auto inf = mono::envelope(f, EnvelopeKind::Inf);
  CHECK(inf.domain_axes == std::vector<int>{0});
  CHECK(inf.codomain_axes == std::vector<int>{1});
  CHECK(plcore::same_closed_realization(
      inf.complex, segment_graph({Rat(0), Rat(0)}, {Rat(1), Rat(1)}).complex));

  auto height = fixtures::graph_on_grid(
      {Rat(0), Rat(0)}, {Rat(1), Rat(1)}, {1, 1},
      [](const Vec& v) -> Vec { return {v[1]}; });
  auto flat = mono::envelope(height, EnvelopeKind::Inf);
  CHECK(plcore::same_closed_realization(
      flat.complex, segment_graph({Rat(0), Rat(0)}, {Rat(1), Rat(0)}).complex));
}

TEST_CASE("upper envelope of the sampled paraboloid") {
  auto f = fixtures::graph_on_grid(
      {Rat(0), Rat(0)}, {Rat(1), Rat(1)}, {4, 4}, [](const Vec& v) -> Vec {
        return {v[0] * v[0] + v[1] * v[1]};
      });
  auto sup = mono::envelope(f, EnvelopeKind::Sup);
  auto expect = fixtures::graph_on_grid(
      {Rat(0)}, {Rat(1)}, {4},
      [](const Vec& v) -> Vec { return {v[0] * v[0] + Rat(1)}; });
  CHECK(plcore::same_closed_realization(sup.complex, expect.complex));
  CHECK(mono::is_level_monotone(sup, LevelDir::Above).holds);
}

TEST_CASE("envelopes of graphs over a cube") {
  auto f = fixtures::graph_on_grid({Rat(0), Rat(0), Rat(0)},
                                   {Rat(1), Rat(1), Rat(1)}, {1, 1, 1}, sum);
  auto inf = mono::envelope(f, EnvelopeKind::Inf);
  auto expect = fixtures::graph_on_grid({Rat(0), Rat(0)}, {Rat(1), Rat(1)},
                                        {1, 1}, sum);
  CHECK(plcore::same_closed_realization(inf.complex, expect.complex));
  CHECK(mono::is_monotone_function(inf).holds);

  // |x_1 - x_3| is exact on the Kuhn cells; its minimum over x_3 vanishes.
  auto vee = fixtures::graph_on_grid(
      {Rat(0), Rat(0), Rat(0)}, {Rat(1), Rat(1), Rat(1)}, {1, 1, 1},
      [](const Vec& v) -> Vec {
        return {v[0] >= v[2] ? Rat(v[0] - v[2]) : Rat(v[2] - v[0])};
      });
  auto zero = mono::envelope(vee, EnvelopeKind::Inf);
  auto flat = fixtures::graph_on_grid(
      {Rat(0), Rat(0)}, {Rat(1), Rat(1)}, {1, 1},
      [](const Vec&) -> Vec { return {Rat(0)}; });
  CHECK(plcore::same_closed_realization(zero.complex, flat.complex));
}

TEST_CASE("envelope rejections") {
  auto tall = fixtures::graph_on_grid(
      {Rat(0), Rat(0), Rat(0), Rat(0)}, {Rat(1), Rat(1), Rat(1), Rat(1)},
      {1, 1, 1, 1}, sum);
  CHECK_THROWS_AS((void)mono::envelope(tall, EnvelopeKind::Inf),
                  UnsupportedError);
  auto line = fixtures::graph_on_grid({Rat(0)}, {Rat(1)}, {1}, sum);
  CHECK_THROWS_AS((void)mono::envelope(line, EnvelopeKind::Inf),
                  UnsupportedError);

  // min over x_2 of x_2 on the U-shape jumps where the notch starts.
  auto step = fixtures::graph_on_complex(
      fixtures::u_shape(), [](const Vec& v) -> Vec { return {v[1]}; });
  CHECK_THROWS_AS((void)mono::envelope(step, EnvelopeKind::Inf),
                  UnsupportedError);
}

TEST_CASE("splitting a square by a graph") {
  Complex square = fixtures::unit_square();
  auto [a, b] = mono::split_by_graph(
      square, segment_graph({Rat(0), Rat(0)}, {Rat(1), Rat(1)}));
  Complex lower = plcore::make_complex(
      2, {{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(1), Rat(1)}}, {{0, 1, 2}});
  Complex upper = plcore::make_complex(
      2, {{Rat(0), Rat(0)}, {Rat(1), Rat(1)}, {Rat(0), Rat(1)}}, {{0, 1, 2}});
  CHECK((plcore::same_closed_realization(a, lower) ||
         plcore::same_closed_realization(b, lower)));
  CHECK((plcore::same_closed_realization(a, upper) ||
         plcore::same_closed_realization(b, upper)));
  CHECK(mono::is_semi_monotone(a).holds);
  CHECK(mono::is_semi_monotone(b).holds);

  auto [c, d] = mono::split_by_graph(
      square, segment_graph({Rat(0), rat(1, 2)}, {Rat(1), rat(1, 2)}));
  Complex bottom =
      fixtures::grid_box({Rat(0), Rat(0)}, {Rat(1), rat(1, 2)}, {1, 1});
  Complex top =
      fixtures::grid_box({Rat(0), rat(1, 2)}, {Rat(1), Rat(1)}, {1, 1});
  CHECK((plcore::same_closed_realization(c, bottom) ||
         plcore::same_closed_realization(d, bottom)));
  CHECK((plcore::same_closed_realization(c, top) ||
         plcore::same_closed_realization(d, top)));
}

TEST_CASE("splitting a triangle by a chord graph") {
  Complex tri = fixtures::triangle();
  auto sigma = segment_graph({Rat(0), Rat(0)}, {rat(2, 3), rat(1, 3)});
  auto [a, b] = mono::split_by_graph(tri, sigma);
  CHECK(mono::is_semi_monotone(a).holds);
  CHECK(mono::is_semi_monotone(b).holds);
  // one piece per side of x_2 = x_1/2
  Point below = {rat(1, 2), rat(1, 8)};
  Point above = {rat(1, 8), rat(1, 2)};
  CHECK(plcore::contains_point(a, below) != plcore::contains_point(b, below));
  CHECK(plcore::contains_point(a, above) != plcore::contains_point(b, above));
  CHECK(plcore::contains_point(a, below) != plcore::contains_point(a, above));
}

TEST_CASE("split preconditions") {
  Complex square = fixtures::unit_square();
  // graph endpoints in the interior: frontier containment fails
  CHECK_THROWS_AS(
      (void)mono::split_by_graph(
          square,
          segment_graph({rat(1, 4), rat(1, 4)}, {rat(3, 4), rat(3, 4)})),
      InputError);
  // graph leaving the set
  CHECK_THROWS_AS(
      (void)mono::split_by_graph(
          square, segment_graph({Rat(0), rat(1, 2)}, {Rat(2), rat(1, 2)})),
      InputError);
  // wrong codimension
  GraphComplex point;
  point.complex = plcore::make_complex(2, {{rat(1, 2), rat(1, 2)}}, {{0}});
  point.domain_axes = {0};
  point.codomain_axes = {1};
  CHECK_THROWS_AS((void)mono::split_by_graph(square, point), InputError);
}

TEST_CASE("sign condition regions on the square") {
  auto sq = set_view(fixtures::unit_square());
  auto right = mono::sign_condition_region(
      sq, {cut_of(sq, [](const Vec& v) { return v[0] - rat(1, 2); },
                  RelOp::GT)});
  CHECK(plcore::same_closed_realization(
      right, fixtures::grid_box({rat(1, 2), Rat(0)}, {Rat(1), Rat(1)}, {1, 1})));
  CHECK(mono::is_semi_monotone(right).holds);

  // repeated equality: the "coincides with the previous set" branch
  auto twice = mono::sign_condition_region(
      sq, {cut_of(sq, [](const Vec& v) { return v[0] - rat(1, 2); },
                  RelOp::EQ),
           cut_of(sq, [](const Vec& v) { return v[0] - rat(1, 2); },
                  RelOp::EQ)});
  Complex wall = plcore::make_complex(
      2, {{rat(1, 2), Rat(0)}, {rat(1, 2), Rat(1)}}, {{0, 1}});
  CHECK(plcore::same_closed_realization(twice, wall));

  // a never-zero cut keeps the whole square
  auto all = mono::sign_condition_region(
      sq, {cut_of(sq, [](const Vec& v) { return v[0] + Rat(1); }, RelOp::GT)});
  CHECK(plcore::same_closed_realization(all, sq.complex));
}

TEST_CASE("sign condition region of a graph") {
  auto f = fixtures::graph_on_grid({Rat(0), Rat(0)}, {Rat(1), Rat(1)}, {1, 1},
                                   sum);
  auto region = mono::sign_condition_region(
      f, {cut_of(f, [](const Vec& v) { return v[2] - Rat(1); }, RelOp::LT),
          cut_of(f, [](const Vec& v) { return v[0] - rat(1, 2); },
                 RelOp::GT)});
  Complex base = plcore::make_complex(
      2, {{rat(1, 2), Rat(0)}, {Rat(1), Rat(0)}, {rat(1, 2), rat(1, 2)}},
      {{0, 1, 2}});
  auto expect = fixtures::graph_on_complex(base, sum);
  CHECK(plcore::same_closed_realization(region, expect.complex));
}

TEST_CASE("sign condition hypothesis failures name the stage") {
  auto sq = set_view(fixtures::unit_square(4));
  // zero set {x_1=1/4} u {x_1=3/4} is disconnected: not a monotone graph
  auto bad = cut_of(
      sq, [](const Vec& v) { return (v[0] - rat(1, 4)) * (v[0] - rat(3, 4)); },
      RelOp::GT);
  auto good = cut_of(sq, [](const Vec& v) { return v[1] - rat(1, 2); },
                     RelOp::GT);
  CHECK(throws_naming([&] { (void)mono::sign_condition_region(sq, {bad}); },
                      "stage 1"));
  CHECK(throws_naming(
      [&] { (void)mono::sign_condition_region(sq, {good, bad}); }, "stage 2"));
}

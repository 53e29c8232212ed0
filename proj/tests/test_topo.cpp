#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"
#include "monocell/topo.hpp"

#include <cstdlib>

using namespace monocell;
using plcore::Complex;
using plcore::GraphComplex;
using plcore::UnsupportedError;

namespace {

Complex square_boundary() {
  return plcore::make_complex(2,
                              {{Rat(0), Rat(0)},
                               {Rat(1), Rat(0)},
                               {Rat(1), Rat(1)},
                               {Rat(0), Rat(1)}},
                              {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
}

GraphComplex set_view(Complex k) {
  GraphComplex g;
  g.complex = std::move(k);
  for (int a = 0; a < g.complex.ambient_dim; ++a) g.domain_axes.push_back(a);
  return g;
}

}  // namespace

TEST_CASE("euler characteristics") {
  CHECK(topo::euler_characteristic(fixtures::unit_square()) == 1);
  CHECK(topo::euler_characteristic(square_boundary()) == 0);
  Complex two = plcore::make_complex(
      1, {{Rat(0)}, {Rat(1)}, {Rat(2)}, {Rat(3)}}, {{0, 1}, {2, 3}});
  CHECK(topo::euler_characteristic(two) == 2);
}

TEST_CASE("homology ranks") {
  CHECK(topo::homology_ranks(fixtures::unit_square()) ==
        std::vector<int>{1, 0, 0});
  CHECK(topo::homology_ranks(square_boundary()) == std::vector<int>{1, 1});
  CHECK(topo::homology_ranks(fixtures::u_shape()) ==
        std::vector<int>{1, 0, 0});
  CHECK(topo::homology_ranks(plcore::frontier(fixtures::u_shape())) ==
        std::vector<int>{1, 1});
}

TEST_CASE("homology face cap") {
  setenv("MONOCELL_FACE_CAP", "5", 1);
  CHECK_THROWS_AS((void)topo::homology_ranks(fixtures::unit_square()),
                  UnsupportedError);
  unsetenv("MONOCELL_FACE_CAP");
  CHECK(topo::homology_ranks(fixtures::unit_square()).size() == 3);
}

TEST_CASE("regular cell evidence") {
  auto sq = topo::regular_cell_evidence(set_view(fixtures::unit_square()));
  CHECK(sq.pass);
  CHECK(sq.chi_closure == 1);
  CHECK(sq.chi_frontier == 0);
  CHECK(sq.homology_frontier == std::vector<int>{1, 1});

  auto seg = topo::regular_cell_evidence(set_view(fixtures::unit_interval()));
  CHECK(seg.pass);
  CHECK(seg.homology_frontier == std::vector<int>{2});

  // two triangles sharing one vertex: connected closure, disconnected interior
  Complex bowtie = plcore::make_complex(2,
                                        {{Rat(0), Rat(0)},
                                         {Rat(-1), Rat(-1)},
                                         {Rat(-1), Rat(1)},
                                         {Rat(1), Rat(-1)},
                                         {Rat(1), Rat(1)}},
                                        {{0, 1, 2}, {0, 3, 4}});
  auto bad = topo::regular_cell_evidence(set_view(bowtie));
  CHECK_FALSE(bad.pass);
  CHECK_FALSE(bad.connected);
}

TEST_CASE("glue identity at axis slices") {
  CHECK(topo::glue_check(set_view(fixtures::unit_square()), 0, rat(1, 2)));
  auto f = fixtures::graph_on_grid(
      {Rat(0), Rat(0)}, {Rat(1), Rat(1)}, {1, 1}, [](const Vec& v) -> Vec {
        return {v[0] + v[1]};
      });
  CHECK(topo::glue_check(f, 2, Rat(1)));
  CHECK(topo::glue_check(f, 0, rat(1, 2)));
  // the U-shape slice at x_2 = 1/2 is disconnected
  CHECK_FALSE(topo::glue_check(set_view(fixtures::u_shape()), 1, rat(1, 2)));
}

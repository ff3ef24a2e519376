#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "locol/generators.hpp"
#include "locol/graph.hpp"

using namespace locol;

namespace {

template <class F>
std::string error_kind(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return "";
}

bool simple_colouring(const ColouredGraph& g) {
  auto cols = g.colours_used();
  std::vector<std::set<int>> verts;
  for (int c : cols) {
    ColourClass cls = colour_class(g, c);
    verts.emplace_back(cls.vertices.begin(), cls.vertices.end());
  }
  for (size_t i = 0; i < cols.size(); ++i)
    for (size_t j = i + 1; j < cols.size(); ++j) {
      bool meet = false;
      for (int v : verts[i]) meet = meet || verts[j].count(v);
      if (!meet) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("gen_split") {
  ColouredGraph proper = gen_split(1, 1, 1, 1);
  CHECK(proper.host() == Host::bipartite(2, 2));
  CHECK(proper.colours_used() == std::vector<int>{1, 2});
  CHECK(locality(proper) == 2);
  CHECK(proper.colour(0, 2) == 1);
  CHECK(proper.colour(1, 3) == 1);
  CHECK(proper.colour(0, 3) == 2);
  CHECK(proper.colour(1, 2) == 2);

  ColouredGraph s = gen_split(2, 2, 2, 2);
  CHECK(locality(s) == 2);
  for (int c : {1, 2}) {
    auto comps = monochromatic_components(s, c);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].size() == 4);
  }

  ColouredGraph degenerate = gen_split(2, 0, 2, 0);
  CHECK(degenerate.colours_used() == std::vector<int>{1});
  CHECK(degenerate.host() == Host::bipartite(2, 2));

  ColouredGraph unbalanced = gen_split(1, 3, 2, 2);
  CHECK_NOTHROW(validate(unbalanced));
  CHECK(locality(unbalanced) == 2);
}

TEST_CASE("gen_generalized_split") {
  CHECK(gen_generalized_split(1, 3).colours_used() == std::vector<int>{1});
  CHECK(gen_generalized_split(2, 2) == gen_split(2, 2, 2, 2));

  ColouredGraph g3 = gen_generalized_split(3, 1);
  CHECK(g3.host() == Host::bipartite(3, 3));
  CHECK(g3.colours_used() == std::vector<int>{1, 2, 3});
  CHECK(locality(g3) == 3);

  ColouredGraph g32 = gen_generalized_split(3, 2);
  CHECK(locality(g32) == 3);
  for (int c : {1, 2, 3}) {
    auto comps = monochromatic_components(g32, c);
    CHECK(comps.size() == 3);
  }
}

TEST_CASE("gen_grid complete host") {
  for (int t = 2; t <= 5; ++t) {
    ColouredGraph g = gen_grid(t, GridHost::Complete);
    CHECK(g.host() == Host::complete(t * t));
    CHECK_NOTHROW(validate(g));
    CHECK(static_cast<int>(g.colours_used().size()) == t + 1);
    CHECK(locality(g) == 3);
    CHECK(simple_colouring(g));
  }
  ColouredGraph g2 = gen_grid(2, GridHost::Complete);
  CHECK(g2.colour(0, 1) == 1);   // row 0
  CHECK(g2.colour(0, 2) == 1);   // column 0
  CHECK(g2.colour(1, 3) == 2);   // column 1
  CHECK(g2.colour(0, 3) == 3);   // fill diagonal
}

TEST_CASE("gen_grid bipartite host") {
  ColouredGraph g2 = gen_grid(2, GridHost::Bipartite);
  CHECK(g2.host() == Host::bipartite(2, 2));
  CHECK(g2.colours_used() == std::vector<int>{1, 2});

  for (int t = 3; t <= 5; ++t) {
    ColouredGraph g = gen_grid(t, GridHost::Bipartite);
    int even = (t * t + 1) / 2;
    CHECK(g.host() == Host::bipartite(even, t * t - even));
    CHECK_NOTHROW(validate(g));
    CHECK(static_cast<int>(g.colours_used().size()) == t + 1);
    CHECK(locality(g) == 3);
    CHECK(simple_colouring(g));
  }
  CHECK(error_kind([] { gen_grid(1, GridHost::Bipartite); }) ==
        "PreconditionViolated");
}

TEST_CASE("gen_tripartite") {
  ColouredGraph g = gen_tripartite();
  CHECK(g.host() == Host::multipartite({6, 3, 3}));
  CHECK_NOTHROW(validate(g));
  CHECK(locality(g) == 2);
  CHECK(g.colours_used() == std::vector<int>{1, 2, 3});
  int red = 0, green = 0, blue = 0;
  g.for_each_edge([&](int, int, int c) {
    (c == 1 ? red : c == 2 ? green : blue)++;
  });
  CHECK(red == 15);
  CHECK(green == 15);
  CHECK(blue == 15);
  CHECK(g.palette(0) == std::vector<int>{3});

  // The [U, V+W] bipartite subgraph inherits a 2-local colouring.
  ColouredGraph bip(Host::bipartite(6, 6));
  for (int i = 0; i < 6; ++i)
    for (int j = 6; j < 12; ++j) bip.set_colour(i, j, g.colour(i, j));
  CHECK(locality(bip) <= 2);
}

TEST_CASE("gen_exponential_parts") {
  ColouredGraph g1 = gen_exponential_parts(1);
  CHECK(g1.host() == Host::complete(2));
  CHECK(g1.colours_used() == std::vector<int>{1});

  ColouredGraph g2 = gen_exponential_parts(2);
  CHECK(g2.host() == Host::complete(6));
  CHECK(locality(g2) == 2);
  CHECK(g2.palette(0) == std::vector<int>{1});
  CHECK(g2.palette(5) == std::vector<int>{1, 2});

  ColouredGraph g3 = gen_exponential_parts(3);
  CHECK(g3.n() == 14);
  CHECK(locality(g3) == 3);
  CHECK(simple_colouring(g3));
}

TEST_CASE("gen_figure four colour") {
  ColouredGraph g = gen_figure(FigureShape::FourColour, {1, 1, 1, 1, 1, 1});
  CHECK(g.host() == Host::bipartite(2, 4));
  CHECK(g.colours_used() == std::vector<int>{1, 2, 3, 4});
  CHECK(locality(g) == 2);
  CHECK(simple_colouring(g));
  CHECK(g.palette(0) == std::vector<int>{1, 2});
  CHECK(g.palette(1) == std::vector<int>{3, 4});
  CHECK(g.colour(0, 2) == 1);
  CHECK(g.colour(0, 4) == 2);
  CHECK(g.colour(1, 3) == 4);
  CHECK(g.colour(1, 5) == 4);

  ColouredGraph balanced =
      gen_figure(FigureShape::FourColour, {2, 2, 1, 1, 1, 1});
  CHECK(balanced.host() == Host::bipartite(4, 4));
  CHECK(locality(balanced) == 2);
  CHECK(simple_colouring(balanced));

  CHECK(error_kind([] {
          gen_figure(FigureShape::FourColour, {1, 1, 0, 1, 1, 1});
        }) == "InconsistentBlocks");
  CHECK(error_kind([] { gen_figure(FigureShape::FourColour, {1, 1}); }) ==
        "InconsistentBlocks");
}

TEST_CASE("gen_figure three colour") {
  ColouredGraph g = gen_figure(FigureShape::ThreeColour, {2, 2, 2, 2, 2, 2});
  CHECK(g.host() == Host::bipartite(6, 6));
  CHECK(g.colours_used() == std::vector<int>{1, 2, 3});
  CHECK(locality(g) == 2);
  CHECK(simple_colouring(g));
  for (int v = 0; v < 12; ++v) CHECK(g.palette(v).size() == 2);
  // Forced channels.
  CHECK(g.colour(0, 8) == 1);   // T12 x B13
  CHECK(g.colour(0, 10) == 2);  // T12 x B23
  CHECK(g.colour(2, 6) == 1);   // T13 x B12
  CHECK(g.colour(2, 10) == 3);  // T13 x B23
  CHECK(g.colour(4, 6) == 2);   // T23 x B12
  CHECK(g.colour(4, 8) == 3);   // T23 x B13
  // Within-pair zones take the smaller colour.
  CHECK(g.colour(0, 6) == 1);
  CHECK(g.colour(2, 8) == 1);
  CHECK(g.colour(4, 10) == 2);

  ColouredGraph e = gen_figure(FigureShape::ThreeColour, {2, 2, 1, 2, 2, 0});
  CHECK(e.colours_used() == std::vector<int>{1, 2, 3});
  CHECK(simple_colouring(e));
  CHECK(locality(e) <= 2);

  CHECK(error_kind([] {
          gen_figure(FigureShape::ThreeColour, {2, 0, 0, 2, 0, 0});
        }) == "InconsistentBlocks");
}

TEST_CASE("gen_random_r_local") {
  ColouredGraph a = gen_random_r_local(Host::complete(9), 3, 5, 7);
  ColouredGraph b = gen_random_r_local(Host::complete(9), 3, 5, 7);
  CHECK(a == b);
  CHECK(a != gen_random_r_local(Host::complete(9), 3, 5, 8));
  CHECK_NOTHROW(validate(a));
  CHECK(locality(a) <= 3);
  for (int c : a.colours_used()) {
    CHECK(c >= 0);
    CHECK(c <= 5);
  }

  CHECK(gen_random_r_local(Host::bipartite(4, 4), 1, 1, 3).colours_used() ==
        std::vector<int>{0});

  for (std::uint64_t seed : {1, 2, 3, 4, 5}) {
    CHECK(locality(gen_random_r_local(Host::bipartite(6, 6), 2, 4, seed)) <=
          2);
    CHECK(locality(gen_random_r_local(Host::complete(12), 3, 6, seed)) <= 3);
  }
}

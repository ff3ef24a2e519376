#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "locol/generators.hpp"
#include "locol/graph.hpp"
#include "locol/matchings.hpp"

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

ColouredGraph mono(Host h, int c) {
  ColouredGraph g(h);
  h.for_each_edge([&](int u, int v) { g.set_colour(u, v, c); });
  return g;
}

ColouredGraph colour_by(Host h, const std::function<int(int, int)>& f) {
  ColouredGraph g(h);
  h.for_each_edge([&](int u, int v) { g.set_colour(u, v, f(u, v)); });
  return g;
}

// Maximum matching size by subset dynamic programming, independent of the
// library's augmenting-path matchers. adj is a symmetric matrix.
int oracle_max_matching(const std::vector<std::vector<char>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> dp(std::size_t{1} << n, 0);
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    const int v = std::countr_zero(mask);
    int best = dp[mask & (mask - 1)];
    for (int w = v + 1; w < n; ++w)
      if (((mask >> w) & 1u) && adj[v][w])
        best = std::max(
            best, 1 + dp[mask & ~(std::uint32_t{1} << v) & ~(std::uint32_t{1} << w)]);
    dp[mask] = best;
  }
  return dp[(std::size_t{1} << n) - 1];
}

// Adjacency of the colour-c subgraph induced on verts.
std::vector<std::vector<char>> colour_adjacency(const ColouredGraph& g, int c,
                                                const std::vector<int>& verts) {
  const int s = static_cast<int>(verts.size());
  std::vector<std::vector<char>> adj(s, std::vector<char>(s, 0));
  for (int i = 0; i < s; ++i)
    for (int j = i + 1; j < s; ++j)
      if (g.colour(verts[i], verts[j]) == c) adj[i][j] = adj[j][i] = 1;
  return adj;
}

std::vector<int> minus_set(const std::vector<int>& xs,
                           const std::vector<int>& drop) {
  std::vector<int> out;
  for (int x : xs)
    if (std::find(drop.begin(), drop.end(), x) == drop.end()) out.push_back(x);
  return out;
}

int oracle_colour_matching(const ColouredGraph& g, int c,
                           const std::vector<int>& verts,
                           const std::vector<int>& forbidden) {
  std::vector<int> pool = minus_set(verts, forbidden);
  return oracle_max_matching(colour_adjacency(g, c, pool));
}

std::vector<int> all_vertices(const ColouredGraph& g) {
  std::vector<int> out(g.n());
  std::iota(out.begin(), out.end(), 0);
  return out;
}

// Random full colouring of the host over colours 0..pool-1.
ColouredGraph random_colouring(const Host& h, int pool, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> pick(0, pool - 1);
  ColouredGraph g(h);
  h.for_each_edge([&](int u, int v) { g.set_colour(u, v, pick(rng)); });
  return g;
}

bool covers_all(const ColouredGraph& g,
                const std::vector<std::pair<int, std::vector<int>>>& cover) {
  std::vector<char> seen(g.n(), 0);
  for (const auto& [c, verts] : cover) {
    (void)c;
    for (int v : verts) seen[v] = 1;
  }
  return std::all_of(seen.begin(), seen.end(), [](char x) { return x == 1; });
}

}  // namespace

TEST_CASE("rational arithmetic and parsing") {
  Rational half = make_rational(2, 4);
  CHECK(half.num == 1);
  CHECK(half.den == 2);
  Rational negThird = make_rational(1, -3);
  CHECK(negThird.num == -1);
  CHECK(negThird.den == 3);
  CHECK(rational_cmp(make_rational(1, 2), make_rational(2, 3)) == -1);
  CHECK(rational_cmp(make_rational(3, 6), make_rational(1, 2)) == 0);
  CHECK(rational_cmp(make_rational(9, 2), make_rational(4, 1)) == 1);
  CHECK(to_string(make_rational(9, 2)) == "9/2");
  CHECK(to_string(make_rational(8, 4)) == "2");
  CHECK(to_string(make_rational(-1, 2)) == "-1/2");

  CHECK(rational_cmp(parse_rational("1/2"), make_rational(1, 2)) == 0);
  CHECK(rational_cmp(parse_rational(" 3 / 4 "), make_rational(3, 4)) == 0);
  CHECK(rational_cmp(parse_rational("0.25"), make_rational(1, 4)) == 0);
  CHECK(rational_cmp(parse_rational("2"), make_rational(2, 1)) == 0);
  CHECK(rational_cmp(parse_rational("-2/4"), make_rational(-1, 2)) == 0);
  CHECK(rational_cmp(parse_rational("1."), make_rational(1, 1)) == 0);
  CHECK(error_kind([] { parse_rational("1/0"); }) == "ParseError");
  CHECK(error_kind([] { parse_rational("abc"); }) == "ParseError");
  CHECK(error_kind([] { parse_rational(""); }) == "ParseError");
  CHECK(error_kind([] { make_rational(1, 0); }) == "PreconditionViolated");
}

TEST_CASE("matching oracle sanity on hand-checked graphs") {
  auto path = [](int n) {
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (int i = 0; i + 1 < n; ++i) adj[i][i + 1] = adj[i + 1][i] = 1;
    return adj;
  };
  CHECK(oracle_max_matching(path(2)) == 1);
  CHECK(oracle_max_matching(path(5)) == 2);
  CHECK(oracle_max_matching(path(6)) == 3);

  std::vector<std::vector<char>> triangle(3, std::vector<char>(3, 1));
  for (int i = 0; i < 3; ++i) triangle[i][i] = 0;
  CHECK(oracle_max_matching(triangle) == 1);

  auto cycle = [](int n) {
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i) {
      adj[i][(i + 1) % n] = adj[(i + 1) % n][i] = 1;
    }
    return adj;
  };
  CHECK(oracle_max_matching(cycle(5)) == 2);
  CHECK(oracle_max_matching(cycle(7)) == 3);
  CHECK(oracle_max_matching(cycle(8)) == 4);
}

TEST_CASE("maximum matching inside a component matches the oracle") {
  SUBCASE("monochromatic K4") {
    ColouredGraph g = mono(Host::complete(4), 0);
    ConnectedMatching m = max_matching_in_component(g, 0, all_vertices(g), {});
    CHECK(m.edges.size() == 2);
    CHECK(m.colour == 0);
    CHECK(oracle_colour_matching(g, 0, all_vertices(g), {}) == 2);
  }
  SUBCASE("five vertex path as a colour class of K5") {
    ColouredGraph g = colour_by(Host::complete(5), [](int u, int v) {
      return v == u + 1 ? 0 : 1;
    });
    auto comps = monochromatic_components(g, 0);
    REQUIRE(comps.size() == 1);
    ConnectedMatching m = max_matching_in_component(g, 0, comps[0], {});
    CHECK(m.edges.size() == 2);
    CHECK(oracle_colour_matching(g, 0, comps[0], {}) == 2);
  }
  SUBCASE("monochromatic K5 with two forbidden vertices") {
    ColouredGraph g = mono(Host::complete(5), 0);
    ConnectedMatching m =
        max_matching_in_component(g, 0, all_vertices(g), {0, 1});
    CHECK(m.edges.size() == 1);
    CHECK(oracle_colour_matching(g, 0, all_vertices(g), {0, 1}) == 1);
    for (const auto& [u, v] : m.edges) {
      CHECK(u >= 2);
      CHECK(v >= 2);
    }
  }
  SUBCASE("petersen graph as a colour class of K10") {
    std::vector<std::pair<int, int>> edges = {
        {0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 5}, {1, 6}, {2, 7},
        {3, 8}, {4, 9}, {5, 7}, {7, 9}, {6, 9}, {6, 8}, {5, 8}};
    ColouredGraph g = colour_by(Host::complete(10), [&](int u, int v) {
      return std::find(edges.begin(), edges.end(), std::make_pair(u, v)) !=
                     edges.end()
                 ? 0
                 : 1;
    });
    ConnectedMatching m = max_matching_in_component(g, 0, all_vertices(g), {});
    CHECK(m.edges.size() == 5);
    CHECK(oracle_colour_matching(g, 0, all_vertices(g), {}) == 5);
  }
  SUBCASE("every graph on five vertices") {
    std::vector<std::pair<int, int>> edges;
    Host h = Host::complete(5);
    h.for_each_edge([&](int u, int v) { edges.emplace_back(u, v); });
    for (std::uint32_t code = 0; code < (1u << edges.size()); ++code) {
      ColouredGraph g(h);
      for (std::size_t e = 0; e < edges.size(); ++e)
        g.set_colour(edges[e].first, edges[e].second, (code >> e) & 1u);
      ConnectedMatching m =
          max_matching_in_component(g, 0, all_vertices(g), {});
      REQUIRE(static_cast<int>(m.edges.size()) ==
              oracle_colour_matching(g, 0, all_vertices(g), {}));
    }
  }
  SUBCASE("random twelve vertex graphs") {
    for (unsigned seed = 0; seed < 200; ++seed) {
      ColouredGraph g = random_colouring(Host::complete(12), 2, seed);
      ConnectedMatching m =
          max_matching_in_component(g, 0, all_vertices(g), {});
      REQUIRE(static_cast<int>(m.edges.size()) ==
              oracle_colour_matching(g, 0, all_vertices(g), {}));
    }
  }
  SUBCASE("random bipartite graphs") {
    for (unsigned seed = 0; seed < 100; ++seed) {
      ColouredGraph g = random_colouring(Host::bipartite(5, 5), 2, seed);
      ConnectedMatching m =
          max_matching_in_component(g, 0, all_vertices(g), {});
      REQUIRE(static_cast<int>(m.edges.size()) ==
              oracle_colour_matching(g, 0, all_vertices(g), {}));
    }
  }
  SUBCASE("random forbidden subsets") {
    std::mt19937 rng(99);
    for (unsigned seed = 0; seed < 100; ++seed) {
      ColouredGraph g = random_colouring(Host::complete(10), 2, seed + 1000);
      std::vector<int> forbidden;
      for (int v = 0; v < g.n(); ++v)
        if (rng() % 3 == 0) forbidden.push_back(v);
      ConnectedMatching m =
          max_matching_in_component(g, 0, all_vertices(g), forbidden);
      REQUIRE(static_cast<int>(m.edges.size()) ==
              oracle_colour_matching(g, 0, all_vertices(g), forbidden));
      for (const auto& [u, v] : m.edges) {
        REQUIRE(std::find(forbidden.begin(), forbidden.end(), u) ==
                forbidden.end());
        REQUIRE(std::find(forbidden.begin(), forbidden.end(), v) ==
                forbidden.end());
      }
    }
  }
}

TEST_CASE("covered vertices of a matching") {
  ConnectedMatching edged;
  edged.colour = 0;
  edged.edges = {{0, 4}, {1, 5}};
  edged.component = {0, 1, 4, 5};
  CHECK(covered_vertices(edged) == std::vector<int>{0, 1, 4, 5});

  ConnectedMatching trivial;
  trivial.component = {7};
  CHECK(covered_vertices(trivial) == std::vector<int>{7});

  ConnectedMatching emptied;
  emptied.colour = 2;
  emptied.component = {2, 3, 6, 7};
  CHECK(covered_vertices(emptied).empty());
}

TEST_CASE("greedy extraction on fixed instances") {
  SUBCASE("monochromatic K4 single component") {
    ColouredGraph g = mono(Host::complete(4), 0);
    ExtractionResult ex = extract_matchings(g, {{0, {0, 1, 2, 3}}});
    REQUIRE(ex.cover.matchings.size() == 1);
    CHECK(ex.cover.matchings[0].edges.size() == 2);
    CHECK(ex.cover.residual.empty());
    CHECK(ex.residual.graph.n() == 0);
    CHECK(verify_matching_cover(g, ex.cover));
  }
  SUBCASE("split K44 over its four blocks") {
    ColouredGraph g = gen_split(2, 2, 2, 2);
    std::vector<std::pair<int, std::vector<int>>> comps = {
        {1, {0, 1, 4, 5}},
        {1, {2, 3, 6, 7}},
        {2, {0, 1, 6, 7}},
        {2, {2, 3, 4, 5}}};
    ExtractionResult ex = extract_matchings(g, comps);
    REQUIRE(ex.cover.matchings.size() == 4);
    CHECK(ex.cover.matchings[0].edges.size() == 2);
    CHECK(ex.cover.matchings[1].edges.size() == 2);
    CHECK(ex.cover.matchings[2].edges.empty());
    CHECK(ex.cover.matchings[3].edges.empty());
    CHECK(ex.cover.residual.empty());
    CHECK(verify_matching_cover(g, ex.cover));
  }
  SUBCASE("rejects lists that do not cover") {
    ColouredGraph g = mono(Host::complete(4), 0);
    CHECK(error_kind([&] { extract_matchings(g, {{0, {0, 1}}}); }) ==
          "ComponentsDoNotCover");
  }
  SUBCASE("rejects sets that are not colour components") {
    ColouredGraph g = mono(Host::complete(4), 0);
    CHECK(error_kind([&] {
            extract_matchings(g, {{0, {0, 1}}, {0, {2, 3}}});
          }) == "PreconditionViolated");
  }
}

TEST_CASE("extraction lowers locality and stays greedy-maximum") {
  SUBCASE("every 2-local three colour K33") {
    Host h = Host::bipartite(3, 3);
    std::vector<std::pair<int, int>> edges;
    h.for_each_edge([&](int u, int v) { edges.emplace_back(u, v); });
    int instances = 0;
    std::uint32_t total = 1;
    for (std::size_t e = 0; e < edges.size(); ++e) total *= 3;
    for (std::uint32_t code = 0; code < total; ++code) {
      ColouredGraph g(h);
      std::uint32_t rest = code;
      for (const auto& [u, v] : edges) {
        g.set_colour(u, v, static_cast<int>(rest % 3));
        rest /= 3;
      }
      const int k = locality(g);
      if (k > 2) continue;
      ++instances;
      auto cover = component_cover_bipartite(g);
      REQUIRE(covers_all(g, cover));
      REQUIRE(static_cast<int>(cover.size()) <= 2 * k - 1);
      ExtractionResult ex = extract_matchings(g, cover);
      REQUIRE(verify_matching_cover(g, ex.cover));
      if (!ex.cover.residual.empty())
        REQUIRE(locality(ex.residual.graph) <= k - 1);
    }
    CHECK(instances > 1000);
    MESSAGE("instances: " << instances);
  }
  SUBCASE("random 3-local K55") {
    for (unsigned seed = 0; seed < 100; ++seed) {
      ColouredGraph g =
          gen_random_r_local(Host::bipartite(5, 5), 3, 7, seed);
      const int k = locality(g);
      auto cover = component_cover_bipartite(g);
      REQUIRE(covers_all(g, cover));
      ExtractionResult ex = extract_matchings(g, cover);
      REQUIRE(verify_matching_cover(g, ex.cover));
      if (!ex.cover.residual.empty())
        REQUIRE(locality(ex.residual.graph) <= k - 1);
    }
  }
  SUBCASE("random 2-local K8 with per-step maximality audit") {
    for (unsigned seed = 0; seed < 150; ++seed) {
      ColouredGraph g = gen_random_r_local(Host::complete(8), 2, 5, seed);
      const int k = locality(g);
      auto cover = component_cover_complete(g);
      REQUIRE(covers_all(g, cover));
      REQUIRE(static_cast<int>(cover.size()) <= k);
      ExtractionResult ex = extract_matchings(g, cover);
      REQUIRE(verify_matching_cover(g, ex.cover));
      if (!ex.cover.residual.empty())
        REQUIRE(locality(ex.residual.graph) <= k - 1);
      std::vector<int> taken;
      for (std::size_t i = 0; i < cover.size(); ++i) {
        const int expect = oracle_colour_matching(g, cover[i].first,
                                                  cover[i].second, taken);
        REQUIRE(static_cast<int>(ex.cover.matchings[i].edges.size()) ==
                expect);
        for (const auto& [u, v] : ex.cover.matchings[i].edges) {
          taken.push_back(u);
          taken.push_back(v);
        }
      }
    }
  }
}

TEST_CASE("component covers for complete hosts") {
  SUBCASE("monochromatic K5") {
    ColouredGraph g = mono(Host::complete(5), 0);
    auto cover = component_cover_complete(g);
    REQUIRE(cover.size() == 1);
    CHECK(cover[0].first == 0);
    CHECK(cover[0].second == std::vector<int>{0, 1, 2, 3, 4});
  }
  SUBCASE("two colours seen at vertex 0 of K6") {
    ColouredGraph g = colour_by(Host::complete(6), [](int u, int v) {
      if (u == 0) return v <= 3 ? 1 : 2;
      if (v <= 3) return 1;
      return 2;
    });
    REQUIRE(locality(g) == 2);
    auto cover = component_cover_complete(g);
    REQUIRE(cover.size() == 2);
    CHECK(cover[0].first == 1);
    CHECK(cover[0].second == std::vector<int>{0, 1, 2, 3});
    CHECK(cover[1].first == 2);
    CHECK(cover[1].second == std::vector<int>{0, 1, 2, 3, 4, 5});
    CHECK(covers_all(g, cover));
  }
  SUBCASE("complete grid instance") {
    ColouredGraph g = gen_grid(3, GridHost::Complete);
    auto cover = component_cover_complete(g);
    CHECK(static_cast<int>(cover.size()) <= locality(g));
    CHECK(static_cast<int>(cover.size()) <= 3);
    CHECK(covers_all(g, cover));
  }
  SUBCASE("single vertex has no incident colours") {
    ColouredGraph g(Host::complete(1));
    CHECK(component_cover_complete(g).empty());
  }
  SUBCASE("empty graph is rejected") {
    ColouredGraph g(Host::complete(0));
    CHECK(error_kind([&] { component_cover_complete(g); }) == "EmptyGraph");
  }
  SUBCASE("bipartite host is rejected") {
    ColouredGraph g = mono(Host::bipartite(2, 2), 0);
    CHECK(error_kind([&] { component_cover_complete(g); }) ==
          "PreconditionViolated");
  }
}

TEST_CASE("component covers for bipartite hosts") {
  SUBCASE("monochromatic K33") {
    ColouredGraph g = mono(Host::bipartite(3, 3), 0);
    auto cover = component_cover_bipartite(g);
    REQUIRE(cover.size() == 1);
    CHECK(cover[0].first == 0);
    CHECK(cover[0].second == std::vector<int>{0, 1, 2, 3, 4, 5});
  }
  SUBCASE("split K44") {
    ColouredGraph g = gen_split(2, 2, 2, 2);
    auto cover = component_cover_bipartite(g);
    REQUIRE(cover.size() == 3);
    CHECK(cover[0].first == 1);
    CHECK(cover[0].second == std::vector<int>{0, 1, 4, 5});
    CHECK(cover[1].first == 2);
    CHECK(cover[1].second == std::vector<int>{0, 1, 6, 7});
    CHECK(cover[2].first == 2);
    CHECK(cover[2].second == std::vector<int>{2, 3, 4, 5});
    CHECK(covers_all(g, cover));
  }
  SUBCASE("four colour block instance") {
    ColouredGraph g = gen_figure(FigureShape::FourColour, {2, 2, 1, 1, 1, 1});
    auto cover = component_cover_bipartite(g);
    CHECK(static_cast<int>(cover.size()) <= 2 * locality(g) - 1);
    CHECK(static_cast<int>(cover.size()) <= 3);
    CHECK(covers_all(g, cover));
  }
  SUBCASE("edgeless bipartite host is rejected") {
    ColouredGraph g(Host::bipartite(3, 0));
    CHECK(error_kind([&] { component_cover_bipartite(g); }) == "NoEdges");
  }
  SUBCASE("complete host is rejected") {
    ColouredGraph g = mono(Host::complete(3), 0);
    CHECK(error_kind([&] { component_cover_bipartite(g); }) ==
          "PreconditionViolated");
  }
}

TEST_CASE("matching cover of complete hosts") {
  SUBCASE("monochromatic K7 leaves one trivial vertex") {
    ColouredGraph g = mono(Host::complete(7), 0);
    MatchingCoverReport report = matching_cover_complete(g, 1);
    CHECK(report.roundLocality == std::vector<int>{1, 0});
    CHECK(report.edgedCount == 1);
    CHECK(report.trivialCount == 1);
    CHECK(report.budget == 1);
    REQUIRE(report.cover.matchings.size() == 2);
    CHECK(report.cover.matchings[0].edges.size() == 3);
    CHECK(report.cover.matchings[1].component.size() == 1);
    CHECK(report.cover.residual.empty());
    CHECK(verify_matching_cover(g, report.cover));
  }
  SUBCASE("monochromatic K4 finishes in one round") {
    ColouredGraph g = mono(Host::complete(4), 0);
    MatchingCoverReport report = matching_cover_complete(g, 1);
    CHECK(report.roundLocality == std::vector<int>{1});
    CHECK(report.edgedCount == 1);
    CHECK(report.trivialCount == 0);
    CHECK(verify_matching_cover(g, report.cover));
  }
  SUBCASE("single vertex is covered trivially") {
    ColouredGraph g(Host::complete(1));
    MatchingCoverReport report = matching_cover_complete(g, 1);
    CHECK(report.roundLocality == std::vector<int>{0});
    CHECK(report.edgedCount == 0);
    CHECK(report.trivialCount == 1);
    CHECK(verify_matching_cover(g, report.cover));
  }
  SUBCASE("random 2-local K8 within three matchings") {
    for (unsigned seed = 0; seed < 150; ++seed) {
      ColouredGraph g = gen_random_r_local(Host::complete(8), 2, 5, seed);
      MatchingCoverReport report = matching_cover_complete(g, 2);
      REQUIRE(report.edgedCount <= 3);
      REQUIRE(report.cover.residual.empty());
      REQUIRE(verify_matching_cover(g, report.cover));
    }
  }
  SUBCASE("complete grid instance within six matchings") {
    ColouredGraph g = gen_grid(3, GridHost::Complete);
    REQUIRE(locality(g) <= 3);
    MatchingCoverReport report = matching_cover_complete(g, 3);
    CHECK(report.edgedCount <= 6);
    CHECK(report.budget == 6);
    CHECK(verify_matching_cover(g, report.cover));
  }
  SUBCASE("declared locality bound is enforced") {
    ColouredGraph g = colour_by(Host::complete(6), [](int u, int v) {
      if (u == 0) return v <= 3 ? 1 : 2;
      if (v <= 3) return 1;
      return 2;
    });
    CHECK(error_kind([&] { matching_cover_complete(g, 1); }) == "NotRLocal");
  }
}

TEST_CASE("matching cover of bipartite hosts") {
  SUBCASE("monochromatic K33") {
    ColouredGraph g = mono(Host::bipartite(3, 3), 0);
    MatchingCoverReport report = matching_cover_bipartite(g, 1);
    CHECK(report.roundLocality == std::vector<int>{1});
    CHECK(report.edgedCount == 1);
    CHECK(report.trivialCount == 0);
    CHECK(report.budget == 1);
    REQUIRE(report.cover.matchings.size() == 1);
    CHECK(report.cover.matchings[0].edges.size() == 3);
    CHECK(verify_matching_cover(g, report.cover));
  }
  SUBCASE("split K44 takes two rounds") {
    ColouredGraph g = gen_split(2, 2, 2, 2);
    MatchingCoverReport report = matching_cover_bipartite(g, 2);
    CHECK(report.roundLocality == std::vector<int>{2, 1});
    CHECK(report.edgedCount == 2);
    CHECK(report.trivialCount == 0);
    CHECK(report.budget == 6);
    REQUIRE(report.cover.matchings.size() == 4);
    CHECK(report.cover.matchings[0].edges.size() == 2);
    CHECK(report.cover.matchings[1].edges.empty());
    CHECK(report.cover.matchings[2].edges.empty());
    CHECK(report.cover.matchings[3].edges.size() == 2);
    CHECK(verify_matching_cover(g, report.cover));
  }
  SUBCASE("odd sides leave one trivial vertex") {
    ColouredGraph g = mono(Host::bipartite(3, 2), 0);
    MatchingCoverReport report = matching_cover_bipartite(g, 1);
    CHECK(report.roundLocality == std::vector<int>{1, 0});
    CHECK(report.edgedCount == 1);
    CHECK(report.trivialCount == 1);
    CHECK(verify_matching_cover(g, report.cover));
  }
  SUBCASE("random 2-local K66 within six matchings") {
    for (unsigned seed = 0; seed < 150; ++seed) {
      ColouredGraph g = gen_random_r_local(Host::bipartite(6, 6), 2, 6, seed);
      MatchingCoverReport report = matching_cover_bipartite(g, 2);
      REQUIRE(report.edgedCount <= 6);
      REQUIRE(report.cover.residual.empty());
      REQUIRE(verify_matching_cover(g, report.cover));
    }
  }
  SUBCASE("random 3-local K66 within fifteen matchings") {
    for (unsigned seed = 0; seed < 60; ++seed) {
      ColouredGraph g = gen_random_r_local(Host::bipartite(6, 6), 3, 8, seed);
      MatchingCoverReport report = matching_cover_bipartite(g, 3);
      REQUIRE(report.edgedCount <= 15);
      REQUIRE(verify_matching_cover(g, report.cover));
    }
  }
  SUBCASE("four colour block instance") {
    ColouredGraph g = gen_figure(FigureShape::FourColour, {2, 2, 1, 1, 1, 1});
    MatchingCoverReport report = matching_cover_bipartite(g, 2);
    CHECK(report.edgedCount <= 6);
    CHECK(verify_matching_cover(g, report.cover));
  }
  SUBCASE("declared locality bound is enforced") {
    ColouredGraph g = gen_split(2, 2, 2, 2);
    CHECK(error_kind([&] { matching_cover_bipartite(g, 1); }) == "NotRLocal");
  }
}

TEST_CASE("densest colour meets the degree bound") {
  SUBCASE("monochromatic K4") {
    ColouredGraph g = mono(Host::complete(4), 0);
    DensestColourResult result = densest_colour(g);
    CHECK(result.colour == 0);
    CHECK(result.edgeCount == 6);
    CHECK(rational_cmp(result.bound, make_rational(9, 2)) == 0);
  }
  SUBCASE("split K44 ties break to the smaller colour") {
    ColouredGraph g = gen_split(2, 2, 2, 2);
    DensestColourResult result = densest_colour(g);
    CHECK(result.colour == 1);
    CHECK(result.edgeCount == 8);
    CHECK(rational_cmp(result.bound, make_rational(2, 1)) == 0);
  }
  SUBCASE("bipartite grid instance") {
    ColouredGraph g = gen_grid(3, GridHost::Bipartite);
    DensestColourResult result = densest_colour(g);
    CHECK(rational_cmp(make_rational(result.edgeCount, 1), result.bound) >= 0);
  }
  SUBCASE("random instances never dip below the bound") {
    for (unsigned seed = 0; seed < 80; ++seed) {
      ColouredGraph g = gen_random_r_local(Host::complete(9), 3, 6, seed);
      DensestColourResult result = densest_colour(g);
      REQUIRE(rational_cmp(make_rational(result.edgeCount, 1), result.bound) >=
              0);
    }
    for (unsigned seed = 0; seed < 80; ++seed) {
      ColouredGraph g = gen_random_r_local(Host::bipartite(5, 5), 2, 5, seed);
      DensestColourResult result = densest_colour(g);
      REQUIRE(rational_cmp(make_rational(result.edgeCount, 1), result.bound) >=
              0);
    }
  }
  SUBCASE("edgeless graphs are rejected") {
    ColouredGraph g(Host::complete(1));
    CHECK(error_kind([&] { densest_colour(g); }) == "EmptyGraph");
    ColouredGraph h(Host::bipartite(2, 0));
    CHECK(error_kind([&] { densest_colour(h); }) == "EmptyGraph");
  }
}

TEST_CASE("colour peeling keeps the dense colours") {
  SUBCASE("monochromatic K33 keeps its single colour") {
    ColouredGraph g = mono(Host::bipartite(3, 3), 0);
    PeelingResult result = colour_peeling(g, make_rational(1, 2));
    CHECK(result.kept == std::vector<int>{0});
    CHECK(result.residualEdges == 0);
    CHECK(result.t == 3);
  }
  SUBCASE("split K44 at one half") {
    ColouredGraph g = gen_split(2, 2, 2, 2);
    PeelingResult result = colour_peeling(g, make_rational(1, 2));
    CHECK(result.kept == std::vector<int>{1, 2});
    CHECK(result.residualEdges == 0);
    CHECK(result.t == 12);
  }
  SUBCASE("split K44 at three quarters stops after one colour") {
    ColouredGraph g = gen_split(2, 2, 2, 2);
    PeelingResult result = colour_peeling(g, make_rational(3, 4));
    CHECK(result.kept == std::vector<int>{1});
    CHECK(result.residualEdges == 8);
    CHECK(result.t == 4);
  }
  SUBCASE("bipartite grid at one tenth") {
    ColouredGraph g = gen_grid(4, GridHost::Bipartite);
    PeelingResult result = colour_peeling(g, make_rational(1, 10));
    const long long capacity =
        static_cast<long long>(g.host().top_size()) * g.host().bottom_size();
    CHECK(result.residualEdges * 10 <= capacity);
    CHECK(static_cast<long long>(result.kept.size()) <= result.t);
  }
  SUBCASE("random instances respect the residual bound") {
    for (unsigned seed = 0; seed < 60; ++seed) {
      ColouredGraph g = gen_random_r_local(Host::bipartite(6, 6), 2, 8, seed);
      PeelingResult result = colour_peeling(g, make_rational(1, 4));
      const long long capacity =
          static_cast<long long>(g.host().top_size()) *
          g.host().bottom_size();
      REQUIRE(result.residualEdges * 4 <= capacity);
      REQUIRE(static_cast<long long>(result.kept.size()) <= result.t);
    }
  }
  SUBCASE("eps outside the open unit interval is rejected") {
    ColouredGraph g = mono(Host::bipartite(2, 2), 0);
    CHECK(error_kind([&] { colour_peeling(g, make_rational(0, 1)); }) ==
          "PreconditionViolated");
    CHECK(error_kind([&] { colour_peeling(g, make_rational(1, 1)); }) ==
          "PreconditionViolated");
    CHECK(error_kind([&] { colour_peeling(g, make_rational(-1, 2)); }) ==
          "PreconditionViolated");
    CHECK(error_kind([&] { colour_peeling(g, make_rational(5, 4)); }) ==
          "PreconditionViolated");
  }
  SUBCASE("multipartite hosts are rejected") {
    ColouredGraph g = gen_tripartite();
    CHECK(error_kind([&] { colour_peeling(g, make_rational(1, 2)); }) ==
          "PreconditionViolated");
  }
}

TEST_CASE("matching cover verifier rejects tampering") {
  ColouredGraph g = gen_split(2, 2, 2, 2);
  MatchingCover good = matching_cover_bipartite(g, 2).cover;
  REQUIRE(verify_matching_cover(g, good));

  SUBCASE("duplicate covered vertex") {
    MatchingCover bad = good;
    ConnectedMatching extra;
    extra.component = {0};
    bad.matchings.push_back(extra);
    CHECK_FALSE(verify_matching_cover(g, bad));
  }
  SUBCASE("phantom residual entry") {
    MatchingCover bad = good;
    bad.residual.push_back(0);
    CHECK_FALSE(verify_matching_cover(g, bad));
  }
  SUBCASE("wrong matching colour") {
    MatchingCover bad = good;
    for (ConnectedMatching& m : bad.matchings)
      if (!m.edges.empty()) {
        m.colour = m.colour == 1 ? 2 : 1;
        break;
      }
    CHECK_FALSE(verify_matching_cover(g, bad));
  }
  SUBCASE("endpoint outside the component") {
    MatchingCover bad = good;
    for (ConnectedMatching& m : bad.matchings)
      if (m.edges.size() == 2) {
        m.component = {m.edges[0].first, m.edges[0].second};
        break;
      }
    CHECK_FALSE(verify_matching_cover(g, bad));
  }
  SUBCASE("component not connected in its colour") {
    ColouredGraph h = colour_by(Host::complete(4), [](int u, int v) {
      return (u == 0 && v == 1) || (u == 2 && v == 3) ? 0 : 1;
    });
    MatchingCover bad;
    ConnectedMatching m;
    m.colour = 0;
    m.edges = {{0, 1}, {2, 3}};
    m.component = {0, 1, 2, 3};
    bad.matchings.push_back(m);
    CHECK_FALSE(verify_matching_cover(h, bad));
  }
}

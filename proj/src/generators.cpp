#include "locol/generators.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace locol {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) fail("PreconditionViolated", what);
}

}  // namespace

ColouredGraph gen_split(int top1, int top2, int bot1, int bot2) {
  require(top1 >= 0 && top2 >= 0 && bot1 >= 0 && bot2 >= 0,
          "split part sizes must be nonnegative");
  int tc = top1 + top2;
  ColouredGraph g(Host::bipartite(tc, bot1 + bot2));
  g.host().for_each_edge([&](int t, int b) {
    bool diag = (t < top1) == (b - tc < bot1);
    g.set_colour(t, b, diag ? 1 : 2);
  });
  return g;
}

ColouredGraph gen_generalized_split(int r, int blockSize) {
  require(r >= 1 && blockSize >= 1, "need r >= 1 and blockSize >= 1");
  int side = r * blockSize;
  ColouredGraph g(Host::bipartite(side, side));
  g.host().for_each_edge([&](int t, int b) {
    int i = t / blockSize;
    int j = (b - side) / blockSize;
    g.set_colour(t, b, (i + j) % r + 1);
  });
  return g;
}

ColouredGraph gen_grid(int t, GridHost hostKind) {
  require(t >= 2, "grid needs t >= 2");
  // Grid edge colour, or 0 when the cells are not grid-adjacent.
  auto gridColour = [&](int r1, int c1, int r2, int c2) {
    if (r1 == r2 && std::abs(c1 - c2) == 1) return r1 + 1;
    if (c1 == c2 && std::abs(r1 - r2) == 1) return c1 + 1;
    return 0;
  };
  int fill = t + 1;

  if (hostKind == GridHost::Complete) {
    ColouredGraph g(Host::complete(t * t));
    g.host().for_each_edge([&](int u, int v) {
      int gc = gridColour(u / t, u % t, v / t, v % t);
      g.set_colour(u, v, gc ? gc : fill);
    });
    return g;
  }

  std::vector<std::pair<int, int>> cells[2];
  for (int r = 0; r < t; ++r)
    for (int c = 0; c < t; ++c) cells[(r + c) % 2].emplace_back(r, c);
  int topCount = static_cast<int>(cells[0].size());
  std::vector<std::pair<int, int>> cellOf = cells[0];
  cellOf.insert(cellOf.end(), cells[1].begin(), cells[1].end());

  ColouredGraph g(Host::bipartite(topCount,
                                  static_cast<int>(cells[1].size())));
  g.host().for_each_edge([&](int u, int v) {
    auto [r1, c1] = cellOf[u];
    auto [r2, c2] = cellOf[v];
    int gc = gridColour(r1, c1, r2, c2);
    g.set_colour(u, v, gc ? gc : fill);
  });
  return g;
}

ColouredGraph gen_tripartite() {
  // U = 0..5 with u = 0, V = 6..8 with v = 6, W = 9..11 with w = 9.
  ColouredGraph g(Host::multipartite({6, 3, 3}));
  auto inPrimeU = [](int x) { return x >= 1 && x <= 5; };
  g.host().for_each_edge([&](int a, int b) {
    for (int pass = 0; pass < 2; ++pass) {
      int x = pass ? b : a, y = pass ? a : b;
      bool redSide = x == 6 || x == 10 || x == 11;    // W' + {v}
      bool greenSide = x == 7 || x == 8 || x == 9;    // V' + {w}
      if (redSide && inPrimeU(y)) {
        g.set_colour(a, b, 1);
        return;
      }
      if (greenSide && inPrimeU(y)) {
        g.set_colour(a, b, 2);
        return;
      }
    }
    g.set_colour(a, b, 3);
  });
  return g;
}

ColouredGraph gen_exponential_parts(int r) {
  require(r >= 1, "need r >= 1");
  std::vector<int> partOf;
  for (int i = 1; i <= r; ++i)
    partOf.insert(partOf.end(), 1 << i, i);
  ColouredGraph g(Host::complete(static_cast<int>(partOf.size())));
  g.host().for_each_edge([&](int u, int v) {
    g.set_colour(u, v, std::min(partOf[u], partOf[v]));
  });
  return g;
}

namespace {

bool simple_colouring(const ColouredGraph& g) {
  std::vector<int> cols = g.colours_used();
  std::vector<std::set<int>> verts;
  for (int c : cols) {
    ColourClass cls = colour_class(g, c);
    verts.emplace_back(cls.vertices.begin(), cls.vertices.end());
  }
  for (size_t i = 0; i < cols.size(); ++i)
    for (size_t j = i + 1; j < cols.size(); ++j) {
      bool meet = false;
      for (int v : verts[i])
        if (verts[j].count(v)) {
          meet = true;
          break;
        }
      if (!meet) return false;
    }
  return true;
}

}  // namespace

ColouredGraph gen_figure(FigureShape shape,
                         const std::vector<int>& blockSizes) {
  if (shape == FigureShape::FourColour) {
    if (blockSizes.size() != 6)
      fail("InconsistentBlocks", "four colour shape needs 6 block sizes");
    for (int s : blockSizes)
      if (s < 1)
        fail("InconsistentBlocks",
             "four colour blocks must all be nonempty for simplicity");
    int t12 = blockSizes[0], t34 = blockSizes[1];
    int b13 = blockSizes[2], b14 = blockSizes[3], b23 = blockSizes[4];
    int tc = t12 + t34;
    ColouredGraph g(
        Host::bipartite(tc, b13 + b14 + b23 + blockSizes[5]));
    auto botBlock = [&](int b) {
      int off = b - tc;
      if (off < b13) return 0;          // B13
      if (off < b13 + b14) return 1;    // B14
      if (off < b13 + b14 + b23) return 2;  // B23
      return 3;                         // B24
    };
    // Palettes: T12 {1,2}, T34 {3,4}; bottom block k pairs colour (k<2 ? 1:2)
    // with (k even ? 3 : 4); every edge colour is the palette intersection.
    g.host().for_each_edge([&](int t, int b) {
      int k = botBlock(b);
      int c = t < t12 ? (k < 2 ? 1 : 2) : (k % 2 == 0 ? 3 : 4);
      g.set_colour(t, b, c);
    });
    return g;
  }

  if (blockSizes.size() != 6)
    fail("InconsistentBlocks", "three colour shape needs 6 block sizes");
  for (int s : blockSizes)
    if (s < 0) fail("InconsistentBlocks", "negative block size");
  int t12 = blockSizes[0], t13 = blockSizes[1], t23 = blockSizes[2];
  int b12 = blockSizes[3], b13 = blockSizes[4], b23 = blockSizes[5];
  int tc = t12 + t13 + t23;
  ColouredGraph g(Host::bipartite(tc, b12 + b13 + b23));
  // Pair of colours seen by each block, by block index.
  const int pairs[3][2] = {{1, 2}, {1, 3}, {2, 3}};
  auto topBlock = [&](int t) { return t < t12 ? 0 : (t < t12 + t13 ? 1 : 2); };
  auto botBlock = [&](int b) {
    int off = b - tc;
    return off < b12 ? 0 : (off < b12 + b13 ? 1 : 2);
  };
  g.host().for_each_edge([&](int t, int b) {
    const int* tp = pairs[topBlock(t)];
    const int* bp = pairs[botBlock(b)];
    int common[2], count = 0;
    for (int x : {tp[0], tp[1]})
      if (x == bp[0] || x == bp[1]) common[count++] = x;
    // Forced channels have one legal colour; within-pair zones take the
    // smaller of the two.
    g.set_colour(t, b, common[0]);
    (void)count;
  });
  std::vector<int> used = g.colours_used();
  if (used != std::vector<int>{1, 2, 3})
    fail("InconsistentBlocks", "a colour of the three colour shape is absent");
  if (!simple_colouring(g))
    fail("InconsistentBlocks", "three colour shape is not simple");
  return g;
}

ColouredGraph gen_random_r_local(const Host& host, int r, int colourPool,
                                 std::uint64_t seed) {
  require(r >= 1 && colourPool >= r, "need r >= 1 and colourPool >= r");
  std::mt19937_64 rng(seed);
  int n = host.vertex_count();
  std::vector<std::vector<int>> palette(n);
  for (int v = 0; v < n; ++v) {
    std::set<int> pal{0};
    for (int k = 0; k < r - 1; ++k)
      pal.insert(1 + static_cast<int>(rng() % colourPool));
    palette[v].assign(pal.begin(), pal.end());
  }
  ColouredGraph g(host);
  host.for_each_edge([&](int u, int v) {
    std::vector<int> common;
    std::set_intersection(palette[u].begin(), palette[u].end(),
                          palette[v].begin(), palette[v].end(),
                          std::back_inserter(common));
    g.set_colour(u, v, common[rng() % common.size()]);
  });
  return g;
}

}  // namespace locol

#include "locol/structure.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace locol {

namespace {

// Class vertex sets keyed by colour, as sorted vectors.
std::map<int, std::vector<int>> class_vertices(const ColouredGraph& g) {
  std::map<int, std::set<int>> tmp;
  g.for_each_edge([&](int u, int v, int c) {
    tmp[c].insert(u);
    tmp[c].insert(v);
  });
  std::map<int, std::vector<int>> out;
  for (auto& [c, verts] : tmp) out[c] = {verts.begin(), verts.end()};
  return out;
}

bool disjoint(const std::vector<int>& a, const std::vector<int>& b) {
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia == *ib) return false;
    (*ia < *ib) ? ++ia : ++ib;
  }
  return true;
}

}  // namespace

bool is_simple(const ColouredGraph& g) {
  auto classes = class_vertices(g);
  for (auto i = classes.begin(); i != classes.end(); ++i)
    for (auto j = std::next(i); j != classes.end(); ++j)
      if (disjoint(i->second, j->second)) return false;
  return true;
}

SimplifyResult simplify(const ColouredGraph& g) {
  SimplifyResult res{g, {}};
  for (int c : g.colours_used()) res.colourMap[c] = c;
  for (;;) {
    auto classes = class_vertices(res.graph);
    std::pair<int, int> merge{-1, -1};
    for (auto i = classes.begin(); i != classes.end() && merge.first < 0; ++i)
      for (auto j = std::next(i); j != classes.end(); ++j)
        if (disjoint(i->second, j->second)) {
          merge = {i->first, j->first};
          break;
        }
    if (merge.first < 0) return res;
    auto [keep, gone] = merge;
    res.graph = remap_colours(res.graph,
                              [&](int c) { return c == gone ? keep : c; });
    for (auto& [orig, cur] : res.colourMap)
      if (cur == gone) cur = keep;
  }
}

SplitOutcome detect_split(const ColouredGraph& g) {
  if (g.host().kind() != HostKind::Bipartite)
    fail("PreconditionViolated", "split detection needs a bipartite host");
  std::vector<int> cols = g.colours_used();
  if (cols.size() > 2)
    return NotSplit{"more than two colours appear", -1, {}};

  std::vector<int> tops = top_vertices(g.host());
  std::vector<int> bots = bottom_vertices(g.host());

  SplitWitness w;
  if (cols.size() <= 1 || tops.empty() || bots.empty()) {
    w.top1 = tops;
    w.bot1 = bots;
    w.colourDiag = cols.empty() ? -1 : cols[0];
    return w;
  }

  int c = cols[0], cc = cols[1];
  int t0 = tops[0];
  std::vector<char> inB1(g.n(), 0);
  for (int b : bots) {
    int col = g.colour(t0, b);
    if (col == c) {
      inB1[b] = 1;
      w.bot1.push_back(b);
    } else {
      w.bot2.push_back(b);
    }
  }
  for (int t : tops) {
    int violateT1u = -1, violateT2u = -1;
    for (int b : bots) {
      int col = g.colour(t, b);
      if (col != (inB1[b] ? c : cc) && violateT1u < 0) violateT1u = b;
      if (col != (inB1[b] ? cc : c) && violateT2u < 0) violateT2u = b;
    }
    if (violateT1u < 0) {
      w.top1.push_back(t);
    } else if (violateT2u < 0) {
      w.top2.push_back(t);
    } else {
      return NotSplit{"vertex fits neither side of the candidate partition",
                      t,
                      {{t, violateT1u}, {t, violateT2u}}};
    }
  }
  bool diagEdges = (!w.top1.empty() && !w.bot1.empty()) ||
                   (!w.top2.empty() && !w.bot2.empty());
  bool offEdges = (!w.top1.empty() && !w.bot2.empty()) ||
                  (!w.top2.empty() && !w.bot1.empty());
  w.colourDiag = diagEdges ? c : -1;
  w.colourOff = offEdges ? cc : -1;
  return w;
}

bool is_split(const ColouredGraph& g) {
  return std::holds_alternative<SplitWitness>(detect_split(g));
}

bool verify_split_witness(const ColouredGraph& g, const SplitWitness& w) {
  std::vector<int> tops = w.top1, bots = w.bot1;
  tops.insert(tops.end(), w.top2.begin(), w.top2.end());
  bots.insert(bots.end(), w.bot2.begin(), w.bot2.end());
  std::sort(tops.begin(), tops.end());
  std::sort(bots.begin(), bots.end());
  if (tops != top_vertices(g.host()) || bots != bottom_vertices(g.host()))
    return false;
  if (w.colourDiag == w.colourOff && w.colourDiag != -1) return false;

  bool sawDiag = false, sawOff = false;
  bool ok = true;
  auto checkBlock = [&](const std::vector<int>& ts, const std::vector<int>& bs,
                        int want, bool& saw) {
    for (int t : ts)
      for (int b : bs) {
        saw = true;
        if (g.colour(t, b) != want) ok = false;
      }
  };
  checkBlock(w.top1, w.bot1, w.colourDiag, sawDiag);
  checkBlock(w.top2, w.bot2, w.colourDiag, sawDiag);
  checkBlock(w.top1, w.bot2, w.colourOff, sawOff);
  checkBlock(w.top2, w.bot1, w.colourOff, sawOff);
  if (sawDiag != (w.colourDiag != -1)) return false;
  if (sawOff != (w.colourOff != -1)) return false;
  return ok;
}

namespace {

StructureReport classify_four(const ColouredGraph& g,
                              const std::vector<int>& cols,
                              StructureReport report) {
  std::vector<int> tops = top_vertices(g.host());
  std::vector<int> bots = bottom_vertices(g.host());
  std::vector<std::vector<int>> pal(g.n());
  for (int v = 0; v < g.n(); ++v) pal[v] = g.palette(v);

  // Pairings of the four colours into two palette pairs.
  const int pairings[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
  for (const auto& p : pairings) {
    std::vector<int> pairA{cols[p[0]], cols[p[1]]};
    std::vector<int> pairB{cols[p[2]], cols[p[3]]};
    std::sort(pairA.begin(), pairA.end());
    std::sort(pairB.begin(), pairB.end());
    for (bool swapped : {false, true}) {
      const std::vector<int>& matchSide = swapped ? bots : tops;
      const std::vector<int>& crossSide = swapped ? tops : bots;
      bool fits = true;
      for (int v : matchSide)
        if (pal[v] != pairA && pal[v] != pairB) {
          fits = false;
          break;
        }
      if (!fits) continue;
      for (int v : crossSide) {
        if (pal[v].size() != 2) {
          fits = false;
          break;
        }
        bool inA0 = pal[v][0] == pairA[0] || pal[v][0] == pairA[1];
        bool inA1 = pal[v][1] == pairA[0] || pal[v][1] == pairA[1];
        bool inB0 = pal[v][0] == pairB[0] || pal[v][0] == pairB[1];
        bool inB1 = pal[v][1] == pairB[0] || pal[v][1] == pairB[1];
        if (!((inA0 && inB1) || (inB0 && inA1))) {
          fits = false;
          break;
        }
      }
      if (!fits) continue;

      report.shape = Shape::FourColour;
      report.everyVertexSeesTwo = true;
      report.sideSwapped = swapped;
      report.roleColour = {pairA[0], pairA[1], pairB[0], pairB[1]};
      report.topBlocks.assign(2, {});
      report.botBlocks.assign(4, {});
      for (int v : matchSide)
        report.topBlocks[pal[v] == pairA ? 0 : 1].push_back(v);
      for (int v : crossSide) {
        int a = (pal[v][0] == pairA[0] || pal[v][1] == pairA[0]) ? 0 : 1;
        int b = (pal[v][0] == pairB[0] || pal[v][1] == pairB[0]) ? 0 : 1;
        report.botBlocks[2 * a + b].push_back(v);
      }
      return report;
    }
  }
  fail("StructureViolation",
       "four appearing colours admit no figure arrangement");
}

}  // namespace

StructureReport classify_2local(const ColouredGraph& g) {
  if (g.host().kind() != HostKind::Bipartite)
    fail("PreconditionViolated", "classification needs a bipartite host");
  validate(g);
  if (locality(g) > 2) fail("NotTwoLocal", "a vertex sees three colours");
  if (!is_simple(g)) fail("NotSimple", "disjoint colour classes present");

  std::vector<int> cols = g.colours_used();
  StructureReport report;
  report.colourCount = static_cast<int>(cols.size());
  int seeingTwo = 0;
  for (int v = 0; v < g.n(); ++v) {
    size_t palSize = g.palette(v).size();
    if (palSize == 1) report.singleColourVertices.push_back(v);
    if (palSize == 2) ++seeingTwo;
  }
  report.everyVertexSeesTwo = g.n() > 0 && seeingTwo == g.n();

  if (cols.size() <= 2) {
    report.shape = Shape::AtMostTwo;
    report.roleColour = cols;
    return report;
  }
  if (cols.size() == 3) {
    report.shape = Shape::ThreeColour;
    report.roleColour = cols;
    report.topBlocks.assign(3, {});
    report.botBlocks.assign(3, {});
    // Role pairs in block order {12, 13, 23}.
    const int pairOf[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    for (int v = 0; v < g.n(); ++v) {
      std::vector<int> pal = g.palette(v);
      if (pal.size() != 2) continue;
      for (int k = 0; k < 3; ++k)
        if (pal[0] == cols[pairOf[k][0]] && pal[1] == cols[pairOf[k][1]]) {
          (g.host().is_top(v) ? report.topBlocks : report.botBlocks)[k]
              .push_back(v);
        }
    }
    return report;
  }
  if (cols.size() == 4) return classify_four(g, cols, report);
  fail("StructureViolation",
       "more than four colours in a simple 2-local colouring");
}

bool verify_structure_report(const ColouredGraph& g,
                             const StructureReport& report) {
  std::vector<int> tops = top_vertices(g.host());
  std::vector<int> bots = bottom_vertices(g.host());
  if (report.sideSwapped) std::swap(tops, bots);

  auto blockUnion = [&](const std::vector<std::vector<int>>& blocks,
                        const std::vector<int>& side) {
    std::vector<int> got;
    for (const auto& b : blocks) got.insert(got.end(), b.begin(), b.end());
    for (int v : report.singleColourVertices) {
      bool onSide =
          std::find(side.begin(), side.end(), v) != side.end();
      if (onSide) got.push_back(v);
    }
    std::sort(got.begin(), got.end());
    bool unique = std::adjacent_find(got.begin(), got.end()) == got.end();
    std::vector<int> want = side;
    std::sort(want.begin(), want.end());
    return unique && got == want;
  };

  if (report.shape == Shape::AtMostTwo)
    return report.colourCount <= 2 && report.topBlocks.empty() &&
           report.botBlocks.empty();

  const auto& roles = report.roleColour;
  if (report.shape == Shape::ThreeColour) {
    if (roles.size() != 3 || report.topBlocks.size() != 3 ||
        report.botBlocks.size() != 3)
      return false;
    const int pairOf[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    for (int side = 0; side < 2; ++side) {
      const auto& blocks = side ? report.botBlocks : report.topBlocks;
      for (int k = 0; k < 3; ++k)
        for (int v : blocks[k]) {
          std::vector<int> want{roles[pairOf[k][0]], roles[pairOf[k][1]]};
          std::sort(want.begin(), want.end());
          if (g.palette(v) != want) return false;
        }
    }
    return blockUnion(report.topBlocks, tops) &&
           blockUnion(report.botBlocks, bots);
  }

  // FourColour: role pairs {12, 34} on the match side, {13, 14, 23, 24}
  // crossing, every vertex seeing exactly two colours.
  if (roles.size() != 4 || report.topBlocks.size() != 2 ||
      report.botBlocks.size() != 4 || !report.singleColourVertices.empty())
    return false;
  for (const auto& blocks : {report.topBlocks, report.botBlocks})
    for (const auto& b : blocks)
      if (b.empty()) return false;
  const int topPair[2][2] = {{0, 1}, {2, 3}};
  const int botPair[4][2] = {{0, 2}, {0, 3}, {1, 2}, {1, 3}};
  for (int k = 0; k < 2; ++k)
    for (int v : report.topBlocks[k]) {
      std::vector<int> want{roles[topPair[k][0]], roles[topPair[k][1]]};
      std::sort(want.begin(), want.end());
      if (g.palette(v) != want) return false;
    }
  for (int k = 0; k < 4; ++k)
    for (int v : report.botBlocks[k]) {
      std::vector<int> want{roles[botPair[k][0]], roles[botPair[k][1]]};
      std::sort(want.begin(), want.end());
      if (g.palette(v) != want) return false;
    }
  return blockUnion(report.topBlocks, tops) &&
         blockUnion(report.botBlocks, bots);
}

bool complete_bipartite_in_colour(const ColouredGraph& g, int c) {
  if (g.host().kind() != HostKind::Bipartite)
    fail("PreconditionViolated", "needs a bipartite host");
  ColourClass cls = colour_class(g, c);
  for (int u : cls.vertices) {
    if (!g.host().is_top(u)) continue;
    for (int v : cls.vertices) {
      if (g.host().is_top(v)) continue;
      if (g.colour(u, v) != c) return false;
    }
  }
  return true;
}

}  // namespace locol

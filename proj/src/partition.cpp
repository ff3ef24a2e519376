#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <utility>

#include "locol/paths.hpp"
#include "mask_dp.hpp"

namespace locol {

namespace {

struct Ctx {
  const ColouredGraph& gs;
  int budget;
  std::vector<int> tops;
  std::vector<int> bots;
  std::vector<std::vector<int>> pal;
  std::vector<int> cols;
};

bool subset_of_pair(const std::vector<int>& pal, int a, int b) {
  return std::all_of(pal.begin(), pal.end(),
                     [&](int c) { return c == a || c == b; });
}

bool sees(const std::vector<int>& pal, int c) {
  return std::find(pal.begin(), pal.end(), c) != pal.end();
}

// Vertices of side whose palette is exactly {a, b}.
std::vector<int> block_of(const Ctx& ctx, const std::vector<int>& side, int a,
                          int b) {
  const std::vector<int> want{std::min(a, b), std::max(a, b)};
  std::vector<int> out;
  for (int v : side) {
    if (ctx.pal[v] == want) out.push_back(v);
  }
  return out;
}

std::vector<int> merge_sorted(const std::vector<int>& u,
                              const std::vector<int>& v) {
  std::vector<int> out;
  std::merge(u.begin(), u.end(), v.begin(), v.end(), std::back_inserter(out));
  return out;
}

std::vector<int> intersect_sorted(const std::vector<int>& u,
                                  const std::vector<int>& v) {
  std::vector<int> out;
  std::set_intersection(u.begin(), u.end(), v.begin(), v.end(),
                        std::back_inserter(out));
  return out;
}

std::vector<int> remaining_vertices(const Ctx& ctx, const MonoPath& p) {
  const int n = ctx.gs.host().vertex_count();
  std::vector<char> used(n, 0);
  for (int v : p.vertices) used[v] = 1;
  std::vector<int> out;
  for (int v = 0; v < n; ++v) {
    if (!used[v]) out.push_back(v);
  }
  return out;
}

void split_sides(const Ctx& ctx, const std::vector<int>& vs,
                 std::vector<int>& top, std::vector<int>& bot) {
  top.clear();
  bot.clear();
  for (int v : vs) {
    (ctx.gs.host().is_top(v) ? top : bot).push_back(v);
  }
}

MonoPath map_path(const MonoPath& p, const std::vector<int>& toParent) {
  MonoPath out;
  out.colour = p.colour;
  out.vertices.reserve(p.vertices.size());
  for (int v : p.vertices) out.vertices.push_back(toParent[v]);
  return out;
}

// Lexicographically first edge of colour c between the two vertex lists.
std::optional<std::pair<int, int>> find_colour_edge(const Ctx& ctx,
                                                    const std::vector<int>& ts,
                                                    const std::vector<int>& bs,
                                                    int c) {
  for (int t : ts) {
    for (int b : bs) {
      if (ctx.gs.colour(t, b) == c) return std::make_pair(t, b);
    }
  }
  return std::nullopt;
}

using Finish = std::optional<std::vector<MonoPath>>;

// Closes a partial partition whose remainder keeps one whole side inside the
// colour pair {a, b}: the remainder is then 2-coloured and the dichotomy
// either covers it with two paths or yields a split that can be bridged
// through the endpoint of the partial path (extending the path first when it
// can grow into the split).
Finish finish_pair_remainder(const Ctx& ctx, MonoPath cur, int a, int b,
                             bool preservedTop) {
  const int n = ctx.gs.host().vertex_count();
  for (int guard = 0; guard <= n + 2; ++guard) {
    std::vector<int> rem = remaining_vertices(ctx, cur);
    std::vector<MonoPath> out;
    if (rem.empty()) {
      if (!cur.empty()) out.push_back(cur);
      return out;
    }
    std::vector<int> remTop, remBot;
    split_sides(ctx, rem, remTop, remBot);
    const std::vector<int>& S = preservedTop ? remTop : remBot;
    const std::vector<int>& other = preservedTop ? remBot : remTop;
    if (S.size() != other.size()) return std::nullopt;
    for (int v : S) {
      if (!subset_of_pair(ctx.pal[v], a, b)) return std::nullopt;
    }
    Restriction R = restrict_to(ctx.gs, rem);
    if (R.graph.colours_used().size() > 2) return std::nullopt;
    TwoColourOutcome oc = two_colour_partition(R.graph, ctx.budget);
    if (auto* tp = std::get_if<TwoPathsResult>(&oc)) {
      if (!cur.empty()) out.push_back(cur);
      for (const MonoPath* q : {&tp->first, &tp->second}) {
        if (!q->empty()) out.push_back(map_path(*q, R.toParent));
      }
      return out;
    }
    SplitWitness w = std::get<SplitWitness>(oc);
    if (cur.empty()) return std::nullopt;
    // cur is even and alternating, so exactly one endpoint lies on the
    // non-preserved side; make it the back.
    if (ctx.gs.host().is_top(cur.vertices.back()) == preservedTop) {
      std::reverse(cur.vertices.begin(), cur.vertices.end());
    }
    const int p = cur.vertices.back();
    bool extended = false;
    for (int t : S) {
      if (ctx.gs.colour(p, t) != cur.colour) continue;
      for (int bb : other) {
        if (ctx.gs.colour(t, bb) == cur.colour) {
          cur.vertices.push_back(t);
          cur.vertices.push_back(bb);
          extended = true;
          break;
        }
      }
      if (extended) break;
    }
    if (extended) continue;
    const int y = ctx.gs.colour(p, S.front());
    for (int t : S) {
      if (ctx.gs.colour(p, t) != y) return std::nullopt;
    }
    if (y != w.colourDiag && y != w.colourOff) return std::nullopt;
    if (w.colourOff == y) {
      std::swap(w.bot1, w.bot2);
      std::swap(w.colourDiag, w.colourOff);
    }
    PathPartitionCertificate sp = split_three_paths(R.graph, w);
    std::vector<MonoPath> parts;
    parts.reserve(sp.paths.size());
    for (const auto& q : sp.paths) parts.push_back(map_path(q, R.toParent));
    MonoPath p1 = parts[0];
    MonoPath p2 = parts[1];
    if (ctx.gs.host().is_top(p1.vertices.back()) != preservedTop) {
      std::reverse(p1.vertices.begin(), p1.vertices.end());
    }
    if (ctx.gs.host().is_top(p2.vertices.front()) != preservedTop) {
      std::reverse(p2.vertices.begin(), p2.vertices.end());
    }
    cur.vertices.pop_back();
    MonoPath joined;
    joined.colour = y;
    joined.vertices = p1.vertices;
    joined.vertices.push_back(p);
    joined.vertices.insert(joined.vertices.end(), p2.vertices.begin(),
                           p2.vertices.end());
    out.push_back(cur);
    out.push_back(joined);
    if (parts.size() == 3) out.push_back(parts[2]);
    return out;
  }
  fail("StructureViolation", "pair finisher failed to terminate");
}

// Closes a partial partition whose remainder is connected in colour i: merge
// everything else into a second colour and run the dichotomy, which cannot
// split (a non-degenerate split disconnects every colour it uses).
Finish finish_connected_remainder(const Ctx& ctx, const MonoPath& P, int i) {
  std::vector<int> rem = remaining_vertices(ctx, P);
  std::vector<MonoPath> out;
  if (rem.empty()) {
    if (!P.empty()) out.push_back(P);
    return out;
  }
  if (!connected_in_colour(ctx.gs, rem, i)) return std::nullopt;
  Restriction R = restrict_to(ctx.gs, rem);
  ColouredGraph merged =
      remap_colours(R.graph, [&](int c) { return c == i ? 0 : 1; });
  TwoColourOutcome oc = two_colour_partition(merged, ctx.budget);
  auto* tp = std::get_if<TwoPathsResult>(&oc);
  if (tp == nullptr) {
    fail("StructureViolation",
         "remainder connected in a colour still produced a split");
  }
  if (!P.empty()) out.push_back(P);
  for (const MonoPath* q : {&tp->first, &tp->second}) {
    if (q->empty()) continue;
    MonoPath mp = map_path(*q, R.toParent);
    if (mp.length() >= 2) {
      // 2-locality forces each merged path to be monochromatic in the
      // original colours; recover that colour from its first edge.
      const int orig = ctx.gs.colour(mp.vertices[0], mp.vertices[1]);
      for (std::size_t e = 0; e + 1 < mp.vertices.size(); ++e) {
        if (ctx.gs.colour(mp.vertices[e], mp.vertices[e + 1]) != orig) {
          fail("StructureViolation",
               "merged path mixes original colours");
        }
      }
      mp.colour = orig;
    } else {
      mp.colour = i;
    }
    out.push_back(mp);
  }
  return out;
}

Finish try_case_finishers(const Ctx& ctx, const MonoPath& P) {
  std::vector<int> rem = remaining_vertices(ctx, P);
  std::vector<int> remTop, remBot;
  split_sides(ctx, rem, remTop, remBot);
  for (std::size_t ai = 0; ai < ctx.cols.size(); ++ai) {
    for (std::size_t bi = ai + 1; bi < ctx.cols.size(); ++bi) {
      const int a = ctx.cols[ai];
      const int b = ctx.cols[bi];
      for (bool preservedTop : {true, false}) {
        const std::vector<int>& S = preservedTop ? remTop : remBot;
        const bool fits =
            std::all_of(S.begin(), S.end(), [&](int v) {
              return subset_of_pair(ctx.pal[v], a, b);
            });
        if (!fits) continue;
        if (auto r = finish_pair_remainder(ctx, P, a, b, preservedTop)) {
          return r;
        }
      }
    }
  }
  for (int i : ctx.cols) {
    if (auto r = finish_connected_remainder(ctx, P, i)) return r;
  }
  return std::nullopt;
}

// A vertex that sees a single colour x forces the whole opposite side to see
// x; cover the block the construction singles out and finish.
Finish case_lone_vertex(const Ctx& ctx) {
  std::vector<int> singles;
  const int n = ctx.gs.host().vertex_count();
  for (int v = 0; v < n; ++v) {
    if (ctx.pal[v].size() == 1) singles.push_back(v);
  }
  if (singles.empty()) return std::nullopt;
  const int x = ctx.pal[singles[0]][0];
  for (int v : singles) {
    if (ctx.pal[v][0] != x) return std::nullopt;
  }
  const bool sTop = ctx.gs.host().is_top(singles[0]);
  const std::vector<int>& sSide = sTop ? ctx.tops : ctx.bots;
  const std::vector<int>& oSide = sTop ? ctx.bots : ctx.tops;
  std::vector<int> others;
  for (int c : ctx.cols) {
    if (c != x) others.push_back(c);
  }
  if (!block_of(ctx, oSide, others[0], others[1]).empty()) return std::nullopt;
  for (int zi = 0; zi < 2; ++zi) {
    const int z = others[zi];
    const int y = others[1 - zi];
    const std::vector<int> XA = block_of(ctx, oSide, x, z);
    const std::vector<int> poolA = block_of(ctx, sSide, y, z);
    if (poolA.size() >= XA.size()) {
      MonoPath P;
      if (!XA.empty()) P = MonoPath{detail::interleave(XA, poolA), z};
      if (auto r = finish_pair_remainder(ctx, P, x, y, !sTop)) return r;
    } else if (!poolA.empty()) {
      MonoPath P{detail::interleave(poolA, XA), z};
      if (auto r = finish_connected_remainder(ctx, P, x)) return r;
    }
  }
  return std::nullopt;
}

// A colour class that is complete bipartite in its colour: one even path
// eats the class's smaller side, leaving that side inside the other pair.
Finish case_complete_class(const Ctx& ctx) {
  for (int i : ctx.cols) {
    if (!complete_bipartite_in_colour(ctx.gs, i)) continue;
    const ColourClass cls = colour_class(ctx.gs, i);
    std::vector<int> cT, cB;
    split_sides(ctx, cls.vertices, cT, cB);
    if (cT.empty() || cB.empty()) continue;
    std::vector<int> others;
    for (int c : ctx.cols) {
      if (c != i) others.push_back(c);
    }
    const bool coverTop = cT.size() <= cB.size();
    MonoPath P = coverTop ? MonoPath{detail::interleave(cT, cB), i}
                          : MonoPath{detail::interleave(cB, cT), i};
    if (auto r = finish_pair_remainder(ctx, P, others[0], others[1],
                                       coverTop)) {
      return r;
    }
  }
  return std::nullopt;
}

// A colour x whose class is disconnected in x keeps the mixed blocks that
// contain x free of internal x-edges, which opens two covering moves.
Finish case_disconnected_class(const Ctx& ctx) {
  for (int x : ctx.cols) {
    const ColourClass cls = colour_class(ctx.gs, x);
    if (connected_in_colour(ctx.gs, cls.vertices, x)) continue;
    std::vector<int> others;
    for (int c : ctx.cols) {
      if (c != x) others.push_back(c);
    }
    auto internalX = [&](int o) {
      const auto bt = block_of(ctx, ctx.tops, o, x);
      const auto bb = block_of(ctx, ctx.bots, o, x);
      return find_colour_edge(ctx, bt, bb, x).has_value();
    };
    if (internalX(others[0]) || internalX(others[1])) continue;
    for (int yi = 0; yi < 2; ++yi) {
      const int y = others[yi];
      const int z = others[1 - yi];
      for (bool sTop : {true, false}) {
        const std::vector<int>& sSide = sTop ? ctx.tops : ctx.bots;
        const std::vector<int>& oSide = sTop ? ctx.bots : ctx.tops;
        const auto Tyx = block_of(ctx, sSide, y, x);
        const auto Byx = block_of(ctx, oSide, y, x);
        const auto Byz = block_of(ctx, oSide, y, z);
        if (Tyx.size() >= Byx.size() + Byz.size()) {
          const std::vector<int> X = merge_sorted(Byx, Byz);
          if (X.empty()) continue;
          MonoPath P{detail::interleave(X, Tyx), y};
          if (auto r = finish_pair_remainder(ctx, P, z, x, !sTop)) return r;
        } else if (!Tyx.empty() && Tyx.size() >= Byx.size()) {
          std::vector<int> pool = Byx;
          pool.insert(pool.end(), Byz.begin(),
                      Byz.begin() + (Tyx.size() - Byx.size()));
          MonoPath P{detail::interleave(Tyx, pool), y};
          if (auto r = finish_connected_remainder(ctx, P, z)) return r;
        }
      }
    }
  }
  return std::nullopt;
}

// Two opposite blocks of one colour vanish: the forced channel between the
// surviving two covers one of them outright.
Finish case_vanishing_blocks(const Ctx& ctx) {
  for (int i : ctx.cols) {
    for (int j : ctx.cols) {
      if (j == i) continue;
      int k = -1;
      for (int c : ctx.cols) {
        if (c != i && c != j) k = c;
      }
      for (bool sTop : {true, false}) {
        const std::vector<int>& sSide = sTop ? ctx.tops : ctx.bots;
        const std::vector<int>& oSide = sTop ? ctx.bots : ctx.tops;
        if (!block_of(ctx, oSide, i, j).empty()) continue;
        if (!block_of(ctx, sSide, i, k).empty()) continue;
        const auto U = block_of(ctx, sSide, i, j);
        const auto W = block_of(ctx, oSide, i, k);
        if (!U.empty() && W.size() >= U.size()) {
          MonoPath P{detail::interleave(U, W), i};
          if (auto r = finish_pair_remainder(ctx, P, j, k, sTop)) return r;
        } else if (!W.empty() && U.size() >= W.size()) {
          MonoPath P{detail::interleave(W, U), i};
          if (auto r = finish_pair_remainder(ctx, P, j, k, !sTop)) return r;
        } else if (U.size() == 1 && W.empty()) {
          if (auto e = find_colour_edge(ctx, U, oSide, i)) {
            MonoPath P{{e->first, e->second}, i};
            if (auto r = finish_pair_remainder(ctx, P, j, k, sTop)) return r;
          }
        } else if (W.size() == 1 && U.empty()) {
          if (auto e = find_colour_edge(ctx, sSide, W, i)) {
            MonoPath P{{e->first, e->second}, i};
            if (auto r = finish_pair_remainder(ctx, P, j, k, !sTop)) return r;
          }
        }
      }
    }
  }
  return std::nullopt;
}

// Both opposite blocks of colour i are coverable at once: their two forced
// channels, bridged by an internal i-edge, form a single even i-path.
Finish case_double_bridge(const Ctx& ctx) {
  for (int i : ctx.cols) {
    std::vector<int> others;
    for (int c : ctx.cols) {
      if (c != i) others.push_back(c);
    }
    for (int ji = 0; ji < 2; ++ji) {
      const int j = others[ji];
      const int k = others[1 - ji];
      for (bool sTop : {true, false}) {
        const std::vector<int>& sSide = sTop ? ctx.tops : ctx.bots;
        const std::vector<int>& oSide = sTop ? ctx.bots : ctx.tops;
        const auto Tij = block_of(ctx, sSide, i, j);
        const auto Bij = block_of(ctx, oSide, i, j);
        const auto Tik = block_of(ctx, sSide, i, k);
        const auto Bik = block_of(ctx, oSide, i, k);
        if (Tij.size() < Bik.size() || Tik.size() < Bij.size()) continue;
        if (Bik.empty() && Bij.empty()) continue;
        MonoPath P;
        if (Bij.empty()) {
          P = MonoPath{detail::interleave(Bik, Tij), i};
        } else if (Bik.empty()) {
          P = MonoPath{detail::interleave(Bij, Tik), i};
        } else {
          auto e1 = find_colour_edge(ctx, Tik, Bik, i);
          const bool inIK = e1.has_value();
          if (!e1) e1 = find_colour_edge(ctx, Tij, Bij, i);
          if (!e1) continue;
          const std::size_t m = Bik.size();
          const std::size_t q = Bij.size();
          std::vector<int> seq;
          if (inIK) {
            std::vector<int> bik;
            for (int v : Bik) {
              if (v != e1->second) bik.push_back(v);
            }
            bik.push_back(e1->second);
            for (std::size_t idx = 0; idx < m; ++idx) {
              seq.push_back(Tij[idx]);
              seq.push_back(bik[idx]);
            }
            seq.push_back(e1->first);
            std::vector<int> tik;
            for (int v : Tik) {
              if (v != e1->first) tik.push_back(v);
            }
            for (std::size_t idx = 0; idx < q; ++idx) {
              seq.push_back(Bij[idx]);
              if (idx + 1 < q) seq.push_back(tik[idx]);
            }
          } else {
            std::vector<int> tij;
            for (int v : Tij) {
              if (v != e1->first) tij.push_back(v);
            }
            for (std::size_t idx = 0; idx < m; ++idx) {
              seq.push_back(Bik[idx]);
              seq.push_back(idx + 1 < m ? tij[idx] : e1->first);
            }
            if (m == 0) seq.push_back(e1->first);
            seq.push_back(e1->second);
            std::vector<int> bij;
            for (int v : Bij) {
              if (v != e1->second) bij.push_back(v);
            }
            for (std::size_t idx = 0; idx + 1 < q; ++idx) {
              seq.push_back(Tik[idx]);
              seq.push_back(bij[idx]);
            }
            seq.push_back(Tik[q - 1]);
          }
          P = MonoPath{seq, i};
        }
        if (auto r = finish_pair_remainder(ctx, P, j, k, !sTop)) return r;
      }
    }
  }
  return std::nullopt;
}

// Cover one whole mixed block of colour i (both of its sides) through its two
// forced channels, bridged by an internal i-edge chosen away from a guard
// edge of colour j whenever the pools allow it.
Finish case_guarded_bridge(const Ctx& ctx) {
  for (int i : ctx.cols) {
    std::vector<int> others;
    for (int c : ctx.cols) {
      if (c != i) others.push_back(c);
    }
    for (int ji = 0; ji < 2; ++ji) {
      const int j = others[ji];
      const int k = others[1 - ji];
      for (bool sTop : {true, false}) {
        const std::vector<int>& sSide = sTop ? ctx.tops : ctx.bots;
        const std::vector<int>& oSide = sTop ? ctx.bots : ctx.tops;
        const auto Tij = block_of(ctx, sSide, i, j);
        const auto Bij = block_of(ctx, oSide, i, j);
        const auto Tik = block_of(ctx, sSide, i, k);
        const auto Bik = block_of(ctx, oSide, i, k);
        if (Tij.size() < Bik.size() || Bij.size() < Tik.size()) continue;
        if (Tik.empty() && Bik.empty()) continue;
        auto e2 = find_colour_edge(ctx, block_of(ctx, sSide, j, k),
                                   block_of(ctx, oSide, j, k), j);
        if (!e2) e2 = find_colour_edge(ctx, Tij, Bij, j);
        auto avoidLast = [&](const std::vector<int>& pool) {
          std::vector<int> front, back;
          for (int v : pool) {
            if (e2 && (v == e2->first || v == e2->second)) {
              back.push_back(v);
            } else {
              front.push_back(v);
            }
          }
          front.insert(front.end(), back.begin(), back.end());
          return front;
        };
        const std::vector<int> tijPool = avoidLast(Tij);
        const std::vector<int> bijPool = avoidLast(Bij);
        MonoPath P;
        if (Bik.empty()) {
          P = MonoPath{detail::interleave(Tik, bijPool), i};
        } else if (Tik.empty()) {
          P = MonoPath{detail::interleave(Bik, tijPool), i};
        } else {
          auto e1 = find_colour_edge(ctx, Tik, Bik, i);
          const bool inIK = e1.has_value();
          if (!e1) e1 = find_colour_edge(ctx, Tij, Bij, i);
          if (!e1) continue;
          const std::size_t m = Bik.size();
          const std::size_t q = Tik.size();
          std::vector<int> seq;
          if (inIK) {
            std::vector<int> bik;
            for (int v : Bik) {
              if (v != e1->second) bik.push_back(v);
            }
            for (std::size_t idx = 0; idx + 1 < m; ++idx) {
              seq.push_back(bik[idx]);
              seq.push_back(tijPool[idx]);
            }
            seq.push_back(e1->second);
            seq.push_back(e1->first);
            std::vector<int> tik;
            for (int v : Tik) {
              if (v != e1->first) tik.push_back(v);
            }
            for (std::size_t idx = 0; idx + 1 < q; ++idx) {
              seq.push_back(bijPool[idx]);
              seq.push_back(tik[idx]);
            }
          } else {
            std::vector<int> tij;
            for (int v : tijPool) {
              if (v != e1->first) tij.push_back(v);
            }
            std::vector<int> bij;
            for (int v : bijPool) {
              if (v != e1->second) bij.push_back(v);
            }
            for (std::size_t idx = 0; idx < m; ++idx) {
              seq.push_back(Bik[idx]);
              seq.push_back(idx + 1 < m ? tij[idx] : e1->first);
            }
            if (m == 0) seq.push_back(e1->first);
            seq.push_back(e1->second);
            for (std::size_t idx = 0; idx < q; ++idx) {
              seq.push_back(Tik[idx]);
              if (idx + 1 < q) seq.push_back(bij[idx]);
            }
          }
          P = MonoPath{seq, i};
        }
        const bool avoided =
            !e2 ||
            (std::find(P.vertices.begin(), P.vertices.end(), e2->first) ==
                 P.vertices.end() &&
             std::find(P.vertices.begin(), P.vertices.end(), e2->second) ==
                 P.vertices.end());
        if (avoided) {
          if (auto r = finish_connected_remainder(ctx, P, j)) return r;
        }
        if (auto r = finish_pair_remainder(ctx, P, j, k, sTop)) return r;
        if (auto r = finish_pair_remainder(ctx, P, j, k, !sTop)) return r;
      }
    }
  }
  return std::nullopt;
}

// Generic sweep: gather everything on one side that steps outside a colour
// pair, cover it through a common colour against a uniform pool, finish.
Finish case_pair_scan(const Ctx& ctx) {
  for (bool sTop : {true, false}) {
    const std::vector<int>& sSide = sTop ? ctx.tops : ctx.bots;
    const std::vector<int>& oSide = sTop ? ctx.bots : ctx.tops;
    for (std::size_t ai = 0; ai < ctx.cols.size(); ++ai) {
      for (std::size_t bi = ai + 1; bi < ctx.cols.size(); ++bi) {
        const int a = ctx.cols[ai];
        const int b = ctx.cols[bi];
        std::vector<int> X;
        for (int v : sSide) {
          if (!subset_of_pair(ctx.pal[v], a, b)) X.push_back(v);
        }
        if (X.empty()) {
          if (auto r = finish_pair_remainder(ctx, MonoPath{}, a, b, sTop)) {
            return r;
          }
          continue;
        }
        std::vector<int> common = ctx.pal[X[0]];
        for (int v : X) common = intersect_sorted(common, ctx.pal[v]);
        for (int c : common) {
          std::vector<int> pool;
          for (int u : oSide) {
            const bool uniform = std::all_of(
                X.begin(), X.end(),
                [&](int v) { return ctx.gs.colour(v, u) == c; });
            if (uniform) pool.push_back(u);
          }
          if (pool.size() >= X.size()) {
            MonoPath P{detail::interleave(X, pool), c};
            if (auto r = finish_pair_remainder(ctx, P, a, b, sTop)) return r;
          }
        }
      }
    }
  }
  return std::nullopt;
}

// Generic sweep: cover one palette block against a uniform pool and hope a
// colour keeps the remainder connected.
Finish case_block_scan(const Ctx& ctx) {
  for (bool sTop : {true, false}) {
    const std::vector<int>& sSide = sTop ? ctx.tops : ctx.bots;
    const std::vector<int>& oSide = sTop ? ctx.bots : ctx.tops;
    for (std::size_t ai = 0; ai < ctx.cols.size(); ++ai) {
      for (std::size_t bi = ai + 1; bi < ctx.cols.size(); ++bi) {
        const int a = ctx.cols[ai];
        const int b = ctx.cols[bi];
        const std::vector<int> X = block_of(ctx, sSide, a, b);
        if (X.empty()) continue;
        for (int c : {a, b}) {
          std::vector<int> pool;
          for (int u : oSide) {
            const bool uniform = std::all_of(
                X.begin(), X.end(),
                [&](int v) { return ctx.gs.colour(v, u) == c; });
            if (uniform) pool.push_back(u);
          }
          if (pool.size() < X.size()) continue;
          MonoPath P{detail::interleave(X, pool), c};
          for (int d : ctx.cols) {
            if (auto r = finish_connected_remainder(ctx, P, d)) return r;
          }
        }
      }
    }
  }
  return std::nullopt;
}

// Bounded sweep over every even monochromatic path, each followed by the two
// finisher patterns.
Finish case_path_search(const Ctx& ctx) {
  if (ctx.gs.host().vertex_count() > ctx.budget) return std::nullopt;
  if (auto r = try_case_finishers(ctx, MonoPath{})) return r;
  for (int c : ctx.cols) {
    for (const auto& comp : monochromatic_components(ctx.gs, c)) {
      if (static_cast<int>(comp.size()) > ctx.budget) continue;
      detail::ComponentDp d;
      d.run(ctx.gs, comp, c);
      const std::uint32_t full =
          (std::uint32_t{1} << comp.size()) - 1;
      for (std::uint32_t mask = 1; mask <= full; ++mask) {
        if (d.dp[mask] == 0) continue;
        const int pc = std::popcount(mask);
        if (pc < 2 || pc % 2 != 0) continue;
        MonoPath P{d.witness(mask, std::countr_zero(d.dp[mask])), c};
        if (auto r = try_case_finishers(ctx, P)) return r;
      }
    }
  }
  return std::nullopt;
}

// Four palette blocks on one side, paired colours: an even path in the
// bigger-pooled colour of the smaller pair block covers that block, leaving
// the side inside the other pair.
std::vector<MonoPath> four_colour_case(const Ctx& ctx,
                                       const StructureReport& rep) {
  const auto& r = rep.roleColour;
  const bool xTop = !rep.sideSwapped;
  const std::vector<int>& xSide = xTop ? ctx.tops : ctx.bots;
  const std::vector<int>& oSide = xTop ? ctx.bots : ctx.tops;
  const auto T01 = block_of(ctx, xSide, r[0], r[1]);
  const auto T23 = block_of(ctx, xSide, r[2], r[3]);
  int a, b, c, d;
  std::vector<int> Tp;
  if (T01.size() <= T23.size()) {
    a = r[0]; b = r[1]; c = r[2]; d = r[3];
    Tp = T01;
  } else {
    a = r[2]; b = r[3]; c = r[0]; d = r[1];
    Tp = T23;
  }
  auto poolOf = [&](int col) {
    std::vector<int> out;
    for (int u : oSide) {
      if (sees(ctx.pal[u], col)) out.push_back(u);
    }
    return out;
  };
  const auto pa = poolOf(a);
  const auto pb = poolOf(b);
  const int sigma = (pa.size() >= pb.size()) ? a : b;
  const auto& pool = (pa.size() >= pb.size()) ? pa : pb;
  MonoPath P{detail::interleave(Tp, pool), sigma};
  auto res = finish_pair_remainder(ctx, P, c, d, xTop);
  if (!res) {
    fail("StructureViolation", "four-colour construction failed to finish");
  }
  return *res;
}

struct EngineOut {
  std::vector<MonoPath> paths;
  std::string caseName;
  bool fallback = false;
};

EngineOut run_engine(const Ctx& ctx) {
  if (ctx.cols.size() <= 2) {
    TwoColourOutcome oc = two_colour_partition(ctx.gs, ctx.budget);
    if (auto* tp = std::get_if<TwoPathsResult>(&oc)) {
      EngineOut out;
      out.caseName = "two-colour";
      if (!tp->first.empty()) out.paths.push_back(tp->first);
      if (!tp->second.empty()) out.paths.push_back(tp->second);
      return out;
    }
    return {split_three_paths(ctx.gs, std::get<SplitWitness>(oc)).paths,
            "split", false};
  }
  const StructureReport rep = classify_2local(ctx.gs);
  if (rep.shape == Shape::FourColour) {
    return {four_colour_case(ctx, rep), "four-colour", false};
  }
  if (auto r = case_lone_vertex(ctx)) return {*r, "lone-colour-vertex", false};
  if (auto r = case_complete_class(ctx)) return {*r, "complete-class", false};
  if (auto r = case_disconnected_class(ctx)) {
    return {*r, "disconnected-class", false};
  }
  if (auto r = case_vanishing_blocks(ctx)) {
    return {*r, "vanishing-blocks", false};
  }
  if (auto r = case_double_bridge(ctx)) {
    return {*r, "double-cover-bridge", false};
  }
  if (auto r = case_guarded_bridge(ctx)) return {*r, "guarded-bridge", false};
  if (auto r = case_pair_scan(ctx)) return {*r, "pair-scan", false};
  if (auto r = case_block_scan(ctx)) return {*r, "block-scan", false};
  if (auto r = case_path_search(ctx)) return {*r, "path-search", false};
  const PathPartitionResult res = min_mono_path_partition(ctx.gs, ctx.budget);
  if (res.count > 3) {
    fail("StructureViolation",
         "no partition into three monochromatic paths exists");
  }
  return {res.certificate.paths, "exact-fallback", true};
}

}  // namespace

PartitionTrace partition_2local_bipartite(const ColouredGraph& g,
                                          int searchBudget) {
  const Host& h = g.host();
  if (h.kind() != HostKind::Bipartite || h.top_size() != h.bottom_size()) {
    fail("NotBalancedBipartite",
         "path partition needs a balanced bipartite host");
  }
  validate(g);
  if (locality(g) > 2) {
    fail("NotTwoLocal", "path partition needs a 2-local colouring");
  }
  PartitionTrace tr;
  if (h.vertex_count() == 0) {
    tr.engineCase = "empty";
    return tr;
  }
  const SimplifyResult sr = simplify(g);
  const ColouredGraph& gs = sr.graph;
  Ctx ctx{gs,
          searchBudget,
          top_vertices(gs.host()),
          bottom_vertices(gs.host()),
          {},
          gs.colours_used()};
  ctx.pal.reserve(h.vertex_count());
  for (int v = 0; v < h.vertex_count(); ++v) ctx.pal.push_back(gs.palette(v));
  EngineOut out = run_engine(ctx);
  for (MonoPath& p : out.paths) {
    if (p.length() >= 2) p.colour = g.colour(p.vertices[0], p.vertices[1]);
  }
  tr.certificate.paths = std::move(out.paths);
  tr.engineCase = std::move(out.caseName);
  tr.fallbackUsed = out.fallback;
  if (tr.certificate.paths.size() > 3 ||
      !verify_path_partition(g, tr.certificate)) {
    fail("StructureViolation",
         "internal: engine certificate failed verification");
  }
  return tr;
}

}  // namespace locol

#include "locol/paths.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

#include "mask_dp.hpp"

namespace locol {

using detail::AnchoredDp;
using detail::ComponentDp;
using detail::interleave;

namespace {

// Invariant checked: consecutive vertices joined by an edge of exactly c.
bool path_edges_ok(const ColouredGraph& g, const std::vector<int>& vs, int c) {
  for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
    if (g.colour(vs[i], vs[i + 1]) != c) return false;
  }
  return true;
}

bool covers_exactly_once(const ColouredGraph& g,
                         const std::vector<const std::vector<int>*>& parts) {
  const int n = g.host().vertex_count();
  std::vector<char> seen(n, 0);
  for (const auto* p : parts) {
    for (int v : *p) {
      if (v < 0 || v >= n || seen[v]) return false;
      seen[v] = 1;
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](char s) { return s == 1; });
}

}  // namespace

bool verify_path_partition(const ColouredGraph& g,
                           const PathPartitionCertificate& cert) {
  std::vector<const std::vector<int>*> parts;
  for (const auto& p : cert.paths) {
    if (p.empty()) return false;
    if (p.length() >= 2) {
      if (p.colour < 0) return false;
      if (!path_edges_ok(g, p.vertices, p.colour)) return false;
    }
    parts.push_back(&p.vertices);
  }
  return covers_exactly_once(g, parts);
}

bool verify_cycle_partition(const ColouredGraph& g,
                            const CyclePartitionCertificate& cert) {
  std::vector<const std::vector<int>*> parts;
  for (const auto& c : cert.cycles) {
    if (c.empty()) return false;
    if (c.length() >= 2) {
      if (c.colour < 0) return false;
      if (!path_edges_ok(g, c.vertices, c.colour)) return false;
      if (c.length() >= 3 &&
          g.colour(c.vertices.back(), c.vertices.front()) != c.colour) {
        return false;
      }
    }
    parts.push_back(&c.vertices);
  }
  return covers_exactly_once(g, parts);
}

PathPartitionCertificate cycles_to_paths(const CyclePartitionCertificate& cert) {
  PathPartitionCertificate out;
  for (const auto& c : cert.cycles) out.paths.push_back(c);
  return out;
}

LongestPathResult longest_path_in_colour(const ColouredGraph& g, int colour,
                                         int componentBudget) {
  LongestPathResult best;
  const auto comps = monochromatic_components(g, colour);
  for (const auto& comp : comps) {
    const int k = static_cast<int>(comp.size());
    if (k > componentBudget) {
      fail("BudgetExceeded",
           "colour class component has " + std::to_string(k) +
               " vertices, budget " + std::to_string(componentBudget));
    }
    if (k <= best.length) continue;
    ComponentDp d;
    d.run(g, comp, colour);
    const std::uint32_t full = (std::uint32_t{1} << k) - 1;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
      if (d.dp[mask] == 0) continue;
      const int size = std::popcount(mask);
      if (size <= best.length) continue;
      const int last = std::countr_zero(d.dp[mask]);
      best.length = size;
      best.path = MonoPath{d.witness(mask, last), colour};
    }
  }
  return best;
}

LongestPathResult longest_mono_path(const ColouredGraph& g,
                                    int componentBudget) {
  const int n = g.host().vertex_count();
  LongestPathResult best;
  if (n == 0) return best;
  best.length = 1;
  best.path = MonoPath{{0}, ColouredGraph::kNoColour};
  for (int c : g.colours_used()) {
    LongestPathResult cur = longest_path_in_colour(g, c, componentBudget);
    if (cur.length > best.length) best = cur;
  }
  return best;
}

namespace {

// Shared mask machinery for the exact partition solvers: which vertex sets
// carry a monochromatic path (or cycle), plus enough provenance to rebuild a
// witness afterwards.
struct CoverTables {
  int n = 0;
  std::vector<char> ok;          // mask admits a part
  std::vector<int> partColour;   // colour used (kNoColour for singletons)
  std::vector<std::vector<int>> witness;
};

void mark(CoverTables& t, std::uint32_t mask, int colour,
          std::vector<int> w) {
  if (t.ok[mask]) return;
  t.ok[mask] = 1;
  t.partColour[mask] = colour;
  t.witness[mask] = std::move(w);
}

CoverTables pathable_table(const ColouredGraph& g) {
  const int n = g.host().vertex_count();
  CoverTables t;
  t.n = n;
  t.ok.assign(std::size_t{1} << n, 0);
  t.partColour.assign(std::size_t{1} << n, ColouredGraph::kNoColour);
  t.witness.resize(std::size_t{1} << n);
  for (int v = 0; v < n; ++v) {
    mark(t, std::uint32_t{1} << v, ColouredGraph::kNoColour, {v});
  }
  for (int c : g.colours_used()) {
    for (const auto& comp : monochromatic_components(g, c)) {
      const int k = static_cast<int>(comp.size());
      if (k < 2) continue;
      ComponentDp d;
      d.run(g, comp, c);
      const std::uint32_t full = (std::uint32_t{1} << k) - 1;
      for (std::uint32_t mask = 1; mask <= full; ++mask) {
        if (d.dp[mask] == 0 || std::popcount(mask) < 2) continue;
        std::uint32_t global = 0;
        std::uint32_t rest = mask;
        while (rest != 0) {
          const int i = std::countr_zero(rest);
          rest &= rest - 1;
          global |= std::uint32_t{1} << comp[i];
        }
        if (t.ok[global]) continue;
        const int last = std::countr_zero(d.dp[mask]);
        mark(t, global, c, d.witness(mask, last));
      }
    }
  }
  return t;
}

CoverTables cyclable_table(const ColouredGraph& g) {
  const int n = g.host().vertex_count();
  CoverTables t;
  t.n = n;
  t.ok.assign(std::size_t{1} << n, 0);
  t.partColour.assign(std::size_t{1} << n, ColouredGraph::kNoColour);
  t.witness.resize(std::size_t{1} << n);
  for (int v = 0; v < n; ++v) {
    mark(t, std::uint32_t{1} << v, ColouredGraph::kNoColour, {v});
  }
  g.for_each_edge([&](int u, int v, int c) {
    mark(t, (std::uint32_t{1} << u) | (std::uint32_t{1} << v), c, {u, v});
  });
  for (int c : g.colours_used()) {
    for (const auto& comp : monochromatic_components(g, c)) {
      const int k = static_cast<int>(comp.size());
      if (k < 3) continue;
      AnchoredDp d;
      d.run(g, comp, c);
      const std::uint32_t full = (std::uint32_t{1} << k) - 1;
      for (std::uint32_t mask = 1; mask <= full; ++mask) {
        if (std::popcount(mask) < 3) continue;
        const int low = std::countr_zero(mask);
        const std::uint32_t closers =
            d.dp[mask] & d.adj[low] & ~(std::uint32_t{1} << low);
        if (closers == 0) continue;
        std::uint32_t global = 0;
        std::uint32_t rest = mask;
        while (rest != 0) {
          const int i = std::countr_zero(rest);
          rest &= rest - 1;
          global |= std::uint32_t{1} << comp[i];
        }
        if (t.ok[global]) continue;
        mark(t, global, c, d.witness(mask, std::countr_zero(closers)));
      }
    }
  }
  return t;
}

// Minimum number of parts from a table of allowed parts; every part chosen
// contains the lowest uncovered vertex, covering the whole mask exactly.
struct CoverDp {
  std::vector<int> f;
  std::vector<std::uint32_t> choice;

  void run(const CoverTables& t) {
    const std::uint32_t full =
        (t.n == 0) ? 0 : ((std::uint32_t{1} << t.n) - 1);
    f.assign(std::size_t{full} + 1, t.n + 1);
    choice.assign(std::size_t{full} + 1, 0);
    f[0] = 0;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
      const std::uint32_t low = mask & (~mask + 1);
      for (std::uint32_t sub = mask; sub != 0; sub = (sub - 1) & mask) {
        if ((sub & low) == 0 || !t.ok[sub]) continue;
        const int cand = f[mask ^ sub] + 1;
        if (cand < f[mask]) {
          f[mask] = cand;
          choice[mask] = sub;
        }
      }
    }
  }

  std::vector<std::uint32_t> pieces(std::uint32_t mask) const {
    std::vector<std::uint32_t> out;
    while (mask != 0) {
      out.push_back(choice[mask]);
      mask ^= choice[mask];
    }
    return out;
  }
};

}  // namespace

PathPartitionResult min_mono_path_partition(const ColouredGraph& g,
                                            int vertexBudget) {
  const int n = g.host().vertex_count();
  if (n > vertexBudget) {
    fail("BudgetExceeded", "graph has " + std::to_string(n) +
                               " vertices, budget " +
                               std::to_string(vertexBudget));
  }
  PathPartitionResult res;
  if (n == 0) return res;
  validate(g);
  const CoverTables t = pathable_table(g);
  CoverDp dp;
  dp.run(t);
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  res.count = dp.f[full];
  for (std::uint32_t piece : dp.pieces(full)) {
    res.certificate.paths.push_back(
        MonoPath{t.witness[piece], t.partColour[piece]});
  }
  return res;
}

CyclePartitionResult min_mono_cycle_partition(const ColouredGraph& g,
                                              int vertexBudget) {
  const int n = g.host().vertex_count();
  if (n > vertexBudget) {
    fail("BudgetExceeded", "graph has " + std::to_string(n) +
                               " vertices, budget " +
                               std::to_string(vertexBudget));
  }
  CyclePartitionResult res;
  if (n == 0) return res;
  validate(g);
  const CoverTables t = cyclable_table(g);
  CoverDp dp;
  dp.run(t);
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  res.count = dp.f[full];
  for (std::uint32_t piece : dp.pieces(full)) {
    res.certificate.cycles.push_back(
        MonoPath{t.witness[piece], t.partColour[piece]});
  }
  return res;
}

namespace {

MonoPath hamilton_block(const std::vector<int>& xs, const std::vector<int>& ys,
                        int colour) {
  return MonoPath{interleave(xs, ys), colour};
}

// Two-path cover of a degenerate split shape: with an empty part the two
// same-coloured blocks that remain line up side by side.
TwoPathsResult degenerate_two_paths(const SplitWitness& w) {
  const auto &T1 = w.top1, &T2 = w.top2, &B1 = w.bot1, &B2 = w.bot2;
  auto take = [](const std::vector<int>& v, std::size_t from,
                 std::size_t count) {
    return std::vector<int>(v.begin() + from, v.begin() + from + count);
  };
  TwoPathsResult r;
  if (T2.empty() && B2.empty()) {
    if (!T1.empty()) r.first = hamilton_block(T1, B1, w.colourDiag);
    return r;
  }
  if (T1.empty() && B1.empty()) {
    if (!T2.empty()) r.first = hamilton_block(T2, B2, w.colourDiag);
    return r;
  }
  if (T1.empty() && B2.empty()) {
    if (!T2.empty()) r.first = hamilton_block(T2, B1, w.colourOff);
    return r;
  }
  if (T2.empty() && B1.empty()) {
    if (!T1.empty()) r.first = hamilton_block(T1, B2, w.colourOff);
    return r;
  }
  if (B2.empty()) {
    r.first = hamilton_block(T1, take(B1, 0, T1.size()), w.colourDiag);
    r.second = hamilton_block(T2, take(B1, T1.size(), T2.size()), w.colourOff);
    return r;
  }
  if (B1.empty()) {
    r.first = hamilton_block(T1, take(B2, 0, T1.size()), w.colourOff);
    r.second = hamilton_block(T2, take(B2, T1.size(), T2.size()), w.colourDiag);
    return r;
  }
  if (T2.empty()) {
    r.first = hamilton_block(B1, take(T1, 0, B1.size()), w.colourDiag);
    r.second = hamilton_block(B2, take(T1, B1.size(), B2.size()), w.colourOff);
    return r;
  }
  // T1 empty, everything else non-empty.
  r.first = hamilton_block(B1, take(T2, 0, B1.size()), w.colourOff);
  r.second = hamilton_block(B2, take(T2, B1.size(), B2.size()), w.colourDiag);
  return r;
}

}  // namespace

PathPartitionCertificate split_three_paths(const ColouredGraph& g,
                                           const SplitWitness& w) {
  if (!verify_split_witness(g, w)) {
    fail("PreconditionViolated", "split witness does not verify");
  }
  if (w.degenerate()) {
    fail("PreconditionViolated", "split witness is degenerate");
  }
  std::vector<int> T1 = w.top1, T2 = w.top2, B1 = w.bot1, B2 = w.bot2;
  // Normalise so the first block has the top surplus; swapping both pairs
  // keeps the block colours.
  if (T1.size() < B1.size()) {
    std::swap(T1, T2);
    std::swap(B1, B2);
  }
  const std::size_t d = T1.size() - B1.size();
  auto prefix = [](const std::vector<int>& v, std::size_t count) {
    return std::vector<int>(v.begin(), v.begin() + count);
  };
  auto suffix = [](const std::vector<int>& v, std::size_t from) {
    return std::vector<int>(v.begin() + from, v.end());
  };
  PathPartitionCertificate cert;
  cert.paths.push_back(
      MonoPath{interleave(prefix(T1, B1.size()), B1), w.colourDiag});
  cert.paths.push_back(
      MonoPath{interleave(T2, prefix(B2, T2.size())), w.colourDiag});
  if (d > 0) {
    cert.paths.push_back(MonoPath{
        interleave(suffix(T1, B1.size()), suffix(B2, T2.size())), w.colourOff});
  }
  return cert;
}

namespace {

// Exact search over vertex subsets: one colour's path on a mask, the other
// colour's path on the complement.
std::optional<TwoPathsResult> two_path_search(const ColouredGraph& g) {
  const int n = g.host().vertex_count();
  const auto cols = g.colours_used();
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  // Per-colour pathable masks over the whole vertex range.
  struct ColourDp {
    std::vector<char> ok;
    std::vector<int> lastOf;
    ComponentDp d;
  };
  std::vector<ColourDp> byColour(cols.size());
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  for (std::size_t ci = 0; ci < cols.size(); ++ci) {
    auto& cd = byColour[ci];
    cd.d.run(g, all, cols[ci]);
    cd.ok.assign(std::size_t{full} + 1, 0);
    cd.lastOf.assign(std::size_t{full} + 1, -1);
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
      if (cd.d.dp[mask] != 0) {
        cd.ok[mask] = 1;
        cd.lastOf[mask] = std::countr_zero(cd.d.dp[mask]);
      }
    }
  }
  auto build = [&](std::size_t ci, std::uint32_t mask) {
    return MonoPath{byColour[ci].d.witness(mask, byColour[ci].lastOf[mask]),
                    cols[ci]};
  };
  // A single path covering everything (partner path empty, other colour).
  for (std::size_t ci = 0; ci < cols.size(); ++ci) {
    if (byColour[ci].ok[full]) {
      TwoPathsResult r;
      r.first = build(ci, full);
      return r;
    }
  }
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    for (std::size_t ci = 0; ci < cols.size(); ++ci) {
      for (std::size_t cj = 0; cj < cols.size(); ++cj) {
        if (ci == cj) continue;
        if (byColour[ci].ok[mask] && byColour[cj].ok[full & ~mask]) {
          TwoPathsResult r;
          r.first = build(ci, mask);
          r.second = build(cj, full & ~mask);
          return r;
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

TwoColourOutcome two_colour_partition(const ColouredGraph& g,
                                      int searchBudget) {
  const Host& h = g.host();
  if (h.kind() != HostKind::Bipartite || h.top_size() != h.bottom_size()) {
    fail("NotBalancedBipartite", "two-colour partition needs K_{n,n}");
  }
  validate(g);
  const auto cols = g.colours_used();
  if (cols.size() > 2) {
    fail("TooManyColours", "two-colour partition got " +
                               std::to_string(cols.size()) + " colours");
  }
  if (h.vertex_count() == 0) return TwoPathsResult{};
  SplitOutcome so = detect_split(g);
  if (auto* w = std::get_if<SplitWitness>(&so)) {
    if (!w->degenerate()) return *w;
    return degenerate_two_paths(*w);
  }
  if (h.vertex_count() > searchBudget) {
    fail("BudgetExceeded", "two-colour search over " +
                               std::to_string(h.vertex_count()) +
                               " vertices, budget " +
                               std::to_string(searchBudget));
  }
  auto found = two_path_search(g);
  if (!found) {
    fail("StructureViolation", "two-colour dichotomy failed: no split and no "
                               "two-path cover");
  }
  // Trivial paths carry no edge; give them the colour their partner does not
  // use so the pair stays distinct.
  auto fixTrivial = [&](MonoPath& p, const MonoPath& other) {
    if (p.length() == 1 && cols.size() == 2) {
      p.colour = (other.colour == cols[0]) ? cols[1] : cols[0];
    }
  };
  fixTrivial(found->first, found->second);
  fixTrivial(found->second, found->first);
  return *found;
}

}  // namespace locol

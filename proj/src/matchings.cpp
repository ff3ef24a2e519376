#include "locol/matchings.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <numeric>
#include <string>

namespace locol {

namespace {

// Maximum matching by blossom contraction, O(n^3). Vertices are local
// indices; adj holds sorted neighbour lists.
struct BlossomMatcher {
  int n;
  const std::vector<std::vector<int>>& adj;
  std::vector<int> match, parent, base;
  std::vector<char> used, flower;

  explicit BlossomMatcher(const std::vector<std::vector<int>>& a)
      : n(static_cast<int>(a.size())),
        adj(a),
        match(n, -1),
        parent(n, -1),
        base(n, 0),
        used(n, 0),
        flower(n, 0) {}

  int lowest_common_base(int a, int b) {
    std::vector<char> seen(n, 0);
    for (;;) {
      a = base[a];
      seen[a] = 1;
      if (match[a] == -1) break;
      a = parent[match[a]];
    }
    for (;;) {
      b = base[b];
      if (seen[b]) return b;
      b = parent[match[b]];
    }
  }

  void mark_path(int v, int stem, int child) {
    while (base[v] != stem) {
      flower[base[v]] = 1;
      flower[base[match[v]]] = 1;
      parent[v] = child;
      child = match[v];
      v = parent[match[v]];
    }
  }

  bool augment_from(int root) {
    std::fill(used.begin(), used.end(), 0);
    std::fill(parent.begin(), parent.end(), -1);
    std::iota(base.begin(), base.end(), 0);
    used[root] = 1;
    std::vector<int> queue{root};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int v = queue[qi];
      for (int to : adj[v]) {
        if (base[v] == base[to] || match[v] == to) continue;
        if (to == root || (match[to] != -1 && parent[match[to]] != -1)) {
          int stem = lowest_common_base(v, to);
          std::fill(flower.begin(), flower.end(), 0);
          mark_path(v, stem, to);
          mark_path(to, stem, v);
          for (int i = 0; i < n; ++i) {
            if (!flower[base[i]]) continue;
            base[i] = stem;
            if (!used[i]) {
              used[i] = 1;
              queue.push_back(i);
            }
          }
        } else if (parent[to] == -1) {
          parent[to] = v;
          if (match[to] == -1) {
            for (int u = to; u != -1;) {
              int pv = parent[u];
              int next = match[pv];
              match[u] = pv;
              match[pv] = u;
              u = next;
            }
            return true;
          }
          used[match[to]] = 1;
          queue.push_back(match[to]);
        }
      }
    }
    return false;
  }

  void run() {
    for (int v = 0; v < n; ++v)
      if (match[v] == -1) augment_from(v);
  }
};

// Bipartite maximum matching by alternating-path augmentation. adj maps left
// indices to right indices.
struct AlternatingMatcher {
  const std::vector<std::vector<int>>& adj;
  std::vector<int> matchLeft, matchRight;
  std::vector<char> visited;

  AlternatingMatcher(int rights, const std::vector<std::vector<int>>& a)
      : adj(a),
        matchLeft(a.size(), -1),
        matchRight(rights, -1),
        visited(rights, 0) {}

  bool augment(int v) {
    for (int to : adj[v]) {
      if (visited[to]) continue;
      visited[to] = 1;
      if (matchRight[to] == -1 || augment(matchRight[to])) {
        matchLeft[v] = to;
        matchRight[to] = v;
        return true;
      }
    }
    return false;
  }

  void run() {
    for (std::size_t v = 0; v < adj.size(); ++v) {
      std::fill(visited.begin(), visited.end(), 0);
      augment(static_cast<int>(v));
    }
  }
};

std::vector<int> sorted_unique(std::vector<int> xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

const std::vector<int>* component_containing(
    const std::vector<std::vector<int>>& comps, int v) {
  for (const auto& comp : comps)
    if (std::binary_search(comp.begin(), comp.end(), v)) return &comp;
  return nullptr;
}

long long host_edge_capacity(const ColouredGraph& g) {
  if (g.host().kind() == HostKind::Bipartite)
    return static_cast<long long>(g.host().top_size()) * g.host().bottom_size();
  return static_cast<long long>(g.n()) * g.n();
}

// Sorted colour -> remaining edge count table.
std::map<int, long long> colour_counts(const ColouredGraph& g) {
  std::map<int, long long> counts;
  g.for_each_edge([&](int, int, int c) { ++counts[c]; });
  return counts;
}

std::map<int, long long>::const_iterator densest_entry(
    const std::map<int, long long>& counts) {
  auto best = counts.begin();
  for (auto it = counts.begin(); it != counts.end(); ++it)
    if (it->second > best->second) best = it;
  return best;
}

MatchingCoverReport cover_rounds(const ColouredGraph& g, int r, int budget,
                                 bool bipartite) {
  validate(g);
  if (locality(g) > r)
    fail("NotRLocal", "graph is " + std::to_string(locality(g)) +
                          "-local, declared bound is " + std::to_string(r));
  MatchingCoverReport report;
  report.budget = budget;
  ColouredGraph current = g;
  std::vector<int> toOriginal(g.n());
  std::iota(toOriginal.begin(), toOriginal.end(), 0);
  while (current.n() > 0) {
    int k = locality(current);
    report.roundLocality.push_back(k);
    if (k == 0) {
      for (int i = 0; i < current.n(); ++i) {
        ConnectedMatching trivial;
        trivial.component = {toOriginal[i]};
        report.cover.matchings.push_back(std::move(trivial));
        ++report.trivialCount;
      }
      break;
    }
    auto components = bipartite ? component_cover_bipartite(current)
                                : component_cover_complete(current);
    ExtractionResult extracted = extract_matchings(current, components);
    for (ConnectedMatching& m : extracted.cover.matchings) {
      for (auto& [a, b] : m.edges) {
        a = toOriginal[a];
        b = toOriginal[b];
        if (a > b) std::swap(a, b);
      }
      std::sort(m.edges.begin(), m.edges.end());
      for (int& v : m.component) v = toOriginal[v];
      std::sort(m.component.begin(), m.component.end());
      if (!m.edges.empty()) ++report.edgedCount;
      report.cover.matchings.push_back(std::move(m));
    }
    std::vector<int> nextToOriginal(extracted.residual.toParent.size());
    for (std::size_t i = 0; i < nextToOriginal.size(); ++i)
      nextToOriginal[i] = toOriginal[extracted.residual.toParent[i]];
    toOriginal = std::move(nextToOriginal);
    current = std::move(extracted.residual.graph);
  }
  if (report.edgedCount > report.budget)
    fail("StructureViolation", "matching cover used " +
                                   std::to_string(report.edgedCount) +
                                   " edged matchings, budget " +
                                   std::to_string(report.budget));
  if (!verify_matching_cover(g, report.cover))
    fail("StructureViolation", "matching cover failed verification");
  return report;
}

}  // namespace

Rational make_rational(long long num, long long den) {
  if (den == 0) fail("PreconditionViolated", "rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return {num, den};
}

int rational_cmp(const Rational& a, const Rational& b) {
  __int128 lhs = static_cast<__int128>(a.num) * b.den;
  __int128 rhs = static_cast<__int128>(b.num) * a.den;
  if (lhs < rhs) return -1;
  return lhs > rhs ? 1 : 0;
}

std::string to_string(const Rational& r) {
  if (r.den == 1) return std::to_string(r.num);
  return std::to_string(r.num) + "/" + std::to_string(r.den);
}

Rational parse_rational(const std::string& text) {
  auto parseInt = [](const std::string& s) -> long long {
    if (s.empty()) fail("ParseError", "empty number in rational");
    std::size_t pos = 0;
    long long value = 0;
    try {
      value = std::stoll(s, &pos);
    } catch (const std::exception&) {
      fail("ParseError", "bad number in rational: " + s);
    }
    if (pos != s.size()) fail("ParseError", "bad number in rational: " + s);
    return value;
  };
  std::string s = text;
  s.erase(std::remove_if(s.begin(), s.end(),
                         [](unsigned char c) { return std::isspace(c); }),
          s.end());
  if (s.empty()) fail("ParseError", "empty rational");
  if (auto slash = s.find('/'); slash != std::string::npos) {
    long long num = parseInt(s.substr(0, slash));
    long long den = parseInt(s.substr(slash + 1));
    if (den == 0) fail("ParseError", "zero denominator: " + text);
    return make_rational(num, den);
  }
  if (auto dot = s.find('.'); dot != std::string::npos) {
    bool negative = !s.empty() && s[0] == '-';
    std::string head = s.substr(0, dot);
    std::string tail = s.substr(dot + 1);
    if (tail.size() > 15) fail("ParseError", "decimal too long: " + text);
    if (tail.empty()) return make_rational(parseInt(head), 1);
    if (head.empty() || head == "-" || head == "+") head += "0";
    long long whole = parseInt(head);
    long long frac = parseInt(tail);
    if (frac < 0) fail("ParseError", "bad decimal: " + text);
    long long den = 1;
    for (std::size_t i = 0; i < tail.size(); ++i) den *= 10;
    long long mag = (whole < 0 ? -whole : whole) * den + frac;
    return make_rational(negative ? -mag : mag, den);
  }
  return make_rational(parseInt(s), 1);
}

std::vector<int> covered_vertices(const ConnectedMatching& m) {
  if (m.edges.empty())
    return m.component.size() == 1 ? m.component : std::vector<int>{};
  std::vector<int> out;
  out.reserve(m.edges.size() * 2);
  for (const auto& [u, v] : m.edges) {
    out.push_back(u);
    out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool verify_matching_cover(const ColouredGraph& g, const MatchingCover& cover) {
  const int n = g.n();
  std::vector<char> seen(n, 0);
  for (const ConnectedMatching& m : cover.matchings) {
    std::vector<char> inComponent(n, 0);
    for (int v : m.component) {
      if (v < 0 || v >= n) return false;
      inComponent[v] = 1;
    }
    if (!m.edges.empty()) {
      if (m.colour < 0) return false;
      if (!connected_in_colour(g, m.component, m.colour)) return false;
      std::vector<char> endpoint(n, 0);
      for (const auto& [u, v] : m.edges) {
        if (u < 0 || v < 0 || u >= n || v >= n) return false;
        if (g.colour(u, v) != m.colour) return false;
        if (endpoint[u] || endpoint[v]) return false;
        endpoint[u] = endpoint[v] = 1;
        if (!inComponent[u] || !inComponent[v]) return false;
      }
    } else if (m.colour >= 0 &&
               !connected_in_colour(g, m.component, m.colour)) {
      return false;
    }
    for (int v : covered_vertices(m)) {
      if (seen[v]) return false;
      seen[v] = 1;
    }
  }
  std::vector<int> residual;
  for (int v = 0; v < n; ++v)
    if (!seen[v]) residual.push_back(v);
  return residual == cover.residual;
}

ConnectedMatching max_matching_in_component(const ColouredGraph& g, int c,
                                            const std::vector<int>& comp,
                                            const std::vector<int>& forbidden) {
  std::vector<char> banned(g.n(), 0);
  for (int v : forbidden)
    if (v >= 0 && v < g.n()) banned[v] = 1;
  std::vector<int> pool;
  for (int v : sorted_unique(comp))
    if (v >= 0 && v < g.n() && !banned[v]) pool.push_back(v);

  ConnectedMatching out;
  out.colour = c;
  out.component = sorted_unique(comp);

  const int s = static_cast<int>(pool.size());
  if (g.host().kind() == HostKind::Bipartite) {
    std::vector<int> lefts, rights;
    for (int v : pool) (g.host().is_top(v) ? lefts : rights).push_back(v);
    std::vector<std::vector<int>> adj(lefts.size());
    for (std::size_t i = 0; i < lefts.size(); ++i)
      for (std::size_t j = 0; j < rights.size(); ++j)
        if (g.colour(lefts[i], rights[j]) == c)
          adj[i].push_back(static_cast<int>(j));
    AlternatingMatcher matcher(static_cast<int>(rights.size()), adj);
    matcher.run();
    for (std::size_t i = 0; i < lefts.size(); ++i)
      if (matcher.matchLeft[i] != -1)
        out.edges.emplace_back(std::min(lefts[i], rights[matcher.matchLeft[i]]),
                               std::max(lefts[i], rights[matcher.matchLeft[i]]));
  } else {
    std::vector<std::vector<int>> adj(s);
    for (int i = 0; i < s; ++i)
      for (int j = i + 1; j < s; ++j)
        if (g.colour(pool[i], pool[j]) == c) {
          adj[i].push_back(j);
          adj[j].push_back(i);
        }
    BlossomMatcher matcher(adj);
    matcher.run();
    for (int i = 0; i < s; ++i)
      if (matcher.match[i] > i)
        out.edges.emplace_back(pool[i], pool[matcher.match[i]]);
  }
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

ExtractionResult extract_matchings(
    const ColouredGraph& g,
    const std::vector<std::pair<int, std::vector<int>>>& components) {
  validate(g);
  const int n = g.n();
  std::vector<char> listed(n, 0);
  for (const auto& [c, vertices] : components) {
    (void)c;
    for (int v : vertices) {
      if (v < 0 || v >= n)
        fail("PreconditionViolated", "component vertex out of range");
      listed[v] = 1;
    }
  }
  for (int v = 0; v < n; ++v)
    if (!listed[v])
      fail("ComponentsDoNotCover",
           "vertex " + std::to_string(v) + " lies in no listed component");
  for (const auto& [c, vertices] : components) {
    auto genuine = monochromatic_components(g, c);
    std::vector<int> sorted = sorted_unique(vertices);
    if (std::find(genuine.begin(), genuine.end(), sorted) == genuine.end())
      fail("PreconditionViolated",
           "listed set is not a colour-" + std::to_string(c) + " component");
  }

  const int k = locality(g);
  std::vector<int> matchedList;
  std::vector<char> matched(n, 0);
  ExtractionResult result;
  for (const auto& [c, vertices] : components) {
    ConnectedMatching m = max_matching_in_component(g, c, vertices, matchedList);
    for (const auto& [u, v] : m.edges) {
      matched[u] = matched[v] = 1;
      matchedList.push_back(u);
      matchedList.push_back(v);
    }
    result.cover.matchings.push_back(std::move(m));
  }
  for (int v = 0; v < n; ++v)
    if (!matched[v]) result.cover.residual.push_back(v);
  result.residual = restrict_to(g, result.cover.residual);
  if (!result.cover.residual.empty() && locality(result.residual.graph) > k - 1)
    fail("StructureViolation",
         "extraction left a vertex seeing its full palette");
  return result;
}

std::vector<std::pair<int, std::vector<int>>> component_cover_complete(
    const ColouredGraph& g) {
  if (g.host().kind() != HostKind::Complete)
    fail("PreconditionViolated", "complete host required");
  if (g.n() == 0) fail("EmptyGraph", "cover needs at least one vertex");
  validate(g);
  std::vector<std::pair<int, std::vector<int>>> cover;
  for (int c : g.palette(0)) {
    auto comps = monochromatic_components(g, c);
    cover.emplace_back(c, *component_containing(comps, 0));
  }
  return cover;
}

std::vector<std::pair<int, std::vector<int>>> component_cover_bipartite(
    const ColouredGraph& g) {
  if (g.host().kind() != HostKind::Bipartite)
    fail("PreconditionViolated", "bipartite host required");
  if (g.host().top_size() == 0 || g.host().bottom_size() == 0)
    fail("NoEdges", "cover needs at least one edge");
  validate(g);
  const int u = 0;
  const int v = g.host().top_size();
  const int shared = g.colour(u, v);
  std::vector<std::pair<int, std::vector<int>>> cover;
  auto add = [&](int c, int anchor) {
    auto comps = monochromatic_components(g, c);
    std::pair<int, std::vector<int>> entry{c, *component_containing(comps, anchor)};
    if (std::find(cover.begin(), cover.end(), entry) == cover.end())
      cover.push_back(std::move(entry));
  };
  for (int c : g.palette(u)) add(c, u);
  for (int c : g.palette(v))
    if (c != shared) add(c, v);
  return cover;
}

MatchingCoverReport matching_cover_complete(const ColouredGraph& g, int r) {
  if (g.host().kind() != HostKind::Complete)
    fail("PreconditionViolated", "complete host required");
  return cover_rounds(g, r, r * (r + 1) / 2, false);
}

MatchingCoverReport matching_cover_bipartite(const ColouredGraph& g, int r) {
  if (g.host().kind() != HostKind::Bipartite)
    fail("PreconditionViolated", "bipartite host required");
  return cover_rounds(g, r, (2 * r - 1) * r, true);
}

DensestColourResult densest_colour(const ColouredGraph& g) {
  validate(g);
  auto counts = colour_counts(g);
  long long edges = 0;
  for (const auto& [c, count] : counts) {
    (void)c;
    edges += count;
  }
  if (edges == 0) fail("EmptyGraph", "average degree needs at least one edge");
  const long long n = g.n();
  const long long r = locality(g);
  auto best = densest_entry(counts);
  DensestColourResult result;
  result.colour = best->first;
  result.edgeCount = best->second;
  result.bound = make_rational(2 * edges * edges, n * n * r * r);
  if (static_cast<__int128>(result.edgeCount) * result.bound.den <
      static_cast<__int128>(result.bound.num))
    fail("StructureViolation", "densest colour misses the degree bound");
  return result;
}

PeelingResult colour_peeling(const ColouredGraph& g, const Rational& eps) {
  if (g.host().kind() == HostKind::Multipartite)
    fail("PreconditionViolated", "bipartite or complete host required");
  if (eps.num <= 0 || rational_cmp(eps, make_rational(1, 1)) >= 0)
    fail("PreconditionViolated", "eps must lie strictly between 0 and 1");
  validate(g);
  const long long r = locality(g);
  const long long capacity = host_edge_capacity(g);
  auto counts = colour_counts(g);
  long long remaining = 0;
  for (const auto& [c, count] : counts) {
    (void)c;
    remaining += count;
  }

  PeelingResult result;
  if (r > 0) {
    long double steps = (2.0L * r * r * eps.den / eps.num) *
                        std::log(static_cast<long double>(eps.den) / eps.num);
    result.t = static_cast<long long>(std::ceil(steps));
  }
  for (long long step = 0; step < result.t && remaining > 0; ++step) {
    auto best = densest_entry(counts);
    result.kept.push_back(best->first);
    remaining -= best->second;
    counts.erase(best);
    bool belowDensity = static_cast<__int128>(remaining) * eps.den <
                        static_cast<__int128>(eps.num) * capacity;
    if (belowDensity) break;
  }
  result.residualEdges = remaining;
  if (static_cast<__int128>(remaining) * eps.den >
      static_cast<__int128>(eps.num) * capacity)
    fail("StructureViolation", "peeling residual exceeds its bound");
  return result;
}

}  // namespace locol

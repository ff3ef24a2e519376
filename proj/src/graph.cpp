#include "locol/graph.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

namespace locol {

Host Host::complete(int n) {
  if (n < 0) fail("ParseError", "negative vertex count");
  Host h;
  h.kind_ = HostKind::Complete;
  h.n_ = n;
  h.sizes_.assign(n, 1);
  h.part_of_.resize(n);
  std::iota(h.part_of_.begin(), h.part_of_.end(), 0);
  return h;
}

Host Host::bipartite(int top, int bottom) {
  if (top < 0 || bottom < 0) fail("ParseError", "negative part size");
  Host h;
  h.kind_ = HostKind::Bipartite;
  h.n_ = top + bottom;
  h.sizes_ = {top, bottom};
  h.part_of_.assign(top, 0);
  h.part_of_.insert(h.part_of_.end(), bottom, 1);
  return h;
}

Host Host::multipartite(std::vector<int> parts) {
  for (int s : parts)
    if (s < 0) fail("ParseError", "negative part size");
  Host h;
  h.kind_ = HostKind::Multipartite;
  h.sizes_ = parts;
  h.n_ = std::accumulate(parts.begin(), parts.end(), 0);
  h.part_of_.reserve(h.n_);
  for (int p = 0; p < static_cast<int>(parts.size()); ++p)
    h.part_of_.insert(h.part_of_.end(), parts[p], p);
  return h;
}

int Host::edge_count() const {
  long long total = static_cast<long long>(n_) * (n_ - 1) / 2;
  for (int s : sizes_) total -= static_cast<long long>(s) * (s - 1) / 2;
  return static_cast<int>(total);
}

int Host::top_size() const {
  if (kind_ != HostKind::Bipartite) fail("ParseError", "host is not bipartite");
  return sizes_[0];
}

int Host::bottom_size() const {
  if (kind_ != HostKind::Bipartite) fail("ParseError", "host is not bipartite");
  return sizes_[1];
}

std::vector<int> top_vertices(const Host& h) {
  std::vector<int> out;
  for (int v = 0; v < h.vertex_count(); ++v)
    if (h.is_top(v)) out.push_back(v);
  return out;
}

std::vector<int> bottom_vertices(const Host& h) {
  std::vector<int> out;
  for (int v = 0; v < h.vertex_count(); ++v)
    if (!h.is_top(v)) out.push_back(v);
  return out;
}

ColouredGraph::ColouredGraph(Host host)
    : host_(std::move(host)), n_(host_.vertex_count()) {
  colour_.assign(static_cast<size_t>(n_) * n_, kNoColour);
}

void ColouredGraph::set_colour(int u, int v, int c) {
  if (u > v) std::swap(u, v);
  if (u < 0 || v >= n_ || !host_.has_edge(u, v))
    fail("IllegalEdge", "no host edge " + std::to_string(u) + " " +
                            std::to_string(v));
  if (c < 0) fail("UnknownColour", "colour ids are nonnegative");
  colour_[u * n_ + v] = c;
  colour_[v * n_ + u] = c;
}

bool ColouredGraph::fully_coloured() const {
  bool ok = true;
  host_.for_each_edge([&](int u, int v) {
    if (colour_[u * n_ + v] == kNoColour) ok = false;
  });
  return ok;
}

int ColouredGraph::coloured_edge_count() const {
  int count = 0;
  for_each_edge([&](int, int, int) { ++count; });
  return count;
}

std::vector<int> ColouredGraph::colours_used() const {
  std::set<int> seen;
  for_each_edge([&](int, int, int c) { seen.insert(c); });
  return {seen.begin(), seen.end()};
}

std::vector<int> ColouredGraph::palette(int v) const {
  std::set<int> seen;
  for (int u = 0; u < n_; ++u) {
    int c = colour(u, v);
    if (c != kNoColour) seen.insert(c);
  }
  return {seen.begin(), seen.end()};
}

bool ColouredGraph::has_colour(int c) const {
  bool found = false;
  for_each_edge([&](int, int, int cc) {
    if (cc == c) found = true;
  });
  return found;
}

void validate(const ColouredGraph& g) {
  g.host().for_each_edge([&](int u, int v) {
    if (g.colour(u, v) == ColouredGraph::kNoColour)
      fail("MissingEdgeColour", "edge " + std::to_string(u) + " " +
                                    std::to_string(v) + " has no colour");
  });
}

int locality(const ColouredGraph& g) {
  int best = 0;
  for (int v = 0; v < g.n(); ++v)
    best = std::max(best, static_cast<int>(g.palette(v).size()));
  return best;
}

ColourClass colour_class(const ColouredGraph& g, int c) {
  ColourClass out;
  out.colour = c;
  std::set<int> verts;
  g.for_each_edge([&](int u, int v, int cc) {
    if (cc != c) return;
    out.edges.emplace_back(u, v);
    verts.insert(u);
    verts.insert(v);
  });
  if (out.edges.empty()) fail("UnknownColour", "colour " + std::to_string(c) +
                                                   " does not appear");
  out.vertices.assign(verts.begin(), verts.end());
  return out;
}

std::vector<std::vector<int>> monochromatic_components(const ColouredGraph& g,
                                                       int c) {
  ColourClass cls = colour_class(g, c);
  int n = g.n();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> adj(n);
  for (auto [u, v] : cls.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<std::vector<int>> out;
  for (int s : cls.vertices) {
    if (comp[s] != -1) continue;
    std::vector<int> stack{s}, members;
    comp[s] = static_cast<int>(out.size());
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      members.push_back(u);
      for (int v : adj[u])
        if (comp[v] == -1) {
          comp[v] = comp[s];
          stack.push_back(v);
        }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

bool connected_in_colour(const ColouredGraph& g, const std::vector<int>& H,
                         int c) {
  if (H.size() <= 1) return true;
  std::vector<char> inH(g.n(), 0), seen(g.n(), 0);
  for (int v : H) inH[v] = 1;
  std::vector<int> stack{H[0]};
  seen[H[0]] = 1;
  size_t reached = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v = 0; v < g.n(); ++v) {
      if (!inH[v] || seen[v] || g.colour(u, v) != c) continue;
      seen[v] = 1;
      ++reached;
      stack.push_back(v);
    }
  }
  return reached == H.size();
}

Restriction restrict_to(const ColouredGraph& g, std::vector<int> S) {
  const Host& h = g.host();
  std::sort(S.begin(), S.end());
  if (std::adjacent_find(S.begin(), S.end()) != S.end())
    fail("PreconditionViolated", "duplicate vertex in restriction");
  for (int v : S)
    if (v < 0 || v >= g.n())
      fail("PreconditionViolated", "vertex out of range in restriction");
  std::stable_sort(S.begin(), S.end(), [&](int a, int b) {
    return h.part_of(a) < h.part_of(b);
  });

  std::vector<int> newSizes(h.part_count(), 0);
  for (int v : S) ++newSizes[h.part_of(v)];

  Host nh;
  switch (h.kind()) {
    case HostKind::Complete:
      nh = Host::complete(static_cast<int>(S.size()));
      break;
    case HostKind::Bipartite:
      nh = Host::bipartite(newSizes[0], newSizes[1]);
      break;
    case HostKind::Multipartite:
      nh = Host::multipartite(newSizes);
      break;
  }

  Restriction r{ColouredGraph(nh), S};
  for (size_t i = 0; i < S.size(); ++i)
    for (size_t j = i + 1; j < S.size(); ++j) {
      int c = g.colour(S[i], S[j]);
      if (c != ColouredGraph::kNoColour &&
          nh.has_edge(static_cast<int>(i), static_cast<int>(j)))
        r.graph.set_colour(static_cast<int>(i), static_cast<int>(j), c);
    }
  return r;
}

namespace {

bool significant_line(const std::string& line) {
  for (char ch : line) {
    if (ch == '#') return false;
    if (!isspace(static_cast<unsigned char>(ch))) return true;
  }
  return false;
}

}  // namespace

ColouredGraph parse_ecg(std::istream& in, bool strict) {
  std::string line;
  Host host;
  bool haveHost = false;
  ColouredGraph g;
  std::vector<char> seenEdge;
  int lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    if (!significant_line(line)) continue;
    std::istringstream ls(line);
    if (!haveHost) {
      std::string word, kind;
      if (!(ls >> word) || word != "host")
        fail("ParseError", "line " + std::to_string(lineNo) +
                               ": expected host line");
      if (!(ls >> kind))
        fail("ParseError", "line " + std::to_string(lineNo) +
                               ": missing host kind");
      if (kind == "complete") {
        int n;
        if (!(ls >> n) || n < 0)
          fail("ParseError", "line " + std::to_string(lineNo) +
                                 ": bad complete host");
        host = Host::complete(n);
      } else if (kind == "bipartite") {
        int t, b;
        if (!(ls >> t >> b) || t < 0 || b < 0)
          fail("ParseError", "line " + std::to_string(lineNo) +
                                 ": bad bipartite host");
        host = Host::bipartite(t, b);
      } else if (kind == "multipartite") {
        int k;
        if (!(ls >> k) || k < 0)
          fail("ParseError", "line " + std::to_string(lineNo) +
                                 ": bad multipartite host");
        std::vector<int> parts(k);
        for (int i = 0; i < k; ++i)
          if (!(ls >> parts[i]) || parts[i] < 0)
            fail("ParseError", "line " + std::to_string(lineNo) +
                                   ": bad multipartite part size");
        host = Host::multipartite(parts);
      } else {
        fail("ParseError", "line " + std::to_string(lineNo) +
                               ": unknown host kind " + kind);
      }
      std::string extra;
      if (ls >> extra)
        fail("ParseError", "line " + std::to_string(lineNo) +
                               ": trailing tokens on host line");
      haveHost = true;
      g = ColouredGraph(host);
      seenEdge.assign(static_cast<size_t>(host.vertex_count()) *
                          host.vertex_count(),
                      0);
      continue;
    }
    int u, v, c;
    if (!(ls >> u >> v >> c))
      fail("ParseError", "line " + std::to_string(lineNo) + ": expected u v c");
    std::string extra;
    if (ls >> extra)
      fail("ParseError", "line " + std::to_string(lineNo) +
                             ": trailing tokens on edge line");
    if (u < 0 || v < 0 || u >= host.vertex_count() || v >= host.vertex_count() ||
        u >= v || !host.has_edge(u, v))
      fail("IllegalEdge", "line " + std::to_string(lineNo) + ": " +
                              std::to_string(u) + " " + std::to_string(v));
    if (c < 0)
      fail("ParseError", "line " + std::to_string(lineNo) +
                             ": negative colour id");
    if (seenEdge[u * host.vertex_count() + v])
      fail("DuplicateEdge", "line " + std::to_string(lineNo) + ": " +
                                std::to_string(u) + " " + std::to_string(v));
    seenEdge[u * host.vertex_count() + v] = 1;
    g.set_colour(u, v, c);
  }
  if (!haveHost) fail("ParseError", "empty input, expected host line");
  if (strict) validate(g);
  return g;
}

ColouredGraph parse_ecg(const std::string& text, bool strict) {
  std::istringstream in(text);
  return parse_ecg(in, strict);
}

void write_ecg(std::ostream& out, const ColouredGraph& g) {
  const Host& h = g.host();
  switch (h.kind()) {
    case HostKind::Complete:
      out << "host complete " << h.vertex_count() << "\n";
      break;
    case HostKind::Bipartite:
      out << "host bipartite " << h.top_size() << " " << h.bottom_size()
          << "\n";
      break;
    case HostKind::Multipartite: {
      out << "host multipartite " << h.part_count();
      for (int p = 0; p < h.part_count(); ++p) out << " " << h.part_size(p);
      out << "\n";
      break;
    }
  }
  g.for_each_edge(
      [&](int u, int v, int c) { out << u << " " << v << " " << c << "\n"; });
}

std::string write_ecg(const ColouredGraph& g) {
  std::ostringstream out;
  write_ecg(out, g);
  return out.str();
}

ColouredGraph read_ecg_file(const std::string& path, bool strict) {
  std::ifstream in(path);
  if (!in) fail("ParseError", "cannot open " + path);
  return parse_ecg(in, strict);
}

void write_ecg_file(const std::string& path, const ColouredGraph& g) {
  std::ofstream out(path);
  if (!out) fail("ParseError", "cannot open " + path);
  write_ecg(out, g);
}

}  // namespace locol

#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace locol {

// Domain error with a stable machine-readable kind string.
class Error : public std::runtime_error {
public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

private:
  std::string kind_;
};

[[noreturn]] inline void fail(std::string kind, const std::string& message) {
  throw Error(std::move(kind), message);
}

enum class HostKind { Complete, Bipartite, Multipartite };

// Complete multipartite host graph. Vertices are 0-based, grouped by part;
// for bipartite hosts the top side occupies indices 0..top-1.
class Host {
public:
  Host() = default;

  static Host complete(int n);
  static Host bipartite(int top, int bottom);
  static Host multipartite(std::vector<int> parts);

  HostKind kind() const { return kind_; }
  int vertex_count() const { return n_; }
  int part_count() const { return static_cast<int>(sizes_.size()); }
  int part_size(int p) const { return sizes_[p]; }
  int part_of(int v) const { return part_of_[v]; }
  bool has_edge(int u, int v) const {
    return u != v && part_of_[u] != part_of_[v];
  }
  int edge_count() const;

  int top_size() const;     // Bipartite only.
  int bottom_size() const;  // Bipartite only.
  bool is_top(int v) const { return part_of_[v] == 0; }

  // Visits f(u, v) for every host edge, u < v, row-major.
  template <class F>
  void for_each_edge(F&& f) const {
    for (int u = 0; u < n_; ++u)
      for (int v = u + 1; v < n_; ++v)
        if (part_of_[u] != part_of_[v]) f(u, v);
  }

  bool operator==(const Host&) const = default;

private:
  HostKind kind_ = HostKind::Complete;
  int n_ = 0;
  std::vector<int> sizes_;
  std::vector<int> part_of_;
};

std::vector<int> top_vertices(const Host& h);
std::vector<int> bottom_vertices(const Host& h);

// Host plus a (possibly partial while under construction) edge colouring.
// Colour-ids are opaque nonnegative integers, not necessarily contiguous.
class ColouredGraph {
public:
  static constexpr int kNoColour = -1;

  ColouredGraph() = default;
  explicit ColouredGraph(Host host);

  const Host& host() const { return host_; }
  int n() const { return host_.vertex_count(); }

  int colour(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || !host_.has_edge(u, v))
      return kNoColour;
    return colour_[u * n_ + v];
  }
  void set_colour(int u, int v, int c);

  bool fully_coloured() const;
  int coloured_edge_count() const;
  std::vector<int> colours_used() const;          // sorted distinct
  std::vector<int> palette(int v) const;          // sorted distinct
  bool has_colour(int c) const;

  // Visits f(u, v, c) for every coloured edge, u < v, row-major.
  template <class F>
  void for_each_edge(F&& f) const {
    host_.for_each_edge([&](int u, int v) {
      int c = colour_[u * n_ + v];
      if (c != kNoColour) f(u, v, c);
    });
  }

  bool operator==(const ColouredGraph&) const = default;

private:
  Host host_;
  int n_ = 0;
  std::vector<int> colour_;
};

// Totality check: every host edge carries a colour.
void validate(const ColouredGraph& g);

// Smallest r such that g is r-local; 0 for edgeless graphs.
int locality(const ColouredGraph& g);

struct ColourClass {
  int colour = 0;
  std::vector<int> vertices;                  // sorted
  std::vector<std::pair<int, int>> edges;     // colour-c edges, u < v, row-major
};

// C_c: vertices incident to a colour-c edge plus the colour-c edge set.
ColourClass colour_class(const ColouredGraph& g, int c);

// Connected components of the colour-c edge subgraph; each sorted, list
// ordered by first vertex. Their union is colour_class(g, c).vertices.
std::vector<std::vector<int>> monochromatic_components(const ColouredGraph& g,
                                                       int c);

// True iff the colour-c edges inside H connect all of H. |H| <= 1 is true.
bool connected_in_colour(const ColouredGraph& g, const std::vector<int>& H,
                         int c);

struct Restriction {
  ColouredGraph graph;
  std::vector<int> toParent;  // new index -> original index
};

// Induced coloured subgraph on S. The host kind is preserved; vertices are
// reordered by (part, original index) so bipartite tops stay in front.
Restriction restrict_to(const ColouredGraph& g, std::vector<int> S);

template <class F>
ColouredGraph remap_colours(const ColouredGraph& g, F&& f) {
  ColouredGraph out(g.host());
  g.for_each_edge([&](int u, int v, int c) { out.set_colour(u, v, f(c)); });
  return out;
}

// .ecg text format. strict requires every host edge to be coloured.
ColouredGraph parse_ecg(std::istream& in, bool strict = true);
ColouredGraph parse_ecg(const std::string& text, bool strict = true);
void write_ecg(std::ostream& out, const ColouredGraph& g);
std::string write_ecg(const ColouredGraph& g);
ColouredGraph read_ecg_file(const std::string& path, bool strict = true);
void write_ecg_file(const std::string& path, const ColouredGraph& g);

}  // namespace locol

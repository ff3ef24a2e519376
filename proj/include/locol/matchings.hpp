#pragma once

#include <string>
#include <utility>
#include <vector>

#include "locol/graph.hpp"

namespace locol {

// Exact fraction, reduced, denominator positive. Comparisons never touch
// floating point.
struct Rational {
  long long num = 0;
  long long den = 1;
};

Rational make_rational(long long num, long long den);
int rational_cmp(const Rational& a, const Rational& b);  // -1, 0, +1
std::string to_string(const Rational& r);
// Accepts "p/q", a plain integer, or a decimal such as "0.25".
Rational parse_rational(const std::string& text);

// Matching whose edges all carry one colour and lie inside one connected
// component of that colour's subgraph. An edgeless matching with a single
// component vertex is the trivial matching covering just that vertex; its
// colour is ColouredGraph::kNoColour.
struct ConnectedMatching {
  std::vector<std::pair<int, int>> edges;  // u < v, sorted, pairwise disjoint
  int colour = ColouredGraph::kNoColour;
  std::vector<int> component;  // sorted vertex set containing every endpoint
};

// Matched endpoints, or the single component vertex of a trivial matching.
std::vector<int> covered_vertices(const ConnectedMatching& m);

struct MatchingCover {
  std::vector<ConnectedMatching> matchings;  // covered sets pairwise disjoint
  std::vector<int> residual;                 // V minus covered, sorted
};

bool verify_matching_cover(const ColouredGraph& g, const MatchingCover& cover);

// Maximum matching of the colour-c subgraph induced on comp minus forbidden.
// comp should be a colour-c component and is recorded unchanged as the
// result's component. Bipartite hosts augment along alternating paths, other
// hosts contract blossoms.
ConnectedMatching max_matching_in_component(const ColouredGraph& g, int c,
                                            const std::vector<int>& comp,
                                            const std::vector<int>& forbidden);

struct ExtractionResult {
  MatchingCover cover;
  Restriction residual;  // induced subgraph on the uncovered vertices
};

// Picks a maximum matching in each listed component in order, each avoiding
// the vertices matched earlier. The listed sets must be genuine colour
// components and together cover V(g); every leftover vertex then loses at
// least one palette colour, so the residual locality drops below locality(g).
ExtractionResult extract_matchings(
    const ColouredGraph& g,
    const std::vector<std::pair<int, std::vector<int>>>& components);

// Covering components from vertex 0: for each colour at vertex 0 the colour
// component containing it. At most locality(g) entries; their union is V(g)
// whenever the graph has a second vertex. A single vertex sees no colours and
// yields an empty cover.
std::vector<std::pair<int, std::vector<int>>> component_cover_complete(
    const ColouredGraph& g);

// Covering components from both endpoints of the first host edge, the shared
// edge colour counted once. At most 2 * locality(g) - 1 entries.
std::vector<std::pair<int, std::vector<int>>> component_cover_bipartite(
    const ColouredGraph& g);

struct MatchingCoverReport {
  MatchingCover cover;             // full cover, residual empty
  std::vector<int> roundLocality;  // locality at the start of each round
  int edgedCount = 0;              // matchings with at least one edge
  int trivialCount = 0;            // single-vertex matchings for leftovers
  int budget = 0;                  // cap checked against edgedCount
};

// Rounds of cover-and-extract until nothing is left. Each round lowers the
// locality, so at most r(r+1)/2 matchings carry edges; isolated leftovers
// become trivial single-vertex matchings outside that count.
MatchingCoverReport matching_cover_complete(const ColouredGraph& g, int r);

// Bipartite variant; the edged budget is (2r-1) * r.
MatchingCoverReport matching_cover_bipartite(const ColouredGraph& g, int r);

struct DensestColourResult {
  int colour = 0;
  long long edgeCount = 0;
  Rational bound;  // (average degree)^2 / (2 * locality^2)
};

// Colour with the most edges; ties break to the smaller id. Its count always
// reaches the returned bound.
DensestColourResult densest_colour(const ColouredGraph& g);

struct PeelingResult {
  std::vector<int> kept;  // densest colours in removal order
  long long residualEdges = 0;  // edges of no kept colour
  long long t = 0;              // step cap computed from locality and eps
};

// Repeatedly sets aside the colour with the most remaining edges, stopping
// after t steps or once the rest has density below eps. The residual edge
// count never exceeds eps times the host edge capacity.
PeelingResult colour_peeling(const ColouredGraph& g, const Rational& eps);

}  // namespace locol

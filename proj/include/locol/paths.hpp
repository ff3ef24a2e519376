#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "locol/graph.hpp"
#include "locol/structure.hpp"

namespace locol {

// Path length convention: the length of a path is its number of vertices.
// A single-vertex path is valid; its colour is arbitrary. An even path has an
// even number of vertices.
struct MonoPath {
  std::vector<int> vertices;
  int colour = ColouredGraph::kNoColour;

  int length() const { return static_cast<int>(vertices.size()); }
  bool empty() const { return vertices.empty(); }
  bool operator==(const MonoPath&) const = default;
};

// Vertex-disjoint monochromatic paths covering every vertex exactly once.
// Certificates never contain empty paths; trivial one-vertex paths are fine.
struct PathPartitionCertificate {
  std::vector<MonoPath> paths;
  bool operator==(const PathPartitionCertificate&) const = default;
};

// Cycle partition. A single vertex and a single edge count as degenerate
// cycles; a proper cycle has >= 3 vertices and its closing edge must match.
struct CyclePartitionCertificate {
  std::vector<MonoPath> cycles;
  bool operator==(const CyclePartitionCertificate&) const = default;
};

bool verify_path_partition(const ColouredGraph& g,
                           const PathPartitionCertificate& cert);
bool verify_cycle_partition(const ColouredGraph& g,
                            const CyclePartitionCertificate& cert);

// Each cycle becomes the path on the same vertex sequence (the closing edge
// is dropped), so a verified cycle partition yields a verified path partition
// with the same number of parts.
PathPartitionCertificate cycles_to_paths(const CyclePartitionCertificate& cert);

struct LongestPathResult {
  int length = 0;
  MonoPath path;
};

// Exact subset DP per colour-class component. Throws BudgetExceeded when a
// component has more vertices than componentBudget.
LongestPathResult longest_mono_path(const ColouredGraph& g,
                                    int componentBudget = 22);

// Same DP restricted to one colour; length 0 and an empty path when the
// colour is absent.
LongestPathResult longest_path_in_colour(const ColouredGraph& g, int colour,
                                         int componentBudget = 22);

struct PathPartitionResult {
  int count = 0;
  PathPartitionCertificate certificate;
};

// Exact minimum over all partitions into monochromatic paths. Throws
// BudgetExceeded when the graph has more vertices than vertexBudget.
PathPartitionResult min_mono_path_partition(const ColouredGraph& g,
                                            int vertexBudget = 16);

struct CyclePartitionResult {
  int count = 0;
  CyclePartitionCertificate certificate;
};

// Exact minimum partition into monochromatic cycles (singletons and single
// edges count). Throws BudgetExceeded past vertexBudget vertices.
CyclePartitionResult min_mono_cycle_partition(const ColouredGraph& g,
                                              int vertexBudget = 14);

// Two paths of distinct colours covering all vertices; one path may be empty
// (monochromatic input). Paths alternate sides of the bipartition.
struct TwoPathsResult {
  MonoPath first;
  MonoPath second;
  bool operator==(const TwoPathsResult&) const = default;
};

// Dichotomy for 2-coloured balanced bipartite hosts: either two disjoint
// monochromatic paths of distinct colours covering everything, or the
// colouring is a non-degenerate split. Degenerate split shapes always admit
// the two-path cover and are returned as TwoPaths. detect_split runs first;
// a genuinely unsplit colouring falls back to an exact search, bounded by
// searchBudget total vertices (BudgetExceeded past it). Throws
// TooManyColours on three or more colours and NotBalancedBipartite when the
// host is not balanced bipartite.
using TwoColourOutcome = std::variant<TwoPathsResult, SplitWitness>;
TwoColourOutcome two_colour_partition(const ColouredGraph& g,
                                      int searchBudget = 18);

// Canonical cover of a non-degenerate split colouring by at most three
// monochromatic paths: two paths in the same-colour blocks plus one path of
// the other colour on the leftovers (dropped when the sides balance out).
// Requires a verified non-degenerate witness.
PathPartitionCertificate split_three_paths(const ColouredGraph& g,
                                           const SplitWitness& w);

// Which structured engine case produced the certificate, and whether the
// engine had to abandon the structured cases for the exact solver.
struct PartitionTrace {
  PathPartitionCertificate certificate;
  std::string engineCase;
  bool fallbackUsed = false;
};

// Partitions a 2-locally coloured balanced bipartite host into at most three
// monochromatic paths. The engine simplifies the colouring, routes two-colour
// inputs through the dichotomy, and otherwise walks structured cases derived
// from the colouring's block shape; an exact bounded search backs them up.
// searchBudget bounds every exact-search subroutine (BudgetExceeded past it).
PartitionTrace partition_2local_bipartite(const ColouredGraph& g,
                                          int searchBudget = 18);

}  // namespace locol

#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "locol/graph.hpp"

namespace locol {

// True iff every pair of appearing colours has intersecting class vertex
// sets.
bool is_simple(const ColouredGraph& g);

struct SimplifyResult {
  ColouredGraph graph;
  std::map<int, int> colourMap;  // original colour -> simplified colour
};

// Repeatedly merges the lexicographically smallest pair of colours with
// disjoint class vertex sets (into the smaller id) until simple. Locality
// never increases.
SimplifyResult simplify(const ColouredGraph& g);

// Block structure of a split colouring: [T1,B1] and [T2,B2] carry
// colourDiag, [T1,B2] and [T2,B1] carry colourOff. A colour is -1 when its
// blocks span no edge. Empty parts are allowed (degenerate splits).
struct SplitWitness {
  std::vector<int> top1, top2, bot1, bot2;
  int colourDiag = -1;
  int colourOff = -1;
  bool degenerate() const {
    return top1.empty() || top2.empty() || bot1.empty() || bot2.empty();
  }
};

struct NotSplit {
  std::string reason;
  int badVertex = -1;                            // top fitting neither side
  std::vector<std::pair<int, int>> evidence;     // edges refuting both fits
};

using SplitOutcome = std::variant<SplitWitness, NotSplit>;

// Decides splitness of a bipartite colouring with <= 2 colours by fixing the
// first top vertex into T1 and propagating block membership; the propagation
// is complete, no search. More than 2 colours is NotSplit.
SplitOutcome detect_split(const ColouredGraph& g);

bool is_split(const ColouredGraph& g);

// Checks the block property of w against g: parts partition the sides and
// every block edge carries the recorded colour.
bool verify_split_witness(const ColouredGraph& g, const SplitWitness& w);

enum class Shape { FourColour, ThreeColour, AtMostTwo };

// Canonical decomposition of a simple 2-local bipartite colouring.
// Role colours are the original ids sorted into figure positions; the block
// lists are keyed by role pairs: FourColour top {12, 34} and bottom
// {13, 14, 23, 24}; ThreeColour both sides {12, 13, 23}. Vertices seeing one
// colour belong to no intersection block and are listed separately.
struct StructureReport {
  bool simple = true;
  int colourCount = 0;
  Shape shape = Shape::AtMostTwo;
  bool everyVertexSeesTwo = false;
  bool sideSwapped = false;          // report top = host bottom when true
  std::vector<int> roleColour;       // role index (0-based) -> original id
  std::vector<std::vector<int>> topBlocks;
  std::vector<std::vector<int>> botBlocks;
  std::vector<int> singleColourVertices;
};

// Classifies a simple 2-local colouring of a bipartite host into the
// FourColour / ThreeColour / AtMostTwo shapes. A simple 2-local instance
// admitting none of the shapes raises StructureViolation.
StructureReport classify_2local(const ColouredGraph& g);

// Re-checks a report's block decomposition against the graph: blocks and
// single-colour vertices partition each side, block membership matches the
// vertex palettes, and the four-colour side equation holds.
bool verify_structure_report(const ColouredGraph& g,
                             const StructureReport& report);

// True iff every top-bottom pair inside colour_class(g, c) is joined by a
// colour-c edge.
bool complete_bipartite_in_colour(const ColouredGraph& g, int c);

}  // namespace locol

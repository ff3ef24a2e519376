#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "locol/graph.hpp"
#include "locol/paths.hpp"

namespace locol {

inline constexpr char kCanonicalScheme[] = "lexmin-rgs-v1";

// Enumeration domain: all colourings of the host with locality <= maxLocality
// and at most colourBudget distinct colours, taken up to vertex permutations
// within parts, side swap (balanced bipartite only) and colour relabelling.
// colourBudget 0 selects a cap large enough to lose no colouring.
struct EnumerationSpec {
  HostKind host = HostKind::Bipartite;
  int top = 0;
  int bottom = 0;  // ignored for complete hosts
  int maxLocality = 2;
  int colourBudget = 0;
  std::string canonicalization = kCanonicalScheme;
};

struct CanonicalStats {
  long long canonicalCount = 0;
  long long totalColourings = 0;  // sum of orbit sizes over emitted graphs
};

// Return false to stop the enumeration early.
using CanonicalVisitor =
    std::function<bool(const ColouredGraph&, long long orbitSize)>;

// Emits exactly one representative per orbit, in increasing order of the
// canonical edge-colour code. Stats cover what was visited before any stop.
CanonicalStats enumerate_canonical(const EnumerationSpec& spec,
                                   const CanonicalVisitor& visit);

// Independent work units: every locality-feasible code for the first edge
// row, in code order. Units may be empty; together they partition the
// canonical stream.
std::vector<std::string> enumeration_units(const EnumerationSpec& spec);
CanonicalStats enumerate_canonical_unit(const EnumerationSpec& spec,
                                        const std::string& unitId,
                                        const CanonicalVisitor& visit);

// Minimal-code representative of g's orbit under its host's symmetry group
// and colour relabelling.
ColouredGraph canonical_form(const ColouredGraph& g);

struct RamseyReport {
  bool verified = false;
  std::optional<ColouredGraph> counterexample;
  int counterexampleLongest = 0;
  long long canonicalCount = 0;
  long long totalChecked = 0;  // orbit-weighted count of colourings covered
  double elapsedSeconds = 0.0;
};

// Checks that every canonical maxLocality=2 colouring of K_{side,side} has a
// monochromatic path on at least target vertices. side <= 4 runs directly;
// side = 5 requires optInLarge; larger sides exceed the budget. With a
// checkpoint path, completed work units are skipped on resume and appended
// after completion; counts then cover only this invocation's units.
RamseyReport verify_even_path_target(int side, int target,
                                     bool optInLarge = false,
                                     const std::string& checkpointPath = {});

// The even-path statement on its own host: every 2-local colouring of
// K_{2m-1,2m-1} has a monochromatic path on 2m vertices.
RamseyReport verify_even_path_ramsey(int m, bool optInLarge = false,
                                     const std::string& checkpointPath = {});

// Two-colour base statement: every 2-colouring of K_{p+q-1,p+q-1} has a
// colour-1 path on 2p vertices or a colour-2 path on 2q vertices, for both
// assignments of the two roles to the appearing colours.
RamseyReport verify_faudree_schelp(int p, int q);

// Monochromatic path of length at least
// min{2m, 2 max(|top(C_i&C_j)|, |bottom(C_i&C_j)|)} in a simple 2-local
// 3-colour K_{2m-1,2m-1}, built constructively: a two-colour extremal path on
// a balanced subgraph of C_i&C_j, extended by an alternation into the side
// seen by only one of the two colours. Distinct i, j; an unused colour makes
// the intersection empty and yields the empty path.
MonoPath long_path_lemma(const ColouredGraph& g, int i, int j);

struct ClaimCheck {
  std::string name;
  long long applicable = 0;  // colourings where the claim's conclusion fails
  long long violations = 0;  // ...and the forced long path is absent
};

struct ClaimReport {
  std::vector<ClaimCheck> claims;
  long long canonicalCount = 0;
  long long withoutLongPath = 0;  // colourings with no path on 2m vertices
  bool ok = true;
};

// Contrapositive sweep of the structural claim chain behind the even-path
// statement at n = 2m-1: whenever a claim's conclusion fails on the
// simplified colouring (with all earlier conclusions holding), the colouring
// must contain a monochromatic path on 2m vertices.
ClaimReport verify_structural_claims(int n);

}  // namespace locol

#pragma once

#include <cstdint>
#include <vector>

#include "locol/graph.hpp"

namespace locol {

// Split colouring of a bipartite host: [T1,B1] and [T2,B2] colour 1,
// [T1,B2] and [T2,B1] colour 2. Empty parts are allowed.
ColouredGraph gen_split(int top1, int top2, int bot1, int bot2);

// Cyclic Latin block colouring of K_{r*s, r*s}: r blocks of size s per side,
// colour([T_i, B_j]) = ((i-1 + j-1) mod r) + 1. Reproduces gen_split at
// r = 2 and is r-local (each vertex sees all r colours).
ColouredGraph gen_generalized_split(int r, int blockSize);

enum class GridHost { Bipartite, Complete };

// t x t grid with row i and column i coloured i, completed with fill colour
// t+1. Complete host on t^2 vertices, or the grid's checkerboard bipartition
// (unbalanced for odd t; for t = 2 the bipartite completion has no fill
// edges and only 2 colours).
ColouredGraph gen_grid(int t, GridHost hostKind);

// Complete tripartite counterexample, parts U (6), V (3), W (3) with
// distinguished u, v, w: [W'+{v}, U'] colour 1, [V'+{w}, U'] colour 2,
// remaining edges colour 3. 2-local, minimum path partition 3.
ColouredGraph gen_tripartite();

// Complete host on parts V_1..V_r with |V_i| = 2^i; every edge meeting V_i
// as its smallest part gets colour i. r-local.
ColouredGraph gen_exponential_parts(int r);

enum class FigureShape { FourColour, ThreeColour };

// Canonical simple 2-local block colourings.
// FourColour sizes {t12, t34, b13, b14, b23, b24}, all >= 1, every edge
// colour forced by the palettes. ThreeColour sizes
// {t12, t13, t23, b12, b13, b23}; cross-pair channels are forced, the three
// within-pair zones get the smallest legal colour. Raises InconsistentBlocks
// when a required colour cannot appear or the colouring is not simple.
ColouredGraph gen_figure(FigureShape shape, const std::vector<int>& blockSizes);

// Random r-local colouring: palette(v) = {0} plus r-1 draws from {1..pool};
// each edge coloured uniformly from palette(u) & palette(v). Deterministic
// in (host, r, pool, seed) across platforms.
ColouredGraph gen_random_r_local(const Host& host, int r, int colourPool,
                                 std::uint64_t seed);

}  // namespace locol

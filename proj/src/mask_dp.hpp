#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "locol/graph.hpp"

namespace locol {
namespace detail {

// Subset DP over one colour-class component mapped to local indices.
// dp[mask] holds, as a bitset, the possible final vertices of a colour-c path
// visiting exactly the vertices of mask.
struct ComponentDp {
  std::vector<int> verts;          // local index -> graph vertex
  std::vector<std::uint32_t> adj;  // local adjacency in colour c
  std::vector<std::uint32_t> dp;

  void run(const ColouredGraph& g, const std::vector<int>& component, int c) {
    verts = component;
    const int k = static_cast<int>(verts.size());
    adj.assign(k, 0);
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) {
        if (i != j && g.colour(verts[i], verts[j]) == c) {
          adj[i] |= std::uint32_t{1} << j;
        }
      }
    }
    dp.assign(std::size_t{1} << k, 0);
    for (int i = 0; i < k; ++i) {
      dp[std::uint32_t{1} << i] = std::uint32_t{1} << i;
    }
    const std::uint32_t full = (std::uint32_t{1} << k) - 1;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
      std::uint32_t lasts = dp[mask];
      while (lasts != 0) {
        const int last = std::countr_zero(lasts);
        lasts &= lasts - 1;
        std::uint32_t ext = adj[last] & ~mask;
        while (ext != 0) {
          const int nxt = std::countr_zero(ext);
          ext &= ext - 1;
          dp[mask | (std::uint32_t{1} << nxt)] |= std::uint32_t{1} << nxt;
        }
      }
      if (mask == full) break;
    }
  }

  // Deterministic reconstruction: always steps to the lowest-index
  // predecessor.
  std::vector<int> witness(std::uint32_t mask, int last) const {
    std::vector<int> local{last};
    std::uint32_t cur = mask;
    int curLast = last;
    while (std::popcount(cur) > 1) {
      const std::uint32_t rest = cur & ~(std::uint32_t{1} << curLast);
      const std::uint32_t preds = dp[rest] & adj[curLast];
      const int prev = std::countr_zero(preds);
      local.push_back(prev);
      cur = rest;
      curLast = prev;
    }
    std::reverse(local.begin(), local.end());
    std::vector<int> out;
    out.reserve(local.size());
    for (int i : local) out.push_back(verts[i]);
    return out;
  }
};

// Like ComponentDp, but every path starts at the lowest vertex of its mask:
// extensions only ever add higher-index vertices, which is what the cycle
// check needs (close back to the mask's lowest vertex).
struct AnchoredDp {
  std::vector<int> verts;
  std::vector<std::uint32_t> adj;
  std::vector<std::uint32_t> dp;

  void run(const ColouredGraph& g, const std::vector<int>& component, int c) {
    verts = component;
    const int k = static_cast<int>(verts.size());
    adj.assign(k, 0);
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) {
        if (i != j && g.colour(verts[i], verts[j]) == c) {
          adj[i] |= std::uint32_t{1} << j;
        }
      }
    }
    dp.assign(std::size_t{1} << k, 0);
    for (int i = 0; i < k; ++i) {
      dp[std::uint32_t{1} << i] = std::uint32_t{1} << i;
    }
    const std::uint32_t full = (std::uint32_t{1} << k) - 1;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
      std::uint32_t lasts = dp[mask];
      if (lasts != 0) {
        const int low = std::countr_zero(mask);
        const std::uint32_t above = ~((std::uint32_t{2} << low) - 1);
        while (lasts != 0) {
          const int last = std::countr_zero(lasts);
          lasts &= lasts - 1;
          std::uint32_t ext = adj[last] & ~mask & above;
          while (ext != 0) {
            const int nxt = std::countr_zero(ext);
            ext &= ext - 1;
            dp[mask | (std::uint32_t{1} << nxt)] |= std::uint32_t{1} << nxt;
          }
        }
      }
      if (mask == full) break;
    }
  }

  std::vector<int> witness(std::uint32_t mask, int last) const {
    std::vector<int> local{last};
    std::uint32_t cur = mask;
    int curLast = last;
    while (std::popcount(cur) > 1) {
      const std::uint32_t rest = cur & ~(std::uint32_t{1} << curLast);
      const std::uint32_t preds = dp[rest] & adj[curLast];
      const int prev = std::countr_zero(preds);
      local.push_back(prev);
      cur = rest;
      curLast = prev;
    }
    std::reverse(local.begin(), local.end());
    std::vector<int> out;
    out.reserve(local.size());
    for (int i : local) out.push_back(verts[i]);
    return out;
  }
};

// Even path x0 y0 x1 y1 ... covering all of xs against the |xs|-prefix of ys.
inline std::vector<int> interleave(const std::vector<int>& xs,
                                   const std::vector<int>& ys) {
  if (ys.size() < xs.size()) {
    fail("PreconditionViolated", "alternation pool smaller than cover set");
  }
  std::vector<int> out;
  out.reserve(2 * xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    out.push_back(xs[i]);
    out.push_back(ys[i]);
  }
  return out;
}

}  // namespace detail
}  // namespace locol

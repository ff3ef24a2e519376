#include "locol/ramsey.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "locol/structure.hpp"
#include "mask_dp.hpp"

namespace locol {

namespace {

long long fact(int k) {
  long long out = 1;
  for (int t = 2; t <= k; ++t) out *= t;
  return out;
}

void check_spec(const EnumerationSpec& spec) {
  if (spec.canonicalization != kCanonicalScheme) {
    fail("PreconditionViolated",
         "unknown canonicalization scheme '" + spec.canonicalization + "'");
  }
  if (spec.maxLocality < 0) {
    fail("PreconditionViolated", "negative locality bound");
  }
  switch (spec.host) {
    case HostKind::Bipartite:
      if (spec.top < 0 || spec.bottom < 0) {
        fail("PreconditionViolated", "negative side size");
      }
      if (spec.top > 5 || spec.bottom > 5) {
        fail("BudgetExceeded", "bipartite enumeration supports sides up to 5");
      }
      break;
    case HostKind::Complete:
      if (spec.top < 0) fail("PreconditionViolated", "negative vertex count");
      if (spec.top > 5) {
        fail("BudgetExceeded", "complete enumeration supports up to 5 vertices");
      }
      break;
    default:
      fail("PreconditionViolated",
           "enumeration supports complete and bipartite hosts");
  }
  if (spec.colourBudget > 0 && spec.colourBudget < spec.maxLocality) {
    fail("PreconditionViolated", "colour budget below the locality bound");
  }
}

// Every colour lands in some palette on each side, so maxLocality times the
// smaller side bounds the number of distinct colours; no colouring is lost.
int effective_budget(const EnumerationSpec& spec) {
  if (spec.colourBudget > 0) return spec.colourBudget;
  if (spec.host == HostKind::Bipartite) {
    return spec.maxLocality * std::min(spec.top, spec.bottom);
  }
  return spec.maxLocality * spec.top;
}

// Orderly generation of canonical codes. The code is the edge-colour
// sequence in row-major host order, kept in restricted-growth form (each new
// colour is the smallest unused id); the canonical representative of an
// orbit is the lexicographically least code over vertex permutations within
// parts, the side swap on balanced bipartite hosts, and colour relabelling.
// Bipartite prefixes ending on a row boundary are pruned against the row and
// column permutations of the assigned region; leaves run the full group and
// count the stabilizer for the orbit size.
class CanonicalEnumerator {
 public:
  explicit CanonicalEnumerator(const EnumerationSpec& spec)
      : bip_(spec.host == HostKind::Bipartite),
        host_(bip_ ? Host::bipartite(spec.top, spec.bottom)
                   : Host::complete(spec.top)) {
    maxLoc_ = spec.maxLocality;
    if (bip_) {
      a_ = spec.top;
      b_ = spec.bottom;
      E_ = a_ * b_;
      groupSize_ = fact(a_) * fact(b_) * ((a_ == b_) ? 2 : 1);
    } else {
      n_ = spec.top;
      E_ = n_ * (n_ - 1) / 2;
      groupSize_ = fact(n_);
      edgeIdx_.assign(n_, std::vector<int>(n_, -1));
      for (int u = 0; u < n_; ++u) {
        for (int v = u + 1; v < n_; ++v) {
          edgeIdx_[u][v] = static_cast<int>(edges_.size());
          edges_.emplace_back(u, v);
        }
      }
    }
    budget_ = std::min(effective_budget(spec), std::max(E_, 1));
    code_.assign(E_, -1);
    pal_.assign(host_.vertex_count(), {});
    relabel_.assign(budget_, -1);
    const int maxPerm = bip_ ? std::max(a_, b_) : n_;
    perms_.resize(maxPerm + 1);
    for (int k = 0; k <= maxPerm; ++k) {
      std::vector<int> p(k);
      std::iota(p.begin(), p.end(), 0);
      do {
        perms_[k].push_back(p);
      } while (std::next_permutation(p.begin(), p.end()));
    }
  }

  int row_length() const { return E_ == 0 ? 0 : (bip_ ? b_ : n_ - 1); }

  // Restricted growth, within the colour budget, and the shared row vertex
  // sees at most maxLocality colours.
  bool row_feasible(const std::vector<int>& row) const {
    if (static_cast<int>(row.size()) != row_length()) return false;
    int seen = 0;
    for (int v : row) {
      if (v < 0 || v > seen || v >= budget_) return false;
      if (v == seen) ++seen;
    }
    if (seen > maxLoc_) return false;
    if (!row.empty() && maxLoc_ < 1) return false;
    return true;
  }

  void list_rows(std::vector<std::vector<int>>& out) const {
    out.clear();
    if (row_length() == 0) {
      out.push_back({});
      return;
    }
    if (maxLoc_ < 1 || budget_ < 1) return;
    std::vector<int> row;
    list_rows_rec(row, 0, out);
  }

  CanonicalStats run(const std::vector<int>& fixedRow,
                     const CanonicalVisitor& visit) {
    visit_ = &visit;
    stats_ = {};
    stopped_ = false;
    used_ = 0;
    for (auto& p : pal_) p.clear();
    const int L = static_cast<int>(fixedRow.size());
    for (int k = 0; k < L; ++k) {
      apply_fixed(k, fixedRow[k]);
    }
    if (L > 0 && bip_ && !rowBoundaryMinimal(1)) return stats_;
    dfs(L);
    return stats_;
  }

 private:
  bool bip_;
  Host host_;
  int a_ = 0, b_ = 0, n_ = 0, E_ = 0;
  int maxLoc_ = 0, budget_ = 0;
  long long groupSize_ = 1;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> edgeIdx_;
  std::vector<int> code_;
  std::vector<std::vector<int>> pal_;
  int used_ = 0;
  std::vector<std::vector<std::vector<int>>> perms_;
  std::vector<int> relabel_;
  const CanonicalVisitor* visit_ = nullptr;
  CanonicalStats stats_;
  bool stopped_ = false;

  std::pair<int, int> endpoints(int k) const {
    if (bip_) return {k / b_, a_ + k % b_};
    return edges_[k];
  }

  void list_rows_rec(std::vector<int>& row, int seen,
                     std::vector<std::vector<int>>& out) const {
    if (static_cast<int>(row.size()) == row_length()) {
      out.push_back(row);
      return;
    }
    const int cap = std::min(seen, budget_ - 1);
    for (int v = 0; v <= cap; ++v) {
      const bool fresh = (v == seen);
      if (fresh && seen == maxLoc_) continue;
      row.push_back(v);
      list_rows_rec(row, seen + (fresh ? 1 : 0), out);
      row.pop_back();
    }
  }

  void apply_fixed(int k, int val) {
    const auto [u, v] = endpoints(k);
    auto& up = pal_[u];
    auto& vp = pal_[v];
    const bool uNew = std::find(up.begin(), up.end(), val) == up.end();
    const bool vNew = std::find(vp.begin(), vp.end(), val) == vp.end();
    if (val < 0 || val > used_ || val >= budget_ ||
        (uNew && static_cast<int>(up.size()) >= maxLoc_) ||
        (vNew && static_cast<int>(vp.size()) >= maxLoc_)) {
      fail("StructureViolation", "infeasible fixed row entry");
    }
    code_[k] = val;
    if (uNew) up.push_back(val);
    if (vNew) vp.push_back(val);
    if (val == used_) ++used_;
  }

  // Lexicographic comparison of the relabelled sigma-image of the first
  // `entries` positions against the reference prefix.
  int cmp_bip(const std::vector<int>& rowP, const std::vector<int>& colP,
              bool swapSides, int entries) {
    std::fill(relabel_.begin(), relabel_.end(), -1);
    int next = 0;
    for (int k = 0; k < entries; ++k) {
      const int r = k / b_;
      const int c = k % b_;
      const int old = swapSides ? code_[colP[c] * b_ + rowP[r]]
                                : code_[rowP[r] * b_ + colP[c]];
      int v = relabel_[old];
      if (v < 0) {
        v = next++;
        relabel_[old] = v;
      }
      if (v != code_[k]) return v < code_[k] ? -1 : 1;
    }
    return 0;
  }

  int cmp_complete(const std::vector<int>& perm) {
    std::fill(relabel_.begin(), relabel_.end(), -1);
    int next = 0;
    for (int k = 0; k < E_; ++k) {
      int u = perm[edges_[k].first];
      int v = perm[edges_[k].second];
      if (u > v) std::swap(u, v);
      const int old = code_[edgeIdx_[u][v]];
      int w = relabel_[old];
      if (w < 0) {
        w = next++;
        relabel_[old] = w;
      }
      if (w != code_[k]) return w < code_[k] ? -1 : 1;
    }
    return 0;
  }

  bool rowBoundaryMinimal(int rows) {
    const int entries = rows * b_;
    for (const auto& rp : perms_[rows]) {
      for (const auto& cp : perms_[b_]) {
        if (cmp_bip(rp, cp, false, entries) < 0) return false;
      }
    }
    return true;
  }

  void leaf() {
    long long stab = 0;
    if (bip_) {
      const bool canSwap = (a_ == b_);
      for (const auto& rp : perms_[a_]) {
        for (const auto& cp : perms_[b_]) {
          int c = cmp_bip(rp, cp, false, E_);
          if (c < 0) return;
          if (c == 0) ++stab;
          if (canSwap) {
            c = cmp_bip(rp, cp, true, E_);
            if (c < 0) return;
            if (c == 0) ++stab;
          }
        }
      }
    } else {
      for (const auto& pm : perms_[n_]) {
        const int c = cmp_complete(pm);
        if (c < 0) return;
        if (c == 0) ++stab;
      }
    }
    if (stab == 0 || groupSize_ % stab != 0) {
      fail("StructureViolation", "orbit size is not integral");
    }
    ++stats_.canonicalCount;
    const long long orbit = groupSize_ / stab;
    stats_.totalColourings += orbit;
    ColouredGraph g(host_);
    for (int k = 0; k < E_; ++k) {
      const auto [u, v] = endpoints(k);
      g.set_colour(u, v, code_[k]);
    }
    if (!(*visit_)(g, orbit)) stopped_ = true;
  }

  void dfs(int k) {
    if (stopped_) return;
    if (k == E_) {
      leaf();
      return;
    }
    const auto [eu, ev] = endpoints(k);
    const int cap = std::min(used_, budget_ - 1);
    for (int val = 0; val <= cap; ++val) {
      auto& up = pal_[eu];
      const bool uNew = std::find(up.begin(), up.end(), val) == up.end();
      if (uNew && static_cast<int>(up.size()) >= maxLoc_) continue;
      auto& vp = pal_[ev];
      const bool vNew = std::find(vp.begin(), vp.end(), val) == vp.end();
      if (vNew && static_cast<int>(vp.size()) >= maxLoc_) continue;
      code_[k] = val;
      if (uNew) up.push_back(val);
      if (vNew) vp.push_back(val);
      const bool fresh = (val == used_);
      if (fresh) ++used_;
      bool keep = true;
      if (bip_ && (k + 1) % b_ == 0) keep = rowBoundaryMinimal((k + 1) / b_);
      if (keep) dfs(k + 1);
      if (fresh) --used_;
      if (vNew) vp.pop_back();
      if (uNew) up.pop_back();
      if (stopped_) return;
    }
  }
};

std::string row_id(const std::vector<int>& row) {
  std::string out;
  for (std::size_t t = 0; t < row.size(); ++t) {
    if (t != 0) out += '-';
    out += std::to_string(row[t]);
  }
  return out;
}

std::vector<int> parse_unit(const std::string& id) {
  std::vector<int> row;
  if (id.empty()) return row;
  std::size_t pos = 0;
  while (pos <= id.size()) {
    std::size_t dash = id.find('-', pos);
    if (dash == std::string::npos) dash = id.size();
    if (dash == pos) fail("PreconditionViolated", "unknown work unit '" + id + "'");
    int val = 0;
    for (std::size_t t = pos; t < dash; ++t) {
      if (id[t] < '0' || id[t] > '9') {
        fail("PreconditionViolated", "unknown work unit '" + id + "'");
      }
      val = val * 10 + (id[t] - '0');
    }
    row.push_back(val);
    pos = dash + 1;
  }
  return row;
}

std::set<std::string> load_checkpoint(const std::string& path) {
  std::set<std::string> done;
  if (path.empty()) return done;
  std::ifstream in(path);
  if (!in) return done;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) {
      line.pop_back();
    }
    if (!line.empty()) done.insert(line);
  }
  return done;
}

void append_checkpoint(const std::string& path, const std::string& id) {
  if (path.empty()) return;
  std::ofstream out(path, std::ios::app);
  if (!out) fail("ParseError", "cannot open " + path);
  out << id << '\n';
}

double seconds_since(
    const std::chrono::steady_clock::time_point& start) {
  const auto d = std::chrono::steady_clock::now() - start;
  return std::chrono::duration<double>(d).count();
}

std::vector<int> sorted_intersection(const std::vector<int>& x,
                                     const std::vector<int>& y) {
  std::vector<int> out;
  std::set_intersection(x.begin(), x.end(), y.begin(), y.end(),
                        std::back_inserter(out));
  return out;
}

std::vector<int> sorted_difference(const std::vector<int>& x,
                                   const std::vector<int>& y) {
  std::vector<int> out;
  std::set_difference(x.begin(), x.end(), y.begin(), y.end(),
                      std::back_inserter(out));
  return out;
}

}  // namespace

CanonicalStats enumerate_canonical(const EnumerationSpec& spec,
                                   const CanonicalVisitor& visit) {
  check_spec(spec);
  CanonicalEnumerator e(spec);
  std::vector<std::vector<int>> rows;
  e.list_rows(rows);
  CanonicalStats total;
  bool stop = false;
  const CanonicalVisitor wrap = [&](const ColouredGraph& g, long long orbit) {
    if (!visit(g, orbit)) {
      stop = true;
      return false;
    }
    return true;
  };
  for (const auto& row : rows) {
    const CanonicalStats s = e.run(row, wrap);
    total.canonicalCount += s.canonicalCount;
    total.totalColourings += s.totalColourings;
    if (stop) break;
  }
  return total;
}

std::vector<std::string> enumeration_units(const EnumerationSpec& spec) {
  check_spec(spec);
  CanonicalEnumerator e(spec);
  std::vector<std::vector<int>> rows;
  e.list_rows(rows);
  std::vector<std::string> out;
  out.reserve(rows.size());
  for (const auto& row : rows) out.push_back(row_id(row));
  return out;
}

CanonicalStats enumerate_canonical_unit(const EnumerationSpec& spec,
                                        const std::string& unitId,
                                        const CanonicalVisitor& visit) {
  check_spec(spec);
  CanonicalEnumerator e(spec);
  const std::vector<int> row = parse_unit(unitId);
  if (!e.row_feasible(row)) {
    fail("PreconditionViolated", "unknown work unit '" + unitId + "'");
  }
  return e.run(row, visit);
}

ColouredGraph canonical_form(const ColouredGraph& g) {
  validate(g);
  const Host& h = g.host();
  if (h.kind() == HostKind::Multipartite) {
    fail("PreconditionViolated",
         "canonical form supports complete and bipartite hosts");
  }
  const bool bip = h.kind() == HostKind::Bipartite;
  const int a = bip ? h.top_size() : h.vertex_count();
  const int b = bip ? h.bottom_size() : 0;
  if (a > 5 || b > 5) {
    fail("BudgetExceeded", "canonical form supports sides up to 5");
  }

  // Reference code with colours renamed by first appearance.
  std::vector<std::pair<int, int>> edges;
  h.for_each_edge([&](int u, int v) { edges.emplace_back(u, v); });
  const int E = static_cast<int>(edges.size());
  std::vector<int> code(E);
  {
    std::map<int, int> names;
    for (int k = 0; k < E; ++k) {
      const int c = g.colour(edges[k].first, edges[k].second);
      auto it = names.find(c);
      if (it == names.end()) it = names.emplace(c, static_cast<int>(names.size())).first;
      code[k] = it->second;
    }
  }
  const int budget = std::max(
      1, code.empty() ? 1 : *std::max_element(code.begin(), code.end()) + 1);

  std::vector<std::vector<std::vector<int>>> perms(6);
  for (int k = 0; k <= 5; ++k) {
    std::vector<int> p(k);
    std::iota(p.begin(), p.end(), 0);
    do {
      perms[k].push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
  }

  std::vector<int> relabel(budget);
  std::vector<int> cand(E);
  std::vector<int> best = code;
  const auto consider = [&](const auto& entry) {
    std::fill(relabel.begin(), relabel.end(), -1);
    int next = 0;
    for (int k = 0; k < E; ++k) {
      const int old = entry(k);
      int v = relabel[old];
      if (v < 0) {
        v = next++;
        relabel[old] = v;
      }
      cand[k] = v;
    }
    if (cand < best) best = cand;
  };

  if (bip) {
    for (const auto& rp : perms[a]) {
      for (const auto& cp : perms[b]) {
        consider([&](int k) { return code[rp[k / b] * b + cp[k % b]]; });
        if (a == b && a > 0) {
          consider([&](int k) { return code[cp[k % b] * b + rp[k / b]]; });
        }
      }
    }
  } else {
    std::vector<std::vector<int>> edgeIdx(a, std::vector<int>(a, -1));
    for (int k = 0; k < E; ++k) {
      edgeIdx[edges[k].first][edges[k].second] = k;
    }
    for (const auto& pm : perms[a]) {
      consider([&](int k) {
        int u = pm[edges[k].first];
        int v = pm[edges[k].second];
        if (u > v) std::swap(u, v);
        return code[edgeIdx[u][v]];
      });
    }
  }

  ColouredGraph out(h);
  for (int k = 0; k < E; ++k) {
    out.set_colour(edges[k].first, edges[k].second, best[k]);
  }
  return out;
}

RamseyReport verify_even_path_target(int side, int target, bool optInLarge,
                                     const std::string& checkpointPath) {
  if (side < 1) fail("PreconditionViolated", "side must be positive");
  if (target < 1) fail("PreconditionViolated", "target must be positive");
  if (side > 5) fail("BudgetExceeded", "enumeration supports sides up to 5");
  if (side == 5 && !optInLarge) {
    fail("BudgetExceeded", "side 5 requires the opt-in flag");
  }
  const auto start = std::chrono::steady_clock::now();
  EnumerationSpec spec;
  spec.host = HostKind::Bipartite;
  spec.top = side;
  spec.bottom = side;
  spec.maxLocality = 2;

  RamseyReport rep;
  rep.verified = true;
  const std::set<std::string> done = load_checkpoint(checkpointPath);
  for (const std::string& id : enumeration_units(spec)) {
    if (done.count(id) != 0) continue;
    bool unitClean = true;
    const CanonicalStats s = enumerate_canonical_unit(
        spec, id, [&](const ColouredGraph& g, long long) {
          const int longest = longest_mono_path(g).length;
          if (longest < target) {
            rep.verified = false;
            rep.counterexample = g;
            rep.counterexampleLongest = longest;
            unitClean = false;
            return false;
          }
          return true;
        });
    rep.canonicalCount += s.canonicalCount;
    rep.totalChecked += s.totalColourings;
    if (!unitClean) break;
    append_checkpoint(checkpointPath, id);
  }
  rep.elapsedSeconds = seconds_since(start);
  return rep;
}

RamseyReport verify_even_path_ramsey(int m, bool optInLarge,
                                     const std::string& checkpointPath) {
  if (m < 1) fail("PreconditionViolated", "m must be at least 1");
  if (m > 3) fail("BudgetExceeded", "even-path verification supports m <= 3");
  return verify_even_path_target(2 * m - 1, 2 * m, optInLarge, checkpointPath);
}

RamseyReport verify_faudree_schelp(int p, int q) {
  if (p < 1 || q < 1) {
    fail("PreconditionViolated", "path targets require p, q >= 1");
  }
  const int side = p + q - 1;
  if (side > 5) fail("BudgetExceeded", "enumeration supports sides up to 5");
  const auto start = std::chrono::steady_clock::now();
  EnumerationSpec spec;
  spec.host = HostKind::Bipartite;
  spec.top = side;
  spec.bottom = side;
  spec.maxLocality = 2;
  spec.colourBudget = 2;

  RamseyReport rep;
  rep.verified = true;
  const CanonicalStats s =
      enumerate_canonical(spec, [&](const ColouredGraph& g, long long) {
        const auto cs = g.colours_used();
        const int first =
            cs.empty() ? 0 : longest_path_in_colour(g, cs[0]).length;
        const int second =
            cs.size() < 2 ? 0 : longest_path_in_colour(g, cs[1]).length;
        const bool ok = (first >= 2 * p || second >= 2 * q) &&
                        (second >= 2 * p || first >= 2 * q);
        if (!ok) {
          rep.verified = false;
          rep.counterexample = g;
          rep.counterexampleLongest = longest_mono_path(g).length;
          return false;
        }
        return true;
      });
  rep.canonicalCount = s.canonicalCount;
  rep.totalChecked = s.totalColourings;
  rep.elapsedSeconds = seconds_since(start);
  return rep;
}

MonoPath long_path_lemma(const ColouredGraph& g, int i, int j) {
  validate(g);
  const Host& h = g.host();
  if (h.kind() != HostKind::Bipartite || h.top_size() != h.bottom_size() ||
      h.top_size() < 1 || h.top_size() % 2 == 0) {
    fail("PreconditionViolated",
         "host must be balanced bipartite with odd sides");
  }
  if (locality(g) > 2) {
    fail("PreconditionViolated", "colouring must be 2-local");
  }
  if (!is_simple(g)) fail("PreconditionViolated", "colouring must be simple");
  if (static_cast<int>(g.colours_used().size()) != 3) {
    fail("PreconditionViolated", "exactly three colours required");
  }
  if (i == j) fail("PreconditionViolated", "colours must differ");
  const int n = h.top_size();
  const int m = (n + 1) / 2;

  const auto classI = colour_class(g, i).vertices;
  const auto classJ = colour_class(g, j).vertices;
  const auto inter = sorted_intersection(classI, classJ);
  std::vector<int> interTop, interBot;
  for (int v : inter) (h.is_top(v) ? interTop : interBot).push_back(v);
  if (inter.empty()) return {};

  // The larger intersection side plays the covered role.
  const bool xIsTop = interTop.size() >= interBot.size();
  const auto onX = [&](int v) { return h.is_top(v) == xIsTop; };
  const std::vector<int>& coverX = xIsTop ? interTop : interBot;
  const std::vector<int>& coverY = xIsTop ? interBot : interTop;

  std::vector<int> yOnlyI, yOnlyJ;
  for (int v : sorted_difference(classI, classJ)) {
    if (!onX(v)) yOnlyI.push_back(v);
  }
  for (int v : sorted_difference(classJ, classI)) {
    if (!onX(v)) yOnlyJ.push_back(v);
  }
  // A covered-side vertex sees exactly {i, j}, so the opposite side splits
  // into (C_i only) | (C_j only) | (both).
  if (static_cast<int>(yOnlyI.size() + yOnlyJ.size() + coverY.size()) != n) {
    fail("StructureViolation",
         "a vertex opposite the covered side sees neither colour");
  }
  const int p = m - static_cast<int>(yOnlyI.size());
  const int q = m - static_cast<int>(yOnlyJ.size());
  const int bound = std::min(2 * m, 2 * static_cast<int>(coverX.size()));

  MonoPath out;
  if (p <= 0 || q <= 0) {
    // One single-colour side already holds >= m vertices: a plain
    // alternation against the covered side reaches the bound.
    out.colour = (p <= 0) ? i : j;
    const std::vector<int>& pool = (p <= 0) ? yOnlyI : yOnlyJ;
    const int w = std::min(static_cast<int>(coverX.size()), m);
    const std::vector<int> xs(coverX.begin(), coverX.begin() + w);
    const std::vector<int> ys(pool.begin(), pool.begin() + w);
    out.vertices = detail::interleave(xs, ys);
  } else {
    const int s = p + q - 1;
    if (static_cast<int>(coverY.size()) != s) {
      fail("StructureViolation", "intersection side count mismatch");
    }
    if (2 * s > 22) {
      fail("SubroutineBudgetExceeded",
           "balanced subgraph exceeds the exact-search budget");
    }
    std::vector<int> subVerts(coverX.begin(), coverX.begin() + s);
    subVerts.insert(subVerts.end(), coverY.begin(), coverY.end());
    std::sort(subVerts.begin(), subVerts.end());
    const Restriction sub = restrict_to(g, subVerts);
    bool twoColoured = true;
    sub.graph.for_each_edge([&](int, int, int c) {
      if (c != i && c != j) twoColoured = false;
    });
    if (!twoColoured) {
      fail("StructureViolation", "intersection subgraph leaked a third colour");
    }
    const LongestPathResult inI = longest_path_in_colour(sub.graph, i);
    const LongestPathResult inJ = longest_path_in_colour(sub.graph, j);
    const std::vector<int>* pool = nullptr;
    const LongestPathResult* base = nullptr;
    int take = 0;
    if (inI.length >= 2 * p) {
      out.colour = i;
      pool = &yOnlyI;
      base = &inI;
      take = 2 * p;
    } else if (inJ.length >= 2 * q) {
      out.colour = j;
      pool = &yOnlyJ;
      base = &inJ;
      take = 2 * q;
    } else {
      fail("StructureViolation",
           "two-colour base theorem failed on the balanced subgraph");
    }
    std::vector<int> pv;
    pv.reserve(bound);
    for (int t = 0; t < take; ++t) {
      pv.push_back(sub.toParent[base->path.vertices[t]]);
    }
    if (!onX(pv.back())) std::reverse(pv.begin(), pv.end());
    if (!onX(pv.back())) {
      fail("StructureViolation", "two-colour path does not alternate sides");
    }
    std::vector<int> xRest;
    for (int v : coverX) {
      if (std::find(pv.begin(), pv.end(), v) == pv.end()) xRest.push_back(v);
    }
    const int rHalf = static_cast<int>(std::min(xRest.size(), pool->size()));
    const std::vector<int> ys(pool->begin(), pool->begin() + rHalf);
    const std::vector<int> xs(xRest.begin(), xRest.begin() + rHalf);
    const std::vector<int> tail = detail::interleave(ys, xs);
    pv.insert(pv.end(), tail.begin(), tail.end());
    out.vertices = std::move(pv);
  }

  if (out.length() < bound) {
    fail("StructureViolation", "long path construction fell short of bound");
  }
  std::vector<int> sortedCheck = out.vertices;
  std::sort(sortedCheck.begin(), sortedCheck.end());
  const bool distinct = std::adjacent_find(sortedCheck.begin(),
                                           sortedCheck.end()) == sortedCheck.end();
  bool edgesOk = true;
  for (std::size_t t = 0; t + 1 < out.vertices.size(); ++t) {
    const int u = out.vertices[t];
    const int v = out.vertices[t + 1];
    if (!h.has_edge(u, v) || g.colour(u, v) != out.colour) edgesOk = false;
  }
  if (!distinct || !edgesOk) {
    fail("StructureViolation", "long path construction broke its invariant");
  }
  return out;
}

ClaimReport verify_structural_claims(int n) {
  if (n < 1 || n % 2 == 0) {
    fail("PreconditionViolated", "n must be an odd positive side size");
  }
  if (n > 5) fail("BudgetExceeded", "enumeration supports sides up to 5");
  const int m = (n + 1) / 2;

  ClaimReport rep;
  rep.claims.push_back({"simplified-colour-count-is-three", 0, 0});
  rep.claims.push_back({"every-vertex-sees-two-colours", 0, 0});
  rep.claims.push_back({"intersection-sides-below-half", 0, 0});
  rep.claims.push_back({"intersection-blocks-nonempty", 0, 0});
  rep.claims.push_back({"connected-class-has-unbalanced-partner", 0, 0});
  rep.claims.push_back({"at-most-one-small-intersection", 0, 0});

  EnumerationSpec spec;
  spec.host = HostKind::Bipartite;
  spec.top = n;
  spec.bottom = n;
  spec.maxLocality = 2;

  enumerate_canonical(spec, [&](const ColouredGraph& g, long long) {
    ++rep.canonicalCount;
    const bool hasPath = longest_mono_path(g).length >= 2 * m;
    if (!hasPath) ++rep.withoutLongPath;

    const SimplifyResult simplified = simplify(g);
    const ColouredGraph& gs = simplified.graph;
    const Host& h = gs.host();
    const auto cs = gs.colours_used();

    bool conc[6] = {true, true, true, true, true, true};
    conc[0] = cs.size() == 3;
    for (int v = 0; v < h.vertex_count(); ++v) {
      if (gs.palette(v).size() != 2) {
        conc[1] = false;
        break;
      }
    }
    if (conc[0]) {
      std::vector<std::vector<int>> classes;
      for (int c : cs) classes.push_back(colour_class(gs, c).vertices);
      int topCnt[3][3] = {};
      int botCnt[3][3] = {};
      int smallPairs = 0;
      for (int x = 0; x < 3; ++x) {
        for (int y = x + 1; y < 3; ++y) {
          const auto both = sorted_intersection(classes[x], classes[y]);
          int tc = 0, bc = 0;
          for (int v : both) (h.is_top(v) ? tc : bc) += 1;
          topCnt[x][y] = topCnt[y][x] = tc;
          botCnt[x][y] = botCnt[y][x] = bc;
          if (std::max(tc, bc) >= m) conc[2] = false;
          if (tc == 0 || bc == 0) conc[3] = false;
          if (tc + bc < m) ++smallPairs;
        }
      }
      conc[5] = smallPairs <= 1;
      for (int x = 0; x < 3 && conc[4]; ++x) {
        if (!connected_in_colour(gs, classes[x], cs[x])) continue;
        bool found = false;
        const int others[2] = {x == 0 ? 1 : 0, x == 2 ? 1 : 2};
        for (int o = 0; o < 2 && !found; ++o) {
          const int y = others[o];
          const int z = others[1 - o];
          const bool small = topCnt[x][z] + botCnt[x][z] < m;
          if (!small) continue;
          if (topCnt[x][y] >= botCnt[x][z] && botCnt[x][y] > topCnt[x][z]) {
            found = true;
          }
          if (botCnt[x][y] >= topCnt[x][z] && topCnt[x][y] > botCnt[x][z]) {
            found = true;
          }
        }
        conc[4] = found;
      }
    }

    bool frame = true;
    for (int t = 0; t < 6; ++t) {
      if (frame && !conc[t]) {
        ++rep.claims[t].applicable;
        if (!hasPath) ++rep.claims[t].violations;
      }
      frame = frame && conc[t];
    }
    return true;
  });

  rep.ok = rep.withoutLongPath == 0;
  for (const auto& c : rep.claims) rep.ok = rep.ok && c.violations == 0;
  return rep;
}

}  // namespace locol

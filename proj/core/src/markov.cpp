#include "triodrot/markov.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <sstream>

namespace triodrot {

bool MarkovGraph::has_edge(int u, int v) const {
  return std::binary_search(adj[u].begin(), adj[u].end(), v);
}

MarkovGraph point_graph(const PLinearMap& m) {
  const TriodPattern& p = m.pattern();
  int q = p.period();
  MarkovGraph g;
  g.kind = MarkovGraph::Kind::Point;
  g.vbranch.reserve(q);
  g.adj.assign(q, {});
  for (int k = 0; k < q; ++k) {
    const Placement& pl = p.step(k);
    g.vbranch.push_back(pl.branch);
    g.vlabel.push_back("b" + std::to_string(pl.branch.value()) + "r" + std::to_string(pl.rank));
  }
  // Edge x -> y when the image of the segment from the center to x reaches at
  // least as far as y on y's branch. The image of that segment is a union of
  // arcs whose per-branch reach is attained at images of pattern points.
  for (int k = 0; k < q; ++k) {
    const Placement& x = p.step(k);
    std::array<int, 3> reach{-1, -1, -1};
    for (int r = 1; r <= x.rank; ++r) {
      Placement img = p.successor(Placement{x.branch, r});
      reach[img.branch.value()] = std::max(reach[img.branch.value()], img.rank);
    }
    for (int j = 0; j < q; ++j) {
      const Placement& y = p.step(j);
      if (y.rank <= reach[y.branch.value()]) g.adj[k].push_back(j);
    }
    std::sort(g.adj[k].begin(), g.adj[k].end());
  }
  return g;
}

namespace {

// Does the image arc of `iv` (from the image of its lower endpoint to the
// image of its upper endpoint) contain the whole interval [c, d] on branch
// `target`?
bool arc_covers(const TriodPoint& a, const TriodPoint& b, BranchId target, const Rational& c,
                const Rational& d) {
  if (!a.is_center() && !b.is_center() && a.branch() == b.branch()) {
    if (a.branch() != target) return false;
    return std::min(a.dist(), b.dist()) <= c && d <= std::max(a.dist(), b.dist());
  }
  // Arc through the center: it spans [0, dist] on each endpoint's branch.
  if (!a.is_center() && a.branch() == target) return d <= a.dist();
  if (!b.is_center() && b.branch() == target) return d <= b.dist();
  return false;
}

}  // namespace

MarkovGraph interval_graph(const PLinearMap& m) {
  const auto& ivs = m.intervals();
  int n = static_cast<int>(ivs.size());
  MarkovGraph g;
  g.kind = MarkovGraph::Kind::Interval;
  g.adj.assign(n, {});
  for (const auto& iv : ivs) {
    g.vbranch.push_back(iv.branch);
    std::ostringstream label;
    label << "b" << iv.branch.value() << "[" << floor_int(iv.lo) << "," << floor_int(iv.hi) << "]";
    g.vlabel.push_back(label.str());
  }
  for (int i = 0; i < n; ++i) {
    TriodPoint a = m.endpoint_image(ivs[i], false);
    TriodPoint b = m.endpoint_image(ivs[i], true);
    for (int j = 0; j < n; ++j)
      if (arc_covers(a, b, ivs[j].branch, ivs[j].lo, ivs[j].hi)) g.adj[i].push_back(j);
  }
  return g;
}

int Loop::displacement_thirds(const MarkovGraph& g) const {
  int total = 0;
  for (int i = 0; i < length(); ++i)
    total += g.weight_thirds(vertices[i], vertices[(i + 1) % length()]);
  return total;
}

Loop Loop::canonical_rotation() const {
  int n = length();
  int best = 0;
  for (int s = 1; s < n; ++s) {
    for (int i = 0; i < n; ++i) {
      int a = vertices[(s + i) % n];
      int b = vertices[(best + i) % n];
      if (a != b) {
        if (a < b) best = s;
        break;
      }
    }
  }
  Loop out;
  out.vertices.reserve(n);
  for (int i = 0; i < n; ++i) out.vertices.push_back(vertices[(best + i) % n]);
  return out;
}

namespace {

bool is_canonical_rotation(const std::vector<int>& seq) {
  int n = static_cast<int>(seq.size());
  for (int s = 1; s < n; ++s)
    for (int i = 0; i < n; ++i) {
      int a = seq[(s + i) % n];
      int b = seq[i];
      if (a != b) {
        if (a < b) return false;
        break;
      }
    }
  return true;
}

struct LoopDfs {
  const MarkovGraph& g;
  const std::function<bool(const Loop&)>& visit;
  const LoopBudget& budget;
  long long work = 0;
  long long yielded = 0;
  std::vector<int> seq;
  EnumStatus status = EnumStatus::Complete;

  // Emits closed walks of exactly `target` edges rooted at seq[0]; every
  // vertex on the walk is >= the root, and only the canonical rotation of
  // each cyclic class survives the filter.
  bool extend(int target) {
    if (++work > budget.max_work) {
      status = EnumStatus::BudgetExceeded;
      return false;
    }
    int depth = static_cast<int>(seq.size());
    int root = seq[0];
    if (depth == target) {
      if (!g.has_edge(seq.back(), root)) return true;
      if (!is_canonical_rotation(seq)) return true;
      if (++yielded > budget.max_loops) {
        status = EnumStatus::BudgetExceeded;
        return false;
      }
      Loop loop{seq};
      if (!visit(loop)) {
        status = EnumStatus::Stopped;
        return false;
      }
      return true;
    }
    for (int v : g.adj[seq.back()]) {
      if (v < root) continue;
      seq.push_back(v);
      bool keep = extend(target);
      seq.pop_back();
      if (!keep) return false;
    }
    return true;
  }
};

}  // namespace

EnumStatus enumerate_loops(const MarkovGraph& g, int max_len,
                           const std::function<bool(const Loop&)>& visit,
                           const LoopBudget& budget) {
  LoopDfs dfs{g, visit, budget};
  for (int len = 1; len <= max_len; ++len)
    for (int root = 0; root < g.order(); ++root) {
      dfs.seq.assign(1, root);
      if (!dfs.extend(len)) return dfs.status;
    }
  return EnumStatus::Complete;
}

std::vector<Loop> all_loops(const MarkovGraph& g, int max_len, EnumStatus* status,
                            const LoopBudget& budget) {
  std::vector<Loop> out;
  EnumStatus st = enumerate_loops(
      g, max_len,
      [&](const Loop& l) {
        out.push_back(l);
        return true;
      },
      budget);
  if (status) *status = st;
  return out;
}

namespace {

// Tarjan strongly connected components; returns component id per vertex.
struct Tarjan {
  const MarkovGraph& g;
  std::vector<int> index, low, comp;
  std::vector<int> stack;
  std::vector<bool> on_stack;
  int next_index = 0, next_comp = 0;

  explicit Tarjan(const MarkovGraph& graph)
      : g(graph), index(g.order(), -1), low(g.order(), 0), comp(g.order(), -1),
        on_stack(g.order(), false) {
    for (int v = 0; v < g.order(); ++v)
      if (index[v] < 0) strongconnect(v);
  }

  void strongconnect(int v) {
    index[v] = low[v] = next_index++;
    stack.push_back(v);
    on_stack[v] = true;
    for (int w : g.adj[v]) {
      if (index[w] < 0) {
        strongconnect(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      while (true) {
        int w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp[w] = next_comp;
        if (w == v) break;
      }
      ++next_comp;
    }
  }
};

constexpr long long kInf = std::numeric_limits<long long>::max() / 4;

// Karp's recurrence on one strongly connected component, weights in thirds.
// Returns the minimum cycle mean (in thirds) or nullopt when the component
// has no cycle (single vertex, no self-loop).
std::optional<Rational> karp_min_mean_thirds(const MarkovGraph& g, const std::vector<int>& verts,
                                             const std::vector<int>& comp, int cid, bool negate) {
  int n = static_cast<int>(verts.size());
  bool has_edge = false;
  std::vector<int> local(g.order(), -1);
  for (int i = 0; i < n; ++i) local[verts[i]] = i;
  for (int u : verts)
    for (int v : g.adj[u])
      if (comp[v] == cid) has_edge = true;
  if (n == 1 && !g.has_edge(verts[0], verts[0])) return std::nullopt;
  TRIODROT_CHECK(has_edge, "SCC of size > 1 must contain edges");

  // d[k][i] = least weight of a k-edge walk from the source to i inside the
  // component.
  std::vector<std::vector<long long>> d(n + 1, std::vector<long long>(n, kInf));
  d[0][0] = 0;
  for (int k = 1; k <= n; ++k)
    for (int i = 0; i < n; ++i) {
      if (d[k - 1][i] >= kInf) continue;
      for (int v : g.adj[verts[i]]) {
        if (comp[v] != cid) continue;
        long long w = g.weight_thirds(verts[i], v);
        if (negate) w = -w;
        int j = local[v];
        d[k][j] = std::min(d[k][j], d[k - 1][i] + w);
      }
    }

  std::optional<Rational> best;
  for (int i = 0; i < n; ++i) {
    if (d[n][i] >= kInf) continue;
    std::optional<Rational> worst;
    for (int k = 0; k < n; ++k) {
      if (d[k][i] >= kInf) continue;
      Rational mean(d[n][i] - d[k][i], n - k);
      if (!worst || mean > *worst) worst = mean;
    }
    if (worst && (!best || *worst < *best)) best = worst;
  }
  TRIODROT_CHECK(best.has_value(), "Karp found no cycle in a cyclic SCC");
  return best;
}

}  // namespace

std::pair<Rational, Rational> cycle_mean_extremes(const MarkovGraph& g) {
  Tarjan scc(g);
  std::vector<std::vector<int>> members(scc.next_comp);
  for (int v = 0; v < g.order(); ++v) members[scc.comp[v]].push_back(v);

  std::optional<Rational> lo, hi;
  for (int c = 0; c < scc.next_comp; ++c) {
    auto mn = karp_min_mean_thirds(g, members[c], scc.comp, c, false);
    if (!mn) continue;
    auto mx = karp_min_mean_thirds(g, members[c], scc.comp, c, true);
    Rational cmin = *mn / 3;
    Rational cmax = -(*mx) / 3;
    if (!lo || cmin < *lo) lo = cmin;
    if (!hi || cmax > *hi) hi = cmax;
  }
  if (!lo) throw NoCycle("graph has no cycle");
  return {*lo, *hi};
}

std::string to_dot(const MarkovGraph& g, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  for (int v = 0; v < g.order(); ++v) out << "  \"" << g.vlabel[v] << "\";\n";
  for (int u = 0; u < g.order(); ++u)
    for (int v : g.adj[u])
      out << "  \"" << g.vlabel[u] << "\" -> \"" << g.vlabel[v] << "\" [w=\""
          << g.weight_thirds(u, v) << "/3\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace triodrot

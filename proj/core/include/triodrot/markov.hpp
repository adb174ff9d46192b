#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "triodrot/plinear.hpp"

namespace triodrot {

// Directed Markov graph of a pattern. Vertices are either the orbit points
// (point graph, indexed by orbit step) or the basic intervals (interval
// graph, indexed like PLinearMap::intervals()). Edge weights are the branch
// displacements, derived from vertex branches on demand.
struct MarkovGraph {
  enum class Kind { Point, Interval };
  Kind kind;
  std::vector<BranchId> vbranch;
  std::vector<std::string> vlabel;      // "b0r1" or "b0[0,1]"
  std::vector<std::vector<int>> adj;    // targets ascending

  int order() const { return static_cast<int>(vbranch.size()); }
  bool has_edge(int u, int v) const;
  int weight_thirds(int u, int v) const { return displacement_thirds(vbranch[u], vbranch[v]); }
  Rational weight(int u, int v) const { return Rational(weight_thirds(u, v), 3); }
};

MarkovGraph point_graph(const PLinearMap& m);
MarkovGraph interval_graph(const PLinearMap& m);

// A closed walk up to cyclic rotation, stored as its lexicographically least
// rotation. Walks may repeat vertices.
struct Loop {
  std::vector<int> vertices;

  int length() const { return static_cast<int>(vertices.size()); }
  int displacement_thirds(const MarkovGraph& g) const;
  Rational total_displacement(const MarkovGraph& g) const {
    return Rational(displacement_thirds(g), 3);
  }
  Rational rotation_number(const MarkovGraph& g) const {
    return Rational(displacement_thirds(g), 3 * length());
  }
  Loop canonical_rotation() const;
  friend bool operator==(const Loop&, const Loop&) = default;
};

enum class EnumStatus {
  Complete,        // every loop of length <= max_len was visited
  Stopped,         // the visitor asked to stop
  BudgetExceeded,  // the work or yield cap was hit; results are truncated
};

struct LoopBudget {
  long long max_loops = 1'000'000;     // cap on visited loops
  long long max_work = 50'000'000;     // cap on DFS node expansions
};

// Visits every closed walk of length <= max_len exactly once up to cyclic
// rotation: shortest lengths first, lexicographic by canonical rotation
// within a length. Truncation is always reported, never silent.
EnumStatus enumerate_loops(const MarkovGraph& g, int max_len,
                           const std::function<bool(const Loop&)>& visit,
                           const LoopBudget& budget = {});

std::vector<Loop> all_loops(const MarkovGraph& g, int max_len, EnumStatus* status = nullptr,
                            const LoopBudget& budget = {});

// Exact minimum and maximum mean edge weight over all cycles, by Karp's
// minimum-mean-cycle recurrence per strongly connected component (the
// maximum via negated weights). Throws NoCycle on acyclic graphs.
std::pair<Rational, Rational> cycle_mean_extremes(const MarkovGraph& g);

// One digraph per graph; edge attribute w="<j>/3".
std::string to_dot(const MarkovGraph& g, const std::string& name);

}  // namespace triodrot

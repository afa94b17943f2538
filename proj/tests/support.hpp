#pragma once

// Graph builders, generators and definition-level oracles shared by the
// test binaries. Nothing in here calls the exchange algorithm.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "nwforest/decompose.hpp"
#include "nwforest/graph.hpp"

namespace nwf::fixtures {

inline Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Graph(n, std::move(edges));
}

inline Graph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < a; ++u) {
    for (Vertex v = 0; v < b; ++v) edges.push_back({u, a + v});
  }
  return Graph(a + b, std::move(edges));
}

inline Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph(n, std::move(edges));
}

inline Graph parallel_edges(std::size_t k) {
  return Graph(2, std::vector<Edge>(k, Edge{0, 1}));
}

/**
   Calls `visit` for every loopless multigraph on n labelled vertices with at
   most `max_m` edges, edges listed in nondecreasing pair order. With
   `with_loops` the n self-loops join the pair alphabet.
 */
inline void for_each_multigraph(std::size_t n, std::size_t max_m, bool with_loops,
                                const std::function<void(const Graph&)>& visit) {
  std::vector<Edge> alphabet;
  for (Vertex u = 0; u < n; ++u) {
    if (with_loops) alphabet.push_back({u, u});
    for (Vertex v = u + 1; v < n; ++v) alphabet.push_back({u, v});
  }
  std::vector<Edge> current;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    visit(Graph(n, current));
    if (current.size() == max_m) return;
    for (std::size_t k = from; k < alphabet.size(); ++k) {
      current.push_back(alphabet[k]);
      rec(k);
      current.pop_back();
    }
  };
  rec(0);
}

/// Random multigraph; shuffles edge order so ids carry no structure.
inline Graph random_multigraph(std::mt19937_64& rng, std::size_t n, std::size_t m, double loop_prob) {
  std::uniform_int_distribution<Vertex> pick(0, n - 1);
  std::bernoulli_distribution loop(loop_prob);
  std::vector<Edge> edges;
  while (edges.size() < m) {
    Vertex u = pick(rng);
    Vertex v = pick(rng);
    if (u == v && !loop(rng)) continue;
    edges.push_back({u, v});
  }
  return Graph(n, std::move(edges));
}

/// Random labelled forest: each vertex joins a random earlier vertex or starts a new tree.
inline Graph random_forest(std::mt19937_64& rng, std::size_t n, double new_tree_prob) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  std::bernoulli_distribution fresh(new_tree_prob);
  std::vector<Edge> edges;
  for (std::size_t k = 1; k < n; ++k) {
    if (fresh(rng)) continue;
    std::uniform_int_distribution<std::size_t> parent(0, k - 1);
    edges.push_back({perm[parent(rng)], perm[k]});
  }
  std::shuffle(edges.begin(), edges.end(), rng);
  return Graph(n, std::move(edges));
}

/**
   Picks up to `want` disjoint connected parts of the forest `g` by growing
   each from a random free seed along free forest edges.
 */
inline std::vector<VertexSet> random_subtrees(std::mt19937_64& rng, const Graph& g, std::size_t want) {
  const std::size_t n = g.num_vertices();
  std::vector<char> used(n, 0);
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  std::shuffle(order.begin(), order.end(), rng);
  std::uniform_int_distribution<std::size_t> size_dist(1, 4);
  std::vector<VertexSet> parts;
  for (Vertex seed : order) {
    if (parts.size() == want) break;
    if (used[seed]) continue;
    std::vector<Vertex> members{seed};
    used[seed] = 1;
    const std::size_t target = size_dist(rng);
    for (std::size_t k = 0; k < members.size() && members.size() < target; ++k) {
      for (EdgeId id : g.incident(members[k])) {
        Vertex y = g.edge(id).other(members[k]);
        if (used[y] || members.size() >= target) continue;
        used[y] = 1;
        members.push_back(y);
      }
    }
    parts.emplace_back(std::move(members));
  }
  return parts;
}

// Component label of every vertex in (V, s \ {skip}) by repeated relabelling.
inline std::vector<std::size_t> naive_labels(const Graph& g, const EdgeSubset& s,
                                             std::size_t skip = static_cast<std::size_t>(-1)) {
  std::vector<std::size_t> label(g.num_vertices());
  std::iota(label.begin(), label.end(), std::size_t{0});
  bool changed = true;
  while (changed) {
    changed = false;
    for (EdgeId id = 0; id < g.num_edges(); ++id) {
      if (id == skip || !s.contains(id)) continue;
      auto& lu = label[g.edge(id).u];
      auto& lv = label[g.edge(id).v];
      if (lu != lv) {
        lu = lv = std::min(lu, lv);
        changed = true;
      }
    }
  }
  return label;
}

/**
   Classification straight from the definitions: a part is isolated in T if
   no other part shares its component, and peculiar if deleting some edge of
   T that lies in no part's edge set and touches the part makes it isolated.
   Every candidate edge is tried with a fresh component labelling.
 */
inline std::vector<SubtreeClass> classify_by_definition(const Graph& g, const EdgeSubset& t,
                                                        const std::vector<VertexSet>& parts) {
  auto isolated_in = [&](std::size_t p, const std::vector<std::size_t>& label) {
    for (std::size_t q = 0; q < parts.size(); ++q) {
      if (q != p && label[parts[q].front()] == label[parts[p].front()]) return false;
    }
    return true;
  };
  auto inside_some_part = [&](EdgeId id) {
    for (const auto& part : parts) {
      if (part.contains(g.edge(id).u) && part.contains(g.edge(id).v)) return true;
    }
    return false;
  };
  const auto base = naive_labels(g, t);
  std::vector<SubtreeClass> out;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    if (isolated_in(p, base)) {
      out.push_back(SubtreeClass::isolated());
      continue;
    }
    SubtreeClass verdict = SubtreeClass::neither();
    for (EdgeId id = 0; id < g.num_edges(); ++id) {
      if (!t.contains(id) || inside_some_part(id)) continue;
      if (!parts[p].contains(g.edge(id).u) && !parts[p].contains(g.edge(id).v)) continue;
      if (isolated_in(p, naive_labels(g, t, id))) {
        verdict = SubtreeClass::peculiar(id);
        break;
      }
    }
    out.push_back(verdict);
  }
  return out;
}

inline std::size_t forest_count(const Graph& g, ForestIndex f, const Decomposition& d) {
  std::size_t c = 0;
  for (EdgeId e = 0; e < g.num_edges(); ++e) c += d.forest_of(e) == f ? 1 : 0;
  return c;
}

}  // namespace nwf::fixtures

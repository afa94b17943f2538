#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nwf {

using Vertex = std::size_t;
using EdgeId = std::size_t;

/// Raised when an operation is called with arguments that break its
/// documented preconditions. Infeasibility is never reported this way.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Edge {
  Vertex u;
  Vertex v;

  bool is_loop() const { return u == v; }
  Vertex other(Vertex x) const { return x == u ? v : u; }

  friend bool operator==(const Edge&, const Edge&) = default;
};

/**
   Immutable undirected multigraph on the vertices 0..n-1.

   Edges are addressed by their position in the construction sequence, so
   parallel edges stay distinguishable. Self-loops are representable; the
   decomposition routines reject them with a certificate.
 */
/// One entry of an incidence list: the edge and the endpoint across it.
struct Arc {
  EdgeId edge;
  Vertex to;
};

class Graph {
 public:
  Graph() = default;

  explicit Graph(std::size_t num_vertices, std::vector<Edge> edges = {})
      : n_(num_vertices), edges_(std::move(edges)) {
    for (const Edge& e : edges_) {
      if (e.u >= n_ || e.v >= n_) {
        throw PreconditionError("edge endpoint out of range: (" + std::to_string(e.u) + ", " +
                                std::to_string(e.v) + ") with n = " + std::to_string(n_));
      }
    }
    // CSR incidence; a self-loop appears once in its vertex's list.
    offsets_.assign(n_ + 1, 0);
    for (const Edge& e : edges_) {
      ++offsets_[e.u + 1];
      if (!e.is_loop()) ++offsets_[e.v + 1];
    }
    std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
    incidence_.resize(offsets_.back());
    arcs_.resize(offsets_.back());
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (EdgeId id = 0; id < edges_.size(); ++id) {
      const Edge& e = edges_[id];
      arcs_[fill[e.u]] = {id, e.v};
      incidence_[fill[e.u]++] = id;
      if (e.is_loop()) continue;
      arcs_[fill[e.v]] = {id, e.u};
      incidence_[fill[e.v]++] = id;
    }
  }

  std::size_t num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  const Edge& edge(EdgeId id) const { return edges_.at(id); }
  std::span<const Edge> edges() const { return edges_; }

  /// Edge ids incident with `v`, in increasing id order.
  std::span<const EdgeId> incident(Vertex v) const {
    return std::span<const EdgeId>(incidence_).subspan(offsets_[v], offsets_[v + 1] - offsets_[v]);
  }

  /// Same order as incident(v), with the far endpoint alongside.
  std::span<const Arc> arcs(Vertex v) const {
    return {arcs_.data() + offsets_[v], arcs_.data() + offsets_[v + 1]};
  }

  std::optional<EdgeId> first_loop() const {
    for (EdgeId id = 0; id < edges_.size(); ++id) {
      if (edges_[id].is_loop()) return id;
    }
    return std::nullopt;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<EdgeId> incidence_;
  std::vector<Arc> arcs_;
};

/// Membership over the edge ids of one graph.
class EdgeSubset {
 public:
  EdgeSubset() = default;
  explicit EdgeSubset(std::size_t num_edges) : bits_(num_edges, false) {}
  EdgeSubset(std::size_t num_edges, std::initializer_list<EdgeId> ids) : EdgeSubset(num_edges) {
    for (EdgeId id : ids) insert(id);
  }

  static EdgeSubset all(std::size_t num_edges) {
    EdgeSubset s(num_edges);
    s.bits_.flip();
    s.count_ = num_edges;
    return s;
  }

  void insert(EdgeId id) {
    if (!bits_.at(id)) {
      bits_[id] = true;
      ++count_;
    }
  }
  void erase(EdgeId id) {
    if (bits_.at(id)) {
      bits_[id] = false;
      --count_;
    }
  }

  bool contains(EdgeId id) const { return id < bits_.size() && bits_[id]; }
  bool operator()(EdgeId id) const { return contains(id); }

  std::size_t size() const { return count_; }
  std::size_t universe() const { return bits_.size(); }

  std::vector<EdgeId> ids() const {
    std::vector<EdgeId> out;
    out.reserve(count_);
    for (EdgeId id = 0; id < bits_.size(); ++id) {
      if (bits_[id]) out.push_back(id);
    }
    return out;
  }

  friend bool operator==(const EdgeSubset&, const EdgeSubset&) = default;

 private:
  std::vector<bool> bits_;
  std::size_t count_ = 0;
};

/// A set of vertex ids, stored sorted and duplicate-free.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> vs) : VertexSet(std::vector<Vertex>(vs)) {}
  explicit VertexSet(std::vector<Vertex> vs) : vs_(std::move(vs)) {
    std::sort(vs_.begin(), vs_.end());
    vs_.erase(std::unique(vs_.begin(), vs_.end()), vs_.end());
  }

  static VertexSet range(std::size_t n) {
    std::vector<Vertex> vs(n);
    std::iota(vs.begin(), vs.end(), Vertex{0});
    return VertexSet(std::move(vs));
  }

  bool contains(Vertex v) const { return std::binary_search(vs_.begin(), vs_.end(), v); }
  std::size_t size() const { return vs_.size(); }
  bool empty() const { return vs_.empty(); }
  Vertex front() const { return vs_.front(); }
  Vertex back() const { return vs_.back(); }

  const std::vector<Vertex>& vertices() const { return vs_; }
  auto begin() const { return vs_.begin(); }
  auto end() const { return vs_.end(); }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> vs_;
};

/// Any callable that answers "is edge id in the set?".
template <class F>
concept EdgeFilter = std::predicate<const F&, EdgeId>;

// Union-find with path halving and union by size.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  /// Returns false if x and y were already in the same set.
  bool unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (size_[x] < size_[y]) std::swap(x, y);
    parent_[y] = x;
    size_[x] += size_[y];
    return true;
  }

  bool same(std::size_t x, std::size_t y) { return find(x) == find(y); }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

/// e(X): number of edges with both endpoints in `x`, counted with
/// multiplicity. A self-loop at v counts whenever v is in `x`.
inline std::size_t restriction_edge_count(const Graph& g, const VertexSet& x) {
  std::vector<char> in_x(g.num_vertices(), 0);
  for (Vertex v : x) {
    if (v >= g.num_vertices()) throw PreconditionError("vertex id out of range");
    in_x[v] = 1;
  }
  std::size_t count = 0;
  for (const Edge& e : g.edges()) {
    if (in_x[e.u] && in_x[e.v]) ++count;
  }
  return count;
}

template <EdgeFilter F>
bool is_forest(const Graph& g, const F& in_subset) {
  DisjointSets dsu(g.num_vertices());
  for (EdgeId id = 0; id < g.num_edges(); ++id) {
    if (!in_subset(id)) continue;
    const Edge& e = g.edge(id);
    if (!dsu.unite(e.u, e.v)) return false;
  }
  return true;
}

struct Components {
  /// Parts ordered by their smallest vertex id.
  std::vector<VertexSet> parts;
  /// index[v] is the position in `parts` of the component containing v.
  std::vector<std::size_t> index;

  std::size_t count() const { return parts.size(); }
};

template <EdgeFilter F>
Components components(const Graph& g, const F& in_subset) {
  const std::size_t n = g.num_vertices();
  DisjointSets dsu(n);
  for (EdgeId id = 0; id < g.num_edges(); ++id) {
    if (in_subset(id)) dsu.unite(g.edge(id).u, g.edge(id).v);
  }
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> root_index(n, kNone);
  std::vector<std::vector<Vertex>> buckets;
  Components out;
  out.index.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    std::size_t& slot = root_index[dsu.find(v)];
    if (slot == kNone) {
      slot = buckets.size();
      buckets.emplace_back();
    }
    buckets[slot].push_back(v);
    out.index[v] = slot;
  }
  out.parts.reserve(buckets.size());
  for (auto& b : buckets) out.parts.emplace_back(std::move(b));
  return out;
}

/**
   Edge ids of the unique u-v path in the forest (V, s), listed from u to v.
   Returns an empty path for u == v and nullopt when u and v lie in
   different trees. Throws PreconditionError if a cycle is met while
   exploring the component of u.
 */
template <EdgeFilter F>
std::optional<std::vector<EdgeId>> path_in_forest(const Graph& g, const F& in_subset, Vertex u,
                                                  Vertex v) {
  const std::size_t n = g.num_vertices();
  if (u >= n || v >= n) throw PreconditionError("vertex id out of range");
  if (u == v) return std::vector<EdgeId>{};

  constexpr EdgeId kNoEdge = static_cast<EdgeId>(-1);
  std::vector<EdgeId> parent_edge(n, kNoEdge);
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{u};
  seen[u] = 1;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (EdgeId id : g.incident(x)) {
      if (!in_subset(id) || id == parent_edge[x]) continue;
      const Edge& e = g.edge(id);
      Vertex y = e.other(x);
      if (seen[y]) throw PreconditionError("edge subset is not a forest");
      seen[y] = 1;
      parent_edge[y] = id;
      stack.push_back(y);
    }
  }
  if (!seen[v]) return std::nullopt;

  std::vector<EdgeId> path;
  for (Vertex x = v; x != u;) {
    EdgeId id = parent_edge[x];
    path.push_back(id);
    x = g.edge(id).other(x);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace nwf

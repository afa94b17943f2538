#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "nwforest/graph.hpp"

namespace nwf {

using ForestIndex = std::size_t;

/// Forest index of an edge that has not been placed yet.
inline constexpr ForestIndex kUnassigned = 0;

/**
   Assignment of edge ids to forests 1..r.

   During incremental construction some edges may still be kUnassigned; a
   finished decomposition assigns every edge.
 */
class Decomposition {
 public:
  Decomposition() = default;
  Decomposition(std::size_t forests, std::size_t num_edges)
      : forests_(forests), assign_(num_edges, kUnassigned) {}
  Decomposition(std::size_t forests, std::vector<ForestIndex> assign)
      : forests_(forests), assign_(std::move(assign)) {}

  std::size_t forests() const { return forests_; }
  std::size_t num_edges() const { return assign_.size(); }

  ForestIndex forest_of(EdgeId e) const { return assign_.at(e); }
  void assign(EdgeId e, ForestIndex f) {
    if (f > forests_) throw PreconditionError("forest index out of range");
    assign_.at(e) = f;
  }

  std::span<const ForestIndex> assignment() const { return assign_; }

  bool is_total() const {
    return std::none_of(assign_.begin(), assign_.end(),
                        [](ForestIndex f) { return f == kUnassigned; });
  }

  EdgeSubset forest_edges(ForestIndex f) const {
    EdgeSubset s(assign_.size());
    for (EdgeId e = 0; e < assign_.size(); ++e) {
      if (assign_[e] == f) s.insert(e);
    }
    return s;
  }

  /// Predicate view of one forest, usable with the graph primitives.
  auto in_forest(ForestIndex f) const {
    return [this, f](EdgeId e) { return assign_[e] == f; };
  }

  friend bool operator==(const Decomposition&, const Decomposition&) = default;

 private:
  std::size_t forests_ = 0;
  std::vector<ForestIndex> assign_;
};

/// A nonempty vertex set X with e(X) > r(|X| - 1).
struct Certificate {
  VertexSet vertices;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

using DecomposeResult = std::variant<Decomposition, Certificate>;

inline bool succeeded(const DecomposeResult& r) { return std::holds_alternative<Decomposition>(r); }

struct SubtreeClass {
  enum class Kind { Isolated, Peculiar, Neither };

  Kind kind = Kind::Neither;
  EdgeId witness = 0;  // meaningful only for Peculiar

  static SubtreeClass isolated() { return {Kind::Isolated, 0}; }
  static SubtreeClass peculiar(EdgeId w) { return {Kind::Peculiar, w}; }
  static SubtreeClass neither() { return {Kind::Neither, 0}; }

  bool eligible() const { return kind != Kind::Neither; }

  friend bool operator==(const SubtreeClass& a, const SubtreeClass& b) {
    return a.kind == b.kind && (a.kind != Kind::Peculiar || a.witness == b.witness);
  }
};

/// One exchange step performed while inserting an edge.
struct ExchangeTrace {
  EdgeId inserted_edge = 0;
  std::size_t iteration = 0;
  VertexSet component;  // C, the tree of forest 1 holding both ends
  ForestIndex deficient_forest = 0;
  VertexSet chosen_part;
  EdgeId crossing_edge = 0;             // moved from forest 1 to the deficient forest
  std::optional<EdgeId> witness_edge;  // moved back into forest 1 (peculiar case)
  const Decomposition* after = nullptr;  // state after the moves; valid during the callback
};

using ExchangeObserver = std::function<void(const ExchangeTrace&)>;

/// Thrown by arboricity() for graphs with a self-loop.
class UnboundedArboricity : public std::domain_error {
 public:
  explicit UnboundedArboricity(Vertex v)
      : std::domain_error("self-loop at vertex " + std::to_string(v) +
                          ": no number of forests suffices"),
        vertex_(v) {}
  Vertex vertex() const { return vertex_; }

 private:
  Vertex vertex_;
};

namespace detail {

inline constexpr std::size_t kNone = static_cast<std::size_t>(-1);

// Rooted traversal of the forest trees reached from some seeds. Vertex
// entries are restored by reset(), so one instance serves many calls.
struct ForestWalk {
  std::vector<std::size_t> tree_of;
  std::vector<EdgeId> parent_edge;
  std::vector<Vertex> parent;
  std::vector<std::size_t> below;
  std::vector<std::size_t> tree_total;  // part vertices per explored tree
  std::vector<Vertex> order;            // preorder, tree by tree
  std::vector<Vertex> stack;

  explicit ForestWalk(std::size_t n) : tree_of(n, kNone), parent_edge(n, kNone), parent(n, kNone), below(n, 0) {}

  // `arcs_of(x)` lists candidate arcs at x; those passing `keep` are forest edges.
  template <typename ArcsOf, EdgeFilter F>
  void explore(const ArcsOf& arcs_of, const F& keep, Vertex start) {
    if (tree_of[start] != kNone) return;
    const std::size_t tree = tree_total.size();
    tree_total.push_back(0);
    tree_of[start] = tree;
    stack.assign(1, start);
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      order.push_back(x);
      for (const auto [id, y] : arcs_of(x)) {
        if (!keep(id) || id == parent_edge[x]) continue;
        if (tree_of[y] != kNone) throw PreconditionError("edge subset is not a forest");
        tree_of[y] = tree;
        parent_edge[y] = id;
        parent[y] = x;
        stack.push_back(y);
      }
    }
  }

  void reset() {
    for (Vertex v : order) {
      tree_of[v] = kNone;
      parent_edge[v] = kNone;
      parent[v] = kNone;
      below[v] = 0;
    }
    order.clear();
    tree_total.clear();
  }
};

/**
   Labels each explored part Isolated / Peculiar / Neither. Part p is the
   set of vertices with `part_of[v] == p`; it contains `seeds[p]` and has
   `sizes[p]` vertices. Parts must be disjoint and connected in the forest,
   and `w` must already have explored every tree holding a part.

   `below[x]` counts part vertices in the subtree of x. Deleting the edge
   between x and its parent leaves `below[x]` of them on x's side and the
   rest of its tree on the other, which decides isolation in T - e1 for a
   part on either end.
 */
inline void label_parts(std::span<const Vertex> seeds, std::span<const std::size_t> sizes,
                        const std::vector<std::size_t>& part_of, ForestWalk& w,
                        std::vector<SubtreeClass>& out) {
  // Reverse preorder visits children before parents.
  for (std::size_t k = w.order.size(); k-- > 0;) {
    Vertex x = w.order[k];
    w.below[x] += part_of[x] != kNone ? 1 : 0;
    if (w.parent[x] != kNone) w.below[w.parent[x]] += w.below[x];
    else w.tree_total[w.tree_of[x]] = w.below[x];
  }

  out.assign(seeds.size(), SubtreeClass::neither());
  for (std::size_t p = 0; p < seeds.size(); ++p) {
    if (w.tree_total[w.tree_of[seeds[p]]] == sizes[p]) out[p] = SubtreeClass::isolated();
  }
  auto offer = [&](std::size_t p, EdgeId id) {
    SubtreeClass& c = out[p];
    if (c.kind == SubtreeClass::Kind::Isolated) return;
    if (c.kind == SubtreeClass::Kind::Neither || id < c.witness) c = SubtreeClass::peculiar(id);
  };
  for (Vertex x : w.order) {
    const Vertex u = w.parent[x];
    if (u == kNone || part_of[x] == part_of[u]) continue;
    const std::size_t on_x_side = w.below[x];
    if (part_of[x] != kNone && on_x_side == sizes[part_of[x]]) offer(part_of[x], w.parent_edge[x]);
    if (part_of[u] != kNone && w.tree_total[w.tree_of[x]] - on_x_side == sizes[part_of[u]]) {
      offer(part_of[u], w.parent_edge[x]);
    }
  }
}

}  // namespace detail

/**
   Classifies disjoint connected subtrees of the forest `t`.

   A part is Isolated when no other part shares its tree. Otherwise it is
   Peculiar when some forest edge outside every part, incident with the
   part, leaves it isolated once deleted; the smallest such edge id is the
   witness. Isolated wins when both apply.
 */
template <EdgeFilter F>
std::vector<SubtreeClass> classify_subtrees(const Graph& g, const F& t,
                                            std::span<const VertexSet> parts) {
  const std::size_t n = g.num_vertices();
  if (!is_forest(g, t)) throw PreconditionError("edge subset is not a forest");
  std::vector<std::size_t> part_of(n, detail::kNone);
  for (std::size_t p = 0; p < parts.size(); ++p) {
    if (parts[p].empty()) throw PreconditionError("empty part");
    for (Vertex v : parts[p]) {
      if (v >= n) throw PreconditionError("vertex id out of range");
      if (part_of[v] != detail::kNone) throw PreconditionError("parts overlap");
      part_of[v] = p;
    }
  }
  // Connectivity: the forest edges inside a part must form a spanning tree of it.
  std::vector<std::size_t> inner_edges(parts.size(), 0);
  for (EdgeId id = 0; id < g.num_edges(); ++id) {
    if (!t(id)) continue;
    const Edge& e = g.edge(id);
    if (part_of[e.u] != detail::kNone && part_of[e.u] == part_of[e.v]) ++inner_edges[part_of[e.u]];
  }
  for (std::size_t p = 0; p < parts.size(); ++p) {
    if (inner_edges[p] + 1 != parts[p].size()) throw PreconditionError("part is not connected");
  }
  std::vector<Vertex> seeds;
  std::vector<std::size_t> sizes;
  detail::ForestWalk walk(n);
  for (const VertexSet& part : parts) {
    seeds.push_back(part.front());
    sizes.push_back(part.size());
    walk.explore([&g](Vertex v) { return g.arcs(v); }, t, part.front());
  }
  std::vector<SubtreeClass> out;
  detail::label_parts(seeds, sizes, part_of, walk, out);
  return out;
}

namespace detail {

// Smallest i >= 2 with inside[i] + 1 < size.
inline std::optional<ForestIndex> first_deficient(std::span<const std::size_t> inside, std::size_t size) {
  for (ForestIndex i = 2; i < inside.size(); ++i) {
    if (inside[i] + 1 < size) return i;
  }
  return std::nullopt;
}

}  // namespace detail

/// Smallest i >= 2 whose forest has fewer than |c| - 1 edges inside c.
inline std::optional<ForestIndex> find_deficient_forest(const Graph& g, const Decomposition& d,
                                                        const VertexSet& c) {
  if (c.empty()) return std::nullopt;
  std::vector<char> in_c(g.num_vertices(), 0);
  for (Vertex v : c) in_c.at(v) = 1;
  std::vector<std::size_t> inside(d.forests() + 1, 0);
  for (Vertex x : c) {
    for (EdgeId id : g.incident(x)) {
      Vertex y = g.edge(id).other(x);
      if (!in_c[y] || y < x) continue;  // counted once, from the smaller endpoint
      ++inside[d.forest_of(id)];
    }
  }
  return detail::first_deficient(inside, c.size());
}

namespace detail {

// Per-forest incidence lists kept in step with a decomposition, plus the
// vertex-indexed buffers of one insertion.
struct InsertScratch {
  std::size_t n = 0;
  std::vector<std::vector<Arc>> arcs;  // (f - 1) * n + v
  std::vector<char> state;             // 1 inside C
  std::vector<EdgeId> parent_edge;
  std::vector<std::size_t> part_of;
  std::vector<Vertex> c;
  std::vector<Vertex> stack;
  std::vector<Vertex> seeds;
  std::vector<std::size_t> sizes;
  std::vector<Vertex> lowest;  // smallest vertex of each part
  std::vector<SubtreeClass> labels;
  ForestWalk walk;

  InsertScratch(const Graph& g, const Decomposition& d)
      : n(g.num_vertices()),
        arcs(d.forests() * n),
        state(n, 0),
        parent_edge(n, kNone),
        part_of(n, kNone),
        walk(n) {
    for (EdgeId id = 0; id < d.num_edges(); ++id) {
      if (d.forest_of(id) != kUnassigned) link(g, d.forest_of(id), id);
    }
  }

  std::span<const Arc> forest_arcs(ForestIndex f, Vertex v) const { return arcs[(f - 1) * n + v]; }

  void link(const Graph& g, ForestIndex f, EdgeId id) {
    const Edge& e = g.edges()[id];
    arcs[(f - 1) * n + e.u].push_back({id, e.v});
    arcs[(f - 1) * n + e.v].push_back({id, e.u});
  }

  void unlink(const Graph& g, ForestIndex f, EdgeId id) {
    const Edge& e = g.edges()[id];
    for (Vertex v : {e.u, e.v}) {
      auto& list = arcs[(f - 1) * n + v];
      auto it = std::find_if(list.begin(), list.end(), [id](const Arc& arc) { return arc.edge == id; });
      *it = list.back();
      list.pop_back();
    }
  }

  void place(const Graph& g, Decomposition& d, EdgeId id, ForestIndex f) {
    if (d.forest_of(id) != kUnassigned) unlink(g, d.forest_of(id), id);
    d.assign(id, f);
    link(g, f, id);
  }

  void clear_c() {
    for (Vertex x : c) {
      state[x] = 0;
      part_of[x] = kNone;
    }
    c.clear();
  }
};

// The result depends only on the forests, not on the order of the lists.
inline bool insert_edge_with(const Graph& g, Decomposition& partial, EdgeId e, const ExchangeObserver& observer,
                             InsertScratch& s, VertexSet& certificate) {
  const Vertex a = g.edge(e).u;
  const Vertex b = g.edge(e).v;
  std::size_t previous_size = g.num_vertices() + 1;

  for (std::size_t iteration = 0;; ++iteration) {
    // C: tree of forest 1 containing a, with parent pointers towards a.
    s.clear_c();
    s.state[a] = 1;
    s.parent_edge[a] = kNone;
    s.stack.assign(1, a);
    while (!s.stack.empty()) {
      Vertex x = s.stack.back();
      s.stack.pop_back();
      s.c.push_back(x);
      for (const auto [id, y] : s.forest_arcs(1, x)) {
        if (id == s.parent_edge[x]) continue;
        if (s.state[y] != 0) throw std::logic_error("forest 1 contains a cycle");
        s.state[y] = 1;
        s.parent_edge[y] = id;
        s.stack.push_back(y);
      }
    }
    if (s.c.size() >= previous_size) throw std::logic_error("exchange did not shrink C");
    previous_size = s.c.size();

    if (s.state[b] == 0) {
      s.clear_c();
      s.place(g, partial, e, 1);
      return true;
    }

    // Smallest i >= 2 with fewer than |C| - 1 edges inside C; each inner
    // edge shows up once from either end.
    ForestIndex fi = kUnassigned;
    for (ForestIndex f = 2; f <= partial.forests() && fi == kUnassigned; ++f) {
      std::size_t ends = 0;
      for (Vertex x : s.c) {
        for (const auto [id, y] : s.forest_arcs(f, x)) ends += s.state[y] != 0 ? 1 : 0;
      }
      if (ends / 2 + 1 < s.c.size()) fi = f;
    }
    if (fi == kUnassigned) {
      certificate = VertexSet(s.c);
      s.clear_c();
      return false;
    }

    // Parts are the components of (C, E_i restricted to C): in the rooted
    // trees of forest i, a vertex of C joins its parent's part when the
    // parent is in C too.
    ForestWalk& w = s.walk;
    const auto arcs_fi = [&s, fi](Vertex v) { return s.forest_arcs(fi, v); };
    for (Vertex x : s.c) w.explore(arcs_fi, [](EdgeId) { return true; }, x);
    s.seeds.clear();
    s.sizes.clear();
    s.lowest.clear();
    for (Vertex x : w.order) {
      if (s.state[x] == 0) continue;
      const Vertex u = w.parent[x];
      if (u != kNone && s.state[u] != 0) {
        const std::size_t p = s.part_of[u];
        s.part_of[x] = p;
        ++s.sizes[p];
        s.lowest[p] = std::min(s.lowest[p], x);
      } else {
        s.part_of[x] = s.seeds.size();
        s.seeds.push_back(x);
        s.sizes.push_back(1);
        s.lowest.push_back(x);
      }
    }
    label_parts(s.seeds, s.sizes, s.part_of, w, s.labels);
    w.reset();

    // Among eligible parts avoiding a, the one with the smallest vertex.
    std::size_t star = kNone;
    Vertex star_min = kNone;
    for (std::size_t p = 0; p < s.seeds.size(); ++p) {
      if (!s.labels[p].eligible() || s.part_of[a] == p) continue;
      if (s.lowest[p] < star_min) {
        star_min = s.lowest[p];
        star = p;
      }
    }
    if (star == kNone) throw std::logic_error("no isolated or peculiar part avoids a");

    const bool isolated = s.labels[star].kind == SubtreeClass::Kind::Isolated;
    Vertex v1 = star_min;
    if (!isolated) {
      const Edge& w = g.edge(s.labels[star].witness);
      v1 = s.part_of[w.u] == star ? w.u : w.v;
    }

    // Walk the tree path v1 -> a; the edge entering the chosen part closest to a is the crossing edge.
    EdgeId crossing = kNone;
    for (Vertex x = v1; x != a;) {
      const EdgeId pe = s.parent_edge[x];
      const Vertex up = g.edge(pe).other(x);
      if ((s.part_of[x] == star) != (s.part_of[up] == star)) crossing = pe;
      x = up;
    }
    if (crossing == kNone) throw std::logic_error("path never enters the chosen part");

    s.place(g, partial, crossing, fi);
    if (!isolated) s.place(g, partial, s.labels[star].witness, 1);

    if (observer) {
      ExchangeTrace trace;
      trace.inserted_edge = e;
      trace.iteration = iteration;
      trace.component = VertexSet(s.c);
      trace.deficient_forest = fi;
      std::vector<Vertex> chosen;
      for (Vertex x : s.c) {
        if (s.part_of[x] == star) chosen.push_back(x);
      }
      trace.chosen_part = VertexSet(std::move(chosen));
      trace.crossing_edge = crossing;
      if (!isolated) trace.witness_edge = s.labels[star].witness;
      trace.after = &partial;
      observer(trace);
    }
  }
}

}  // namespace detail

/**
   Adds edge `e` to a partial decomposition, keeping every forest acyclic.

   The new edge always goes to forest 1. While both its ends lie in one tree
   C of forest 1, an exchange with a forest i >= 2 that has fewer than
   |C| - 1 edges inside C shrinks the tree of forest 1 holding the first
   endpoint; when no such forest exists every class is saturated inside C
   and C itself is returned as a certificate.

   Edges still kUnassigned in `partial` (other than `e`) are ignored.
 */
inline DecomposeResult insert_edge(const Graph& g, Decomposition partial, EdgeId e,
                                   const ExchangeObserver& observer = {}) {
  if (partial.num_edges() != g.num_edges()) {
    throw PreconditionError("decomposition does not match graph");
  }
  if (e >= g.num_edges()) throw PreconditionError("edge id out of range");
  if (partial.forest_of(e) != kUnassigned) throw PreconditionError("edge already assigned");
  const Vertex a = g.edge(e).u;
  const Vertex b = g.edge(e).v;
  if (a == b) throw PreconditionError("self-loops cannot be inserted");
  if (partial.forests() == 0) return Certificate{VertexSet{a, b}};

  detail::InsertScratch scratch(g, partial);
  VertexSet cert;
  if (!detail::insert_edge_with(g, partial, e, observer, scratch, cert)) return Certificate{std::move(cert)};
  return partial;
}

/**
   Splits the edges of `g` into `forests` forests, or returns a vertex set
   violating e(X) <= forests * (|X| - 1).
 */
inline DecomposeResult decompose(const Graph& g, std::size_t forests,
                                 const ExchangeObserver& observer = {}) {
  if (auto loop = g.first_loop()) return Certificate{VertexSet{g.edge(*loop).u}};
  if (forests == 0) {
    if (g.num_edges() == 0) return Decomposition(0, 0);
    return Certificate{VertexSet{g.edge(0).u, g.edge(0).v}};
  }
  Decomposition d(forests, g.num_edges());
  detail::InsertScratch scratch(g, d);
  VertexSet cert;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (!detail::insert_edge_with(g, d, e, observer, scratch, cert)) return Certificate{std::move(cert)};
  }
  return d;
}

struct ArboricityResult {
  std::size_t forests = 0;
  Decomposition decomposition;
  /// Certificate against forests - 1; absent when forests == 0.
  std::optional<Certificate> lower_certificate;
};

/// Smallest number of forests covering `g`, with matching witnesses.
inline ArboricityResult arboricity(const Graph& g) {
  if (auto loop = g.first_loop()) throw UnboundedArboricity(g.edge(*loop).u);
  const std::size_t n = g.num_vertices();
  const std::size_t m = g.num_edges();
  const std::size_t lower = m == 0 ? 0 : (m + (n - 2)) / (n - 1);

  std::optional<Certificate> below;
  for (std::size_t r = lower;; ++r) {
    DecomposeResult result = decompose(g, r);
    if (auto* cert = std::get_if<Certificate>(&result)) {
      below = std::move(*cert);
      continue;
    }
    ArboricityResult out{r, std::move(std::get<Decomposition>(result)), std::move(below)};
    if (r > 0 && !out.lower_certificate) {
      // m > (r - 1)(n - 1) whenever r equals the counting bound.
      const VertexSet all = VertexSet::range(n);
      if (m > (r - 1) * (n - 1)) {
        out.lower_certificate = Certificate{all};
      } else {
        out.lower_certificate = std::get<Certificate>(decompose(g, r - 1));
      }
    }
    return out;
  }
}

}  // namespace nwf

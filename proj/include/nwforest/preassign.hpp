#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <unordered_set>
#include <utility>
#include <vector>

#include "nwforest/decompose.hpp"
#include "nwforest/graph.hpp"

namespace nwf {

/**
   Moves edges so that pins[i] ends up in forest i + 1, for every i.

   `d` must be a valid decomposition of `g`. Pins are processed in order and
   each step touches at most two edges: the pinned edge and, when its ends
   are already joined in the target forest, one edge of that tree path that
   reconnects the two halves of the source forest. Earlier pins are never
   disturbed because their forests differ from the current target.
 */
inline Decomposition preassign(const Graph& g, Decomposition d, std::span<const EdgeId> pins) {
  if (d.num_edges() != g.num_edges() || !d.is_total()) {
    throw PreconditionError("decomposition does not cover the graph");
  }
  if (pins.size() > d.forests()) throw PreconditionError("more pins than forests");
  std::unordered_set<EdgeId> seen;
  for (EdgeId e : pins) {
    if (e >= g.num_edges()) throw PreconditionError("pinned edge id out of range");
    if (!seen.insert(e).second) throw PreconditionError("edge pinned twice");
  }

  for (std::size_t k = 0; k < pins.size(); ++k) {
    const EdgeId pinned = pins[k];
    const ForestIndex target = k + 1;
    const ForestIndex source = d.forest_of(pinned);
    if (source == target) continue;

    const Edge& pe = g.edge(pinned);
    auto path = path_in_forest(g, d.in_forest(target), pe.u, pe.v);
    if (!path) {
      d.assign(pinned, target);
      continue;
    }

    // Components of the source forest with the pinned edge removed.
    DisjointSets halves(g.num_vertices());
    for (EdgeId id = 0; id < g.num_edges(); ++id) {
      if (id != pinned && d.forest_of(id) == source) halves.unite(g.edge(id).u, g.edge(id).v);
    }
    EdgeId swap_edge = detail::kNone;
    for (EdgeId id : *path) {
      if (!halves.same(g.edge(id).u, g.edge(id).v)) {
        swap_edge = id;
        break;
      }
    }
    if (swap_edge == detail::kNone) throw std::logic_error("no reconnecting edge on the path");
    d.assign(pinned, target);
    d.assign(swap_edge, source);
  }
  return d;
}

inline Decomposition preassign(const Graph& g, Decomposition d, std::initializer_list<EdgeId> pins) {
  return preassign(g, std::move(d), std::span<const EdgeId>(pins.begin(), pins.size()));
}

}  // namespace nwf

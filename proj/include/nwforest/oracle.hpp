#pragma once

// Exhaustive ground truth for small graphs. Nothing here calls into the
// exchange algorithm; these routines only count and enumerate.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nwforest/decompose.hpp"
#include "nwforest/graph.hpp"

namespace nwf {

class SizeLimitExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

struct ConditionReport {
  bool satisfied = true;
  VertexSet violator;     // empty when satisfied
  std::int64_t excess = 0;  // e(X) - r(|X| - 1), >= 1 when violated
};

/**
   Checks e(X) <= r(|X| - 1) over all 2^n - 1 nonempty vertex subsets.

   The reported violator maximises the excess; ties go to the smaller set,
   then to the earlier bitmask.
 */
inline ConditionReport check_condition(const Graph& g, std::size_t r, std::size_t max_n = 20) {
  const std::size_t n = g.num_vertices();
  if (n > max_n || n >= 63) {
    throw SizeLimitExceeded("check_condition: n = " + std::to_string(n) + " exceeds limit " +
                            std::to_string(max_n));
  }
  std::vector<std::uint64_t> masks;
  masks.reserve(g.num_edges());
  for (const Edge& e : g.edges()) masks.push_back((std::uint64_t{1} << e.u) | (std::uint64_t{1} << e.v));

  ConditionReport report;
  std::uint64_t best = 0;
  int best_size = 0;
  const auto rr = static_cast<std::int64_t>(r);
  for (std::uint64_t x = 1; x < (std::uint64_t{1} << n); ++x) {
    std::int64_t inside = 0;
    for (std::uint64_t m : masks) inside += (m & x) == m ? 1 : 0;
    const int size = std::popcount(x);
    const std::int64_t excess = inside - rr * (size - 1);
    if (excess <= 0) continue;
    if (best == 0 || excess > report.excess || (excess == report.excess && size < best_size)) {
      best = x;
      best_size = size;
      report.excess = excess;
    }
  }
  if (best != 0) {
    report.satisfied = false;
    std::vector<Vertex> vs;
    for (Vertex v = 0; v < n; ++v) {
      if (best >> v & 1) vs.push_back(v);
    }
    report.violator = VertexSet(std::move(vs));
  }
  return report;
}

/**
   Tries all r^m assignments in lexicographic order (edge 0 most
   significant, forest 1 first) and returns the first one whose classes are
   all acyclic. Branches are cut as soon as a class closes a cycle, which
   does not change which assignment comes first.
 */
inline std::optional<Decomposition> brute_decompose(const Graph& g, std::size_t r,
                                                    std::size_t max_m = 12) {
  const std::size_t m = g.num_edges();
  if (m > max_m) {
    throw SizeLimitExceeded("brute_decompose: m = " + std::to_string(m) + " exceeds limit " +
                            std::to_string(max_m));
  }
  if (r == 0) {
    if (m == 0) return Decomposition(0, 0);
    return std::nullopt;
  }
  std::vector<ForestIndex> assign(m, kUnassigned);

  // Forest check restricted to the first `upto` edges.
  auto class_acyclic = [&](ForestIndex f, std::size_t upto) {
    std::vector<Vertex> label(g.num_vertices());
    for (Vertex v = 0; v < label.size(); ++v) label[v] = v;
    for (EdgeId id = 0; id < upto; ++id) {
      if (assign[id] != f) continue;
      Vertex lu = label[g.edge(id).u];
      Vertex lv = label[g.edge(id).v];
      if (lu == lv) return false;
      for (Vertex& l : label) {
        if (l == lv) l = lu;
      }
    }
    return true;
  };

  std::size_t pos = 0;
  while (true) {
    if (pos == m) return Decomposition(r, assign);
    if (assign[pos] == r) {
      assign[pos] = kUnassigned;
      if (pos == 0) return std::nullopt;
      --pos;
      continue;
    }
    ++assign[pos];
    if (class_acyclic(assign[pos], pos + 1)) ++pos;
  }
}

/// Total over edge ids, indices in 1..r, every class acyclic.
inline bool verify_decomposition(const Graph& g, const Decomposition& d) {
  if (d.num_edges() != g.num_edges()) return false;
  for (ForestIndex f : d.assignment()) {
    if (f < 1 || f > d.forests()) return false;
  }
  for (ForestIndex f = 1; f <= d.forests(); ++f) {
    if (!is_forest(g, d.in_forest(f))) return false;
  }
  return true;
}

inline bool verify_certificate(const Graph& g, std::size_t r, const VertexSet& x) {
  if (x.empty()) return false;
  if (x.back() >= g.num_vertices()) return false;
  return restriction_edge_count(g, x) > r * (x.size() - 1);
}

inline bool verify_certificate(const Graph& g, std::size_t r, const Certificate& c) {
  return verify_certificate(g, r, c.vertices);
}

}  // namespace nwf

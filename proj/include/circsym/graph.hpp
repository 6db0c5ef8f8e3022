#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "circsym/vertex_set.hpp"

namespace circsym {

inline constexpr int kDefaultSizeCap = 512;

using Edge = std::pair<int, int>;

struct InducedSubgraph;

/// Immutable simple undirected graph on vertices 0..order-1, stored as one
/// adjacency bit row per vertex.
class Graph {
 public:
  Graph() = default;

  /// Throws kSizeCap when order exceeds size_cap, kOutOfRange on a bad
  /// endpoint. Self-loops are rejected; duplicate edges are merged.
  static Graph from_edges(int order, const std::vector<Edge>& edges,
                          int size_cap = kDefaultSizeCap);
  /// u~v iff adjacent(u, v) for u < v.
  static Graph from_predicate(int order, const std::function<bool(int, int)>& adjacent,
                              int size_cap = kDefaultSizeCap);

  int order() const { return static_cast<int>(rows_.size()); }
  int edge_count() const;

  bool adjacent(int u, int v) const { return rows_[u].contains(v); }
  const VertexSet& row(int u) const { return rows_[u]; }
  int degree(int u) const { return rows_[u].size(); }

  /// N(u); throws kOutOfRange.
  VertexSet open_neighborhood(int u) const;
  /// N[u] = N(u) + u; throws kOutOfRange.
  VertexSet closed_neighborhood(int u) const;

  /// Edges (i, j) with i < j in lexicographic order.
  std::vector<Edge> edges() const;

  Graph complement() const;
  InducedSubgraph induced_subgraph(const VertexSet& subset) const;

  bool is_connected() const;
  int component_count() const;
  /// Component label per vertex, components numbered by minimum vertex.
  std::vector<int> components() const;
  bool is_bipartite() const;
  /// Proper 2-coloring (0/1) with the minimum vertex of each component on
  /// side 0; nullopt when the graph is not bipartite.
  std::optional<std::vector<int>> two_coloring() const;
  bool has_triangle() const;
  long long triangle_count() const;
  /// The common degree, or nullopt for irregular graphs.
  std::optional<int> regular_degree() const;

  /// Applies `perm` (perm[v] = image of v) and reports whether it maps edges
  /// onto edges; perm must be a bijection of the vertex set.
  bool is_automorphism(const std::vector<int>& perm) const;

  /// `graph { i -- j; ... }` with every vertex listed first.
  std::string to_dot(const std::string& name = "") const;

  bool operator==(const Graph&) const = default;

 private:
  explicit Graph(std::vector<VertexSet> rows) : rows_(std::move(rows)) {}
  void check_vertex(int u) const;

  std::vector<VertexSet> rows_;
};

/// Subgraph induced on a vertex subset; vertex i of `graph` is labels[i] of
/// the parent.
struct InducedSubgraph {
  Graph graph;
  std::vector<int> labels;
};

}  // namespace circsym

#pragma once

// Backtracking search for color-preserving isomorphisms between two graphs,
// pruned by paired equitable refinement. With both sides equal it enumerates
// automorphisms; every other oracle in the library is built on it.

#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "circsym/graph.hpp"

namespace circsym {

using Permutation = std::vector<int>;

/// Return false to stop the search.
using LeafVisitor = std::function<bool(const Permutation&)>;

class PairedSearch {
 public:
  /// Ordered-partition state of one search node; colors are shared between
  /// the two sides so that equal color means "may map onto".
  struct Node {
    std::vector<int> source;
    std::vector<int> target;
    int num_colors = 0;
  };

  /// Empty color spans mean "all vertices one color". The graphs must have
  /// the same order.
  PairedSearch(const Graph& source, const Graph& target, std::span<const int> source_colors = {},
               std::span<const int> target_colors = {});

  /// Refined root after applying `prescribed` source->target assignments;
  /// nullopt when no isomorphism can satisfy them.
  std::optional<Node> root(std::span<const std::pair<int, int>> prescribed = {}) const;

  /// Source vertex the node branches on and its candidate images, or an
  /// empty candidate list for a discrete node.
  std::pair<int, std::vector<int>> branching(const Node& node) const;

  /// Individualizes source vertex `v` onto target vertex `w` and refines.
  std::optional<Node> extend(const Node& node, int v, int w) const;

  /// Depth-first search below `node`; returns false when the visitor stopped.
  bool run(const Node& node, const LeafVisitor& visit) const;

  /// Convenience: root + run.
  bool run(std::span<const std::pair<int, int>> prescribed, const LeafVisitor& visit) const;

  /// First leaf under the prescription, if any.
  std::optional<Permutation> first(std::span<const std::pair<int, int>> prescribed = {}) const;

 private:
  bool refine(Node& node) const;
  bool individualize(Node& node, int v, int w) const;
  std::optional<Permutation> leaf(const Node& node) const;

  const Graph& source_;
  const Graph& target_;
  std::vector<int> source_colors_;
  std::vector<int> target_colors_;
  bool compatible_ = true;
};

}  // namespace circsym

#include "circsym/search.hpp"

#include <algorithm>
#include <numeric>

#include "circsym/error.hpp"

namespace circsym {

PairedSearch::PairedSearch(const Graph& source, const Graph& target,
                           std::span<const int> source_colors, std::span<const int> target_colors)
    : source_(source), target_(target) {
  const int n = source.order();
  if (target.order() != n) {
    compatible_ = false;
    return;
  }
  auto take = [n](std::span<const int> colors) {
    if (colors.empty()) return std::vector<int>(n, 0);
    if (static_cast<int>(colors.size()) != n) {
      throw Error(ErrorCode::kInvalidArgument, "coloring size does not match graph order");
    }
    return std::vector<int>(colors.begin(), colors.end());
  };
  source_colors_ = take(source_colors);
  target_colors_ = take(target_colors);
}

// One paired refinement pass recolors every vertex by (color, sorted colors of
// its neighbors), ranking the signatures of both sides together. Any
// mismatch between the two sides' signature multisets kills the node.
bool PairedSearch::refine(Node& node) const {
  const int n = source_.order();
  std::vector<std::vector<int>> sig(2 * static_cast<std::size_t>(n));
  std::vector<int> order(2 * static_cast<std::size_t>(n));
  while (true) {
    for (int side = 0; side < 2; ++side) {
      const Graph& g = side == 0 ? source_ : target_;
      const std::vector<int>& col = side == 0 ? node.source : node.target;
      for (int v = 0; v < n; ++v) {
        auto& s = sig[side * n + v];
        s.clear();
        s.push_back(col[v]);
        g.row(v).for_each([&](int u) { s.push_back(col[u]); });
        std::sort(s.begin() + 1, s.end());
      }
    }
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return sig[a] < sig[b]; });
    int colors = 0;
    std::vector<int> fresh(2 * static_cast<std::size_t>(n));
    std::size_t i = 0;
    while (i < order.size()) {
      std::size_t j = i;
      int in_source = 0;
      while (j < order.size() && sig[order[j]] == sig[order[i]]) {
        if (order[j] < n) ++in_source;
        fresh[order[j]] = colors;
        ++j;
      }
      if (2 * in_source != static_cast<int>(j - i)) return false;
      ++colors;
      i = j;
    }
    for (int v = 0; v < n; ++v) {
      node.source[v] = fresh[v];
      node.target[v] = fresh[n + v];
    }
    if (colors == node.num_colors) return true;
    node.num_colors = colors;
  }
}

bool PairedSearch::individualize(Node& node, int v, int w) const {
  if (node.source[v] != node.target[w]) return false;
  node.source[v] = node.num_colors;
  node.target[w] = node.num_colors;
  ++node.num_colors;
  return refine(node);
}

std::optional<PairedSearch::Node> PairedSearch::root(
    std::span<const std::pair<int, int>> prescribed) const {
  if (!compatible_) return std::nullopt;
  const int n = source_.order();
  Node node;
  node.source = source_colors_;
  node.target = target_colors_;
  // Normalize the user colors to a shared dense range.
  std::vector<int> palette = source_colors_;
  palette.insert(palette.end(), target_colors_.begin(), target_colors_.end());
  std::sort(palette.begin(), palette.end());
  palette.erase(std::unique(palette.begin(), palette.end()), palette.end());
  auto rank = [&](int c) {
    return static_cast<int>(std::lower_bound(palette.begin(), palette.end(), c) - palette.begin());
  };
  for (int v = 0; v < n; ++v) {
    node.source[v] = rank(node.source[v]);
    node.target[v] = rank(node.target[v]);
  }
  node.num_colors = -1;  // force at least one full pass
  if (!refine(node)) return std::nullopt;
  for (auto [v, w] : prescribed) {
    if (v < 0 || v >= n || w < 0 || w >= n) {
      throw Error(ErrorCode::kOutOfRange, "prescribed vertex out of range");
    }
    if (!individualize(node, v, w)) return std::nullopt;
  }
  return node;
}

std::pair<int, std::vector<int>> PairedSearch::branching(const Node& node) const {
  const int n = source_.order();
  if (node.num_colors == n) return {-1, {}};
  std::vector<int> cell_size(node.num_colors, 0);
  for (int c : node.source) ++cell_size[c];
  // First vertex of the smallest non-singleton cell.
  int best = -1;
  for (int v = 0; v < n; ++v) {
    const int s = cell_size[node.source[v]];
    if (s > 1 && (best == -1 || s < cell_size[node.source[best]])) best = v;
  }
  std::vector<int> targets;
  for (int w = 0; w < n; ++w) {
    if (node.target[w] == node.source[best]) targets.push_back(w);
  }
  return {best, targets};
}

std::optional<PairedSearch::Node> PairedSearch::extend(const Node& node, int v, int w) const {
  Node child = node;
  if (!individualize(child, v, w)) return std::nullopt;
  return child;
}

std::optional<Permutation> PairedSearch::leaf(const Node& node) const {
  const int n = source_.order();
  std::vector<int> by_color(n);
  for (int w = 0; w < n; ++w) by_color[node.target[w]] = w;
  Permutation map(n);
  for (int v = 0; v < n; ++v) map[v] = by_color[node.source[v]];
  for (int v = 0; v < n; ++v) {
    if (source_.degree(v) != target_.degree(map[v])) return std::nullopt;
    bool ok = true;
    source_.row(v).for_each([&](int u) {
      if (!target_.adjacent(map[v], map[u])) ok = false;
    });
    if (!ok) return std::nullopt;
  }
  return map;
}

bool PairedSearch::run(const Node& node, const LeafVisitor& visit) const {
  auto [v, targets] = branching(node);
  if (v == -1) {
    if (auto map = leaf(node)) return visit(*map);
    return true;
  }
  for (int w : targets) {
    if (auto child = extend(node, v, w)) {
      if (!run(*child, visit)) return false;
    }
  }
  return true;
}

bool PairedSearch::run(std::span<const std::pair<int, int>> prescribed,
                       const LeafVisitor& visit) const {
  auto node = root(prescribed);
  if (!node) return true;
  return run(*node, visit);
}

std::optional<Permutation> PairedSearch::first(std::span<const std::pair<int, int>> prescribed) const {
  std::optional<Permutation> found;
  run(prescribed, [&](const Permutation& p) {
    found = p;
    return false;
  });
  return found;
}

}  // namespace circsym

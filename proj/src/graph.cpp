#include "circsym/graph.hpp"

#include <numeric>
#include <sstream>

#include "circsym/error.hpp"

namespace circsym {
namespace {

void check_order(int order, int size_cap) {
  if (order < 0) throw Error(ErrorCode::kOutOfRange, "negative graph order");
  if (order > size_cap) {
    throw Error(ErrorCode::kSizeCap, "graph order " + std::to_string(order) +
                                         " exceeds size cap " + std::to_string(size_cap));
  }
}

}  // namespace

Graph Graph::from_edges(int order, const std::vector<Edge>& edges, int size_cap) {
  check_order(order, size_cap);
  std::vector<VertexSet> rows(order, VertexSet(order));
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= order || v >= order) {
      throw Error(ErrorCode::kOutOfRange, "edge endpoint out of range");
    }
    if (u == v) throw Error(ErrorCode::kInvalidArgument, "self-loop at " + std::to_string(u));
    rows[u].insert(v);
    rows[v].insert(u);
  }
  return Graph(std::move(rows));
}

Graph Graph::from_predicate(int order, const std::function<bool(int, int)>& adjacent,
                            int size_cap) {
  check_order(order, size_cap);
  std::vector<VertexSet> rows(order, VertexSet(order));
  for (int u = 0; u < order; ++u) {
    for (int v = u + 1; v < order; ++v) {
      if (adjacent(u, v)) {
        rows[u].insert(v);
        rows[v].insert(u);
      }
    }
  }
  return Graph(std::move(rows));
}

int Graph::edge_count() const {
  int twice = 0;
  for (const auto& r : rows_) twice += r.size();
  return twice / 2;
}

void Graph::check_vertex(int u) const {
  if (u < 0 || u >= order()) {
    throw Error(ErrorCode::kOutOfRange,
                "vertex " + std::to_string(u) + " out of range for order " + std::to_string(order()));
  }
}

VertexSet Graph::open_neighborhood(int u) const {
  check_vertex(u);
  return rows_[u];
}

VertexSet Graph::closed_neighborhood(int u) const {
  check_vertex(u);
  VertexSet s = rows_[u];
  s.insert(u);
  return s;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < order(); ++u) {
    rows_[u].for_each([&](int v) {
      if (u < v) out.emplace_back(u, v);
    });
  }
  return out;
}

Graph Graph::complement() const {
  std::vector<VertexSet> rows;
  rows.reserve(order());
  for (int u = 0; u < order(); ++u) {
    VertexSet r = ~rows_[u];
    r.erase(u);
    rows.push_back(std::move(r));
  }
  return Graph(std::move(rows));
}

InducedSubgraph Graph::induced_subgraph(const VertexSet& subset) const {
  InducedSubgraph out;
  out.labels = subset.members();
  const int m = static_cast<int>(out.labels.size());
  std::vector<VertexSet> rows(m, VertexSet(m));
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (adjacent(out.labels[i], out.labels[j])) {
        rows[i].insert(j);
        rows[j].insert(i);
      }
    }
  }
  out.graph = Graph(std::move(rows));
  return out;
}

std::vector<int> Graph::components() const {
  const int n = order();
  std::vector<int> label(n, -1);
  int next = 0;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (label[s] != -1) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      rows_[u].for_each([&](int v) {
        if (label[v] == -1) {
          label[v] = next;
          stack.push_back(v);
        }
      });
    }
    ++next;
  }
  return label;
}

int Graph::component_count() const {
  const auto label = components();
  int count = 0;
  for (int l : label) count = std::max(count, l + 1);
  return count;
}

bool Graph::is_connected() const { return component_count() <= 1; }

std::optional<std::vector<int>> Graph::two_coloring() const {
  const int n = order();
  std::vector<int> side(n, -1);
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      bool clash = false;
      rows_[u].for_each([&](int v) {
        if (side[v] == -1) {
          side[v] = 1 - side[u];
          stack.push_back(v);
        } else if (side[v] == side[u]) {
          clash = true;
        }
      });
      if (clash) return std::nullopt;
    }
  }
  return side;
}

bool Graph::is_bipartite() const { return two_coloring().has_value(); }

bool Graph::has_triangle() const {
  for (int u = 0; u < order(); ++u) {
    bool found = false;
    rows_[u].for_each([&](int v) {
      if (!found && u < v && rows_[u].intersects(rows_[v])) found = true;
    });
    if (found) return true;
  }
  return false;
}

long long Graph::triangle_count() const {
  long long total = 0;
  for (int u = 0; u < order(); ++u) {
    rows_[u].for_each([&](int v) {
      if (u < v) total += (rows_[u] & rows_[v]).size();
    });
  }
  return total / 3;
}

std::optional<int> Graph::regular_degree() const {
  if (rows_.empty()) return 0;
  const int d = degree(0);
  for (int u = 1; u < order(); ++u) {
    if (degree(u) != d) return std::nullopt;
  }
  return d;
}

bool Graph::is_automorphism(const std::vector<int>& perm) const {
  const int n = order();
  if (static_cast<int>(perm.size()) != n) return false;
  std::vector<char> seen(n, 0);
  for (int v : perm) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  // A bijection that maps edges to edges maps non-edges to non-edges too,
  // since the edge count is finite and preserved.
  for (int u = 0; u < n; ++u) {
    if (degree(perm[u]) != degree(u)) return false;
    bool ok = true;
    rows_[u].for_each([&](int v) {
      if (!rows_[perm[u]].contains(perm[v])) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

std::string Graph::to_dot(const std::string& name) const {
  std::ostringstream out;
  out << "graph " << (name.empty() ? std::string() : name + " ") << "{\n";
  for (int v = 0; v < order(); ++v) out << "  " << v << ";\n";
  for (auto [u, v] : edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace circsym

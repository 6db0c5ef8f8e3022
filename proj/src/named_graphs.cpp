#include "circsym/named_graphs.hpp"

#include <bit>
#include <cctype>
#include <string>

#include "circsym/error.hpp"

namespace circsym::named {

Graph complete(int n) {
  return Graph::from_predicate(n, [](int, int) { return true; });
}

Graph empty(int n) {
  return Graph::from_predicate(n, [](int, int) { return false; });
}

Graph cycle(int n) {
  if (n < 3) throw Error(ErrorCode::kInvalidArgument, "cycle needs at least 3 vertices");
  return Graph::from_predicate(n, [n](int u, int v) { return v - u == 1 || v - u == n - 1; });
}

Graph complete_bipartite(int a, int b) {
  return Graph::from_predicate(a + b, [a](int u, int v) { return (u < a) != (v < a); });
}

Graph hypercube(int dim) {
  return Graph::from_predicate(1 << dim, [](int u, int v) { return std::popcount(unsigned(u ^ v)) == 1; });
}

Graph icosahedron() {
  // 0 top, 1..5 upper ring, 6..10 lower ring, 11 bottom.
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    const int up = 1 + i;
    const int up_next = 1 + (i + 1) % 5;
    const int low = 6 + i;
    const int low_next = 6 + (i + 1) % 5;
    edges.emplace_back(0, up);
    edges.emplace_back(up, up_next);
    edges.emplace_back(up, low);
    edges.emplace_back(up_next, low);
    edges.emplace_back(low, low_next);
    edges.emplace_back(low, 11);
  }
  return Graph::from_edges(12, edges);
}

Graph direct_product(const Graph& g, const Graph& h) {
  const int m = h.order();
  return Graph::from_predicate(g.order() * m, [&](int p, int q) {
    return g.adjacent(p / m, q / m) && h.adjacent(p % m, q % m);
  });
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  const int m = h.order();
  return Graph::from_predicate(g.order() * m, [&](int p, int q) {
    if (p / m == q / m) return h.adjacent(p % m, q % m);
    return p % m == q % m && g.adjacent(p / m, q / m);
  });
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  const int a = g.order();
  return Graph::from_predicate(a + h.order(), [&](int u, int v) {
    if (u < a && v < a) return g.adjacent(u, v);
    if (u >= a && v >= a) return h.adjacent(u - a, v - a);
    return false;
  });
}

Graph crown(int k) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "crown needs k >= 1");
  return cartesian_product(complete(k), complete(2)).complement();
}

Graph by_name(const std::string& raw) {
  std::string name;
  for (char c : raw) name.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  auto suffix_int = [&](std::size_t prefix) -> int {
    const std::string rest = name.substr(prefix);
    if (rest.empty() || rest.find_first_not_of("0123456789") != std::string::npos) {
      throw Error(ErrorCode::kInvalidArgument, "unknown graph name '" + raw + "'");
    }
    return std::stoi(rest);
  };
  if (name == "icosahedron") return icosahedron();
  if (name == "envelope") return cartesian_product(complete(3), complete(2));
  if (name.starts_with("crown")) return crown(suffix_int(5));
  if (name.starts_with("k")) return complete(suffix_int(1));
  if (name.starts_with("n")) return empty(suffix_int(1));
  if (name.starts_with("c")) return cycle(suffix_int(1));
  if (name.starts_with("q")) return hypercube(suffix_int(1));
  throw Error(ErrorCode::kInvalidArgument, "unknown graph name '" + raw + "'");
}

}  // namespace circsym::named

#include "circsym/cotwins.hpp"

#include <algorithm>
#include <stdexcept>

#include "circsym/error.hpp"

namespace circsym {

std::vector<int> CoTwinPairing::partner(int order) const {
  std::vector<int> out(order, -1);
  for (auto [u, v] : pairs) {
    out[u] = v;
    out[v] = u;
  }
  return out;
}

CoTwinPairing detect_cotwins_generic(const Graph& g) {
  if (detect_twins_generic(g).kind != TwinKind::kNone) {
    throw Error(ErrorCode::kNotTwinFree, "co-twin detection requires a twin-free graph");
  }
  const int n = g.order();
  std::vector<std::pair<int, int>> nonadj;
  std::vector<std::pair<int, int>> adj;
  for (int u = 0; u < n; ++u) {
    const VertexSet cu = g.closed_neighborhood(u);
    const VertexSet ou = g.open_neighborhood(u);
    for (int v = u + 1; v < n; ++v) {
      const VertexSet cv = g.closed_neighborhood(v);
      if (!cu.intersects(cv) && cu.size() + cv.size() == n) nonadj.emplace_back(u, v);
      const VertexSet ov = g.open_neighborhood(v);
      if (!ou.intersects(ov) && ou.size() + ov.size() == n) adj.emplace_back(u, v);
    }
  }
  CoTwinPairing out;
  if (!nonadj.empty()) {
    out.kind = TwinKind::kNonadjacent;
    out.pairs = std::move(nonadj);
  } else if (!adj.empty()) {
    out.kind = TwinKind::kAdjacent;
    out.pairs = std::move(adj);
  }
  out.perfect = n > 0 && static_cast<int>(out.pairs.size()) * 2 == n;
  return out;
}

namespace {

bool nonadjacent_condition(const ConnectionSet& set) {
  const int n = set.modulus();
  if (n % 2 != 0) return false;
  const int k = n / 2;
  if (set.contains(k) || set.size() != k - 1) return false;
  return std::none_of(set.members().begin(), set.members().end(),
                      [&](int a) { return set.contains((a + k) % n); });
}

}  // namespace

CoTwinPairing detect_cotwins_circulant(const ConnectionSet& set) {
  if (detect_twins_circulant(set).kind != TwinKind::kNone) {
    throw Error(ErrorCode::kNotTwinFree, set.canonical_name() + " has twins");
  }
  CoTwinPairing out;
  const int n = set.modulus();
  if (n % 2 != 0) return out;
  const int k = n / 2;
  if (nonadjacent_condition(set)) {
    out.kind = TwinKind::kNonadjacent;
  } else if (nonadjacent_condition(complement_set(set))) {
    out.kind = TwinKind::kAdjacent;
  } else {
    return out;
  }
  if (k % 2 == 0) {
    throw std::logic_error("twin-free circulant with co-twins and even k: " + set.canonical_name());
  }
  for (int u = 0; u < k; ++u) out.pairs.emplace_back(u, u + k);
  out.perfect = true;
  return out;
}

std::optional<CrownWitness> recognize_crown(const Graph& g) {
  const int n = g.order();
  if (n % 2 != 0 || n < 6) return std::nullopt;
  const int k = n / 2;
  if (g.regular_degree() != k - 1 || !g.is_connected()) return std::nullopt;
  auto side = g.two_coloring();
  if (!side) return std::nullopt;
  CrownWitness w;
  w.k = k;
  for (int v = 0; v < n; ++v) ((*side)[v] == 0 ? w.side_a : w.side_b).push_back(v);
  if (static_cast<int>(w.side_a.size()) != k) return std::nullopt;
  std::vector<char> used(n, 0);
  for (int a : w.side_a) {
    int missing = -1;
    int count = 0;
    for (int b : w.side_b) {
      if (!g.adjacent(a, b)) {
        missing = b;
        ++count;
      }
    }
    if (count != 1 || used[missing]) return std::nullopt;
    used[missing] = 1;
    w.removed_matching.emplace_back(a, missing);
  }
  return w;
}

std::optional<ConnectionSet> crown_circulant_spec(int k) {
  if (k < 3) throw Error(ErrorCode::kInvalidArgument, "crown graphs need k >= 3");
  if (k % 2 == 0) return std::nullopt;
  const int n = 2 * k;
  std::vector<int> members;
  for (int a = 1; a < n; a += 2) {
    if (a != k) members.push_back(a);
  }
  return ConnectionSet::from_members(n, std::move(members));
}

InducedSubgraph neighborhood_subgraph(const Graph& g, int u) {
  return g.induced_subgraph(g.open_neighborhood(u));
}

}  // namespace circsym

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "circsym/circulant.hpp"
#include "circsym/graph.hpp"
#include "circsym/twins.hpp"

namespace circsym {

struct CoTwinPairing {
  /// kNonadjacent: N[u] and N[v] partition V. kAdjacent: N(u) and N(v) do.
  TwinKind kind = TwinKind::kNone;
  /// Pairs (u, v) with u < v, ordered by u.
  std::vector<std::pair<int, int>> pairs;
  /// True when the pairs cover every vertex.
  bool perfect = false;

  /// Partner of every vertex, -1 where there is none.
  std::vector<int> partner(int order) const;
};

/// Throws kNotTwinFree if the graph has twins. Nonadjacent co-twins win when
/// both kinds occur (possible only outside vertex-transitive inputs).
CoTwinPairing detect_cotwins_generic(const Graph& g);

/// Algebraic test for C_{2k}(A): k not in A, |A| = k-1 and k + A misses A,
/// pairing u with u + k. Adjacent co-twins are found through the
/// complement. Odd n yields kNone. Throws kNotTwinFree.
CoTwinPairing detect_cotwins_circulant(const ConnectionSet& set);

struct CrownWitness {
  int k = 0;
  std::vector<int> side_a;
  std::vector<int> side_b;
  /// (a, b) with a in side_a and b the unique non-neighbor of a in side_b.
  std::vector<std::pair<int, int>> removed_matching;
};

/// Recognizes K_{k,k} minus a perfect matching, k >= 3.
std::optional<CrownWitness> recognize_crown(const Graph& g);

/// C_{2k}(+-1, +-3, ..., +-(k-2)) for odd k >= 3; nullopt for even k.
std::optional<ConnectionSet> crown_circulant_spec(int k);

/// H_u: the subgraph induced by N(u), with labels back into g.
InducedSubgraph neighborhood_subgraph(const Graph& g, int u);

}  // namespace circsym

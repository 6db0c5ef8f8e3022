#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "circsym/autgroup.hpp"
#include "circsym/graph.hpp"

namespace circsym {

enum class Mode { kFormula, kExhaustive, kBoth };

struct SearchBudget {
  std::size_t group_limit = kDefaultAutomorphismLimit;
  /// Search-tree nodes allowed per exhaustive run before giving up.
  std::size_t node_limit = 20'000'000;
  /// Groups up to this order are listed explicitly for coloring searches;
  /// larger ones are queried through the refinement search instead.
  std::size_t explicit_group_limit = 20'000;
};

/// A determining or distinguishing number, exact when lo == hi.
struct SymmetryValue {
  int lo = 0;
  int hi = 0;
  /// "Cor-DetTwins", "Thm-DistTwins", "crown", "StabAut" or "exhaustive".
  std::string method;
  /// Exact value from exhaustive search, when it ran and finished.
  std::optional<int> exhaustive;
  /// Determining set, or a distinguishing coloring (one color per vertex).
  std::vector<int> witness;

  bool exact() const { return lo == hi; }
  bool consistent() const { return lo <= hi && (!exhaustive || (lo <= *exhaustive && *exhaustive <= hi)); }
};

/// Smallest d >= 1 with C(d, t) >= d_quotient. Throws kInvalidArgument for
/// t < 2 or d_quotient < 1.
int dist_twin_recursion(int t, int d_quotient);

/// Smallest d with (d-1)^2 <= k <= d^2 - 1.
int crown_distinguishing(int k);

/// All twin-class members except the smallest of each class.
std::vector<int> minimum_twin_cover(const Graph& g);

bool is_determining(const Graph& g, const std::vector<int>& set);
bool is_distinguishing(const PermutationList& group, const std::vector<int>& coloring);
/// Same question answered by a colored automorphism search.
bool is_distinguishing(const Graph& g, const std::vector<int>& coloring);

/// Minimum determining set by iterative deepening over orbit representatives
/// of pointwise stabilizers. nullopt when the node budget runs out.
std::optional<std::vector<int>> exhaustive_determining_set(const Graph& g,
                                                           std::size_t node_limit = SearchBudget{}.node_limit);

enum class SearchOutcome { kFound, kNone, kBudget };

struct ColoringSearch {
  SearchOutcome outcome = SearchOutcome::kNone;
  std::vector<int> coloring;
  std::size_t nodes = 0;
};

/// Looks for a coloring with at most `colors` colors fixed only by the
/// identity of `group`. Colorings are canonical (colors appear in increasing
/// order of first use).
ColoringSearch distinguishing_coloring(const PermutationList& group, int colors,
                                       std::size_t node_limit = SearchBudget{}.node_limit);

/// Same search without an explicit group: a partial coloring is abandoned
/// once some nontrivial automorphism fixing every uncolored vertex preserves
/// it.
ColoringSearch distinguishing_coloring(const Graph& g, int colors,
                                       std::size_t node_limit = SearchBudget{}.node_limit);

/// Smallest palette admitting a distinguishing coloring, with that coloring.
std::optional<std::pair<int, std::vector<int>>> exhaustive_distinguishing(
    const PermutationList& group, std::size_t node_limit = SearchBudget{}.node_limit);
std::optional<std::pair<int, std::vector<int>>> exhaustive_distinguishing(
    const Graph& g, std::size_t node_limit = SearchBudget{}.node_limit);

/// Formulas apply to vertex-transitive inputs only; pass `vertex_transitive`
/// when that is already known, otherwise the oracle decides.
SymmetryValue determining_number(const Graph& g, Mode mode, const SearchBudget& budget = {},
                                 std::optional<bool> vertex_transitive = std::nullopt);
SymmetryValue distinguishing_number(const Graph& g, Mode mode, const SearchBudget& budget = {},
                                    std::optional<bool> vertex_transitive = std::nullopt);

struct SymmetryReport {
  GroupStructure group;
  SymmetryValue det;
  SymmetryValue dist;
  std::optional<bool> arc_transitive;
};

SymmetryReport analyze_symmetry(const ConnectionSet& set, Mode mode, const SearchBudget& budget = {},
                                bool with_arc_transitivity = true);

}  // namespace circsym

#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "circsym/circulant.hpp"
#include "circsym/graph.hpp"
#include "circsym/twins.hpp"

namespace circsym {

/// Which row of the two- or three-generator twin tables a spec falls under.
/// Sporadic rows win over the families they also satisfy (C_8(1,3) has
/// i+j = n/2 but w = 2).
struct PatternMatch {
  TwinKind kind = TwinKind::kNone;
  int w = 0;
  std::string pattern;
};

std::optional<PatternMatch> table1_pattern(int n, int i, int j);
std::optional<PatternMatch> table2_pattern(int n, int i, int j, int k);

/// A twin-bearing C_n(i, j) or C_n(i, j, k) (k = 0 for two generators).
struct TableRow {
  ConnectionSet set;
  int i = 0;
  int j = 0;
  int k = 0;
  TwinKind kind = TwinKind::kNone;
  int w = 0;
  /// Table row label, empty when no pattern matched.
  std::string pattern;
};

/// Connected C_n(i, j), 0 < i < j <= n/2, 4 <= n <= max_n, that have twins.
std::vector<TableRow> classify_two_generator(int max_n);
std::vector<TableRow> classify_two_generator_serial(int max_n);
/// Connected C_n(i, j, k), 0 < i < j < k <= n/2, n <= max_n, with twins.
std::vector<TableRow> classify_three_generator(int max_n);
std::vector<TableRow> classify_three_generator_serial(int max_n);

/// Every connected spec where detection and the table predicate disagree on
/// presence, kind or w; empty means the table is reproduced.
std::vector<std::string> table_mismatches(int generators, int max_n);

std::string table_csv(const std::vector<TableRow>& rows, int generators);

struct Fingerprint {
  int order = 0;
  int valency = 0;
  int components = 0;
  bool bipartite = false;
  long triangles = 0;
  /// Sorted (adjacent?, |N(u) & N(v)|) over all pairs u < v.
  std::vector<std::pair<bool, int>> common_neighbors;

  auto operator<=>(const Fingerprint&) const = default;
};

Fingerprint fingerprint(const Graph& g);

enum class PairVerdict { kFingerprint, kOracle, kIsomorphic, kUnresolved };

std::string_view pair_verdict_name(PairVerdict verdict);

struct PairCertificate {
  int a = 0;
  int b = 0;
  PairVerdict verdict = PairVerdict::kUnresolved;
};

/// Pairwise non-isomorphism evidence: fingerprints first, then the
/// isomorphism oracle up to `oracle_max_n` vertices.
std::vector<PairCertificate> certify_pairwise(const std::vector<ConnectionSet>& specs, int oracle_max_n = 24);

struct SpecFamily {
  std::vector<ConnectionSet> specs;
  std::vector<PairCertificate> certificates;

  bool all_distinct() const;
  bool fingerprints_distinct() const;
};

/// Nonempty unions of inverse-closed blocks of nontrivial cosets of <w>.
/// Empty when <w> is trivial or all of Z_n.
SpecFamily enumerate_with_twin_classes(int n, int w);

/// Twin-free C_n(A) with |A| = n/2 - 1 and nonadjacent co-twins, one per
/// multiplier class. Empty for odd n.
SpecFamily enumerate_twinfree_cotwin_circulants(int n);

}  // namespace circsym

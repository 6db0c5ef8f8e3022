#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "circsym/circulant.hpp"
#include "circsym/graph.hpp"

namespace circsym {

enum class TwinKind { kNone, kNonadjacent, kAdjacent };

std::string_view twin_kind_name(TwinKind kind);

struct TwinPartition {
  TwinKind kind = TwinKind::kNone;
  /// Coset generator w (circulant detection only).
  std::optional<int> generator;
  /// Classes ordered by minimum vertex; they partition V unless kind is kNone.
  std::vector<std::vector<int>> classes;
  /// Common class size t, or 0 when class sizes differ.
  int class_size = 1;
  /// Further generators passing the coset test, by decreasing subgroup order
  /// (circulant detection only).
  std::vector<int> rejected_generators;

  bool uniform() const { return class_size > 0; }
};

/// Groups vertices with equal open neighborhoods; if every group is a
/// singleton, groups by closed neighborhoods instead.
TwinPartition detect_twins_generic(const Graph& g);

/// Coset characterization: the largest <w> (w = n/d over divisors 1 < d < n)
/// such that A, or failing that A + {0}, is a union of cosets. The empty and
/// complete circulants report w = 1.
TwinPartition detect_twins_circulant(const ConnectionSet& set);

/// Every w = n/d (1 < d < n) for which the coset test passes, by decreasing
/// subgroup order.
std::vector<int> coset_generators(const ConnectionSet& set, TwinKind kind);

struct QuotientStep {
  Graph input;
  TwinKind kind = TwinKind::kNone;
  int class_size = 0;
  Graph quotient;
  std::optional<ConnectionSet> input_set;
  std::optional<ConnectionSet> quotient_set;
};

/// Collapses each class to one vertex (class i becomes vertex i). Throws
/// kPartitionKindNone.
QuotientStep quotient(const Graph& g, const TwinPartition& partition);

/// C_m(A mod m) for a nonadjacent partition with classes of size n/m. Throws
/// kWrongKind for other kinds.
ConnectionSet quotient_circulant(const ConnectionSet& set, const TwinPartition& partition);

struct QuotientSequence {
  std::vector<QuotientStep> steps;
  Graph terminal;
  std::optional<ConnectionSet> terminal_set;
};

/// Detect-and-collapse until twin-free.
QuotientSequence quotient_sequence(const Graph& g);
/// Same chain with a circulant spec at every step; adjacent steps go through
/// the complement.
QuotientSequence quotient_sequence(const ConnectionSet& set);

}  // namespace circsym

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "circsym/graph.hpp"

namespace circsym {

/// Inverse-closed subset A of Z_n \ {0}.
class ConnectionSet {
 public:
  ConnectionSet() = default;

  /// Validates and canonicalizes (sorted, deduplicated). Throws
  /// kZeroGenerator, kNotInverseClosed or kOutOfRange.
  static ConnectionSet from_members(int n, std::vector<int> members);

  int modulus() const { return modulus_; }
  const std::vector<int>& members() const { return members_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool contains(int x) const;

  /// C_n(a1,a2,...) with members ascending.
  std::string canonical_name() const;
  /// Shorthand with ± pairs, e.g. C_8(±1,±3,4).
  std::string pm_name() const;

  bool operator==(const ConnectionSet&) const = default;
  auto operator<=>(const ConnectionSet&) const = default;

 private:
  ConnectionSet(int n, std::vector<int> members) : modulus_(n), members_(std::move(members)) {}

  int modulus_ = 1;
  std::vector<int> members_;
};

/// Parses comma- or space-separated tokens: `a`, `-a`, `±a` (or `+-a`).
/// `±a` expands to {a, n-a}; a bare `a` needs its inverse listed unless
/// 2a = 0 mod n.
ConnectionSet parse_connection_set(int n, std::string_view tokens);

struct CirculantSpec {
  ConnectionSet set;
  int valency = 0;
  int component_count = 1;  // gcd(n, A) with gcd(n, {}) = n
  bool connected = true;
  bool bipartite = false;
};

CirculantSpec describe(const ConnectionSet& set);

/// C_n(A): u~v iff u - v in A.
Graph build(const ConnectionSet& set);

/// Z_n \ ({0} + A).
ConnectionSet complement_set(const ConnectionSet& set);

/// t * A (t a unit, so the result stays a valid connection set).
ConnectionSet multiply(const ConnectionSet& set, int t);

/// {t in U(n) : t * A = A}, ascending.
std::vector<int> multiplier_stabilizer(const ConnectionSet& set);

/// Smallest unit t with t * A = B, if any. A negative answer says nothing
/// about isomorphism.
std::optional<int> multiplier_isomorphic(const ConnectionSet& a, const ConnectionSet& b);

/// Every valid connection set of Z_n, ordered by their member lists.
std::vector<ConnectionSet> all_connection_sets(int n);

/// Smallest set (in member-list order) among {t * A : t in U(n)}.
ConnectionSet multiplier_canonical(const ConnectionSet& set);

}  // namespace circsym

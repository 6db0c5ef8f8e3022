#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "circsym/circulant.hpp"
#include "circsym/cotwins.hpp"
#include "circsym/graph.hpp"
#include "circsym/group_expr.hpp"
#include "circsym/search.hpp"
#include "circsym/twins.hpp"

namespace circsym {

inline constexpr std::size_t kDefaultAutomorphismLimit = 1'000'000;

/// Explicit automorphisms in lexicographic order of their image arrays.
struct PermutationList {
  int degree = 0;
  std::vector<Permutation> elements;

  std::size_t size() const { return elements.size(); }
};

/// All automorphisms fixing each vertex of `fixed`. Top-level branches run
/// on OpenMP threads. Throws kLimitExceeded past `limit` elements.
PermutationList enumerate_automorphisms(const Graph& g, std::size_t limit = kDefaultAutomorphismLimit,
                                        const std::vector<int>& fixed = {});
/// Single-threaded reference for enumerate_automorphisms.
PermutationList enumerate_automorphisms_serial(const Graph& g,
                                               std::size_t limit = kDefaultAutomorphismLimit,
                                               const std::vector<int>& fixed = {});

/// Automorphisms fixing u.
PermutationList stabilizer(const Graph& g, int u, std::size_t limit = kDefaultAutomorphismLimit);

/// Orbit label (smallest member) of every vertex under the pointwise
/// stabilizer of `fixed`.
std::vector<int> vertex_orbits(const Graph& g, const std::vector<int>& fixed = {});

/// |pointwise stabilizer of fixed| as a product of basic orbit lengths along
/// a base; never materializes the group.
BigInt count_automorphisms(const Graph& g, const std::vector<int>& fixed = {});

/// True iff the pointwise stabilizer of `fixed` is the identity.
bool fixes_only_identity(const Graph& g, const std::vector<int>& fixed);

std::optional<Permutation> find_isomorphism(const Graph& a, const Graph& b);

bool is_vertex_transitive(const Graph& g);
/// Transitive on ordered pairs of adjacent vertices (and on vertices).
bool is_arc_transitive(const Graph& g);

struct OracleOrder {
  BigInt order;
  BigInt stabilizer_order;
  int orbit_size = 0;
  bool vertex_transitive = false;
  /// Whether stab(0) was enumerated explicitly (within the limit).
  bool enumerated = false;
};

/// |Aut| by orbit-stabilizer at vertex 0: |orbit(0)| * |stab(0)|.
OracleOrder oracle_order(const Graph& g, std::size_t limit = kDefaultAutomorphismLimit);

enum class StructureSource { kTwinQuotient, kCrown, kNeighborhoodStabilizer, kOracle };

std::string_view structure_source_name(StructureSource source);

struct GroupStructure {
  BigInt order;
  GroupExpr expression = GroupExpr::trivial();
  StructureSource source = StructureSource::kOracle;
  /// Set when the input lies outside the decomposition's hypotheses
  /// (e.g. non-uniform twin classes).
  bool outside_hypothesis = false;
  std::string note;
};

/// Decision cascade: twins -> quotient recursion; co-twins and triangle-free
/// -> S_k x S_2; co-twins with triangles -> n * |Aut(H_0)|; otherwise the
/// oracle. Inputs are treated as vertex-transitive; pass `certified` false to
/// have the oracle check it.
GroupStructure structural_order(const Graph& g, bool certified = false);
GroupStructure structural_order(const ConnectionSet& set);

/// The involution swapping every co-twin pair. Throws kBetaNotAutomorphism
/// if it is not an automorphism.
Permutation cotwin_swap(const Graph& g, const CoTwinPairing& pairing);

/// Among `group`, exactly the identity and the swap fix every pair setwise.
bool kappa_kernel_check(const Graph& g, const CoTwinPairing& pairing, const PermutationList& group);

struct KappaImage {
  std::size_t image_size = 0;
  BigInt full_symmetric_order;
  bool surjective = false;
};

/// Image of the induced action on collapsed pairs.
KappaImage kappa_surjectivity(const CoTwinPairing& pairing, const PermutationList& group);

struct ClassAction {
  std::size_t image_size = 0;    // distinct induced permutations of classes
  std::size_t kernel_size = 0;   // elements inducing the identity
  bool image_in_quotient_group = true;
};

/// Permutations induced on twin classes by `group`, checked against the
/// quotient graph.
ClassAction twin_class_action(const TwinPartition& partition, const Graph& quotient,
                              const PermutationList& group);

}  // namespace circsym

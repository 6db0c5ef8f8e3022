#include "circsym/autgroup.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <set>

#include "circsym/error.hpp"

namespace circsym {
namespace {

std::vector<std::pair<int, int>> pin(const std::vector<int>& fixed) {
  std::vector<std::pair<int, int>> out;
  out.reserve(fixed.size());
  for (int v : fixed) out.emplace_back(v, v);
  return out;
}

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;  // root is always the smallest member
  }
  void absorb(const Permutation& p) {
    for (int v = 0; v < static_cast<int>(p.size()); ++v) unite(v, p[v]);
  }

 private:
  std::vector<int> parent_;
};

[[noreturn]] void limit_exceeded(std::size_t limit) {
  throw Error(ErrorCode::kLimitExceeded,
              "automorphism count exceeds limit " + std::to_string(limit));
}

std::optional<Permutation> first_below(const PairedSearch& search, const PairedSearch::Node& node) {
  std::optional<Permutation> found;
  search.run(node, [&](const Permutation& p) {
    found = p;
    return false;
  });
  return found;
}

}  // namespace

PermutationList enumerate_automorphisms_serial(const Graph& g, std::size_t limit,
                                               const std::vector<int>& fixed) {
  if (count_automorphisms(g, fixed) > limit) limit_exceeded(limit);
  PermutationList out;
  out.degree = g.order();
  PairedSearch search(g, g);
  const auto prescribed = pin(fixed);
  bool overflow = false;
  search.run(prescribed, [&](const Permutation& p) {
    if (out.elements.size() >= limit) {
      overflow = true;
      return false;
    }
    out.elements.push_back(p);
    return true;
  });
  if (overflow) limit_exceeded(limit);
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

PermutationList enumerate_automorphisms(const Graph& g, std::size_t limit,
                                        const std::vector<int>& fixed) {
  if (count_automorphisms(g, fixed) > limit) limit_exceeded(limit);
  PairedSearch search(g, g);
  const auto prescribed = pin(fixed);
  auto root = search.root(prescribed);
  PermutationList out;
  out.degree = g.order();
  if (!root) return out;
  auto [v, targets] = search.branching(*root);
  if (v == -1) return enumerate_automorphisms_serial(g, limit, fixed);

  const int branches = static_cast<int>(targets.size());
  std::vector<std::vector<Permutation>> parts(branches);
  std::atomic<std::size_t> total{0};
  std::atomic<bool> overflow{false};
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < branches; ++i) {
    if (overflow.load()) continue;
    auto child = search.extend(*root, v, targets[i]);
    if (!child) continue;
    search.run(*child, [&](const Permutation& p) {
      if (total.fetch_add(1) >= limit) {
        overflow.store(true);
        return false;
      }
      parts[i].push_back(p);
      return !overflow.load();
    });
  }
  if (overflow.load()) limit_exceeded(limit);
  for (auto& part : parts) {
    out.elements.insert(out.elements.end(), std::make_move_iterator(part.begin()),
                        std::make_move_iterator(part.end()));
  }
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

PermutationList stabilizer(const Graph& g, int u, std::size_t limit) {
  if (u < 0 || u >= g.order()) throw Error(ErrorCode::kOutOfRange, "stabilizer vertex out of range");
  return enumerate_automorphisms(g, limit, {u});
}

std::vector<int> vertex_orbits(const Graph& g, const std::vector<int>& fixed) {
  const int n = g.order();
  PairedSearch search(g, g);
  auto root = search.root(pin(fixed));
  if (!root) throw std::logic_error("identity rejected by refinement");
  UnionFind uf(n);
  // Orbits refine the cells of the refined root partition.
  std::vector<std::vector<int>> cells(root->num_colors);
  for (int v = 0; v < n; ++v) cells[root->source[v]].push_back(v);
  for (const auto& cell : cells) {
    std::vector<int> roots;
    for (int v : cell) {
      bool placed = false;
      for (int r : roots) {
        if (uf.find(r) == uf.find(v)) {
          placed = true;
          break;
        }
      }
      if (placed) continue;
      for (int r : roots) {
        auto child = search.extend(*root, r, v);
        if (!child) continue;
        if (auto p = first_below(search, *child)) {
          uf.absorb(*p);
          placed = true;
          break;
        }
      }
      if (!placed) roots.push_back(v);
    }
  }
  std::vector<int> label(n);
  for (int v = 0; v < n; ++v) label[v] = uf.find(v);
  return label;
}

BigInt count_automorphisms(const Graph& g, const std::vector<int>& fixed) {
  PairedSearch search(g, g);
  auto node = search.root(pin(fixed));
  if (!node) throw std::logic_error("identity rejected by refinement");
  UnionFind uf(g.order());
  BigInt order = 1;
  while (true) {
    auto [v, targets] = search.branching(*node);
    if (v == -1) break;
    // Generators found so far fix the current base, so their orbits are
    // inside the basic orbit of v.
    UnionFind level(g.order());
    int orbit = 0;
    for (int w : targets) {
      if (level.find(w) == level.find(v)) {
        ++orbit;
        continue;
      }
      auto child = search.extend(*node, v, w);
      if (!child) continue;
      if (auto p = first_below(search, *child)) {
        level.absorb(*p);
        ++orbit;
      }
    }
    order *= orbit;
    node = search.extend(*node, v, v);
  }
  return order;
}

bool fixes_only_identity(const Graph& g, const std::vector<int>& fixed) {
  PairedSearch search(g, g);
  int leaves = 0;
  search.run(pin(fixed), [&](const Permutation&) { return ++leaves < 2; });
  return leaves == 1;
}

std::optional<Permutation> find_isomorphism(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return std::nullopt;
  PairedSearch search(a, b);
  return search.first();
}

bool is_vertex_transitive(const Graph& g) {
  const auto label = vertex_orbits(g);
  return std::all_of(label.begin(), label.end(), [](int l) { return l == 0; });
}

bool is_arc_transitive(const Graph& g) {
  if (g.order() == 0) return true;
  if (!is_vertex_transitive(g)) return false;
  const auto label = vertex_orbits(g, {0});
  const auto nbrs = g.row(0).members();
  return std::all_of(nbrs.begin(), nbrs.end(), [&](int v) { return label[v] == label[nbrs.front()]; });
}

OracleOrder oracle_order(const Graph& g, std::size_t limit) {
  OracleOrder out;
  if (g.order() == 0) {
    out.order = out.stabilizer_order = 1;
    out.vertex_transitive = true;
    return out;
  }
  const auto label = vertex_orbits(g);
  out.orbit_size = static_cast<int>(std::count(label.begin(), label.end(), label[0]));
  out.vertex_transitive = out.orbit_size == g.order();
  try {
    out.stabilizer_order = stabilizer(g, 0, limit).size();
    out.enumerated = true;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kLimitExceeded) throw;
    out.stabilizer_order = count_automorphisms(g, {0});
  }
  out.order = out.stabilizer_order * out.orbit_size;
  return out;
}

std::string_view structure_source_name(StructureSource source) {
  switch (source) {
    case StructureSource::kTwinQuotient: return "twin-quotient";
    case StructureSource::kCrown: return "crown";
    case StructureSource::kNeighborhoodStabilizer: return "StabAut";
    case StructureSource::kOracle: return "oracle";
  }
  return "oracle";
}

namespace {

// Z_n : stab_n(A) when the oracle order says the translations and the unit
// multipliers already account for the whole group.
std::optional<GroupExpr> multiplier_form(const ConnectionSet& set, const BigInt& order) {
  const int n = set.modulus();
  const auto stab = multiplier_stabilizer(set);
  if (order != BigInt(n) * stab.size()) return std::nullopt;
  if (stab.size() == 1) return GroupExpr::cyclic(n);
  if (stab.size() == 2) return GroupExpr::dihedral(n);
  return GroupExpr::semidirect(GroupExpr::cyclic(n),
                               GroupExpr::opaque("stab_n(A)", BigInt(stab.size())));
}

std::string graph_label(const Graph& g, const std::optional<ConnectionSet>& set) {
  if (set) return set->pm_name();
  return "quotient[" + std::to_string(g.order()) + "]";
}

GroupStructure structure_vt(const Graph& g, const std::optional<ConnectionSet>& set) {
  GroupStructure out;
  const int n = g.order();
  if (n <= 1) {
    out.order = 1;
    out.expression = GroupExpr::trivial();
    out.source = StructureSource::kTwinQuotient;
    return out;
  }

  const TwinPartition twins = set ? detect_twins_circulant(*set) : detect_twins_generic(g);
  if (twins.kind != TwinKind::kNone) {
    Graph q;
    std::optional<ConnectionSet> q_set;
    if (set) {
      auto seq_step = quotient_sequence(*set);
      q = seq_step.steps.front().quotient;
      q_set = seq_step.steps.front().quotient_set;
    } else {
      q = quotient(g, twins).quotient;
    }
    GroupStructure sub = structure_vt(q, q_set);
    GroupExpr kernel = GroupExpr::trivial();
    if (twins.uniform()) {
      const int c = static_cast<int>(twins.classes.size());
      kernel = c == 1 ? GroupExpr::symmetric(twins.class_size)
                      : GroupExpr::power(GroupExpr::symmetric(twins.class_size), c);
    } else {
      out.outside_hypothesis = true;
      out.note = "twin classes of different sizes";
      for (const auto& cls : twins.classes) {
        if (cls.size() > 1) kernel = GroupExpr::direct(kernel, GroupExpr::symmetric(static_cast<int>(cls.size())));
      }
    }
    out.expression = GroupExpr::semidirect(kernel, GroupExpr::named(graph_label(q, q_set), sub.expression));
    out.order = out.expression.order();
    out.source = StructureSource::kTwinQuotient;
    out.outside_hypothesis = out.outside_hypothesis || sub.outside_hypothesis;
    return out;
  }

  const CoTwinPairing pairing = set ? detect_cotwins_circulant(*set) : detect_cotwins_generic(g);
  if (pairing.kind != TwinKind::kNone && pairing.perfect) {
    // Adjacent co-twins are nonadjacent co-twins of the complement, which has
    // the same group.
    const Graph h = pairing.kind == TwinKind::kNonadjacent ? g : g.complement();
    const int k = n / 2;
    if (!h.has_triangle()) {
      out.expression = GroupExpr::direct(GroupExpr::symmetric(k), GroupExpr::symmetric(2));
      out.order = out.expression.order();
      out.source = StructureSource::kCrown;
      return out;
    }
    const InducedSubgraph hu = neighborhood_subgraph(h, 0);
    out.order = count_automorphisms(hu.graph) * n;
    out.source = StructureSource::kNeighborhoodStabilizer;
    if (set) {
      if (auto form = multiplier_form(*set, out.order)) {
        out.expression = *form;
        return out;
      }
    }
    out.expression = GroupExpr::opaque("Transitive_" + std::to_string(n) + ".Aut(H_0)", out.order);
    return out;
  }

  const OracleOrder oracle = oracle_order(g);
  out.order = oracle.order;
  out.source = StructureSource::kOracle;
  if (set) {
    if (auto form = multiplier_form(*set, out.order)) {
      out.expression = *form;
      return out;
    }
  }
  out.expression = GroupExpr::opaque("unclassified", out.order);
  return out;
}

}  // namespace

GroupStructure structural_order(const Graph& g, bool certified) {
  if (!certified && !is_vertex_transitive(g)) {
    GroupStructure out;
    out.order = oracle_order(g).order;
    out.expression = GroupExpr::opaque("unclassified", out.order);
    out.source = StructureSource::kOracle;
    out.outside_hypothesis = true;
    out.note = "not vertex-transitive";
    return out;
  }
  return structure_vt(g, std::nullopt);
}

GroupStructure structural_order(const ConnectionSet& set) { return structure_vt(build(set), set); }

Permutation cotwin_swap(const Graph& g, const CoTwinPairing& pairing) {
  if (!pairing.perfect) {
    throw Error(ErrorCode::kInvalidArgument, "co-twin swap needs a perfect pairing");
  }
  Permutation beta(g.order());
  std::iota(beta.begin(), beta.end(), 0);
  for (auto [u, v] : pairing.pairs) {
    beta[u] = v;
    beta[v] = u;
  }
  if (!g.is_automorphism(beta)) {
    throw Error(ErrorCode::kBetaNotAutomorphism, "co-twin swap is not an automorphism");
  }
  return beta;
}

bool kappa_kernel_check(const Graph& g, const CoTwinPairing& pairing, const PermutationList& group) {
  const Permutation beta = cotwin_swap(g, pairing);
  Permutation id(g.order());
  std::iota(id.begin(), id.end(), 0);
  std::set<Permutation> kernel;
  for (const auto& p : group.elements) {
    const bool keeps_pairs = std::all_of(pairing.pairs.begin(), pairing.pairs.end(), [&](auto pr) {
      auto [u, v] = pr;
      return (p[u] == u && p[v] == v) || (p[u] == v && p[v] == u);
    });
    if (keeps_pairs) kernel.insert(p);
  }
  return kernel == std::set<Permutation>{id, beta};
}

KappaImage kappa_surjectivity(const CoTwinPairing& pairing, const PermutationList& group) {
  const int n = group.degree;
  std::vector<int> pair_of(n, -1);
  for (std::size_t i = 0; i < pairing.pairs.size(); ++i) {
    pair_of[pairing.pairs[i].first] = static_cast<int>(i);
    pair_of[pairing.pairs[i].second] = static_cast<int>(i);
  }
  std::set<std::vector<int>> image;
  for (const auto& p : group.elements) {
    std::vector<int> induced(pairing.pairs.size());
    for (std::size_t i = 0; i < pairing.pairs.size(); ++i) induced[i] = pair_of[p[pairing.pairs[i].first]];
    image.insert(std::move(induced));
  }
  KappaImage out;
  out.image_size = image.size();
  out.full_symmetric_order = factorial(static_cast<int>(pairing.pairs.size()));
  out.surjective = BigInt(out.image_size) == out.full_symmetric_order;
  return out;
}

ClassAction twin_class_action(const TwinPartition& partition, const Graph& quotient,
                              const PermutationList& group) {
  const int n = group.degree;
  std::vector<int> class_of(n, -1);
  for (std::size_t i = 0; i < partition.classes.size(); ++i) {
    for (int v : partition.classes[i]) class_of[v] = static_cast<int>(i);
  }
  ClassAction out;
  std::set<std::vector<int>> image;
  const int m = static_cast<int>(partition.classes.size());
  for (const auto& p : group.elements) {
    std::vector<int> induced(m);
    bool identity = true;
    for (int i = 0; i < m; ++i) {
      induced[i] = class_of[p[partition.classes[i].front()]];
      for (int v : partition.classes[i]) {
        if (class_of[p[v]] != induced[i]) out.image_in_quotient_group = false;
      }
      if (induced[i] != i) identity = false;
    }
    if (!quotient.is_automorphism(induced)) out.image_in_quotient_group = false;
    if (identity) ++out.kernel_size;
    image.insert(std::move(induced));
  }
  out.image_size = image.size();
  return out;
}

}  // namespace circsym

#include "circsym/symmetry.hpp"

#include <algorithm>
#include <set>

#include "circsym/cotwins.hpp"
#include "circsym/error.hpp"
#include "circsym/twins.hpp"

namespace circsym {
namespace {

std::int64_t binomial(int d, int t) {
  if (t < 0 || d < t) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= t; ++i) r = r * (d - t + i) / i;
  return r;
}

// Iterative-deepening search for a determining set of a given size.
class DetSearch {
 public:
  DetSearch(const Graph& g, std::size_t limit) : g_(g), limit_(limit) {}

  bool run(std::vector<int>& fixed, int depth_left) {
    seen_.clear();
    return visit(fixed, depth_left);
  }
  bool out_of_budget() const { return out_of_budget_; }

 private:
  bool visit(std::vector<int>& fixed, int depth_left) {
    if (++nodes_ > limit_) {
      out_of_budget_ = true;
      return false;
    }
    std::vector<int> key = fixed;
    std::sort(key.begin(), key.end());
    if (!seen_.insert(std::move(key)).second) return false;
    const BigInt order = count_automorphisms(g_, fixed);
    if (order == 1) return true;
    if (depth_left == 0) return false;

    const auto label = vertex_orbits(g_, fixed);
    std::vector<int> orbit_size(g_.order(), 0);
    for (int l : label) ++orbit_size[l];
    const int largest = *std::max_element(orbit_size.begin(), orbit_size.end());
    // Each further vertex shrinks the stabilizer by at most the largest orbit.
    BigInt reach = 1;
    for (int i = 0; i < depth_left && reach < order; ++i) reach *= largest;
    if (reach < order) return false;

    // Any determining superset can be moved by the stabilizer so that its
    // next vertex is an orbit representative.
    for (int r = 0; r < g_.order(); ++r) {
      if (label[r] != r || orbit_size[r] == 1) continue;
      fixed.push_back(r);
      if (visit(fixed, depth_left - 1)) return true;
      fixed.pop_back();
      if (out_of_budget_) return false;
    }
    return false;
  }

  const Graph& g_;
  std::size_t limit_;
  std::size_t nodes_ = 0;
  bool out_of_budget_ = false;
  std::set<std::vector<int>> seen_;
};

std::optional<PermutationList> try_enumerate(const Graph& g, std::size_t limit) {
  try {
    return enumerate_automorphisms(g, limit);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kLimitExceeded) throw;
    return std::nullopt;
  }
}

// Perfect co-twin pairing in the graph whose co-twins are nonadjacent.
struct CoTwinView {
  Graph graph;
  CoTwinPairing pairing;
};

std::optional<CoTwinView> cotwin_view(const Graph& g) {
  CoTwinPairing pairing = detect_cotwins_generic(g);
  if (pairing.kind == TwinKind::kNone || !pairing.perfect) return std::nullopt;
  if (pairing.kind == TwinKind::kNonadjacent) return CoTwinView{g, pairing};
  return CoTwinView{g.complement(), pairing};
}

void run_exhaustive_det(const Graph& g, const SearchBudget& budget, SymmetryValue& out) {
  if (auto set = exhaustive_determining_set(g, budget.node_limit)) {
    out.exhaustive = static_cast<int>(set->size());
    if (out.method == "exhaustive" || out.witness.empty()) out.witness = *set;
  }
}

std::optional<std::pair<int, std::vector<int>>> best_distinguishing(const Graph& g, const SearchBudget& budget) {
  const std::size_t limit = std::min(budget.group_limit, budget.explicit_group_limit);
  if (auto group = try_enumerate(g, limit)) return exhaustive_distinguishing(*group, budget.node_limit);
  return exhaustive_distinguishing(g, budget.node_limit);
}

// Nontrivial automorphisms preserving `colors`, counted up to two.
bool only_identity_preserves(const Graph& g, const std::vector<int>& colors) {
  PairedSearch search(g, g, colors, colors);
  int leaves = 0;
  search.run(std::span<const std::pair<int, int>>{}, [&](const Permutation&) { return ++leaves < 2; });
  return leaves == 1;
}

void run_exhaustive_dist(const Graph& g, const SearchBudget& budget, SymmetryValue& out) {
  if (auto found = best_distinguishing(g, budget)) {
    out.exhaustive = found->first;
    if (out.method == "exhaustive" || out.witness.empty()) out.witness = found->second;
  }
}

}  // namespace

int dist_twin_recursion(int t, int d_quotient) {
  if (t < 2 || d_quotient < 1) {
    throw Error(ErrorCode::kInvalidArgument, "dist recursion needs t >= 2 and a positive quotient value");
  }
  int d = 1;
  while (binomial(d, t) < d_quotient) ++d;
  return d;
}

int crown_distinguishing(int k) {
  int d = 1;
  while (!((d - 1) * (d - 1) <= k && k <= d * d - 1)) ++d;
  return d;
}

std::vector<int> minimum_twin_cover(const Graph& g) {
  const TwinPartition p = detect_twins_generic(g);
  std::vector<int> cover;
  if (p.kind == TwinKind::kNone) return cover;
  for (const auto& cls : p.classes) cover.insert(cover.end(), cls.begin() + 1, cls.end());
  std::sort(cover.begin(), cover.end());
  return cover;
}

bool is_determining(const Graph& g, const std::vector<int>& set) { return fixes_only_identity(g, set); }

bool is_distinguishing(const PermutationList& group, const std::vector<int>& coloring) {
  for (const auto& p : group.elements) {
    bool identity = true;
    bool preserves = true;
    for (int v = 0; v < group.degree; ++v) {
      if (p[v] != v) identity = false;
      if (coloring[v] != coloring[p[v]]) {
        preserves = false;
        break;
      }
    }
    if (preserves && !identity) return false;
  }
  return true;
}

bool is_distinguishing(const Graph& g, const std::vector<int>& coloring) {
  return only_identity_preserves(g, coloring);
}

std::optional<std::vector<int>> exhaustive_determining_set(const Graph& g, std::size_t node_limit) {
  DetSearch search(g, node_limit);
  for (int size = 0; size <= g.order(); ++size) {
    std::vector<int> fixed;
    if (search.run(fixed, size)) return fixed;
    if (search.out_of_budget()) return std::nullopt;
  }
  throw std::logic_error("fixing every vertex must be determining");
}

ColoringSearch distinguishing_coloring(const PermutationList& group, int colors, std::size_t node_limit) {
  const int n = group.degree;
  ColoringSearch out;
  // Non-identity elements with inverses and the last vertex they move.
  std::vector<const Permutation*> elems;
  std::vector<Permutation> inverse;
  std::vector<int> last_moved;
  for (const auto& p : group.elements) {
    int last = -1;
    for (int v = 0; v < n; ++v) {
      if (p[v] != v) last = v;
    }
    if (last == -1) continue;
    elems.push_back(&p);
    Permutation inv(n);
    for (int v = 0; v < n; ++v) inv[p[v]] = v;
    inverse.push_back(std::move(inv));
    last_moved.push_back(last);
  }
  if (n == 0 || elems.empty()) {
    out.outcome = SearchOutcome::kFound;
    out.coloring.assign(n, 0);
    return out;
  }

  std::vector<int> coloring(n, 0);
  std::vector<std::vector<int>> alive(n + 1);
  alive[0].resize(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i) alive[0][i] = static_cast<int>(i);

  // Assign vertex i given alive[i]; returns true when a coloring is found.
  auto search = [&](auto&& self, int i, int used) -> bool {
    if (++out.nodes > node_limit) return false;
    const int top = std::min(colors - 1, used);
    for (int c = 0; c <= top; ++c) {
      coloring[i] = c;
      auto& next = alive[i + 1];
      next.clear();
      bool preserved = false;
      for (int e : alive[i]) {
        const Permutation& p = *elems[e];
        const int a = p[i];
        const int b = inverse[e][i];
        if ((a < i && coloring[a] != c) || (b < i && coloring[b] != c)) continue;
        if (last_moved[e] <= i) {
          preserved = true;
          break;
        }
        next.push_back(e);
      }
      if (preserved) continue;
      if (next.empty()) {
        std::fill(coloring.begin() + i + 1, coloring.end(), 0);
        return true;
      }
      if (i + 1 < n && self(self, i + 1, std::max(used, c + 1))) return true;
      if (out.nodes > node_limit) return false;
    }
    return false;
  };
  if (search(search, 0, 0)) {
    out.outcome = SearchOutcome::kFound;
    out.coloring = coloring;
  } else {
    out.outcome = out.nodes > node_limit ? SearchOutcome::kBudget : SearchOutcome::kNone;
  }
  return out;
}

std::optional<std::pair<int, std::vector<int>>> exhaustive_distinguishing(const PermutationList& group,
                                                                          std::size_t node_limit) {
  for (int d = 1; d <= std::max(group.degree, 1); ++d) {
    ColoringSearch run = distinguishing_coloring(group, d, node_limit);
    if (run.outcome == SearchOutcome::kFound) return std::make_pair(d, run.coloring);
    if (run.outcome == SearchOutcome::kBudget) return std::nullopt;
  }
  throw std::logic_error("the all-distinct coloring must be distinguishing");
}

ColoringSearch distinguishing_coloring(const Graph& g, int colors, std::size_t node_limit) {
  const int n = g.order();
  ColoringSearch out;
  if (n == 0) {
    out.outcome = SearchOutcome::kFound;
    return out;
  }
  // Vertices are colored twin class by class. Twin transpositions are
  // automorphisms, so the lexicographically least coloring in an orbit has
  // strictly increasing colors inside each class as well as colors in order
  // of first use.
  std::vector<int> order;
  std::vector<bool> same_class_as_previous;
  const TwinPartition twins = detect_twins_generic(g);
  if (twins.kind == TwinKind::kNone) {
    for (int v = 0; v < n; ++v) order.push_back(v);
    same_class_as_previous.assign(n, false);
  } else {
    for (const auto& cls : twins.classes) {
      for (std::size_t k = 0; k < cls.size(); ++k) {
        order.push_back(cls[k]);
        same_class_as_previous.push_back(k > 0);
      }
    }
  }

  // Uncolored vertices get private colors above the palette, which pins them.
  std::vector<int> partial(n);
  for (int v = 0; v < n; ++v) partial[v] = colors + v;
  auto search = [&](auto&& self, int i, int used) -> bool {
    if (++out.nodes > node_limit) return false;
    const int v = order[i];
    const int top = std::min(colors - 1, used);
    const int bottom = same_class_as_previous[i] ? partial[order[i - 1]] + 1 : 0;
    for (int c = bottom; c <= top; ++c) {
      partial[v] = c;
      if (!only_identity_preserves(g, partial)) continue;
      if (i + 1 == n) return true;
      if (self(self, i + 1, std::max(used, c + 1))) return true;
      if (out.nodes > node_limit) break;
    }
    partial[v] = colors + v;
    return false;
  };
  if (search(search, 0, 0)) {
    out.outcome = SearchOutcome::kFound;
    out.coloring = partial;
  } else {
    out.outcome = out.nodes > node_limit ? SearchOutcome::kBudget : SearchOutcome::kNone;
  }
  return out;
}

std::optional<std::pair<int, std::vector<int>>> exhaustive_distinguishing(const Graph& g, std::size_t node_limit) {
  for (int d = 1; d <= std::max(g.order(), 1); ++d) {
    ColoringSearch run = distinguishing_coloring(g, d, node_limit);
    if (run.outcome == SearchOutcome::kFound) return std::make_pair(d, run.coloring);
    if (run.outcome == SearchOutcome::kBudget) return std::nullopt;
  }
  throw std::logic_error("the all-distinct coloring must be distinguishing");
}

SymmetryValue determining_number(const Graph& g, Mode mode, const SearchBudget& budget,
                                 std::optional<bool> vertex_transitive) {
  SymmetryValue out;
  const int n = g.order();
  const bool formulas = mode != Mode::kExhaustive &&
                        vertex_transitive.value_or(n > 0 && is_vertex_transitive(g));
  bool have_formula = false;
  if (formulas && n > 1) {
    const TwinPartition twins = detect_twins_generic(g);
    if (twins.kind != TwinKind::kNone && twins.uniform()) {
      out.lo = out.hi = n - n / twins.class_size;
      out.method = "Cor-DetTwins";
      out.witness = minimum_twin_cover(g);
      have_formula = true;
    } else if (twins.kind == TwinKind::kNone) {
      if (auto view = cotwin_view(g)) {
        if (!view->graph.has_triangle()) {
          out.lo = out.hi = n / 2 - 1;
          out.method = "crown";
          have_formula = true;
        } else {
          const InducedSubgraph hu = neighborhood_subgraph(view->graph, 0);
          if (auto sub = exhaustive_determining_set(hu.graph, budget.node_limit)) {
            out.lo = out.hi = 1 + static_cast<int>(sub->size());
            out.method = "StabAut";
            out.witness.push_back(0);
            for (int v : *sub) out.witness.push_back(hu.labels[v]);
            std::sort(out.witness.begin(), out.witness.end());
            have_formula = true;
          }
        }
      }
    }
  } else if (formulas && n <= 1) {
    out.lo = out.hi = 0;
    out.method = "exhaustive";
    out.exhaustive = 0;
    return out;
  }

  if (!have_formula) {
    out.method = "exhaustive";
    run_exhaustive_det(g, budget, out);
    if (out.exhaustive) {
      out.lo = out.hi = *out.exhaustive;
    } else {
      out.lo = fixes_only_identity(g, {}) ? 0 : 1;
      out.hi = std::max(n - 1, 0);
    }
    return out;
  }
  if (mode == Mode::kBoth) run_exhaustive_det(g, budget, out);
  return out;
}

SymmetryValue distinguishing_number(const Graph& g, Mode mode, const SearchBudget& budget,
                                    std::optional<bool> vertex_transitive) {
  SymmetryValue out;
  const int n = g.order();
  const bool formulas = mode != Mode::kExhaustive &&
                        vertex_transitive.value_or(n > 0 && is_vertex_transitive(g));
  bool have_formula = false;
  if (formulas && n <= 1) {
    out.lo = out.hi = 1;
    out.method = "exhaustive";
    out.exhaustive = 1;
    out.witness.assign(n, 0);
    return out;
  }
  if (formulas) {
    const TwinPartition twins = detect_twins_generic(g);
    if (twins.kind != TwinKind::kNone && twins.uniform()) {
      // Quotients of vertex-transitive graphs stay vertex-transitive.
      const Graph q = quotient(g, twins).quotient;
      const SymmetryValue sub = distinguishing_number(q, Mode::kFormula, budget, true);
      out.lo = dist_twin_recursion(twins.class_size, sub.lo);
      out.hi = dist_twin_recursion(twins.class_size, sub.hi);
      out.method = "Thm-DistTwins";
      have_formula = true;
    } else if (twins.kind == TwinKind::kNone) {
      if (auto view = cotwin_view(g)) {
        if (!view->graph.has_triangle()) {
          out.lo = out.hi = crown_distinguishing(n / 2);
          out.method = "crown";
          have_formula = true;
        } else {
          // Color N(0) by a distinguishing coloring of H_0, each co-twin like
          // its partner, and 0 and its partner apart.
          const InducedSubgraph hu = neighborhood_subgraph(view->graph, 0);
          if (auto sub = best_distinguishing(hu.graph, budget)) {
            const auto partner = view->pairing.partner(n);
            std::vector<int> coloring(n, 0);
            coloring[0] = 0;
            coloring[partner[0]] = 1;
            for (std::size_t i = 0; i < hu.labels.size(); ++i) {
              coloring[hu.labels[i]] = sub->second[i];
              coloring[partner[hu.labels[i]]] = sub->second[i];
            }
            if (is_distinguishing(g, coloring)) {
              out.lo = 2;
              out.hi = std::max(sub->first, 2);
              out.method = "StabAut";
              out.witness = coloring;
              have_formula = true;
            }
          }
        }
      }
    }
  }

  if (!have_formula) {
    out.method = "exhaustive";
    run_exhaustive_dist(g, budget, out);
    if (out.exhaustive) {
      out.lo = out.hi = *out.exhaustive;
    } else {
      out.lo = fixes_only_identity(g, {}) ? 1 : 2;
      out.hi = std::max(n, 1);
    }
    return out;
  }
  if (mode == Mode::kBoth) run_exhaustive_dist(g, budget, out);
  return out;
}

SymmetryReport analyze_symmetry(const ConnectionSet& set, Mode mode, const SearchBudget& budget,
                                bool with_arc_transitivity) {
  const Graph g = build(set);
  SymmetryReport report;
  report.group = structural_order(set);
  report.det = determining_number(g, mode, budget, true);
  report.dist = distinguishing_number(g, mode, budget, true);
  if (with_arc_transitivity) report.arc_transitive = is_arc_transitive(g);
  return report;
}

}  // namespace circsym

// One line per acceptance criterion; exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "circsym/autgroup.hpp"
#include "circsym/catalog.hpp"
#include "circsym/circulant.hpp"
#include "circsym/cotwins.hpp"
#include "circsym/named_graphs.hpp"
#include "circsym/symmetry.hpp"
#include "circsym/twins.hpp"
#include "circsym/zn.hpp"

using namespace circsym;

namespace {

ConnectionSet spec(int n, const char* tokens) { return parse_connection_set(n, tokens); }

// Collects failure reasons; an empty list means the criterion passed.
struct Problems {
  std::vector<std::string> items;
  void expect(bool ok, const std::string& what) {
    if (!ok) items.push_back(what);
  }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) return "<missing " + path + ">";
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string big(const BigInt& x) { return x.str(); }

void chain(Problems& p) {
  const QuotientSequence seq = quotient_sequence(spec(8, "±1,±3,4"));
  p.expect(seq.steps.size() == 3, "chain length " + std::to_string(seq.steps.size()));
  if (seq.steps.size() != 3) return;
  const TwinKind kinds[] = {TwinKind::kAdjacent, TwinKind::kNonadjacent, TwinKind::kAdjacent};
  const Graph quotients[] = {named::cycle(4), named::complete(2), named::complete(1)};
  for (int i = 0; i < 3; ++i) {
    p.expect(seq.steps[i].kind == kinds[i], "kind at step " + std::to_string(i + 1));
    p.expect(seq.steps[i].class_size == 2, "t at step " + std::to_string(i + 1));
    p.expect(seq.steps[i].quotient == quotients[i], "quotient graph at step " + std::to_string(i + 1));
  }
  const QuotientSequence comp = quotient_sequence(complement_set(spec(8, "±1,±3,4")));
  p.expect(comp.steps.size() == 3, "complement chain length");
  for (std::size_t i = 0; i < std::min<std::size_t>(3, comp.steps.size()); ++i) {
    p.expect(comp.steps[i].kind != seq.steps[i].kind, "complement kind at step " + std::to_string(i + 1));
    p.expect(comp.steps[i].quotient == seq.steps[i].quotient.complement(),
             "complement quotient at step " + std::to_string(i + 1));
  }
}

void dist_recursion(Problems& p) {
  const Graph g = build(spec(8, "±1,±3,4"));
  const SymmetryValue v = distinguishing_number(g, Mode::kFormula);
  p.expect(v.exact() && v.lo == 3, "formula value " + std::to_string(v.lo) + ".." + std::to_string(v.hi));
  p.expect(v.method == "Thm-DistTwins", "method " + v.method);
  const SymmetryValue c4 = distinguishing_number(named::cycle(4), Mode::kExhaustive);
  p.expect(c4.exact() && c4.lo == 3, "dist(C_4) " + std::to_string(c4.lo));
  p.expect(dist_twin_recursion(2, 3) == 3, "recursion (2,3)");
  const PermutationList group = enumerate_automorphisms(g);
  const ColoringSearch two = distinguishing_coloring(group, 2);
  const ColoringSearch three = distinguishing_coloring(group, 3);
  p.expect(two.outcome == SearchOutcome::kNone, "a 2-coloring was not ruled out");
  p.expect(three.outcome == SearchOutcome::kFound && is_distinguishing(group, three.coloring),
           "no verified 3-coloring");
}

void group_orders(Problems& p) {
  struct Case {
    std::string name;
    Graph g;
    std::optional<ConnectionSet> set;
    BigInt want;
  };
  std::vector<Case> cases = {
      {"C_8(±1,±3,4)", build(spec(8, "±1,±3,4")), spec(8, "±1,±3,4"), 128},
      {"C_14(±1,±2,±3)", build(spec(14, "±1,±2,±3")), spec(14, "±1,±2,±3"), 28},
      {"icosahedron", named::icosahedron(), std::nullopt, 120},
      {"C_18(±2,±3,±4,±8)", build(spec(18, "±2,±3,±4,±8")), spec(18, "±2,±3,±4,±8"), 2592},
  };
  for (int k = 3; k <= 6; ++k) cases.push_back({"crown" + std::to_string(k), named::crown(k), std::nullopt, 2 * factorial(k)});
  for (const Case& c : cases) {
    const GroupStructure s = c.set ? structural_order(*c.set) : structural_order(c.g);
    const OracleOrder o = oracle_order(c.g);
    p.expect(s.order == c.want, c.name + " structural " + big(s.order));
    p.expect(o.order == c.want, c.name + " oracle " + big(o.order));
    p.expect(count_automorphisms(c.g) == c.want, c.name + " base count");
  }
  const OracleOrder c18 = oracle_order(build(spec(18, "±2,±3,±4,±8")));
  p.expect(c18.stabilizer_order == 144 && c18.orbit_size == 18, "C_18 stabilizer-first 144 x 18");
}

void stab_aut(Problems& p) {
  const Graph g = build(spec(18, "±2,±3,±4,±8"));
  const InducedSubgraph h = neighborhood_subgraph(g, 0);
  const Graph target = named::disjoint_union(named::empty(2), named::complete_bipartite(3, 3));
  p.expect(find_isomorphism(h.graph, target).has_value(), "H_0 is not 2K_1 + K_{3,3}");

  const SymmetryValue det = determining_number(g, Mode::kBoth);
  p.expect(det.exact() && det.lo == 6 && det.method == "StabAut", "det formula " + std::to_string(det.lo));
  p.expect(det.exhaustive == 6, "exhaustive det");
  p.expect(det.witness.size() == 6 && is_determining(g, det.witness), "size-6 witness");
  // Vertex-transitive, so a determining 5-set may be assumed to contain 0.
  int determining_fives = 0;
  std::vector<int> s = {0, 1, 2, 3, 4};
  std::function<void(int, int)> walk = [&](int pos, int next) {
    if (pos == 5) {
      determining_fives += fixes_only_identity(g, s);
      return;
    }
    for (int v = next; v < 18; ++v) {
      s[pos] = v;
      walk(pos + 1, v + 1);
    }
  };
  walk(1, 1);
  p.expect(determining_fives == 0, std::to_string(determining_fives) + " determining 5-sets");

  const SymmetryValue dist = distinguishing_number(g, Mode::kFormula);
  p.expect(dist.hi == 4 && dist.method == "StabAut", "dist upper bound " + std::to_string(dist.hi));
  const PermutationList all = enumerate_automorphisms(g);
  p.expect(all.size() == 2592, "group size " + std::to_string(all.size()));
  int colors = 0;
  for (int c : dist.witness) colors = std::max(colors, c + 1);
  p.expect(colors <= 4 && is_distinguishing(all, dist.witness), "constructive coloring not distinguishing");
}

void table(Problems& p, int generators) {
  const auto rows = generators == 2 ? classify_two_generator(60) : classify_three_generator(60);
  const std::string golden = slurp(std::string(CIRCSYM_GOLDEN_DIR) + (generators == 2 ? "/table1.csv" : "/table2.csv"));
  p.expect(table_csv(rows, generators) == golden, "scan differs from golden file");
  const auto bad = table_mismatches(generators, 60);
  p.expect(bad.empty(), std::to_string(bad.size()) + " pattern mismatches" + (bad.empty() ? "" : ", first " + bad[0]));
}

void coset_equivalence(Problems& p) {
  int sets = 0;
  int mismatches = 0;
  for (int n = 1; n <= 24; ++n) {
    for (const ConnectionSet& set : all_connection_sets(n)) {
      ++sets;
      const TwinPartition a = detect_twins_circulant(set);
      const TwinPartition b = detect_twins_generic(build(set));
      if (a.kind != b.kind || a.classes != b.classes || a.class_size != b.class_size) ++mismatches;
    }
  }
  p.expect(mismatches == 0, std::to_string(mismatches) + " of " + std::to_string(sets) + " disagree");
}

std::vector<std::string> names(const SpecFamily& fam) {
  std::vector<std::string> out;
  for (const auto& s : fam.specs) out.push_back(s.pm_name());
  return out;
}

void cotwin_orders(Problems& p) {
  const SpecFamily ten = enumerate_twinfree_cotwin_circulants(10);
  const SpecFamily fourteen = enumerate_twinfree_cotwin_circulants(14);
  p.expect(names(ten) == std::vector<std::string>{"C_10(±1,±2)", "C_10(±1,±3)"}, "order 10 list");
  p.expect(names(fourteen) == std::vector<std::string>{"C_14(±1,±2,±3)", "C_14(±1,±2,±4)", "C_14(±1,±3,±5)"},
           "order 14 list");
  p.expect(ten.all_distinct() && fourteen.all_distinct(), "distinctness not certified");
  p.expect(enumerate_twinfree_cotwin_circulants(12).specs.empty(), "order 12 not empty");
}

void crowns(Problems& p) {
  for (int k = 3; k <= 6; ++k) {
    const std::string tag = "k=" + std::to_string(k);
    const Graph g = named::crown(k);
    const auto w = recognize_crown(g);
    p.expect(w && w->k == k, tag + " not recognized");
    const Mode mode = k <= 5 ? Mode::kBoth : Mode::kFormula;
    const SymmetryValue det = determining_number(g, mode);
    const SymmetryValue dist = distinguishing_number(g, mode);
    p.expect(det.exact() && det.lo == k - 1, tag + " det " + std::to_string(det.lo));
    const int d = dist.lo;
    p.expect(dist.exact() && (d - 1) * (d - 1) <= k && k <= d * d - 1, tag + " dist " + std::to_string(d));
    if (k <= 5) {
      p.expect(det.exhaustive == k - 1, tag + " exhaustive det");
      p.expect(dist.exhaustive == d, tag + " exhaustive dist");
    }
    const CoTwinPairing pairing = detect_cotwins_generic(g);
    const PermutationList all = enumerate_automorphisms(g);
    p.expect(kappa_kernel_check(g, pairing, all), tag + " kernel is not {id, beta}");
    p.expect(kappa_surjectivity(pairing, all).surjective, tag + " kappa not surjective");
  }
}

void c60(Problems& p) {
  const TwinPartition t = detect_twins_circulant(spec(60, "±1,±9,±11,±19,±21,±29"));
  p.expect(t.kind == TwinKind::kNonadjacent, "kind");
  p.expect(t.generator == 10, "w");
  p.expect(t.class_size == 6, "class size");
  const bool rejected = std::find(t.rejected_generators.begin(), t.rejected_generators.end(), 20) !=
                        t.rejected_generators.end();
  p.expect(rejected && subgroup(60, 20).order() == 3, "w=20 not reported as rejected");
}

void c30_family(Problems& p) {
  const SpecFamily fam = enumerate_with_twin_classes(30, 6);
  p.expect(fam.specs.size() == 7, std::to_string(fam.specs.size()) + " specs");
  p.expect(fam.fingerprints_distinct(), "fingerprints collide");
}

void arc_transfer(Problems& p) {
  int checked = 0;
  int mismatches = 0;
  for (int n = 2; n <= 20; ++n) {
    for (const ConnectionSet& set : all_connection_sets(n)) {
      const TwinPartition t = detect_twins_circulant(set);
      if (t.kind != TwinKind::kNonadjacent) continue;
      ++checked;
      const Graph q = build(quotient_circulant(set, t));
      if (is_arc_transitive(build(set)) != is_arc_transitive(q)) ++mismatches;
    }
  }
  p.expect(mismatches == 0, std::to_string(mismatches) + " of " + std::to_string(checked) + " disagree");
  p.expect(!is_arc_transitive(build(spec(12, "±2,±3,±4"))), "C_12(±2,±3,±4) arc-transitive");
  p.expect(!is_arc_transitive(build(spec(6, "±2,3"))), "C_6(±2,3) arc-transitive");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Problems&)>>> criteria = {
      {"twin-quotient chain of C_8(±1,±3,4) and its complement", chain},
      {"distinguishing recursion for C_8(±1,±3,4)", dist_recursion},
      {"structural group orders against the oracle", group_orders},
      {"neighborhood-stabilizer pipeline on C_18(±2,±3,±4,±8)", stab_aut},
      {"two-generator twin table, n <= 60", [](Problems& p) { table(p, 2); }},
      {"three-generator twin table, n <= 60", [](Problems& p) { table(p, 3); }},
      {"coset test equals generic detection, n <= 24", coset_equivalence},
      {"twin-free co-twin circulants of orders 10, 12, 14", cotwin_orders},
      {"crown graphs k = 3..6", crowns},
      {"C_60(±1,±9,±11,±19,±21,±29) twin generator", c60},
      {"C_30 family with twin classes of <6>", c30_family},
      {"arc-transitivity passes to the nonadjacent quotient, n <= 20", arc_transfer},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Problems p;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(p);
    } catch (const std::exception& e) {
      p.items.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = p.items.empty();
    failed += !ok;
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << i + 1 << ". " << criteria[i].first << " (" << secs << " s)";
    for (const auto& item : p.items) std::cout << "\n         - " << item;
    std::cout << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}

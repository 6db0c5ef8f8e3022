#include "circsym/report.hpp"

#include <algorithm>

#include "circsym/autgroup.hpp"
#include "circsym/cotwins.hpp"
#include "circsym/named_graphs.hpp"

namespace circsym {
namespace {

// Exhaustive coloring searches on larger orders only run for small groups.
constexpr int kCorpusDistMaxN = 16;

std::string big(const BigInt& x) { return x.str(); }

Json describe_input(const Subject& s) {
  Json j;
  j["name"] = s.name;
  j["n"] = s.graph.order();
  if (s.set) {
    const CirculantSpec spec = describe(*s.set);
    j["canonical"] = s.set->canonical_name();
    j["members"] = s.set->members();
    j["valency"] = spec.valency;
    j["components"] = spec.component_count;
    j["connected"] = spec.connected;
    j["bipartite"] = spec.bipartite;
  } else {
    const auto deg = s.graph.regular_degree();
    j["valency"] = deg ? Json(*deg) : Json(nullptr);
    j["components"] = s.graph.component_count();
    j["connected"] = s.graph.is_connected();
    j["bipartite"] = s.graph.is_bipartite();
  }
  j["edges"] = s.graph.edge_count();
  return j;
}

TwinPartition twins_of(const Subject& s) {
  return s.set ? detect_twins_circulant(*s.set) : detect_twins_generic(s.graph);
}

Json claim(const std::string& name, const std::string& method, const std::string& formula,
           const std::string& oracle, bool pass) {
  Json j;
  j["claim"] = name;
  j["method"] = method;
  j["formula"] = formula;
  j["oracle"] = oracle;
  j["status"] = pass ? "pass" : "fail";
  return j;
}

Json skipped(const std::string& name, const std::string& method, const std::string& reason) {
  Json j;
  j["claim"] = name;
  j["method"] = method;
  j["status"] = "skipped";
  j["reason"] = reason;
  return j;
}

std::string range(const SymmetryValue& v) {
  return v.exact() ? std::to_string(v.lo) : std::to_string(v.lo) + ".." + std::to_string(v.hi);
}

Json pairs_json(const std::vector<std::pair<int, int>>& pairs) {
  Json arr = Json::array();
  for (auto [u, v] : pairs) arr.push_back({u, v});
  return arr;
}

bool same_partition(const TwinPartition& a, const TwinPartition& b) {
  return a.kind == b.kind && a.class_size == b.class_size && a.classes == b.classes;
}

}  // namespace

Subject Subject::circulant(const ConnectionSet& set) { return Subject{build(set), set, set.pm_name()}; }

Subject Subject::named(const std::string& name) { return Subject{named::by_name(name), std::nullopt, name}; }

Json document() {
  Json j;
  j["schema"] = kSchemaVersion;
  j["tool"] = kToolVersion;
  return j;
}

Json error_document(const Error& error, const std::string& instance) {
  Json j = document();
  j["error"]["code"] = std::string(error_code_name(error.code()));
  j["error"]["message"] = error.what();
  if (!instance.empty()) j["error"]["instance"] = instance;
  return j;
}

Json twins_json(const TwinPartition& p) {
  Json j;
  j["kind"] = std::string(twin_kind_name(p.kind));
  j["w"] = p.generator ? Json(*p.generator) : Json(nullptr);
  j["class_size"] = p.kind == TwinKind::kNone ? Json(nullptr) : Json(p.class_size);
  j["classes"] = p.kind == TwinKind::kNone ? Json::array() : Json(p.classes);
  j["rejected_generators"] = p.rejected_generators;
  return j;
}

QuotientSequence chain_of(const Subject& subject) {
  return subject.set ? quotient_sequence(*subject.set) : quotient_sequence(subject.graph);
}

Json chain_json(const QuotientSequence& seq) {
  Json steps = Json::array();
  for (std::size_t i = 0; i < seq.steps.size(); ++i) {
    const QuotientStep& s = seq.steps[i];
    Json j;
    j["step"] = i + 1;
    j["input"] = s.input_set ? s.input_set->pm_name() : "graph[" + std::to_string(s.input.order()) + "]";
    j["kind"] = std::string(twin_kind_name(s.kind));
    j["t"] = s.class_size;
    j["quotient"] = s.quotient_set ? s.quotient_set->pm_name()
                                   : "graph[" + std::to_string(s.quotient.order()) + "]";
    j["quotient_order"] = s.quotient.order();
    steps.push_back(j);
  }
  Json j;
  j["steps"] = steps;
  j["terminal"] = seq.terminal_set ? seq.terminal_set->pm_name()
                                   : "graph[" + std::to_string(seq.terminal.order()) + "]";
  j["terminal_order"] = seq.terminal.order();
  return j;
}

Json value_json(const SymmetryValue& v) {
  Json j;
  j["value"] = v.exact() ? Json(v.lo) : Json(nullptr);
  j["lo"] = v.lo;
  j["hi"] = v.hi;
  j["method"] = v.method;
  j["exhaustive"] = v.exhaustive ? Json(*v.exhaustive) : Json(nullptr);
  j["witness"] = v.witness;
  return j;
}

Json analyze(const Subject& subject, const ReportOptions& options, bool& ok) {
  ok = true;
  const Graph& g = subject.graph;
  Json doc = document();
  doc["command"] = "analyze";
  doc["input"] = describe_input(subject);
  const bool transitive = subject.set.has_value() || is_vertex_transitive(g);
  if (!transitive) {
    doc["warnings"] = Json::array({"not vertex-transitive: structural shortcuts disabled, oracle-only claims"});
  }

  const TwinPartition twins = twins_of(subject);
  doc["twins"] = twins_json(twins);
  doc["quotient_chain"] = chain_json(chain_of(subject));

  Json cot;
  std::optional<CoTwinPairing> pairing;
  if (twins.kind == TwinKind::kNone) {
    pairing = subject.set ? detect_cotwins_circulant(*subject.set) : detect_cotwins_generic(g);
    cot["applicable"] = true;
    cot["kind"] = std::string(twin_kind_name(pairing->kind));
    cot["perfect"] = pairing->perfect;
    cot["pairs"] = pairs_json(pairing->pairs);
    if (pairing->kind != TwinKind::kNone) {
      const Graph h = pairing->kind == TwinKind::kNonadjacent ? g : g.complement();
      cot["triangle_free"] = !h.has_triangle();
      auto crown = recognize_crown(h);
      cot["crown_k"] = crown ? Json(crown->k) : Json(nullptr);
    }
  } else {
    cot["applicable"] = false;
    cot["reason"] = "graph has twins";
  }
  doc["cotwins"] = cot;

  const GroupStructure group = subject.set ? structural_order(*subject.set) : structural_order(g, transitive);
  Json grp;
  grp["order"] = big(group.order);
  grp["expression"] = group.expression.to_string();
  grp["method"] = std::string(structure_source_name(group.source));
  grp["outside_hypothesis"] = group.outside_hypothesis;
  if (!group.note.empty()) grp["note"] = group.note;
  doc["group"] = grp;

  const Mode mode = options.verify ? Mode::kBoth : Mode::kFormula;
  const SymmetryValue det = determining_number(g, mode, options.budget, transitive);
  const SymmetryValue dist = distinguishing_number(g, mode, options.budget, transitive);
  Json sym;
  sym["det"] = value_json(det);
  sym["dist"] = value_json(dist);
  sym["arc_transitive"] = is_arc_transitive(g);
  doc["symmetry"] = sym;

  if (!options.verify) return doc;

  Json claims = Json::array();
  const OracleOrder oracle = oracle_order(g, options.budget.group_limit);
  claims.push_back(claim("group order", grp["method"], big(group.order), big(oracle.order),
                         group.order == oracle.order));
  const BigInt counted = count_automorphisms(g);
  claims.push_back(claim("orbit-stabilizer", "oracle", big(oracle.order), big(counted), oracle.order == counted));
  if (subject.set) {
    const TwinPartition generic = detect_twins_generic(g);
    claims.push_back(claim("twin partition", "coset", std::string(twin_kind_name(twins.kind)),
                           std::string(twin_kind_name(generic.kind)), same_partition(twins, generic)));
  }
  if (det.exhaustive) {
    claims.push_back(claim("det", det.method, range(det), std::to_string(*det.exhaustive), det.consistent()));
  } else {
    claims.push_back(skipped("det", det.method, "exhaustive search over budget"));
  }
  if (!det.witness.empty() || det.exact()) {
    const bool determining = is_determining(g, det.witness);
    const bool tight = static_cast<int>(det.witness.size()) == det.hi || !det.exhaustive ||
                       static_cast<int>(det.witness.size()) == *det.exhaustive;
    claims.push_back(claim("det witness", det.method, std::to_string(det.witness.size()),
                           determining ? "determining" : "not determining", determining && tight));
  }
  if (dist.exhaustive) {
    claims.push_back(claim("dist", dist.method, range(dist), std::to_string(*dist.exhaustive), dist.consistent()));
  } else {
    claims.push_back(skipped("dist", dist.method, "group or coloring search over budget"));
  }
  if (!dist.witness.empty()) {
    try {
      const PermutationList all = enumerate_automorphisms(g, options.budget.group_limit);
      const bool good = is_distinguishing(all, dist.witness);
      claims.push_back(claim("dist witness", dist.method, std::to_string(dist.hi),
                             good ? "distinguishing" : "not distinguishing", good));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kLimitExceeded) throw;
      claims.push_back(skipped("dist witness", dist.method, "group over limit"));
    }
  }
  if (pairing && pairing->kind != TwinKind::kNone && pairing->perfect) {
    const Graph h = pairing->kind == TwinKind::kNonadjacent ? g : g.complement();
    try {
      const PermutationList all = enumerate_automorphisms(g, options.budget.group_limit);
      const bool kernel = kappa_kernel_check(h, *pairing, all);
      claims.push_back(claim("co-twin kernel", "oracle", "{id, beta}", kernel ? "{id, beta}" : "other", kernel));
      const KappaImage image = kappa_surjectivity(*pairing, all);
      const bool triangle_free = !h.has_triangle();
      claims.push_back(claim("co-twin surjectivity", "oracle", triangle_free ? "surjective" : "not surjective",
                             std::to_string(image.image_size) + "/" + big(image.full_symmetric_order),
                             image.surjective == triangle_free));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kLimitExceeded) throw;
      claims.push_back(skipped("co-twin kernel", "oracle", "group over limit"));
    }
  }
  for (const auto& c : claims) {
    if (c["status"] == "fail") ok = false;
  }
  doc["verification"]["claims"] = claims;
  doc["verification"]["all_ok"] = ok;
  return doc;
}

Json quotient_report(const Subject& subject) {
  Json doc = document();
  doc["command"] = "quotient-seq";
  doc["input"] = describe_input(subject);
  doc["quotient_chain"] = chain_json(chain_of(subject));
  return doc;
}

Json cotwin_report(const Subject& subject, const ReportOptions& options) {
  const Graph& g = subject.graph;
  Json doc = document();
  doc["command"] = "cotwin";
  doc["input"] = describe_input(subject);
  const CoTwinPairing pairing = subject.set ? detect_cotwins_circulant(*subject.set) : detect_cotwins_generic(g);
  Json cot;
  cot["kind"] = std::string(twin_kind_name(pairing.kind));
  cot["perfect"] = pairing.perfect;
  cot["pairs"] = pairs_json(pairing.pairs);
  if (pairing.kind != TwinKind::kNone && pairing.perfect) {
    const Graph h = pairing.kind == TwinKind::kNonadjacent ? g : g.complement();
    cot["swap"] = cotwin_swap(h, pairing);
    cot["triangle_free"] = !h.has_triangle();
    const auto crown = recognize_crown(h);
    cot["crown_k"] = crown ? Json(crown->k) : Json(nullptr);
    const InducedSubgraph hu = neighborhood_subgraph(h, 0);
    cot["h0"]["order"] = hu.graph.order();
    cot["h0"]["edges"] = hu.graph.edges().size();
    cot["h0"]["labels"] = hu.labels;
    cot["h0"]["aut_order"] = big(count_automorphisms(hu.graph));
    if (options.verify) {
      const PermutationList all = enumerate_automorphisms(g, options.budget.group_limit);
      const KappaImage image = kappa_surjectivity(pairing, all);
      cot["kernel_is_swap"] = kappa_kernel_check(h, pairing, all);
      cot["kappa_image"] = image.image_size;
      cot["kappa_surjective"] = image.surjective;
    }
  }
  doc["cotwins"] = cot;
  return doc;
}

Json autgroup_report(const Subject& subject, const ReportOptions& options, bool list_elements) {
  const Graph& g = subject.graph;
  Json doc = document();
  doc["command"] = "autgroup";
  doc["input"] = describe_input(subject);
  const GroupStructure group = subject.set ? structural_order(*subject.set) : structural_order(g);
  const OracleOrder oracle = oracle_order(g, options.budget.group_limit);
  Json grp;
  grp["order"] = big(group.order);
  grp["expression"] = group.expression.to_string();
  grp["method"] = std::string(structure_source_name(group.source));
  grp["oracle_order"] = big(oracle.order);
  grp["orbit_size"] = oracle.orbit_size;
  grp["stabilizer_order"] = big(oracle.stabilizer_order);
  grp["vertex_transitive"] = oracle.vertex_transitive;
  grp["arc_transitive"] = is_arc_transitive(g);
  grp["agrees"] = group.order == oracle.order;
  if (list_elements) grp["elements"] = enumerate_automorphisms(g, options.budget.group_limit).elements;
  doc["group"] = grp;
  return doc;
}

CorpusSummary verify_corpus(int max_n, const SearchBudget& budget) {
  CorpusSummary summary;
  std::vector<ConnectionSet> reps;
  for (int n = 1; n <= max_n; ++n) {
    for (const auto& set : all_connection_sets(n)) {
      ++summary.graphs;
      ++summary.checks;
      const Graph g = build(set);
      if (!same_partition(detect_twins_circulant(set), detect_twins_generic(g))) {
        summary.mismatches.push_back(set.pm_name() + ": coset and neighborhood twin detection differ");
      }
      if (multiplier_canonical(set) == set) reps.push_back(set);
    }
  }

  struct Outcome {
    int checks = 0;
    int skipped = 0;
    std::vector<std::string> mismatches;
  };
  std::vector<Outcome> outcomes(reps.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < reps.size(); ++i) {
    const ConnectionSet& set = reps[i];
    Outcome& out = outcomes[i];
    const Graph g = build(set);
    const std::string name = set.pm_name();
    auto check = [&](bool pass, const std::string& what) {
      ++out.checks;
      if (!pass) out.mismatches.push_back(name + ": " + what);
    };
    const GroupStructure group = structural_order(set);
    const BigInt counted = count_automorphisms(g);
    check(group.order == counted, "group order " + big(group.order) + " vs oracle " + big(counted));
    const OracleOrder oracle = oracle_order(g, budget.explicit_group_limit);
    check(oracle.order == counted, "orbit-stabilizer product differs from the base count");

    const SymmetryValue det = determining_number(g, Mode::kBoth, budget, true);
    if (det.exhaustive) {
      check(det.consistent(), "det " + range(det) + " vs exhaustive " + std::to_string(*det.exhaustive));
    } else {
      ++out.skipped;
    }
    const bool small_group = counted <= budget.explicit_group_limit;
    const Mode dist_mode = set.modulus() <= kCorpusDistMaxN || small_group ? Mode::kBoth : Mode::kFormula;
    const SymmetryValue dist = distinguishing_number(g, dist_mode, budget, true);
    if (dist.exhaustive) {
      check(dist.consistent(), "dist " + range(dist) + " vs exhaustive " + std::to_string(*dist.exhaustive));
    } else {
      ++out.skipped;
    }

    const TwinPartition twins = detect_twins_circulant(set);
    if (twins.kind != TwinKind::kNone) {
      const std::vector<int> cover = minimum_twin_cover(g);
      if (det.exhaustive) {
        check(static_cast<int>(cover.size()) == *det.exhaustive && is_determining(g, cover),
              "twin cover is not a minimum determining set");
      }
      if (twins.kind == TwinKind::kNonadjacent) {
        const Graph q = quotient(g, twins).quotient;
        check(is_arc_transitive(g) == is_arc_transitive(q), "arc-transitivity differs from the quotient");
      }
    }
  }
  for (auto& o : outcomes) {
    summary.checks += o.checks;
    summary.skipped += o.skipped;
    summary.mismatches.insert(summary.mismatches.end(), o.mismatches.begin(), o.mismatches.end());
  }
  return summary;
}

Json corpus_json(const CorpusSummary& summary, int max_n) {
  Json doc = document();
  doc["command"] = "verify-corpus";
  doc["max_n"] = max_n;
  doc["graphs"] = summary.graphs;
  doc["checks"] = summary.checks;
  doc["skipped"] = summary.skipped;
  doc["mismatches"] = summary.mismatches;
  doc["all_ok"] = summary.mismatches.empty();
  return doc;
}

}  // namespace circsym

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "circsym/catalog.hpp"
#include "circsym/report.hpp"

using namespace circsym;

namespace {

struct InputArgs {
  int n = 0;
  std::vector<std::string> tokens;
  std::string named;
  bool json = false;
  std::string dot_dir;
  std::size_t limit = kDefaultAutomorphismLimit;
  std::size_t node_limit = SearchBudget{}.node_limit;
  bool verify = false;

  std::string instance() const {
    if (!named.empty()) return named;
    std::string s = std::to_string(n);
    for (const auto& t : tokens) s += " " + t;
    return s;
  }

  Subject subject() const {
    if (!named.empty()) return Subject::named(named);
    std::string joined;
    for (const auto& t : tokens) joined += t + " ";
    return Subject::circulant(parse_connection_set(n, joined));
  }

  ReportOptions options() const {
    ReportOptions o;
    o.verify = verify;
    o.budget.group_limit = limit;
    o.budget.node_limit = node_limit;
    return o;
  }
};

void add_input(CLI::App* cmd, InputArgs& args) {
  cmd->add_option("n", args.n, "Order of the circulant");
  cmd->add_option("set", args.tokens, "Connection set tokens, e.g. ±1,±3,4");
  cmd->add_option("--named", args.named, "Named graph instead of a circulant (icosahedron, crown5, Q3, ...)");
  cmd->add_flag("--json", args.json, "Print the JSON document");
  cmd->add_option("--limit", args.limit, "Cap on enumerated automorphisms");
  cmd->add_option("--node-limit", args.node_limit, "Cap on exhaustive search nodes");
}

void write_dot(const std::string& dir, const QuotientSequence& seq, const Graph& input) {
  std::filesystem::create_directories(dir);
  std::ofstream(std::filesystem::path(dir) / "step_0.dot") << input.to_dot();
  for (std::size_t i = 0; i < seq.steps.size(); ++i) {
    std::ofstream(std::filesystem::path(dir) / ("step_" + std::to_string(i + 1) + ".dot"))
        << seq.steps[i].quotient.to_dot();
  }
}

std::string value_text(const Json& v) {
  std::string s = v["value"].is_null() ? v["lo"].dump() + ".." + v["hi"].dump() : v["value"].dump();
  s += " [" + v["method"].get<std::string>() + "]";
  if (!v["exhaustive"].is_null()) s += " exhaustive " + v["exhaustive"].dump();
  return s;
}

std::string chain_text(const Json& chain) {
  std::string s;
  for (const auto& step : chain["steps"]) {
    s += step["input"].get<std::string>() + " -" + step["kind"].get<std::string>() + " t=" + step["t"].dump() + "-> ";
  }
  return s + chain["terminal"].get<std::string>();
}

void print_analysis(const Json& doc) {
  const Json& in = doc["input"];
  std::cout << in["name"].get<std::string>() << "  n=" << in["n"] << " valency " << in["valency"]
            << (in["connected"].get<bool>() ? "" : " disconnected") << (in["bipartite"].get<bool>() ? " bipartite" : "")
            << '\n';
  const Json& t = doc["twins"];
  std::cout << "twins: " << t["kind"].get<std::string>();
  if (t["kind"] != "none") std::cout << ", w=" << t["w"] << ", t=" << t["class_size"];
  std::cout << "\nchain: " << chain_text(doc["quotient_chain"]) << '\n';
  const Json& c = doc["cotwins"];
  if (!c["applicable"].get<bool>()) {
    std::cout << "co-twins: not applicable (" << c["reason"].get<std::string>() << ")\n";
  } else {
    std::cout << "co-twins: " << c["kind"].get<std::string>();
    if (c.contains("triangle_free")) std::cout << (c["triangle_free"].get<bool>() ? ", triangle-free" : ", with triangles");
    std::cout << '\n';
  }
  const Json& g = doc["group"];
  std::cout << "group: order " << g["order"].get<std::string>() << ", " << g["expression"].get<std::string>() << " ["
            << g["method"].get<std::string>() << "]\n";
  std::cout << "det: " << value_text(doc["symmetry"]["det"]) << '\n';
  std::cout << "dist: " << value_text(doc["symmetry"]["dist"]) << '\n';
  std::cout << "arc-transitive: " << (doc["symmetry"]["arc_transitive"].get<bool>() ? "yes" : "no") << '\n';
  if (doc.contains("verification")) {
    int pass = 0, fail = 0, skip = 0;
    for (const auto& cl : doc["verification"]["claims"]) {
      if (cl["status"] == "pass") ++pass;
      else if (cl["status"] == "fail") {
        ++fail;
        std::cout << "  FAIL " << cl["claim"].get<std::string>() << ": " << cl["formula"].get<std::string>()
                  << " vs " << cl["oracle"].get<std::string>() << '\n';
      } else ++skip;
    }
    std::cout << "verification: " << pass << " pass, " << fail << " fail, " << skip << " skipped\n";
  }
}

std::string family_csv(const SpecFamily& family) {
  std::ostringstream out;
  out << "spec,valency,connected,bipartite,distinct_by\n";
  for (std::size_t i = 0; i < family.specs.size(); ++i) {
    const CirculantSpec d = describe(family.specs[i]);
    // Weakest evidence separating this spec from the others.
    std::string evidence = "fingerprint";
    for (const auto& c : family.certificates) {
      if (c.a != static_cast<int>(i) && c.b != static_cast<int>(i)) continue;
      if (c.verdict != PairVerdict::kFingerprint) evidence = std::string(pair_verdict_name(c.verdict));
    }
    out << '"' << family.specs[i].pm_name() << "\"," << d.valency << ',' << d.connected << ',' << d.bipartite << ','
        << evidence << '\n';
  }
  return out.str();
}

Json family_json(const SpecFamily& family) {
  Json specs = Json::array();
  for (const auto& s : family.specs) {
    const CirculantSpec d = describe(s);
    specs.push_back({{"spec", s.pm_name()}, {"valency", d.valency}, {"connected", d.connected}, {"bipartite", d.bipartite}});
  }
  Json certs = Json::array();
  for (const auto& c : family.certificates) {
    certs.push_back({{"a", c.a}, {"b", c.b}, {"verdict", std::string(pair_verdict_name(c.verdict))}});
  }
  return {{"specs", specs}, {"certificates", certs}, {"all_distinct", family.all_distinct()}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Twins, co-twins and symmetry of circulant graphs"};
  app.require_subcommand(1);

  InputArgs args;
  auto* analyze_cmd = app.add_subcommand("analyze", "Full analysis of one graph");
  add_input(analyze_cmd, args);
  analyze_cmd->add_flag("--verify", args.verify, "Cross-check every formula against the oracle");
  analyze_cmd->add_option("--dot", args.dot_dir, "Write DOT files of the quotient chain here");

  auto* quotient_cmd = app.add_subcommand("quotient-seq", "Twin quotient chain");
  add_input(quotient_cmd, args);
  quotient_cmd->add_option("--dot", args.dot_dir, "Write one DOT file per step here");

  auto* cotwin_cmd = app.add_subcommand("cotwin", "Co-twin pairing and its swap");
  add_input(cotwin_cmd, args);
  cotwin_cmd->add_flag("--verify", args.verify, "Check the kernel and image of the pair action");

  bool list_elements = false;
  auto* aut_cmd = app.add_subcommand("autgroup", "Automorphism group order and structure");
  add_input(aut_cmd, args);
  aut_cmd->add_flag("--elements", list_elements, "List every automorphism");

  std::string job;
  int max_n = 0;
  int family_n = 30;
  int family_w = 6;
  bool catalog_json = false;
  auto* catalog_cmd = app.add_subcommand("catalog", "Enumeration jobs");
  catalog_cmd->add_option("job", job, "table1, table2, cotwin-orders or twin-class-families")
      ->required()
      ->check(CLI::IsMember({"table1", "table2", "cotwin-orders", "twin-class-families"}));
  catalog_cmd->add_option("--max-n", max_n, "Largest order scanned");
  catalog_cmd->add_option("--n", family_n, "Order for twin-class-families");
  catalog_cmd->add_option("--w", family_w, "Subgroup generator for twin-class-families");
  catalog_cmd->add_flag("--json", catalog_json, "JSON instead of CSV");

  int corpus_n = 20;
  auto* corpus_cmd = app.add_subcommand("verify-corpus", "Formula against oracle on every small circulant");
  corpus_cmd->add_option("--max-n", corpus_n, "Largest order checked");
  corpus_cmd->add_option("--limit", args.limit, "Cap on enumerated automorphisms");
  corpus_cmd->add_option("--node-limit", args.node_limit, "Cap on exhaustive search nodes");
  corpus_cmd->add_flag("--json", args.json, "Print the JSON summary");

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze_cmd->parsed()) {
      const Subject subject = args.subject();
      bool ok = true;
      const Json doc = analyze(subject, args.options(), ok);
      if (!args.dot_dir.empty()) write_dot(args.dot_dir, chain_of(subject), subject.graph);
      if (args.json) {
        std::cout << doc.dump(2) << '\n';
      } else {
        print_analysis(doc);
      }
      return ok ? 0 : 1;
    }
    if (quotient_cmd->parsed()) {
      const Subject subject = args.subject();
      const Json doc = quotient_report(subject);
      if (!args.dot_dir.empty()) write_dot(args.dot_dir, chain_of(subject), subject.graph);
      if (args.json) {
        std::cout << doc.dump(2) << '\n';
      } else {
        const Json& chain = doc["quotient_chain"];
        for (const auto& step : chain["steps"]) {
          std::cout << step["step"] << ". " << step["input"].get<std::string>() << " has "
                    << step["kind"].get<std::string>() << " twins, t=" << step["t"] << " -> "
                    << step["quotient"].get<std::string>() << '\n';
        }
        std::cout << "twin-free: " << chain["terminal"].get<std::string>() << '\n';
      }
      return 0;
    }
    if (cotwin_cmd->parsed()) {
      const Json doc = cotwin_report(args.subject(), args.options());
      std::cout << doc.dump(args.json ? 2 : -1) << '\n';
      return 0;
    }
    if (aut_cmd->parsed()) {
      const Json doc = autgroup_report(args.subject(), args.options(), list_elements);
      if (args.json || list_elements) {
        std::cout << doc.dump(2) << '\n';
      } else {
        const Json& g = doc["group"];
        std::cout << "order " << g["order"].get<std::string>() << " = " << g["expression"].get<std::string>() << " ["
                  << g["method"].get<std::string>() << "]\noracle " << g["oracle_order"].get<std::string>() << " = "
                  << g["orbit_size"] << " x " << g["stabilizer_order"].get<std::string>() << '\n';
      }
      return doc["group"]["agrees"].get<bool>() ? 0 : 1;
    }
    if (catalog_cmd->parsed()) {
      if (job == "table1" || job == "table2") {
        const int gens = job == "table1" ? 2 : 3;
        const int bound = max_n > 0 ? max_n : 60;
        const auto rows = gens == 2 ? classify_two_generator(bound) : classify_three_generator(bound);
        const auto mismatches = table_mismatches(gens, bound);
        if (catalog_json) {
          Json doc = document();
          doc["job"] = job;
          doc["max_n"] = bound;
          Json arr = Json::array();
          for (const auto& r : rows) {
            Json row = {{"n", r.set.modulus()}, {"i", r.i}, {"j", r.j}};
            if (gens == 3) row["k"] = r.k;
            row["kind"] = std::string(twin_kind_name(r.kind));
            row["w"] = r.w;
            row["pattern"] = r.pattern;
            arr.push_back(row);
          }
          doc["rows"] = arr;
          doc["mismatches"] = mismatches;
          std::cout << doc.dump(2) << '\n';
        } else {
          std::cout << table_csv(rows, gens);
          for (const auto& m : mismatches) std::cerr << "mismatch: " << m << '\n';
        }
        return mismatches.empty() ? 0 : 1;
      }
      if (job == "cotwin-orders") {
        const int bound = max_n > 0 ? max_n : 30;
        Json doc = document();
        doc["job"] = job;
        Json arr = Json::array();
        if (!catalog_json) std::cout << "n,spec,aut_order,triangle_free,det,dist_lo,dist_hi\n";
        for (int n = 4; n <= bound; n += 2) {
          const SpecFamily family = enumerate_twinfree_cotwin_circulants(n);
          for (const auto& s : family.specs) {
            const SymmetryReport r = analyze_symmetry(s, Mode::kFormula, args.options().budget, false);
            const bool tf = !build(s).has_triangle();
            if (catalog_json) {
              arr.push_back({{"n", n}, {"spec", s.pm_name()}, {"aut_order", r.group.order.str()},
                             {"triangle_free", tf}, {"det", value_json(r.det)}, {"dist", value_json(r.dist)}});
            } else {
              std::cout << n << ",\"" << s.pm_name() << "\"," << r.group.order << ',' << tf << ',' << r.det.lo << ','
                        << r.dist.lo << ',' << r.dist.hi << '\n';
            }
          }
        }
        if (catalog_json) {
          doc["rows"] = arr;
          std::cout << doc.dump(2) << '\n';
        }
        return 0;
      }
      const SpecFamily family = enumerate_with_twin_classes(family_n, family_w);
      if (catalog_json) {
        Json doc = document();
        doc["job"] = job;
        doc["n"] = family_n;
        doc["w"] = family_w;
        doc.update(family_json(family));
        std::cout << doc.dump(2) << '\n';
      } else {
        std::cout << family_csv(family);
      }
      return 0;
    }
    if (corpus_cmd->parsed()) {
      const CorpusSummary summary = verify_corpus(corpus_n, args.options().budget);
      if (args.json) {
        std::cout << corpus_json(summary, corpus_n).dump(2) << '\n';
      } else {
        for (const auto& m : summary.mismatches) std::cout << "MISMATCH " << m << '\n';
        std::cout << summary.graphs << " graphs, " << summary.checks << " checks, " << summary.skipped
                  << " skipped, " << summary.mismatches.size() << " mismatches\n";
      }
      return summary.mismatches.empty() ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cout << error_document(e, args.instance()).dump(2) << '\n';
    return 2;
  }
  return 0;
}

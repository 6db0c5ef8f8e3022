#pragma once

// JSON documents emitted by the command-line tool.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "circsym/circulant.hpp"
#include "circsym/error.hpp"
#include "circsym/graph.hpp"
#include "circsym/symmetry.hpp"
#include "circsym/twins.hpp"

namespace circsym {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "circsym 0.1.0";

/// A graph under analysis: a circulant spec, or a named graph without one.
struct Subject {
  Graph graph;
  std::optional<ConnectionSet> set;
  std::string name;

  static Subject circulant(const ConnectionSet& set);
  static Subject named(const std::string& name);
};

struct ReportOptions {
  bool verify = false;
  SearchBudget budget;
};

/// Envelope with the schema version and tool version.
Json document();
Json error_document(const Error& error, const std::string& instance = "");

Json twins_json(const TwinPartition& p);
Json chain_json(const QuotientSequence& seq);
Json value_json(const SymmetryValue& v);

/// Full pipeline: twins, quotient chain, co-twins, group, det/dist, and with
/// `verify` the oracle cross-checks. Sets `ok` false on any mismatch.
Json analyze(const Subject& subject, const ReportOptions& options, bool& ok);
Json quotient_report(const Subject& subject);
Json cotwin_report(const Subject& subject, const ReportOptions& options);
Json autgroup_report(const Subject& subject, const ReportOptions& options, bool list_elements);

QuotientSequence chain_of(const Subject& subject);

struct CorpusSummary {
  int graphs = 0;
  int checks = 0;
  int skipped = 0;
  std::vector<std::string> mismatches;
};

/// Formula-against-oracle checks over every connection set with n <= max_n,
/// one representative per multiplier class for the expensive claims.
CorpusSummary verify_corpus(int max_n, const SearchBudget& budget);
Json corpus_json(const CorpusSummary& summary, int max_n);

}  // namespace circsym

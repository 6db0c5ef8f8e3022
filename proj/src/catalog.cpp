#include "circsym/catalog.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "circsym/autgroup.hpp"
#include "circsym/cotwins.hpp"
#include "circsym/zn.hpp"

namespace circsym {
namespace {

ConnectionSet from_generators(int n, std::initializer_list<int> gens) {
  std::vector<int> members;
  for (int a : gens) {
    members.push_back(a);
    members.push_back(n - a);
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return ConnectionSet::from_members(n, members);
}

std::optional<TableRow> two_generator_row(int n, int i, int j) {
  const ConnectionSet set = from_generators(n, {i, j});
  const TwinPartition p = detect_twins_circulant(set);
  if (p.kind == TwinKind::kNone) return std::nullopt;
  TableRow row{set, i, j, 0, p.kind, p.generator.value_or(0), ""};
  if (auto m = table1_pattern(n, i, j)) row.pattern = m->pattern;
  return row;
}

std::optional<TableRow> three_generator_row(int n, int i, int j, int k) {
  const ConnectionSet set = from_generators(n, {i, j, k});
  const TwinPartition p = detect_twins_circulant(set);
  if (p.kind == TwinKind::kNone) return std::nullopt;
  TableRow row{set, i, j, k, p.kind, p.generator.value_or(0), ""};
  if (auto m = table2_pattern(n, i, j, k)) row.pattern = m->pattern;
  return row;
}

std::vector<TableRow> scan_two(int n) {
  std::vector<TableRow> rows;
  for (int i = 1; i <= n / 2; ++i) {
    for (int j = i + 1; 2 * j <= n; ++j) {
      if (std::gcd(std::gcd(i, j), n) != 1) continue;
      if (auto row = two_generator_row(n, i, j)) rows.push_back(std::move(*row));
    }
  }
  return rows;
}

std::vector<TableRow> scan_three(int n) {
  std::vector<TableRow> rows;
  for (int i = 1; i <= n / 2; ++i) {
    for (int j = i + 1; 2 * j <= n; ++j) {
      for (int k = j + 1; 2 * k <= n; ++k) {
        if (std::gcd(std::gcd(i, j), std::gcd(k, n)) != 1) continue;
        if (auto row = three_generator_row(n, i, j, k)) rows.push_back(std::move(*row));
      }
    }
  }
  return rows;
}

template <typename Scan>
std::vector<TableRow> parallel_scan(int lo, int max_n, Scan scan) {
  if (max_n < lo) return {};
  const int count = max_n - lo + 1;
  std::vector<std::vector<TableRow>> parts(count);
#pragma omp parallel for schedule(dynamic)
  for (int idx = 0; idx < count; ++idx) parts[idx] = scan(lo + idx);
  std::vector<TableRow> rows;
  for (auto& part : parts) rows.insert(rows.end(), part.begin(), part.end());
  return rows;
}

template <typename Scan>
std::vector<TableRow> serial_scan(int lo, int max_n, Scan scan) {
  std::vector<TableRow> rows;
  for (int n = lo; n <= max_n; ++n) {
    auto part = scan(n);
    rows.insert(rows.end(), part.begin(), part.end());
  }
  return rows;
}

std::string describe_mismatch(const ConnectionSet& set, const TwinPartition& p,
                              const std::optional<PatternMatch>& m) {
  std::ostringstream out;
  out << set.pm_name() << ": detected " << twin_kind_name(p.kind) << " w=" << p.generator.value_or(0)
      << ", table ";
  if (m) {
    out << twin_kind_name(m->kind) << " w=" << m->w << " (" << m->pattern << ")";
  } else {
    out << "none";
  }
  return out.str();
}

bool agrees(const TwinPartition& p, const std::optional<PatternMatch>& m) {
  if (p.kind == TwinKind::kNone) return !m;
  return m && m->kind == p.kind && m->w == p.generator.value_or(0);
}

}  // namespace

std::optional<PatternMatch> table1_pattern(int n, int i, int j) {
  if (n == 6 && i == 1 && j == 3) return PatternMatch{TwinKind::kNonadjacent, 2, "C_6(1,3)"};
  if (n == 4 && i == 1 && j == 2) return PatternMatch{TwinKind::kAdjacent, 1, "K_4"};
  if (n == 8 && i == 1 && j == 3) return PatternMatch{TwinKind::kNonadjacent, 2, "C_8(1,3)"};
  if (n == 5 && i == 1 && j == 2) return PatternMatch{TwinKind::kAdjacent, 1, "K_5"};
  if (2 * j < n && 2 * (i + j) == n) return PatternMatch{TwinKind::kNonadjacent, n / 2, "i+j=n/2"};
  return std::nullopt;
}

std::optional<PatternMatch> table2_pattern(int n, int i, int j, int k) {
  if (n == 10 && i == 1 && j == 3 && k == 5) return PatternMatch{TwinKind::kNonadjacent, 2, "C_10(1,3,5)"};
  if (n == 6 && i == 1 && j == 2 && k == 3) return PatternMatch{TwinKind::kAdjacent, 1, "K_6"};
  if (n == 12 && i == 1 && j == 3 && k == 5) return PatternMatch{TwinKind::kNonadjacent, 2, "C_12(1,3,5)"};
  if (n == 7 && i == 1 && j == 2 && k == 3) return PatternMatch{TwinKind::kAdjacent, 1, "K_7"};
  if (2 * k == n && i + j == k) return PatternMatch{TwinKind::kAdjacent, n / 2, "i+j=k=n/2"};
  if (2 * k < n && n % 3 == 0 && 3 * (i + j) == n && 2 * i + j == k) {
    return PatternMatch{TwinKind::kNonadjacent, n / 3, "i+j=n/3,2i+j=k"};
  }
  if (2 * k < n && 2 * (i + k) == n && 4 * j == n) {
    return PatternMatch{TwinKind::kNonadjacent, n / 2, "i+k=2j=n/2"};
  }
  return std::nullopt;
}

std::vector<TableRow> classify_two_generator(int max_n) { return parallel_scan(4, max_n, scan_two); }
std::vector<TableRow> classify_two_generator_serial(int max_n) { return serial_scan(4, max_n, scan_two); }
std::vector<TableRow> classify_three_generator(int max_n) { return parallel_scan(6, max_n, scan_three); }
std::vector<TableRow> classify_three_generator_serial(int max_n) { return serial_scan(6, max_n, scan_three); }

std::vector<std::string> table_mismatches(int generators, int max_n) {
  std::vector<std::string> out;
  for (int n = generators == 2 ? 4 : 6; n <= max_n; ++n) {
    for (int i = 1; 2 * i <= n; ++i) {
      for (int j = i + 1; 2 * j <= n; ++j) {
        if (generators == 2) {
          if (std::gcd(std::gcd(i, j), n) != 1) continue;
          const ConnectionSet set = from_generators(n, {i, j});
          const TwinPartition p = detect_twins_circulant(set);
          const auto m = table1_pattern(n, i, j);
          if (!agrees(p, m)) out.push_back(describe_mismatch(set, p, m));
          continue;
        }
        for (int k = j + 1; 2 * k <= n; ++k) {
          if (std::gcd(std::gcd(i, j), std::gcd(k, n)) != 1) continue;
          const ConnectionSet set = from_generators(n, {i, j, k});
          const TwinPartition p = detect_twins_circulant(set);
          const auto m = table2_pattern(n, i, j, k);
          if (!agrees(p, m)) out.push_back(describe_mismatch(set, p, m));
        }
      }
    }
  }
  return out;
}

std::string table_csv(const std::vector<TableRow>& rows, int generators) {
  std::ostringstream out;
  out << (generators == 2 ? "n,i,j,kind,w,pattern\n" : "n,i,j,k,kind,w,pattern\n");
  for (const auto& r : rows) {
    out << r.set.modulus() << ',' << r.i << ',' << r.j << ',';
    if (generators == 3) out << r.k << ',';
    out << twin_kind_name(r.kind) << ',' << r.w << ',' << r.pattern << '\n';
  }
  return out.str();
}

Fingerprint fingerprint(const Graph& g) {
  Fingerprint f;
  f.order = g.order();
  f.valency = g.regular_degree().value_or(-1);
  f.components = g.component_count();
  f.bipartite = g.is_bipartite();
  f.triangles = g.triangle_count();
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      VertexSet common = g.row(u);
      common &= g.row(v);
      f.common_neighbors.emplace_back(g.adjacent(u, v), common.size());
    }
  }
  std::sort(f.common_neighbors.begin(), f.common_neighbors.end());
  return f;
}

std::string_view pair_verdict_name(PairVerdict verdict) {
  switch (verdict) {
    case PairVerdict::kFingerprint: return "fingerprint";
    case PairVerdict::kOracle: return "oracle";
    case PairVerdict::kIsomorphic: return "isomorphic";
    case PairVerdict::kUnresolved: return "unresolved";
  }
  return "unresolved";
}

std::vector<PairCertificate> certify_pairwise(const std::vector<ConnectionSet>& specs, int oracle_max_n) {
  std::vector<Graph> graphs;
  std::vector<Fingerprint> prints;
  for (const auto& s : specs) {
    graphs.push_back(build(s));
    prints.push_back(fingerprint(graphs.back()));
  }
  std::vector<PairCertificate> out;
  for (int a = 0; a < static_cast<int>(specs.size()); ++a) {
    for (int b = a + 1; b < static_cast<int>(specs.size()); ++b) {
      PairCertificate cert{a, b, PairVerdict::kFingerprint};
      if (prints[a] == prints[b]) {
        if (graphs[a].order() > oracle_max_n) {
          cert.verdict = PairVerdict::kUnresolved;
        } else {
          cert.verdict = find_isomorphism(graphs[a], graphs[b]) ? PairVerdict::kIsomorphic : PairVerdict::kOracle;
        }
      }
      out.push_back(cert);
    }
  }
  return out;
}

bool SpecFamily::all_distinct() const {
  return std::all_of(certificates.begin(), certificates.end(), [](const PairCertificate& c) {
    return c.verdict == PairVerdict::kFingerprint || c.verdict == PairVerdict::kOracle;
  });
}

bool SpecFamily::fingerprints_distinct() const {
  return std::all_of(certificates.begin(), certificates.end(),
                     [](const PairCertificate& c) { return c.verdict == PairVerdict::kFingerprint; });
}

SpecFamily enumerate_with_twin_classes(int n, int w) {
  SpecFamily family;
  if (n < 2) return family;
  const CyclicSubgroup sub = subgroup(n, ((w % n) + n) % n);
  if (sub.order() == 1 || sub.order() == n) return family;
  // Pair every nontrivial coset with its negative.
  std::vector<std::vector<int>> blocks;
  std::vector<bool> used(n, false);
  for (const auto& coset : cosets(sub)) {
    if (coset.front() == 0 || used[coset.front()]) continue;
    std::vector<int> block = coset;
    for (int x : coset) {
      block.push_back((n - x) % n);
    }
    std::sort(block.begin(), block.end());
    block.erase(std::unique(block.begin(), block.end()), block.end());
    for (int x : block) used[x] = true;
    blocks.push_back(std::move(block));
  }
  const int b = static_cast<int>(blocks.size());
  for (int mask = 1; mask < (1 << b); ++mask) {
    std::vector<int> members;
    for (int i = 0; i < b; ++i) {
      if (mask & (1 << i)) members.insert(members.end(), blocks[i].begin(), blocks[i].end());
    }
    std::sort(members.begin(), members.end());
    family.specs.push_back(ConnectionSet::from_members(n, members));
  }
  std::sort(family.specs.begin(), family.specs.end());
  family.certificates = certify_pairwise(family.specs);
  return family;
}

SpecFamily enumerate_twinfree_cotwin_circulants(int n) {
  SpecFamily family;
  if (n < 2 || n % 2 != 0) return family;
  std::vector<ConnectionSet> found;
  for (const auto& set : all_connection_sets(n)) {
    if (set.size() != n / 2 - 1) continue;
    if (detect_twins_circulant(set).kind != TwinKind::kNone) continue;
    if (detect_cotwins_circulant(set).kind != TwinKind::kNonadjacent) continue;
    found.push_back(multiplier_canonical(set));
  }
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  family.specs = std::move(found);
  family.certificates = certify_pairwise(family.specs);
  return family;
}

}  // namespace circsym

#include <gtest/gtest.h>

#include <map>
#include <numeric>
#include <random>

#include "circsym/autgroup.hpp"
#include "circsym/catalog.hpp"
#include "circsym/circulant.hpp"
#include "circsym/cotwins.hpp"
#include "circsym/twins.hpp"
#include "circsym/zn.hpp"

using namespace circsym;

namespace {

ConnectionSet spec(int n, const char* tokens) { return parse_connection_set(n, tokens); }

std::vector<std::string> names(const std::vector<ConnectionSet>& specs) {
  std::vector<std::string> out;
  for (const auto& s : specs) out.push_back(s.pm_name());
  return out;
}

bool same_rows(const std::vector<TableRow>& a, const std::vector<TableRow>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t r = 0; r < a.size(); ++r) {
    if (a[r].set != b[r].set || a[r].kind != b[r].kind || a[r].w != b[r].w || a[r].pattern != b[r].pattern) {
      return false;
    }
  }
  return true;
}

}  // namespace

TEST(TablePatterns, Examples) {
  const auto c8 = table1_pattern(8, 1, 3);
  ASSERT_TRUE(c8);
  EXPECT_EQ(c8->kind, TwinKind::kNonadjacent);
  EXPECT_EQ(c8->w, 2);
  EXPECT_EQ(c8->pattern, "C_8(1,3)");
  EXPECT_EQ(table1_pattern(10, 1, 4)->w, 5);
  EXPECT_FALSE(table1_pattern(10, 1, 3));

  const auto c12 = table2_pattern(12, 1, 3, 5);
  ASSERT_TRUE(c12);
  EXPECT_EQ(c12->w, 2);
  EXPECT_EQ(table2_pattern(7, 1, 2, 3)->pattern, "K_7");
  EXPECT_EQ(table2_pattern(9, 1, 2, 4)->w, 3);
  EXPECT_FALSE(table2_pattern(12, 1, 4, 5));
  EXPECT_EQ(detect_twins_circulant(spec(12, "±1,±4,±5")).kind, TwinKind::kNone);
}

TEST(TableScan, ConnectedOnlyAndLabelled) {
  const auto rows = classify_two_generator(20);
  for (const TableRow& r : rows) {
    EXPECT_FALSE(r.pattern.empty()) << r.set.canonical_name();
    EXPECT_EQ(std::gcd(std::gcd(r.i, r.j), r.set.modulus()), 1);
  }
  const bool has_c12_2_4 = std::any_of(rows.begin(), rows.end(), [](const TableRow& r) {
    return r.set.modulus() == 12 && r.i == 2 && r.j == 4;
  });
  EXPECT_FALSE(has_c12_2_4);
  for (const TableRow& r : classify_three_generator(20)) EXPECT_FALSE(r.pattern.empty()) << r.set.canonical_name();
}

TEST(TableScan, NoMismatchesUpTo40) {
  EXPECT_TRUE(table_mismatches(2, 40).empty());
  EXPECT_TRUE(table_mismatches(3, 40).empty());
}

TEST(TableScan, ParallelMatchesSerial) {
  EXPECT_TRUE(same_rows(classify_two_generator(48), classify_two_generator_serial(48)));
  EXPECT_TRUE(same_rows(classify_three_generator(36), classify_three_generator_serial(36)));
}

TEST(TableScan, Csv) {
  const std::string csv = table_csv(classify_two_generator(6), 2);
  EXPECT_EQ(csv,
            "n,i,j,kind,w,pattern\n"
            "4,1,2,adjacent,1,K_4\n"
            "5,1,2,adjacent,1,K_5\n"
            "6,1,2,nonadjacent,3,i+j=n/2\n"
            "6,1,3,nonadjacent,2,C_6(1,3)\n");
}

TEST(Fingerprint, InvariantUnderMultipliersAndRelabeling) {
  for (int n = 3; n <= 16; ++n) {
    for (const ConnectionSet& set : all_connection_sets(n)) {
      const Fingerprint f = fingerprint(build(set));
      for (int t : units(n)) EXPECT_EQ(fingerprint(build(multiply(set, t))), f) << set.canonical_name();
    }
  }
  std::mt19937 rng(29);
  const Graph g = build(spec(14, "±1,±2,±4"));
  std::vector<int> perm(14);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Edge> moved;
  for (auto [u, v] : g.edges()) moved.emplace_back(perm[u], perm[v]);
  EXPECT_EQ(fingerprint(Graph::from_edges(14, moved)), fingerprint(g));
}

TEST(Fingerprint, Fields) {
  const Fingerprint f = fingerprint(build(spec(10, "±1,±2")));
  EXPECT_EQ(f.order, 10);
  EXPECT_EQ(f.valency, 4);
  EXPECT_EQ(f.components, 1);
  EXPECT_FALSE(f.bipartite);
  EXPECT_EQ(f.triangles, 10);
  EXPECT_EQ(f.common_neighbors.size(), 45U);
}

TEST(TwinClassFamilies, ThirtySix) {
  const SpecFamily fam = enumerate_with_twin_classes(30, 6);
  ASSERT_EQ(fam.specs.size(), 7U);
  EXPECT_TRUE(fam.fingerprints_distinct());
  EXPECT_TRUE(fam.all_distinct());
  EXPECT_EQ(fam.certificates.size(), 21U);
  for (const ConnectionSet& s : fam.specs) {
    for (int a : s.members()) EXPECT_TRUE(s.contains((a + 6) % 30));
    EXPECT_FALSE(s.contains(6));
    const TwinPartition p = detect_twins_circulant(s);
    EXPECT_EQ(p.kind, TwinKind::kNonadjacent);
    EXPECT_EQ(6 % *p.generator, 0);
  }
}

TEST(TwinClassFamilies, SmallCases) {
  const SpecFamily fam = enumerate_with_twin_classes(8, 4);
  EXPECT_EQ(names(fam.specs), (std::vector<std::string>{"C_8(±1,±2,±3)", "C_8(±1,±3)", "C_8(±2)"}));
  EXPECT_TRUE(enumerate_with_twin_classes(30, 1).specs.empty());
  EXPECT_TRUE(enumerate_with_twin_classes(30, 7).specs.empty());
  EXPECT_TRUE(enumerate_with_twin_classes(30, 0).specs.empty());
}

TEST(CoTwinEnumeration, SmallOrders) {
  EXPECT_EQ(names(enumerate_twinfree_cotwin_circulants(10).specs),
            (std::vector<std::string>{"C_10(±1,±2)", "C_10(±1,±3)"}));
  EXPECT_EQ(names(enumerate_twinfree_cotwin_circulants(14).specs),
            (std::vector<std::string>{"C_14(±1,±2,±3)", "C_14(±1,±2,±4)", "C_14(±1,±3,±5)"}));
  EXPECT_TRUE(enumerate_twinfree_cotwin_circulants(12).specs.empty());
  EXPECT_TRUE(enumerate_twinfree_cotwin_circulants(9).specs.empty());
}

TEST(CoTwinEnumeration, MatchesIsomorphismClasses) {
  for (int n : {6, 10, 14, 18}) {
    std::vector<Graph> reps;
    for (const ConnectionSet& set : all_connection_sets(n)) {
      if (set.size() != n / 2 - 1 || detect_twins_circulant(set).kind != TwinKind::kNone) continue;
      if (detect_cotwins_circulant(set).kind != TwinKind::kNonadjacent) continue;
      const Graph g = build(set);
      const bool seen = std::any_of(reps.begin(), reps.end(), [&](const Graph& r) {
        return find_isomorphism(r, g).has_value();
      });
      if (!seen) reps.push_back(g);
    }
    const SpecFamily fam = enumerate_twinfree_cotwin_circulants(n);
    EXPECT_EQ(fam.specs.size(), reps.size()) << n;
    EXPECT_TRUE(fam.all_distinct()) << n;
  }
}

TEST(Certificates, Verdicts) {
  const ConnectionSet a = spec(13, "±1,±5");
  const auto iso = certify_pairwise({a, multiply(a, 2)});
  ASSERT_EQ(iso.size(), 1U);
  EXPECT_EQ(iso[0].verdict, PairVerdict::kIsomorphic);
  const auto diff = certify_pairwise({spec(10, "±1,±2"), spec(10, "±1,±3")});
  EXPECT_EQ(diff[0].verdict, PairVerdict::kFingerprint);
  EXPECT_EQ(pair_verdict_name(PairVerdict::kUnresolved), "unresolved");
  const auto unresolved = certify_pairwise({a, multiply(a, 2)}, 4);
  EXPECT_EQ(unresolved[0].verdict, PairVerdict::kUnresolved);
}

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "circsym/circulant.hpp"
#include "circsym/error.hpp"
#include "circsym/named_graphs.hpp"
#include "circsym/search.hpp"
#include "oracles.hpp"

using namespace circsym;

namespace {

ErrorCode code_of(int n, const char* tokens) {
  try {
    parse_connection_set(n, tokens);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an error for " << tokens;
  return ErrorCode::kInvalidArgument;
}

// t*A = A checked element by element.
std::vector<int> brute_stabilizer(int n, const std::vector<int>& a) {
  const std::set<int> as(a.begin(), a.end());
  std::vector<int> out;
  for (int t = 1; t < n; ++t) {
    if (std::gcd(t, n) != 1) continue;
    std::set<int> image;
    for (int x : a) image.insert(t * x % n);
    if (image == as) out.push_back(t);
  }
  return out;
}

}  // namespace

TEST(Parse, Examples) {
  EXPECT_EQ(parse_connection_set(8, "±1,±3,4").members(), (std::vector<int>{1, 3, 4, 5, 7}));
  EXPECT_EQ(parse_connection_set(10, "±1,±3").members(), (std::vector<int>{1, 3, 7, 9}));
  EXPECT_EQ(code_of(6, "1"), ErrorCode::kNotInverseClosed);
}

TEST(Parse, TokenForms) {
  EXPECT_EQ(parse_connection_set(8, "+-1 -3 3 4"), parse_connection_set(8, "±1,±3,4"));
  EXPECT_EQ(parse_connection_set(8, "1,7,1"), parse_connection_set(8, "±1"));
  EXPECT_EQ(parse_connection_set(8, "").size(), 0);
  EXPECT_EQ(code_of(8, "0"), ErrorCode::kZeroGenerator);
  EXPECT_EQ(code_of(8, "±8"), ErrorCode::kOutOfRange);
  EXPECT_EQ(code_of(8, "9"), ErrorCode::kOutOfRange);
  EXPECT_EQ(code_of(8, "x"), ErrorCode::kInvalidArgument);
}

TEST(ConnectionSet, Names) {
  const ConnectionSet a = parse_connection_set(8, "±1,±3,4");
  EXPECT_EQ(a.canonical_name(), "C_8(1,3,4,5,7)");
  EXPECT_EQ(a.pm_name(), "C_8(±1,±3,4)");
  EXPECT_EQ(ConnectionSet::from_members(5, {}).canonical_name(), "C_5()");
}

TEST(Build, Examples) {
  EXPECT_EQ(build(parse_connection_set(4, "±1,2")), named::complete(4));
  EXPECT_TRUE(build(parse_connection_set(10, "±1,±3,5")).is_bipartite());
  EXPECT_EQ(build(parse_connection_set(10, "±1,±3,5")).edge_count(), 25);
  EXPECT_EQ(build(ConnectionSet::from_members(7, {})), named::empty(7));
}

TEST(Build, MatchesDefinition) {
  for (int n = 1; n <= 12; ++n) {
    for (const ConnectionSet& set : all_connection_sets(n)) {
      const auto m = oracle::circulant_matrix(n, set.members());
      EXPECT_EQ(oracle::matrix(build(set)), m) << set.canonical_name();
    }
  }
}

TEST(Build, TranslationsAreAutomorphisms) {
  for (int n = 3; n <= 14; ++n) {
    for (const ConnectionSet& set : all_connection_sets(n)) {
      const Graph g = build(set);
      for (int w = 0; w < n; ++w) {
        Permutation shift(n);
        for (int v = 0; v < n; ++v) shift[v] = (v + w) % n;
        ASSERT_TRUE(g.is_automorphism(shift)) << set.canonical_name() << " shift " << w;
      }
    }
  }
}

TEST(Describe, Flags) {
  const CirculantSpec c8 = describe(parse_connection_set(8, "±2"));
  EXPECT_EQ(c8.valency, 2);
  EXPECT_EQ(c8.component_count, 2);
  EXPECT_FALSE(c8.connected);
  const CirculantSpec crown = describe(parse_connection_set(10, "±1,±3"));
  EXPECT_TRUE(crown.connected);
  EXPECT_TRUE(crown.bipartite);
  EXPECT_EQ(describe(ConnectionSet::from_members(6, {})).component_count, 6);
}

TEST(ComplementSet, Examples) {
  EXPECT_EQ(complement_set(parse_connection_set(8, "±1,±3,4")).members(), (std::vector<int>{2, 6}));
  EXPECT_EQ(complement_set(parse_connection_set(12, "±1,±5,6")).members(), (std::vector<int>{2, 3, 4, 8, 9, 10}));
  EXPECT_EQ(complement_set(parse_connection_set(5, "±1,±2")).size(), 0);
}

TEST(ComplementSet, AgreesWithGraphComplement) {
  for (int n = 1; n <= 16; ++n) {
    for (const ConnectionSet& set : all_connection_sets(n)) {
      EXPECT_EQ(build(set).complement(), build(complement_set(set))) << set.canonical_name();
    }
  }
}

TEST(MultiplierStabilizer, Examples) {
  EXPECT_EQ(multiplier_stabilizer(parse_connection_set(8, "±1,±3,4")), (std::vector<int>{1, 3, 5, 7}));
  EXPECT_EQ(multiplier_stabilizer(parse_connection_set(14, "±1,±2,±3")), (std::vector<int>{1, 13}));
  EXPECT_EQ(brute_stabilizer(8, {1, 3, 4, 5, 7}), (std::vector<int>{1, 3, 5, 7}));
  EXPECT_EQ(brute_stabilizer(14, {1, 2, 3, 11, 12, 13}), (std::vector<int>{1, 13}));
}

TEST(MultiplierStabilizer, IsSubgroupContainingMinusOne) {
  for (int n = 3; n <= 20; ++n) {
    for (const ConnectionSet& set : all_connection_sets(n)) {
      const auto stab = multiplier_stabilizer(set);
      EXPECT_EQ(stab, brute_stabilizer(n, set.members())) << set.canonical_name();
      EXPECT_TRUE(std::binary_search(stab.begin(), stab.end(), n - 1));
      for (int a : stab) {
        for (int b : stab) EXPECT_TRUE(std::binary_search(stab.begin(), stab.end(), a * b % n));
      }
    }
  }
}

TEST(MultiplierIsomorphic, Examples) {
  const ConnectionSet a = parse_connection_set(10, "±1,±3");
  EXPECT_EQ(multiplier_isomorphic(a, ConnectionSet::from_members(10, {3, 9, 1, 7})), 1);
  EXPECT_EQ(multiply(a, 3), ConnectionSet::from_members(10, {3, 9, 1, 7}));
  EXPECT_EQ(multiplier_isomorphic(a, a), 1);
  EXPECT_EQ(multiplier_isomorphic(parse_connection_set(10, "±1,±2"), parse_connection_set(10, "±3,±4")), 3);
  EXPECT_FALSE(multiplier_isomorphic(parse_connection_set(10, "±1,±2"), parse_connection_set(10, "±1,±3")));
  EXPECT_THROW(ConnectionSet::from_members(10, {2, 4, 6, 9}), Error);
}

TEST(MultiplierIsomorphic, WitnessMapsAOntoB) {
  const ConnectionSet a = parse_connection_set(13, "±1,±5");
  const ConnectionSet b = multiply(a, 2);
  const auto t = multiplier_isomorphic(a, b);
  ASSERT_TRUE(t);
  EXPECT_EQ(multiply(a, *t), b);
  EXPECT_EQ(multiplier_canonical(a), multiplier_canonical(b));
}

TEST(AllConnectionSets, Counts) {
  // Inverse-closed subsets of Z_n \ {0}: one choice per pair {a, -a} and per
  // involution, 2^floor(n/2).
  for (int n = 1; n <= 16; ++n) {
    EXPECT_EQ(all_connection_sets(n).size(), std::size_t{1} << (n / 2)) << n;
  }
}

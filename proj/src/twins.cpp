#include "circsym/twins.hpp"

#include <algorithm>
#include <map>

#include "circsym/error.hpp"
#include "circsym/zn.hpp"

namespace circsym {
namespace {

void finish(TwinPartition& p) {
  std::size_t size = p.classes.empty() ? 1 : p.classes.front().size();
  for (const auto& c : p.classes) {
    if (c.size() != size) {
      p.class_size = 0;
      return;
    }
  }
  p.class_size = static_cast<int>(size);
}

std::vector<std::vector<int>> group_by(const Graph& g, bool closed) {
  std::map<VertexSet, std::size_t> index;
  std::vector<std::vector<int>> groups;
  for (int v = 0; v < g.order(); ++v) {
    VertexSet key = closed ? g.closed_neighborhood(v) : g.open_neighborhood(v);
    auto [it, inserted] = index.try_emplace(std::move(key), groups.size());
    if (inserted) groups.emplace_back();
    groups[it->second].push_back(v);
  }
  return groups;
}

bool nontrivial(const std::vector<std::vector<int>>& groups) {
  return std::any_of(groups.begin(), groups.end(), [](const auto& c) { return c.size() > 1; });
}

std::vector<int> with_zero(const ConnectionSet& set) {
  std::vector<int> s = set.members();
  s.insert(s.begin(), 0);
  return s;
}

}  // namespace

std::string_view twin_kind_name(TwinKind kind) {
  switch (kind) {
    case TwinKind::kNone: return "none";
    case TwinKind::kNonadjacent: return "nonadjacent";
    case TwinKind::kAdjacent: return "adjacent";
  }
  return "none";
}

TwinPartition detect_twins_generic(const Graph& g) {
  TwinPartition p;
  auto open = group_by(g, false);
  if (nontrivial(open)) {
    p.kind = TwinKind::kNonadjacent;
    p.classes = std::move(open);
  } else if (auto closed = group_by(g, true); nontrivial(closed)) {
    p.kind = TwinKind::kAdjacent;
    p.classes = std::move(closed);
  } else {
    return p;
  }
  finish(p);
  return p;
}

std::vector<int> coset_generators(const ConnectionSet& set, TwinKind kind) {
  const int n = set.modulus();
  std::vector<int> out;
  if (kind == TwinKind::kNone) return out;
  const std::vector<int> target = kind == TwinKind::kNonadjacent ? set.members() : with_zero(set);
  const bool include_trivial = kind == TwinKind::kAdjacent;
  auto ds = divisors(n);
  for (auto it = ds.rbegin(); it != ds.rend(); ++it) {
    const int d = *it;
    if (d <= 1 || d >= n) continue;
    if (is_union_of_cosets(target, subgroup(n, n / d), include_trivial)) out.push_back(n / d);
  }
  return out;
}

TwinPartition detect_twins_circulant(const ConnectionSet& set) {
  const int n = set.modulus();
  TwinPartition p;
  if (n == 1) return p;
  auto whole = [&](TwinKind kind) {
    p.kind = kind;
    p.generator = 1;
    p.classes = cosets(subgroup(n, 1));
    finish(p);
    return p;
  };
  if (set.size() == 0) return whole(TwinKind::kNonadjacent);
  if (set.size() == n - 1) return whole(TwinKind::kAdjacent);

  for (TwinKind kind : {TwinKind::kNonadjacent, TwinKind::kAdjacent}) {
    auto gens = coset_generators(set, kind);
    if (gens.empty()) continue;
    p.kind = kind;
    p.generator = gens.front();
    p.rejected_generators.assign(gens.begin() + 1, gens.end());
    p.classes = cosets(subgroup(n, gens.front()));
    finish(p);
    return p;
  }
  return p;
}

QuotientStep quotient(const Graph& g, const TwinPartition& partition) {
  if (partition.kind == TwinKind::kNone) {
    throw Error(ErrorCode::kPartitionKindNone, "cannot take a quotient by an empty twin partition");
  }
  QuotientStep step;
  step.input = g;
  step.kind = partition.kind;
  step.class_size = partition.class_size;
  const int m = static_cast<int>(partition.classes.size());
  std::vector<int> rep(m);
  for (int i = 0; i < m; ++i) rep[i] = partition.classes[i].front();
  step.quotient = Graph::from_predicate(m, [&](int i, int j) { return g.adjacent(rep[i], rep[j]); });
  return step;
}

ConnectionSet quotient_circulant(const ConnectionSet& set, const TwinPartition& partition) {
  if (partition.kind != TwinKind::kNonadjacent) {
    throw Error(ErrorCode::kWrongKind, "circulant quotient needs a nonadjacent twin partition");
  }
  const int n = set.modulus();
  const int d = partition.class_size;
  if (d <= 0 || n % d != 0) {
    throw Error(ErrorCode::kInvalidArgument, "twin classes do not have a common size dividing n");
  }
  const int m = n / d;
  std::vector<int> image;
  for (int a : set.members()) image.push_back(a % m);
  return ConnectionSet::from_members(m, std::move(image));
}

QuotientSequence quotient_sequence(const Graph& g) {
  QuotientSequence seq;
  Graph current = g;
  while (true) {
    auto p = detect_twins_generic(current);
    if (p.kind == TwinKind::kNone) break;
    seq.steps.push_back(quotient(current, p));
    current = seq.steps.back().quotient;
  }
  seq.terminal = std::move(current);
  return seq;
}

QuotientSequence quotient_sequence(const ConnectionSet& set) {
  QuotientSequence seq;
  ConnectionSet current = set;
  while (true) {
    auto p = detect_twins_circulant(current);
    if (p.kind == TwinKind::kNone) break;
    QuotientStep step;
    step.input = build(current);
    step.kind = p.kind;
    step.class_size = p.class_size;
    step.input_set = current;
    if (p.kind == TwinKind::kNonadjacent) {
      step.quotient_set = quotient_circulant(current, p);
    } else {
      // Adjacent twins of C_n(A) are nonadjacent twins of C_n(~A); the
      // adjacent quotient is the complement of that nonadjacent quotient.
      TwinPartition dual = p;
      dual.kind = TwinKind::kNonadjacent;
      step.quotient_set = complement_set(quotient_circulant(complement_set(current), dual));
    }
    step.quotient = build(*step.quotient_set);
    current = *step.quotient_set;
    seq.steps.push_back(std::move(step));
  }
  seq.terminal = build(current);
  seq.terminal_set = current;
  return seq;
}

}  // namespace circsym

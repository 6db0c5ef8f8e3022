#include "circsym/circulant.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "circsym/error.hpp"
#include "circsym/zn.hpp"

namespace circsym {

ConnectionSet ConnectionSet::from_members(int n, std::vector<int> members) {
  if (n < 1) throw Error(ErrorCode::kOutOfRange, "modulus must be positive");
  for (int a : members) {
    if (a < 0 || a >= n) {
      throw Error(ErrorCode::kOutOfRange,
                  "generator " + std::to_string(a) + " outside Z_" + std::to_string(n));
    }
    if (a == 0) throw Error(ErrorCode::kZeroGenerator, "0 cannot be a generator");
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (int a : members) {
    if (!std::binary_search(members.begin(), members.end(), n - a)) {
      throw Error(ErrorCode::kNotInverseClosed,
                  "generator " + std::to_string(a) + " listed without its inverse " +
                      std::to_string(n - a) + " mod " + std::to_string(n));
    }
  }
  return ConnectionSet(n, std::move(members));
}

bool ConnectionSet::contains(int x) const {
  return std::binary_search(members_.begin(), members_.end(), x);
}

std::string ConnectionSet::canonical_name() const {
  std::ostringstream out;
  out << "C_" << modulus_ << "(";
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i != 0) out << ",";
    out << members_[i];
  }
  out << ")";
  return out.str();
}

std::string ConnectionSet::pm_name() const {
  std::ostringstream out;
  out << "C_" << modulus_ << "(";
  bool first = true;
  for (int a : members_) {
    if (2 * a > modulus_) break;
    if (!first) out << ",";
    first = false;
    if (2 * a == modulus_) {
      out << a;
    } else {
      out << "±" << a;
    }
  }
  out << ")";
  return out.str();
}

ConnectionSet parse_connection_set(int n, std::string_view tokens) {
  if (n < 1) throw Error(ErrorCode::kOutOfRange, "modulus must be positive");
  std::vector<std::string> parts;
  std::string current;
  for (char c : tokens) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c)) || c == '{' || c == '}') {
      if (!current.empty()) parts.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) parts.push_back(std::move(current));

  std::vector<int> listed;
  std::vector<int> paired;
  for (const std::string& raw : parts) {
    std::string_view tok = raw;
    bool plus_minus = false;
    bool negative = false;
    if (tok.starts_with("±")) {
      plus_minus = true;
      tok.remove_prefix(std::string_view("±").size());
    } else if (tok.starts_with("+-") || tok.starts_with("-+")) {
      plus_minus = true;
      tok.remove_prefix(2);
    } else if (tok.starts_with("-")) {
      negative = true;
      tok.remove_prefix(1);
    } else if (tok.starts_with("+")) {
      tok.remove_prefix(1);
    }
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string_view::npos ||
        tok.size() > 9) {
      throw Error(ErrorCode::kInvalidArgument, "cannot parse generator token '" + raw + "'");
    }
    const int a = std::stoi(std::string(tok));
    if (a == 0) throw Error(ErrorCode::kZeroGenerator, "0 cannot be a generator");
    if (a >= n) {
      throw Error(ErrorCode::kOutOfRange,
                  "generator " + raw + " outside Z_" + std::to_string(n));
    }
    const int value = negative ? n - a : a;
    if (plus_minus) {
      paired.push_back(value);
      paired.push_back(n - value);
    } else {
      listed.push_back(value);
    }
  }
  std::vector<int> all = paired;
  all.insert(all.end(), listed.begin(), listed.end());
  return ConnectionSet::from_members(n, std::move(all));
}

CirculantSpec describe(const ConnectionSet& set) {
  CirculantSpec spec;
  spec.set = set;
  spec.valency = set.size();
  const int n = set.modulus();
  int g = n;
  for (int a : set.members()) g = std::gcd(g, a);
  spec.component_count = g;
  spec.connected = g == 1;
  // Each component is C_{n/g}(A/g); it is bipartite iff n/g is even and
  // every a/g is odd. Edgeless graphs are bipartite.
  if (set.size() == 0) {
    spec.bipartite = true;
  } else {
    const int m = n / g;
    spec.bipartite = m % 2 == 0 && std::all_of(set.members().begin(), set.members().end(),
                                               [g](int a) { return (a / g) % 2 == 1; });
  }
  return spec;
}

Graph build(const ConnectionSet& set) {
  const int n = set.modulus();
  std::vector<char> member(n, 0);
  for (int a : set.members()) member[a] = 1;
  return Graph::from_predicate(n, [&](int u, int v) { return member[(v - u + n) % n] != 0; });
}

ConnectionSet complement_set(const ConnectionSet& set) {
  std::vector<int> out;
  for (int x = 1; x < set.modulus(); ++x) {
    if (!set.contains(x)) out.push_back(x);
  }
  return ConnectionSet::from_members(set.modulus(), std::move(out));
}

ConnectionSet multiply(const ConnectionSet& set, int t) {
  const int n = set.modulus();
  if (std::gcd(t, n) != 1) {
    throw Error(ErrorCode::kInvalidArgument, std::to_string(t) + " is not a unit mod " + std::to_string(n));
  }
  std::vector<int> out;
  out.reserve(set.members().size());
  for (int a : set.members()) out.push_back(static_cast<int>((static_cast<long long>(a) * t) % n));
  return ConnectionSet::from_members(n, std::move(out));
}

std::vector<int> multiplier_stabilizer(const ConnectionSet& set) {
  std::vector<int> out;
  for (int t : units(set.modulus())) {
    if (set.modulus() == 1 || multiply(set, t) == set) out.push_back(t);
  }
  return out;
}

std::optional<int> multiplier_isomorphic(const ConnectionSet& a, const ConnectionSet& b) {
  if (a.modulus() != b.modulus() || a.size() != b.size()) return std::nullopt;
  if (a.modulus() == 1) return 0;
  for (int t : units(a.modulus())) {
    if (multiply(a, t) == b) return t;
  }
  return std::nullopt;
}

std::vector<ConnectionSet> all_connection_sets(int n) {
  // Inverse pairs {a, n-a} for 1 <= a <= n/2 are the free choices.
  std::vector<std::vector<int>> blocks;
  for (int a = 1; 2 * a <= n; ++a) {
    if (2 * a == n) {
      blocks.push_back({a});
    } else {
      blocks.push_back({a, n - a});
    }
  }
  std::vector<ConnectionSet> out;
  const std::size_t count = std::size_t{1} << blocks.size();
  out.reserve(count);
  for (std::size_t mask = 0; mask < count; ++mask) {
    std::vector<int> members;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if ((mask >> b) & 1U) members.insert(members.end(), blocks[b].begin(), blocks[b].end());
    }
    out.push_back(ConnectionSet::from_members(n, std::move(members)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

ConnectionSet multiplier_canonical(const ConnectionSet& set) {
  ConnectionSet best = set;
  if (set.modulus() == 1) return best;
  for (int t : units(set.modulus())) best = std::min(best, multiply(set, t));
  return best;
}

}  // namespace circsym

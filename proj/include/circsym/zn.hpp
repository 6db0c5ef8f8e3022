#pragma once

// Arithmetic in the additive group Z_n: residues, cyclic subgroups, their
// cosets, and the unit group U(n).

#include <cstdint>
#include <span>
#include <vector>

namespace circsym {

int gcd(int a, int b);

/// Positive divisors of n in increasing order.
std::vector<int> divisors(int n);

/// An element of Z_n, always stored in [0, n).
class Residue {
 public:
  Residue(std::int64_t value, int modulus);

  int value() const { return value_; }
  int modulus() const { return modulus_; }

  Residue operator+(Residue other) const;
  Residue operator-() const;
  Residue operator*(Residue other) const;
  bool operator==(const Residue&) const = default;

  /// Additive order n / gcd(n, value).
  int order() const;

 private:
  int value_;
  int modulus_;
};

/// The additive subgroup <w> of Z_n.
struct CyclicSubgroup {
  int modulus = 1;
  int generator = 0;
  std::vector<int> elements;  // sorted

  int order() const { return static_cast<int>(elements.size()); }
  bool contains(int x) const;
};

CyclicSubgroup subgroup(int n, int w);

/// Cosets of `sub`, each sorted, listed by increasing minimum element (the
/// trivial coset first).
std::vector<std::vector<int>> cosets(const CyclicSubgroup& sub);

/// {t in [1, n) : gcd(t, n) = 1}; for n = 1 returns {0} (Z_1 is its own unit
/// group).
std::vector<int> units(int n);

/// True iff `set` (residues mod sub.modulus) is exactly a union of cosets of
/// `sub`. With include_trivial false the trivial coset <w> may not take part.
bool is_union_of_cosets(std::span<const int> set, const CyclicSubgroup& sub,
                        bool include_trivial);

}  // namespace circsym

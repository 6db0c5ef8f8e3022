#include "circsym/zn.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "circsym/error.hpp"

namespace circsym {

int gcd(int a, int b) { return std::gcd(a, b); }

std::vector<int> divisors(int n) {
  std::vector<int> out;
  for (int d = 1; d <= n; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

Residue::Residue(std::int64_t value, int modulus) : modulus_(modulus) {
  if (modulus < 1) {
    throw Error(ErrorCode::kOutOfRange,
                "modulus must be positive, got " + std::to_string(modulus));
  }
  std::int64_t r = value % modulus;
  if (r < 0) r += modulus;
  value_ = static_cast<int>(r);
}

Residue Residue::operator+(Residue other) const {
  return Residue(static_cast<std::int64_t>(value_) + other.value_, modulus_);
}

Residue Residue::operator-() const { return Residue(-static_cast<std::int64_t>(value_), modulus_); }

Residue Residue::operator*(Residue other) const {
  return Residue(static_cast<std::int64_t>(value_) * other.value_, modulus_);
}

int Residue::order() const { return modulus_ / std::gcd(modulus_, value_); }

bool CyclicSubgroup::contains(int x) const {
  return std::binary_search(elements.begin(), elements.end(), x);
}

CyclicSubgroup subgroup(int n, int w) {
  if (n < 1 || w < 0 || w >= n) {
    throw Error(ErrorCode::kOutOfRange,
                "subgroup generator " + std::to_string(w) + " not in Z_" + std::to_string(n));
  }
  CyclicSubgroup sub;
  sub.modulus = n;
  sub.generator = w;
  // <w> = <gcd(n, w)>
  const int step = std::gcd(n, w);
  for (int x = 0; x < n; x += step) sub.elements.push_back(x);
  return sub;
}

std::vector<std::vector<int>> cosets(const CyclicSubgroup& sub) {
  const int n = sub.modulus;
  const int count = n / sub.order();
  std::vector<std::vector<int>> out;
  out.reserve(count);
  // Elements of <w> are the multiples of n/|<w>|, so the coset representatives
  // 0..count-1 are exactly the minimum elements.
  for (int r = 0; r < count; ++r) {
    std::vector<int> coset;
    coset.reserve(sub.elements.size());
    for (int e : sub.elements) coset.push_back(r + e);
    out.push_back(std::move(coset));
  }
  return out;
}

std::vector<int> units(int n) {
  std::vector<int> out;
  if (n == 1) return {0};
  for (int t = 1; t < n; ++t) {
    if (std::gcd(t, n) == 1) out.push_back(t);
  }
  return out;
}

bool is_union_of_cosets(std::span<const int> set, const CyclicSubgroup& sub,
                        bool include_trivial) {
  const int n = sub.modulus;
  std::vector<char> member(n, 0);
  for (int x : set) {
    if (x < 0 || x >= n) return false;
    member[x] = 1;
  }
  const int step = n / sub.order();
  for (int r = 0; r < step; ++r) {
    const bool first = member[r] != 0;
    for (int x = r; x < n; x += step) {
      if ((member[x] != 0) != first) return false;
    }
    if (first && r == 0 && !include_trivial) return false;
  }
  return true;
}

}  // namespace circsym

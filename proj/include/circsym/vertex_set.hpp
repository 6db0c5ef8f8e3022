#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace circsym {

/// Fixed-universe bitset over vertex ids [0, universe).
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  static VertexSet full(int universe);
  static VertexSet of(int universe, const std::vector<int>& members);

  int universe() const { return universe_; }

  bool contains(int v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }
  void insert(int v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(int v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  int size() const;
  bool empty() const;
  /// Smallest member, or -1 when empty.
  int first() const;
  std::vector<int> members() const;

  bool intersects(const VertexSet& other) const;

  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator|=(const VertexSet& other);
  /// Removes every member of `other`.
  VertexSet& subtract(const VertexSet& other);
  /// Complement relative to [0, universe).
  VertexSet operator~() const;

  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  bool operator==(const VertexSet&) const = default;
  auto operator<=>(const VertexSet& other) const = default;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int b = std::countr_zero(bits);
        f(static_cast<int>(w * 64 + b));
        bits &= bits - 1;
      }
    }
  }

 private:
  void trim();

  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace circsym

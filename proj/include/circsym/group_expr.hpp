#pragma once

#include <memory>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace circsym {

using BigInt = boost::multiprecision::cpp_int;

BigInt factorial(int m);

/// Symbolic description of an abstract group. Only order() is certified; the
/// shape records which decomposition produced it.
class GroupExpr {
 public:
  enum class Kind { kTrivial, kSymmetric, kCyclic, kDihedral, kPower, kDirect, kSemidirect, kNamed, kOpaque };

  static GroupExpr trivial();
  static GroupExpr symmetric(int m);
  static GroupExpr cyclic(int m);
  /// Symmetry group of the m-gon, order 2m, printed D_m.
  static GroupExpr dihedral(int m);
  static GroupExpr power(GroupExpr base, int exponent);
  static GroupExpr direct(GroupExpr a, GroupExpr b);
  /// a : b with a normal.
  static GroupExpr semidirect(GroupExpr normal, GroupExpr acting);
  /// Aut(label) standing for `inner`; printed by label unless expanded.
  static GroupExpr named(std::string label, GroupExpr inner);
  /// A group known only by its order.
  static GroupExpr opaque(std::string label, BigInt order);

  Kind kind() const { return node_->kind; }
  BigInt order() const;
  std::string to_string(bool expand = false) const;

 private:
  struct Node {
    Kind kind = Kind::kTrivial;
    int param = 0;
    std::string label;
    BigInt order;
    std::vector<GroupExpr> children;
  };
  explicit GroupExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static GroupExpr make(Node node);
  std::string operand(bool expand) const;

  std::shared_ptr<const Node> node_;
};

}  // namespace circsym

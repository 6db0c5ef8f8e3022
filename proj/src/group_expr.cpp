#include "circsym/group_expr.hpp"

namespace circsym {

BigInt factorial(int m) {
  BigInt out = 1;
  for (int i = 2; i <= m; ++i) out *= i;
  return out;
}

GroupExpr GroupExpr::make(Node node) { return GroupExpr(std::make_shared<const Node>(std::move(node))); }

GroupExpr GroupExpr::trivial() { return make({Kind::kTrivial, 1, {}, 1, {}}); }
GroupExpr GroupExpr::symmetric(int m) { return make({Kind::kSymmetric, m, {}, factorial(m), {}}); }
GroupExpr GroupExpr::cyclic(int m) { return make({Kind::kCyclic, m, {}, BigInt(m), {}}); }
GroupExpr GroupExpr::dihedral(int m) { return make({Kind::kDihedral, m, {}, BigInt(2 * m), {}}); }

GroupExpr GroupExpr::power(GroupExpr base, int exponent) {
  BigInt order = boost::multiprecision::pow(base.order(), static_cast<unsigned>(exponent));
  return make({Kind::kPower, exponent, {}, order, {std::move(base)}});
}

GroupExpr GroupExpr::direct(GroupExpr a, GroupExpr b) {
  BigInt order = a.order() * b.order();
  return make({Kind::kDirect, 0, {}, order, {std::move(a), std::move(b)}});
}

GroupExpr GroupExpr::semidirect(GroupExpr normal, GroupExpr acting) {
  BigInt order = normal.order() * acting.order();
  return make({Kind::kSemidirect, 0, {}, order, {std::move(normal), std::move(acting)}});
}

GroupExpr GroupExpr::named(std::string label, GroupExpr inner) {
  BigInt order = inner.order();
  return make({Kind::kNamed, 0, std::move(label), order, {std::move(inner)}});
}

GroupExpr GroupExpr::opaque(std::string label, BigInt order) {
  return make({Kind::kOpaque, 0, std::move(label), std::move(order), {}});
}

BigInt GroupExpr::order() const { return node_->order; }

std::string GroupExpr::operand(bool expand) const {
  switch (kind()) {
    case Kind::kPower:
    case Kind::kDirect:
    case Kind::kSemidirect:
      return "(" + to_string(expand) + ")";
    case Kind::kNamed:
      if (expand) return node_->children[0].operand(expand);
      return to_string(expand);
    default:
      return to_string(expand);
  }
}

std::string GroupExpr::to_string(bool expand) const {
  const Node& n = *node_;
  switch (n.kind) {
    case Kind::kTrivial: return "1";
    case Kind::kSymmetric: return "S" + std::to_string(n.param);
    case Kind::kCyclic: return "Z_" + std::to_string(n.param);
    case Kind::kDihedral: return "D_" + std::to_string(n.param);
    case Kind::kPower: return n.children[0].operand(expand) + "^" + std::to_string(n.param);
    case Kind::kDirect: return n.children[0].operand(expand) + " x " + n.children[1].operand(expand);
    case Kind::kSemidirect: return n.children[0].operand(expand) + " : " + n.children[1].operand(expand);
    case Kind::kNamed:
      if (expand) return n.children[0].to_string(expand);
      return "Aut(" + n.label + ")";
    case Kind::kOpaque: return n.label + "[" + n.order.str() + "]";
  }
  return "?";
}

}  // namespace circsym

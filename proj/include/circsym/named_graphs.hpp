#pragma once

#include "circsym/graph.hpp"

// Small named graphs used as fixtures and CLI inputs.
namespace circsym::named {

Graph complete(int n);
Graph empty(int n);
Graph cycle(int n);
Graph complete_bipartite(int a, int b);
Graph hypercube(int dim);
Graph icosahedron();

/// Tensor (direct) product: (a,x)~(b,y) iff a~b and x~y. Vertex (a,x) gets
/// id a * |H| + x.
Graph direct_product(const Graph& g, const Graph& h);
/// (a,x)~(b,y) iff a=b and x~y, or x=y and a~b. Same vertex ids as above.
Graph cartesian_product(const Graph& g, const Graph& h);
Graph disjoint_union(const Graph& g, const Graph& h);

/// Complement of the prism K_k [] K_2, i.e. K_{k,k} minus a perfect matching.
Graph crown(int k);

/// Resolves names such as "K5", "C6", "Q3", "icosahedron", "crown4",
/// "envelope" (the prism K_3 [] K_2). Throws kInvalidArgument for unknown names.
Graph by_name(const std::string& name);

}  // namespace circsym::named

#pragma once

#include <vtchroma/graph.hpp>

#include <vector>

namespace vtchroma
{
    auto complete_graph(int n) -> Graph;
    auto cycle_graph(int n) -> Graph;
    auto path_graph(int n) -> Graph;

    auto complement(const Graph & g) -> Graph;

    /// Vertices of g come first, then those of h.
    auto disjoint_union(const Graph & g, const Graph & h) -> Graph;

    /// Disjoint union plus every edge between V(g) and V(h); g's vertices first.
    auto join(const Graph & g, const Graph & h) -> Graph;

    /// Vertex (u, v) is numbered u * h.size() + v.
    auto cartesian_product(const Graph & g, const Graph & h) -> Graph;

    /// One vertex per edge instance, in edge-list order; parallel edges are adjacent.
    auto line_graph(const Multigraph & m) -> Graph;

    /// The multigraph C_length with each edge repeated multiplicity times.
    /// Edge copies of (i, i+1) are listed consecutively.
    auto multicycle(int length, int multiplicity) -> Multigraph;

    /// Each vertex v becomes the clique {v*m, ..., v*m + m - 1}; blocks of
    /// adjacent vertices are fully joined.
    auto blow_up(const Graph & g, int m) -> Graph;

    /// i ~ j iff (i - j) mod n or (j - i) mod n is an offset in gens. Offsets in 1..n/2.
    auto circulant(int n, const std::vector<int> & gens) -> Graph;

    /// k-subsets of {0..n-1} in lexicographic order, adjacent iff disjoint.
    auto kneser(int n, int k) -> Graph;

    /// Line graph of C_{2t+1} with every edge taken k times. Requires t >= 2, k >= 1.
    auto catlin(int t, int k) -> Graph;
}

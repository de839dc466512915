#pragma once

#include <vtchroma/graph.hpp>
#include <vtchroma/strong.hpp>

#include <random>
#include <utility>

namespace vtchroma
{
    /// Erdős–Rényi G(n, p).
    auto random_graph(int n, double p, std::mt19937_64 & rng) -> Graph;

    /// Overlapping random cliques of size 2..max_clique on n vertices plus
    /// G(n, noise) edges. Yields many graphs with omega close to Delta.
    auto planted_clique_graph(int n, int cliques, int max_clique, double noise, std::mt19937_64 & rng) -> Graph;

    /// Random graph mixing the two models above, n in 1..max_n.
    auto random_corpus_graph(int max_n, std::mt19937_64 & rng) -> Graph;

    /// A graph of maximum degree d >= 1 with a partition into parts of size
    /// at least 2d, on at most max_n vertices.
    auto random_transversal_instance(int max_n, std::mt19937_64 & rng) -> std::pair<Graph, VertexPartition>;
}

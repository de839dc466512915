#pragma once

#include <vtchroma/vertex_set.hpp>

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace vtchroma
{
    using Edge = std::pair<int, int>;

    /// Undirected simple graph on vertices 0..n-1 stored as adjacency bitsets.
    /// Immutable once built.
    class Graph
    {
        public:
            Graph() = default;

            /// Edgeless graph on n vertices.
            explicit Graph(int n);

            static auto from_edges(int n, std::span<const Edge> edges) -> Graph;
            static auto from_edges(int n, std::initializer_list<Edge> edges) -> Graph;

            auto size() const -> int { return _n; }
            auto neighbors(int v) const -> const VertexSet & { return _adj[v]; }
            auto adjacent(int u, int v) const -> bool { return _adj[u].test(v); }
            auto degree(int v) const -> int { return _adj[v].count(); }
            auto vertices() const -> VertexSet { return VertexSet::full(_n); }

            auto max_degree() const -> int;
            auto min_degree() const -> int;
            auto is_regular() const -> bool;
            auto edge_count() const -> int;
            auto edges() const -> std::vector<Edge>;

            auto is_clique(const VertexSet & s) const -> bool;
            auto is_independent(const VertexSet & s) const -> bool;

            auto is_connected() const -> bool;
            /// Vertex sets of the connected components, ordered by lowest vertex.
            auto components() const -> std::vector<VertexSet>;

            /// Subgraph induced on s, vertices renumbered in increasing order.
            auto induced(const VertexSet & s) const -> Graph;

            /// Graph whose vertex perm[v] plays the role of v.
            auto relabelled(std::span<const int> perm) const -> Graph;

            /// Throws if adjacency is asymmetric, reflexive or out of range.
            auto validate() const -> void;

            friend auto operator== (const Graph &, const Graph &) -> bool = default;

        private:
            auto add_edge(int u, int v) -> void;

            int _n = 0;
            std::vector<VertexSet> _adj;

            friend class GraphBuilder;
    };

    /// Mutable accumulator used by the constructions.
    class GraphBuilder
    {
        public:
            explicit GraphBuilder(int n);

            auto add_edge(int u, int v) -> void;
            auto remove_edge(int u, int v) -> void;
            auto build() && -> Graph;

        private:
            Graph _graph;
    };

    /// Multigraph given as an edge list; parallel edges allowed, loops not.
    struct Multigraph
    {
        int n = 0;
        std::vector<Edge> edges;

        auto validate() const -> void;
    };
}

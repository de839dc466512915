#pragma once

#include <vtchroma/budget.hpp>
#include <vtchroma/coloring.hpp>
#include <vtchroma/graph.hpp>

#include <optional>
#include <span>
#include <vector>

namespace vtchroma
{
    /// Disjoint parts covering 0..n-1.
    class VertexPartition
    {
        public:
            VertexPartition() = default;

            /// Throws InvalidArgument unless parts are nonempty, disjoint and cover 0..n-1.
            VertexPartition(int n, std::vector<VertexSet> parts);

            auto parts() const -> const std::vector<VertexSet> & { return _parts; }
            auto size() const -> std::size_t { return _parts.size(); }
            auto vertex_count() const -> int { return _n; }
            auto largest_part() const -> int;

        private:
            int _n = 0;
            std::vector<VertexSet> _parts;
    };

    /// One vertex from each part, pairwise non-adjacent in h, or nullopt when
    /// no such set exists (proved by exhaustive search).
    auto independent_transversal(const Graph & h, const VertexPartition & p, const Budget & budget = {})
        -> std::optional<VertexSet>;

    struct StrongColoring
    {
        /// Proper r-coloring of the original vertices, rainbow on every part.
        Coloring coloring;
        VertexPartition partition;
        /// r * ceil(n / r): the vertex count once isolated padding is added.
        int padded_size = 0;
    };

    /// A proper r-coloring that uses all r colors on every part after each
    /// part is filled to size r with isolated vertices; equivalently a proper
    /// r-coloring injective on each part. Parts larger than r are rejected.
    auto strong_coloring(const Graph & g, const VertexPartition & p, int r, const Budget & budget = {})
        -> std::optional<StrongColoring>;

    struct StrongColorabilityResult
    {
        bool strongly_colorable = false;
        /// A partition of the padded graph admitting no strong coloring.
        std::optional<VertexPartition> witness;
        std::uint64_t partitions_checked = 0;
    };

    /// Decides strong r-colorability by trying every partition of the padded
    /// vertex set into parts of size r. The padded size must not exceed
    /// budget.strong_padded_limit.
    auto strong_chromatic_number_exhaustive(const Graph & g, int r, const Budget & budget = {}) -> StrongColorabilityResult;

    /// g with isolated vertices appended up to a multiple of r.
    auto pad_to_multiple(const Graph & g, int r) -> Graph;

    struct ReductionResult
    {
        /// g with each clique grown to size r by private vertices appended after V(g).
        Graph padded;
        /// padded with all edges inside each grown clique removed.
        Graph stripped;
        /// The grown cliques, as parts of padded / stripped.
        VertexPartition parts;
        /// Proper r-coloring of g with every clique rainbow, when the strong coloring exists.
        std::optional<Coloring> coloring;
    };

    /// Colors g by padding each clique of a clique partition to size r,
    /// deleting intra-clique edges, and strongly r-coloring the remainder with
    /// the padded cliques as parts. Throws NotCliquePartition when the cliques
    /// overlap, miss a vertex or are not cliques.
    auto clique_padding_reduction(const Graph & g, std::span<const VertexSet> cliques, int r, const Budget & budget = {})
        -> ReductionResult;
}

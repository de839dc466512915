#pragma once

#include <vtchroma/budget.hpp>
#include <vtchroma/graph.hpp>

#include <optional>
#include <vector>

namespace vtchroma
{
    struct Coloring
    {
        /// color[v] in 0..colors-1.
        std::vector<int> color;
        int colors = 0;

        /// The vertices with color c.
        auto class_of(int c) const -> VertexSet;
    };

    /// Every vertex has a color in range and no edge is monochromatic.
    auto is_proper(const Graph & g, const Coloring & c) -> bool;

    struct ChromaticResult
    {
        int chromatic_number = 0;
        Coloring witness;
        /// Branch-and-bound nodes visited; the search below chromatic_number is exhaustive.
        std::uint64_t nodes = 0;
    };

    /// Exact chromatic number by saturation-ordered branch and bound, seeded
    /// with a maximum clique. Raises BudgetExceeded rather than guessing.
    auto chromatic_number(const Graph & g, const Budget & budget = {}) -> ChromaticResult;

    /// Saturation-ordered greedy coloring, the upper bound for the exact search.
    auto greedy_coloring(const Graph & g) -> Coloring;

    struct IndependenceResult
    {
        int independence_number = 0;
        VertexSet witness;
    };

    /// Exact alpha as the clique number of the complement.
    auto independence_number(const Graph & g, const Budget & budget = {}) -> IndependenceResult;

    /// Inclusion-maximal independent sets, in VertexSet order.
    auto maximal_independent_sets(const Graph & g, const Budget & budget = {}) -> std::vector<VertexSet>;
}

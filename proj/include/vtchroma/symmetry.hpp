#pragma once

#include <vtchroma/budget.hpp>
#include <vtchroma/graph.hpp>

#include <optional>
#include <vector>

namespace vtchroma
{
    /// perm[v] is the image of v.
    using Permutation = std::vector<int>;

    struct OrbitPartition
    {
        /// orbit_of[v] is the index of v's orbit; orbits are numbered by lowest member.
        std::vector<int> orbit_of;
        int orbit_count = 0;

        auto orbits() const -> std::vector<VertexSet>;
    };

    struct TransitivityResult
    {
        bool transitive = false;
        /// When transitive, witnesses[v] is an automorphism sending 0 to v.
        std::vector<Permutation> witnesses;
    };

    auto is_bijection(const Permutation & p) -> bool;
    auto is_automorphism(const Graph & g, const Permutation & p) -> bool;
    /// True iff p is a bijection with u ~ v in g exactly when p[u] ~ p[v] in h.
    auto is_isomorphism(const Graph & g, const Graph & h, const Permutation & p) -> bool;

    /// Joint color refinement of g and h by (color, sorted neighbor colors)
    /// iterated to stability. Color ids are comparable across the two graphs.
    auto refine_colors(const Graph & g, const Graph & h,
            std::vector<int> initial_g = {}, std::vector<int> initial_h = {})
        -> std::pair<std::vector<int>, std::vector<int>>;

    /// An automorphism with from -> to, or nullopt if none exists.
    auto find_automorphism(const Graph & g, int from, int to, const Budget & budget = {}) -> std::optional<Permutation>;

    auto find_isomorphism(const Graph & g, const Graph & h, const Budget & budget = {}) -> std::optional<Permutation>;

    auto are_isomorphic(const Graph & g, const Graph & h, const Budget & budget = {}) -> bool;

    /// Exact orbit partition of the full automorphism group.
    auto automorphism_orbits(const Graph & g, const Budget & budget = {}) -> OrbitPartition;

    auto is_vertex_transitive(const Graph & g, const Budget & budget = {}) -> TransitivityResult;
}

#pragma once

#include <vtchroma/budget.hpp>
#include <vtchroma/graph.hpp>
#include <vtchroma/symmetry.hpp>

#include <span>
#include <string>
#include <variant>
#include <vector>

namespace vtchroma
{
    /// A list of cliques of one host graph, sorted and duplicate free.
    struct CliqueCollection
    {
        std::vector<VertexSet> cliques;
        int host_size = 0;
        /// Set when the list is exactly the set of all maximum cliques.
        bool all_maximum = false;

        auto size() const -> std::size_t { return cliques.size(); }
        auto union_of() const -> VertexSet;
        auto intersection_of() const -> VertexSet;
    };

    /// Intersection graph of a clique collection. Vertex i is cliques[i].
    struct CliqueGraph
    {
        std::vector<VertexSet> cliques;
        std::vector<std::vector<int>> adjacent;
        /// Clique indices of each connected component, ordered by lowest index.
        std::vector<std::vector<int>> components;

        auto edge_count() const -> std::size_t;
        auto max_degree() const -> int;
        auto is_edgeless() const -> bool { return edge_count() == 0; }
        auto component_cliques(std::size_t c) const -> std::vector<VertexSet>;
    };

    /// Every inclusion-maximal clique, once each, in VertexSet order.
    auto maximal_cliques(const Graph & g, const Budget & budget = {}) -> CliqueCollection;

    /// One maximum clique.
    auto maximum_clique(const Graph & g, const Budget & budget = {}) -> VertexSet;
    auto clique_number(const Graph & g, const Budget & budget = {}) -> int;

    /// All cliques of size omega(g).
    auto maximum_cliques(const Graph & g, const Budget & budget = {}) -> CliqueCollection;

    auto build_clique_graph(std::span<const VertexSet> cliques) -> CliqueGraph;
    auto build_clique_graph(const CliqueCollection & q) -> CliqueGraph;

    /// Exact integer forms of the omega-versus-(2/3)(Delta+1) comparisons.
    inline auto omega_at_least_two_thirds(int omega, int max_degree) -> bool { return 3 * omega >= 2 * (max_degree + 1); }
    inline auto omega_above_two_thirds(int omega, int max_degree) -> bool { return 3 * omega > 2 * (max_degree + 1); }

    struct HajnalResult
    {
        int union_size = 0;
        int intersection_size = 0;
        bool holds = false;
    };

    /// |union q| + |intersection q| >= 2 omega for a nonempty set of maximum
    /// cliques. Pass omega when already known.
    auto hajnal_check(const Graph & g, std::span<const VertexSet> q, int omega = -1) -> HajnalResult;

    /// Intersection of a connected X_Q component, for graphs with
    /// 3 omega > 2 (Delta + 1). Empty intersection raises LemmaFalsified.
    auto kostochka_common_vertex(const Graph & g, std::span<const VertexSet> component, int omega = -1) -> VertexSet;

    struct Edgeless
    {
        std::vector<VertexSet> parts;
    };

    struct CycleBlowup
    {
        int cycle_length = 0;
        int part_size = 0;
        /// parts[i] = Q_i cap Q_{i+1} along the cycle.
        std::vector<VertexSet> parts;
        /// From vt_classify only: isomorphism from g onto blow_up(C_length, part_size).
        Permutation isomorphism;
    };

    struct StarComponents
    {
        std::vector<VertexSet> common;
    };

    struct OtherShape
    {
        std::string reason;
    };

    using ClusterClassification = std::variant<Edgeless, CycleBlowup, StarComponents, OtherShape>;

    /// "Edgeless", "CycleBlowup(5,2)", "StarComponents(3)", "Other(...)".
    auto describe(const ClusterClassification & c) -> std::string;

    /// Structure of one connected X_Q component when 3 omega >= 2 (Delta + 1):
    /// a common vertex, or a maximum degree 2 component with half-omega
    /// intersections. Both failing raises LemmaFalsified.
    auto cek_classify(const Graph & g, std::span<const VertexSet> component, int omega = -1) -> ClusterClassification;

    /// The clustering dichotomy for a connected vertex-transitive g with
    /// 3 omega >= 2 (Delta + 1): Edgeless or CycleBlowup (with isomorphism).
    auto vt_classify(const Graph & g, const Budget & budget = {}) -> ClusterClassification;

    /// As vt_classify, reusing already computed maximum cliques; g is assumed
    /// vertex-transitive.
    auto vt_classify(const Graph & g, const CliqueCollection & maximum) -> ClusterClassification;
}

#include <vtchroma/cliques.hpp>
#include <vtchroma/error.hpp>
#include <vtchroma/generators.hpp>

#include <algorithm>

using namespace vtchroma;

namespace
{
    /// Greedy coloring of p in increasing vertex order. Returns vertices in
    /// color order along with the color of each, so a suffix of length k
    /// has color bound colors[k-1].
    auto color_order(const Graph & g, VertexSet p, std::vector<int> & order, std::vector<int> & bounds) -> void
    {
        order.clear();
        bounds.clear();
        int color = 0;
        while (p.any()) {
            ++color;
            VertexSet q = p;
            while (q.any()) {
                int v = q.pop_first();
                q -= g.neighbors(v);
                p.reset(v);
                order.push_back(v);
                bounds.push_back(color);
            }
        }
    }

    class CliqueEnumerator
    {
        public:
            CliqueEnumerator(const Graph & g, const Budget & budget, int threshold) :
                _g(g), _budget(budget), _threshold(threshold)
            {
            }

            auto run() -> std::vector<VertexSet>
            {
                expand(VertexSet{}, _g.vertices(), VertexSet{});
                std::sort(_found.begin(), _found.end());
                return std::move(_found);
            }

        private:
            /// Upper bound on the clique number of g[p].
            auto bound(const VertexSet & p) -> int
            {
                if (_threshold <= 0)
                    return p.count();
                color_order(_g, p, _order, _bounds);
                return _bounds.empty() ? 0 : _bounds.back();
            }

            auto expand(VertexSet r, VertexSet p, VertexSet x) -> void
            {
                if (++_nodes > _budget.search_nodes)
                    throw BudgetExceeded("clique enumeration exceeded " + std::to_string(_budget.search_nodes) + " nodes");

                if (p.empty()) {
                    if (x.empty() && r.count() >= _threshold) {
                        if (_found.size() >= _budget.clique_limit)
                            throw BudgetExceeded("more than " + std::to_string(_budget.clique_limit) + " cliques");
                        _found.push_back(r);
                    }
                    return;
                }

                if (r.count() + bound(p) < _threshold)
                    return;

                int pivot = -1, best = -1;
                for (int u : p | x) {
                    int c = (p & _g.neighbors(u)).count();
                    if (c > best) {
                        best = c;
                        pivot = u;
                    }
                }

                for (int v : p - _g.neighbors(pivot)) {
                    VertexSet r2 = r;
                    r2.set(v);
                    expand(r2, p & _g.neighbors(v), x & _g.neighbors(v));
                    p.reset(v);
                    x.set(v);
                    if (_threshold > 0 && r.count() + p.count() < _threshold)
                        return;
                }
            }

            const Graph & _g;
            const Budget & _budget;
            int _threshold;
            std::vector<VertexSet> _found;
            std::vector<int> _order, _bounds;
            std::uint64_t _nodes = 0;
    };

    class MaximumCliqueSearch
    {
        public:
            MaximumCliqueSearch(const Graph & g, const Budget & budget) :
                _g(g), _budget(budget)
            {
            }

            auto run() -> VertexSet
            {
                expand(VertexSet{}, _g.vertices());
                return _best;
            }

        private:
            auto expand(const VertexSet & r, VertexSet p) -> void
            {
                if (++_nodes > _budget.search_nodes)
                    throw BudgetExceeded("maximum clique search exceeded " + std::to_string(_budget.search_nodes) + " nodes");

                std::vector<int> order, bounds;
                color_order(_g, p, order, bounds);
                int size = r.count();
                for (int i = int(order.size()) - 1 ; i >= 0 ; --i) {
                    if (size + bounds[i] <= _best_size)
                        return;
                    int v = order[i];
                    VertexSet r2 = r;
                    r2.set(v);
                    VertexSet p2 = p & _g.neighbors(v);
                    if (p2.empty()) {
                        if (size + 1 > _best_size) {
                            _best = r2;
                            _best_size = size + 1;
                        }
                    }
                    else
                        expand(r2, p2);
                    p.reset(v);
                }
            }

            const Graph & _g;
            const Budget & _budget;
            VertexSet _best;
            int _best_size = 0;
            std::uint64_t _nodes = 0;
    };

    auto check_maximum(const Graph & g, std::span<const VertexSet> q, int omega) -> void
    {
        for (auto & c : q)
            if (c.count() != omega || ! g.is_clique(c))
                throw InvalidArgument("collection contains a set that is not a maximum clique");
    }

    auto resolve_omega(const Graph & g, int omega) -> int
    {
        return omega >= 0 ? omega : clique_number(g);
    }

    auto meet(std::span<const VertexSet> q) -> VertexSet
    {
        VertexSet result = q.empty() ? VertexSet{} : q.front();
        for (auto & c : q)
            result &= c;
        return result;
    }

    auto join_all(std::span<const VertexSet> q) -> VertexSet
    {
        VertexSet result;
        for (auto & c : q)
            result |= c;
        return result;
    }
}

auto CliqueCollection::union_of() const -> VertexSet
{
    return join_all(cliques);
}

auto CliqueCollection::intersection_of() const -> VertexSet
{
    return meet(cliques);
}

auto CliqueGraph::edge_count() const -> std::size_t
{
    std::size_t total = 0;
    for (auto & a : adjacent)
        total += a.size();
    return total / 2;
}

auto CliqueGraph::max_degree() const -> int
{
    std::size_t d = 0;
    for (auto & a : adjacent)
        d = std::max(d, a.size());
    return int(d);
}

auto CliqueGraph::component_cliques(std::size_t c) const -> std::vector<VertexSet>
{
    std::vector<VertexSet> result;
    for (int i : components.at(c))
        result.push_back(cliques[i]);
    return result;
}

auto vtchroma::maximal_cliques(const Graph & g, const Budget & budget) -> CliqueCollection
{
    if (g.size() == 0)
        return CliqueCollection{{}, 0, false};
    return CliqueCollection{CliqueEnumerator(g, budget, 0).run(), g.size(), false};
}

auto vtchroma::maximum_clique(const Graph & g, const Budget & budget) -> VertexSet
{
    return MaximumCliqueSearch(g, budget).run();
}

auto vtchroma::clique_number(const Graph & g, const Budget & budget) -> int
{
    return maximum_clique(g, budget).count();
}

auto vtchroma::maximum_cliques(const Graph & g, const Budget & budget) -> CliqueCollection
{
    if (g.size() == 0)
        return CliqueCollection{{}, 0, true};
    int omega = clique_number(g, budget);
    return CliqueCollection{CliqueEnumerator(g, budget, omega).run(), g.size(), true};
}

auto vtchroma::build_clique_graph(std::span<const VertexSet> cliques) -> CliqueGraph
{
    if (cliques.empty())
        throw InvalidArgument("clique graph of an empty collection");

    CliqueGraph x;
    x.cliques.assign(cliques.begin(), cliques.end());
    int m = int(cliques.size());
    x.adjacent.resize(m);
    for (int i = 0 ; i < m ; ++i)
        for (int j = i + 1 ; j < m ; ++j)
            if (cliques[i].intersects(cliques[j])) {
                x.adjacent[i].push_back(j);
                x.adjacent[j].push_back(i);
            }

    std::vector<bool> seen(m, false);
    for (int s = 0 ; s < m ; ++s) {
        if (seen[s])
            continue;
        std::vector<int> component{s};
        seen[s] = true;
        for (std::size_t k = 0 ; k < component.size() ; ++k)
            for (int j : x.adjacent[component[k]])
                if (! seen[j]) {
                    seen[j] = true;
                    component.push_back(j);
                }
        std::sort(component.begin(), component.end());
        x.components.push_back(std::move(component));
    }
    return x;
}

auto vtchroma::build_clique_graph(const CliqueCollection & q) -> CliqueGraph
{
    return build_clique_graph(std::span<const VertexSet>(q.cliques));
}

auto vtchroma::hajnal_check(const Graph & g, std::span<const VertexSet> q, int omega) -> HajnalResult
{
    if (q.empty())
        throw InvalidArgument("Hajnal check on an empty collection");
    omega = resolve_omega(g, omega);
    check_maximum(g, q, omega);

    HajnalResult result;
    result.union_size = join_all(q).count();
    result.intersection_size = meet(q).count();
    result.holds = result.union_size + result.intersection_size >= 2 * omega;
    return result;
}

auto vtchroma::kostochka_common_vertex(const Graph & g, std::span<const VertexSet> component, int omega) -> VertexSet
{
    if (component.empty())
        throw InvalidArgument("empty clique component");
    omega = resolve_omega(g, omega);
    if (! omega_above_two_thirds(omega, g.max_degree()))
        throw InvalidArgument("common-vertex lemma needs 3 omega > 2 (Delta + 1)");
    check_maximum(g, component, omega);
    if (build_clique_graph(component).components.size() != 1)
        throw InvalidArgument("clique collection is not connected in its intersection graph");

    VertexSet common = meet(component);
    if (common.empty())
        throw LemmaFalsified("connected clique component with empty intersection although 3 omega > 2 (Delta + 1)");
    return common;
}

auto vtchroma::describe(const ClusterClassification & c) -> std::string
{
    struct Visitor
    {
        auto operator() (const Edgeless &) const -> std::string { return "Edgeless"; }
        auto operator() (const CycleBlowup & b) const -> std::string
        {
            return "CycleBlowup(" + std::to_string(b.cycle_length) + "," + std::to_string(b.part_size) + ")";
        }
        auto operator() (const StarComponents & s) const -> std::string
        {
            return "StarComponents(" + std::to_string(s.common.size()) + ")";
        }
        auto operator() (const OtherShape & o) const -> std::string { return "Other(" + o.reason + ")"; }
    };
    return std::visit(Visitor{}, c);
}

auto vtchroma::cek_classify(const Graph & g, std::span<const VertexSet> component, int omega) -> ClusterClassification
{
    if (component.empty())
        throw InvalidArgument("empty clique component");
    omega = resolve_omega(g, omega);
    if (! omega_at_least_two_thirds(omega, g.max_degree()))
        throw InvalidArgument("component classification needs 3 omega >= 2 (Delta + 1)");
    check_maximum(g, component, omega);

    auto x = build_clique_graph(component);
    if (x.components.size() != 1)
        throw InvalidArgument("clique collection is not connected in its intersection graph");

    VertexSet common = meet(component);
    if (common.any())
        return StarComponents{{common}};

    auto fail = [] (const std::string & why) -> LemmaFalsified {
        return LemmaFalsified("clique component has empty intersection and " + why);
    };

    if (x.max_degree() > 2)
        throw fail("a clique with more than two neighbors");
    for (std::size_t a = 0 ; a < x.cliques.size() ; ++a) {
        if (x.adjacent[a].size() != 2)
            continue;
        auto & b = x.cliques[x.adjacent[a][0]];
        auto & c = x.cliques[x.adjacent[a][1]];
        if (b.intersects(c))
            throw fail("two neighbors of a clique meet");
        if (2 * (x.cliques[a] & b).count() != omega || 2 * (x.cliques[a] & c).count() != omega)
            throw fail("an intersection of size other than omega / 2");
    }

    int m = int(x.cliques.size());
    bool cycle = m >= 3 && std::all_of(x.adjacent.begin(), x.adjacent.end(),
            [] (const auto & a) { return a.size() == 2; });
    if (! cycle)
        return OtherShape{"path of " + std::to_string(m) + " cliques"};

    // Walk the cycle from clique 0, recording consecutive intersections.
    CycleBlowup result{m, omega / 2, {}, {}};
    int previous = -1, current = 0;
    for (int step = 0 ; step < m ; ++step) {
        int next = x.adjacent[current][0] == previous ? x.adjacent[current][1] : x.adjacent[current][0];
        result.parts.push_back(x.cliques[current] & x.cliques[next]);
        previous = current;
        current = next;
    }
    if (current != 0)
        throw fail("an intersection graph that is not a single cycle");

    VertexSet tiled;
    for (auto & part : result.parts) {
        if (part.intersects(tiled))
            throw fail("overlapping cycle parts");
        tiled |= part;
    }
    if (tiled != join_all(component))
        throw fail("cycle parts that do not tile the component");
    return result;
}

auto vtchroma::vt_classify(const Graph & g, const Budget & budget) -> ClusterClassification
{
    if (g.size() == 0 || ! g.is_connected())
        throw InvalidArgument("clustering dichotomy needs a nonempty connected graph");
    if (! is_vertex_transitive(g, budget).transitive)
        throw InvalidArgument("clustering dichotomy needs a vertex-transitive graph");
    return vt_classify(g, maximum_cliques(g, budget));
}

auto vtchroma::vt_classify(const Graph & g, const CliqueCollection & maximum) -> ClusterClassification
{
    if (g.size() == 0 || ! g.is_connected())
        throw InvalidArgument("clustering dichotomy needs a nonempty connected graph");
    int omega = maximum.cliques.front().count();
    if (! omega_at_least_two_thirds(omega, g.max_degree()))
        throw InvalidArgument("clustering dichotomy needs 3 omega >= 2 (Delta + 1)");

    auto x = build_clique_graph(maximum);
    if (x.is_edgeless()) {
        if (maximum.union_of() != g.vertices())
            throw LemmaFalsified("disjoint maximum cliques of a vertex-transitive graph miss a vertex");
        return Edgeless{maximum.cliques};
    }

    if (x.components.size() != 1)
        throw LemmaFalsified("maximum clique graph has edges but is disconnected");
    auto shape = cek_classify(g, maximum.cliques, omega);
    auto * cycle = std::get_if<CycleBlowup>(&shape);
    if (! cycle)
        throw LemmaFalsified("maximum clique graph has edges but is not a cycle: " + describe(shape));
    if (maximum.union_of() != g.vertices())
        throw LemmaFalsified("cycle of maximum cliques does not cover the graph");

    Permutation iso(g.size(), -1);
    int s = cycle->part_size;
    for (int i = 0 ; i < cycle->cycle_length ; ++i) {
        int j = 0;
        for (int v : cycle->parts[i])
            iso[v] = i * s + j++;
    }
    if (! is_isomorphism(g, blow_up(cycle_graph(cycle->cycle_length), s), iso))
        throw LemmaFalsified("graph is not the blow-up of its maximum clique cycle");
    cycle->isomorphism = std::move(iso);
    return shape;
}

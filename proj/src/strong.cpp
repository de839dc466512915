#include <vtchroma/strong.hpp>
#include <vtchroma/error.hpp>
#include <vtchroma/generators.hpp>

#include <algorithm>
#include <numeric>

using namespace vtchroma;

VertexPartition::VertexPartition(int n, std::vector<VertexSet> parts) :
    _n(n),
    _parts(std::move(parts))
{
    VertexSet seen;
    for (auto & part : _parts) {
        if (part.empty())
            throw InvalidArgument("partition has an empty part");
        if (part.intersects(seen))
            throw InvalidArgument("partition parts overlap");
        seen |= part;
    }
    if (seen != VertexSet::full(n))
        throw InvalidArgument("partition does not cover the vertex set");
}

auto VertexPartition::largest_part() const -> int
{
    int m = 0;
    for (auto & part : _parts)
        m = std::max(m, part.count());
    return m;
}

namespace
{
    class TransversalSearch
    {
        public:
            TransversalSearch(const Graph & h, const VertexPartition & p, const Budget & budget) :
                _h(h), _parts(p.parts()), _budget(budget), _done(p.size(), false)
            {
            }

            auto run() -> std::optional<VertexSet>
            {
                if (search(VertexSet{}, VertexSet{}, 0))
                    return _chosen;
                return std::nullopt;
            }

        private:
            auto search(const VertexSet & chosen, const VertexSet & blocked, std::size_t placed) -> bool
            {
                if (++_nodes > _budget.search_nodes)
                    throw BudgetExceeded("transversal search exceeded " + std::to_string(_budget.search_nodes) + " nodes");
                if (placed == _parts.size()) {
                    _chosen = chosen;
                    return true;
                }

                int best = -1, best_count = VertexSet::capacity + 1;
                for (std::size_t i = 0 ; i < _parts.size() ; ++i)
                    if (! _done[i]) {
                        int c = (_parts[i] - blocked).count();
                        if (c < best_count) {
                            best = int(i);
                            best_count = c;
                        }
                    }
                if (best_count == 0)
                    return false;

                _done[best] = true;
                for (int v : _parts[best] - blocked) {
                    VertexSet next = chosen;
                    next.set(v);
                    if (search(next, blocked | _h.neighbors(v), placed + 1))
                        return true;
                }
                _done[best] = false;
                return false;
            }

            const Graph & _h;
            const std::vector<VertexSet> & _parts;
            const Budget & _budget;
            std::vector<bool> _done;
            VertexSet _chosen;
            std::uint64_t _nodes = 0;
    };

    /// Assigns colors part by part (largest parts first), colors ascending,
    /// never opening a color above the lowest unused one.
    class StrongSearch
    {
        public:
            StrongSearch(const Graph & g, const VertexPartition & p, int r, const Budget & budget) :
                _g(g), _r(r), _budget(budget), _color(g.size(), -1), _forbidden(g.size()),
                _part_of(g.size(), -1), _used_in_part(p.size())
            {
                std::vector<std::size_t> order(p.size());
                std::iota(order.begin(), order.end(), 0);
                std::stable_sort(order.begin(), order.end(), [&] (std::size_t a, std::size_t b) {
                        return p.parts()[a].count() > p.parts()[b].count(); });
                for (std::size_t i : order)
                    for (int v : p.parts()[i]) {
                        _sequence.push_back(v);
                        _part_of[v] = int(i);
                    }
            }

            auto run() -> std::optional<std::vector<int>>
            {
                if (search(0, 0))
                    return _color;
                return std::nullopt;
            }

        private:
            auto available(int v) const -> VertexSet
            {
                return VertexSet::full(_r) - _forbidden[v] - _used_in_part[_part_of[v]];
            }

            auto search(std::size_t index, int opened) -> bool
            {
                if (++_nodes > _budget.search_nodes)
                    throw BudgetExceeded("strong coloring search exceeded " + std::to_string(_budget.search_nodes) + " nodes");
                if (index == _sequence.size())
                    return true;

                int v = _sequence[index];
                VertexSet candidates = available(v) & VertexSet::full(std::min(_r, opened + 1));
                for (int c : candidates) {
                    _color[v] = c;
                    _used_in_part[_part_of[v]].set(c);
                    std::vector<int> touched;
                    for (int w : _g.neighbors(v))
                        if (_color[w] < 0 && ! _forbidden[w].test(c)) {
                            _forbidden[w].set(c);
                            touched.push_back(w);
                        }

                    bool ok = true;
                    for (std::size_t j = index + 1 ; j < _sequence.size() && ok ; ++j)
                        if (available(_sequence[j]).empty())
                            ok = false;

                    if (ok && search(index + 1, std::max(opened, c + 1)))
                        return true;

                    for (int w : touched)
                        _forbidden[w].reset(c);
                    _used_in_part[_part_of[v]].reset(c);
                    _color[v] = -1;
                }
                return false;
            }

            const Graph & _g;
            int _r;
            const Budget & _budget;
            std::vector<int> _color;
            std::vector<VertexSet> _forbidden;
            std::vector<int> _part_of;
            std::vector<VertexSet> _used_in_part;
            std::vector<int> _sequence;
            std::uint64_t _nodes = 0;
    };

    auto padded_size(int n, int r) -> int
    {
        return r * ((n + r - 1) / r);
    }
}

auto vtchroma::independent_transversal(const Graph & h, const VertexPartition & p, const Budget & budget)
    -> std::optional<VertexSet>
{
    if (p.vertex_count() != h.size())
        throw InvalidArgument("partition and graph have different vertex counts");
    return TransversalSearch(h, p, budget).run();
}

auto vtchroma::strong_coloring(const Graph & g, const VertexPartition & p, int r, const Budget & budget)
    -> std::optional<StrongColoring>
{
    if (p.vertex_count() != g.size())
        throw InvalidArgument("partition and graph have different vertex counts");
    if (r < 1 || r > VertexSet::capacity)
        throw InvalidArgument("strong coloring needs 1 <= r <= " + std::to_string(VertexSet::capacity));
    if (p.largest_part() > r)
        throw InvalidArgument("a part has more than r vertices");

    auto color = StrongSearch(g, p, r, budget).run();
    if (! color)
        return std::nullopt;
    return StrongColoring{Coloring{std::move(*color), r}, p, padded_size(g.size(), r)};
}

auto vtchroma::pad_to_multiple(const Graph & g, int r) -> Graph
{
    if (r < 1)
        throw InvalidArgument("padding multiple must be positive");
    return disjoint_union(g, Graph(padded_size(g.size(), r) - g.size()));
}

namespace
{
    /// Calls visit on every partition of 0..n-1 into blocks of size r; stops when visit returns false.
    template <typename Visit>
    auto each_equipartition(int n, int r, std::vector<VertexSet> & blocks, VertexSet unassigned, Visit && visit) -> bool
    {
        if (unassigned.empty())
            return visit(blocks);
        int anchor = unassigned.first();
        unassigned.reset(anchor);
        auto rest = unassigned.to_vector();

        std::vector<int> pick(r - 1);
        std::iota(pick.begin(), pick.end(), 0);
        int m = int(rest.size());
        if (r - 1 > m)
            return true;
        while (true) {
            VertexSet block = VertexSet::single(anchor);
            for (int i : pick)
                block.set(rest[i]);
            blocks.push_back(block);
            bool go_on = each_equipartition(n, r, blocks, unassigned - block, visit);
            blocks.pop_back();
            if (! go_on)
                return false;

            int i = r - 2;
            while (i >= 0 && pick[i] == m - (r - 1) + i)
                --i;
            if (i < 0)
                return true;
            ++pick[i];
            for (int j = i + 1 ; j < r - 1 ; ++j)
                pick[j] = pick[j - 1] + 1;
        }
    }
}

auto vtchroma::strong_chromatic_number_exhaustive(const Graph & g, int r, const Budget & budget) -> StrongColorabilityResult
{
    if (r < 1)
        throw InvalidArgument("strong colorability needs r >= 1");
    int total = padded_size(g.size(), r);
    if (total > budget.strong_padded_limit)
        throw BudgetExceeded("padded size " + std::to_string(total) + " exceeds exhaustive limit "
                + std::to_string(budget.strong_padded_limit));

    Graph padded = pad_to_multiple(g, r);
    StrongColorabilityResult result;
    result.strongly_colorable = true;
    std::vector<VertexSet> blocks;
    each_equipartition(total, r, blocks, padded.vertices(), [&] (const std::vector<VertexSet> & parts) {
            ++result.partitions_checked;
            VertexPartition p(total, parts);
            if (strong_coloring(padded, p, r, budget))
                return true;
            result.strongly_colorable = false;
            result.witness = p;
            return false;
        });
    return result;
}

auto vtchroma::clique_padding_reduction(const Graph & g, std::span<const VertexSet> cliques, int r, const Budget & budget)
    -> ReductionResult
{
    int n = g.size();
    VertexSet seen;
    int largest = 0;
    for (auto & q : cliques) {
        if (q.empty() || ! q.is_subset_of(g.vertices()) || ! g.is_clique(q))
            throw NotCliquePartition("a listed set is not a nonempty clique");
        if (q.intersects(seen))
            throw NotCliquePartition("listed cliques overlap");
        seen |= q;
        largest = std::max(largest, q.count());
    }
    if (seen != g.vertices())
        throw NotCliquePartition("listed cliques do not cover every vertex");
    if (r < largest)
        throw InvalidArgument("r is smaller than the largest clique");

    long long total = (long long) r * (long long) cliques.size();
    if (total > VertexSet::capacity)
        throw CapacityExceeded("padded graph would have " + std::to_string(total) + " vertices");

    std::vector<VertexSet> grown;
    GraphBuilder padded{int(total)}, stripped{int(total)};
    for (auto [u, v] : g.edges())
        padded.add_edge(u, v);
    int next = n;
    for (auto & q : cliques) {
        VertexSet part = q;
        for (int i = q.count() ; i < r ; ++i)
            part.set(next++);
        for (int u : part)
            for (int v : part)
                if (u < v)
                    padded.add_edge(u, v);
        grown.push_back(part);
    }

    ReductionResult result;
    result.padded = std::move(padded).build();
    result.parts = VertexPartition(int(total), grown);

    std::vector<int> part_of(total, -1);
    for (std::size_t i = 0 ; i < grown.size() ; ++i)
        for (int v : grown[i])
            part_of[v] = int(i);
    for (auto [u, v] : result.padded.edges())
        if (part_of[u] != part_of[v])
            stripped.add_edge(u, v);
    result.stripped = std::move(stripped).build();

    if (auto strong = strong_coloring(result.stripped, result.parts, r, budget)) {
        Coloring c{std::vector<int>(strong->coloring.color.begin(), strong->coloring.color.begin() + n), r};
        if (! is_proper(g, c))
            throw Error("clique padding reduction produced an improper coloring");
        result.coloring = std::move(c);
    }
    return result;
}

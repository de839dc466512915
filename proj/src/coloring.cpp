#include <vtchroma/coloring.hpp>
#include <vtchroma/cliques.hpp>
#include <vtchroma/error.hpp>
#include <vtchroma/generators.hpp>

#include <algorithm>

using namespace vtchroma;

namespace
{
    /// Uncolored vertex with the most distinct neighbor colors, then the
    /// most uncolored neighbors, then the lowest index.
    auto select_vertex(const Graph & g, const std::vector<VertexSet> & forbidden, const VertexSet & uncolored) -> int
    {
        int best = -1, best_sat = -1, best_deg = -1;
        for (int v : uncolored) {
            int sat = forbidden[v].count();
            int deg = (g.neighbors(v) & uncolored).count();
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        return best;
    }

    class ColoringSearch
    {
        public:
            ColoringSearch(const Graph & g, const Budget & budget) :
                _g(g), _budget(budget), _color(g.size(), -1), _forbidden(g.size()), _uncolored(g.vertices())
            {
            }

            auto run() -> ChromaticResult
            {
                auto clique = maximum_clique(_g, _budget);
                _lower = clique.count();

                auto greedy = greedy_coloring(_g);
                _best = greedy;

                if (_best.colors > _lower) {
                    int c = 0;
                    for (int v : clique)
                        assign(v, c++);
                    expand(_lower);
                }

                return ChromaticResult{_best.colors, _best, _nodes};
            }

        private:
            struct Undo
            {
                int vertex;
                std::vector<int> touched;
            };

            auto assign(int v, int c) -> Undo
            {
                Undo undo{v, {}};
                _color[v] = c;
                _uncolored.reset(v);
                for (int w : _g.neighbors(v) & _uncolored)
                    if (! _forbidden[w].test(c)) {
                        _forbidden[w].set(c);
                        undo.touched.push_back(w);
                    }
                return undo;
            }

            auto unassign(const Undo & undo) -> void
            {
                int c = _color[undo.vertex];
                for (int w : undo.touched)
                    _forbidden[w].reset(c);
                _color[undo.vertex] = -1;
                _uncolored.set(undo.vertex);
            }

            auto expand(int used) -> void
            {
                if (++_nodes > _budget.search_nodes)
                    throw BudgetExceeded("coloring search exceeded " + std::to_string(_budget.search_nodes) + " nodes");

                if (_uncolored.empty()) {
                    _best.color = _color;
                    _best.colors = used;
                    return;
                }

                int v = select_vertex(_g, _forbidden, _uncolored);
                for (int c = 0 ; c < used && used < _best.colors ; ++c) {
                    if (_forbidden[v].test(c))
                        continue;
                    auto undo = assign(v, c);
                    expand(used);
                    unassign(undo);
                    if (_best.colors == _lower)
                        return;
                }
                if (used + 1 < _best.colors) {
                    auto undo = assign(v, used);
                    expand(used + 1);
                    unassign(undo);
                }
            }

            const Graph & _g;
            const Budget & _budget;
            std::vector<int> _color;
            std::vector<VertexSet> _forbidden;
            VertexSet _uncolored;
            Coloring _best;
            int _lower = 0;
            std::uint64_t _nodes = 0;
    };
}

auto Coloring::class_of(int c) const -> VertexSet
{
    VertexSet result;
    for (std::size_t v = 0 ; v < color.size() ; ++v)
        if (color[v] == c)
            result.set(int(v));
    return result;
}

auto vtchroma::is_proper(const Graph & g, const Coloring & c) -> bool
{
    if (int(c.color.size()) != g.size())
        return false;
    for (int v = 0 ; v < g.size() ; ++v)
        if (c.color[v] < 0 || c.color[v] >= c.colors)
            return false;
    for (auto [u, v] : g.edges())
        if (c.color[u] == c.color[v])
            return false;
    return true;
}

auto vtchroma::greedy_coloring(const Graph & g) -> Coloring
{
    Coloring result{std::vector<int>(g.size(), -1), 0};
    std::vector<VertexSet> forbidden(g.size());
    VertexSet uncolored = g.vertices();
    while (uncolored.any()) {
        int v = select_vertex(g, forbidden, uncolored);
        int c = forbidden[v].complement_within(VertexSet::capacity).first();
        result.color[v] = c;
        result.colors = std::max(result.colors, c + 1);
        uncolored.reset(v);
        for (int w : g.neighbors(v) & uncolored)
            forbidden[w].set(c);
    }
    return result;
}

auto vtchroma::chromatic_number(const Graph & g, const Budget & budget) -> ChromaticResult
{
    if (g.size() == 0)
        return ChromaticResult{0, Coloring{}, 0};
    return ColoringSearch(g, budget).run();
}

auto vtchroma::independence_number(const Graph & g, const Budget & budget) -> IndependenceResult
{
    auto witness = maximum_clique(complement(g), budget);
    return IndependenceResult{witness.count(), witness};
}

auto vtchroma::maximal_independent_sets(const Graph & g, const Budget & budget) -> std::vector<VertexSet>
{
    if (g.size() == 0)
        return {};
    return maximal_cliques(complement(g), budget).cliques;
}

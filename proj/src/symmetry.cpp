#include <vtchroma/symmetry.hpp>
#include <vtchroma/error.hpp>

#include <algorithm>
#include <map>
#include <numeric>

using namespace vtchroma;

namespace
{
    class Matcher
    {
        public:
            Matcher(const Graph & g, const Graph & h, const Budget & budget) :
                _g(g), _h(h), _budget(budget), _image(g.size(), -1)
            {
            }

            auto run(std::vector<VertexSet> candidates) -> std::optional<Permutation>
            {
                if (search(std::move(candidates), 0))
                    return _image;
                return std::nullopt;
            }

        private:
            auto search(std::vector<VertexSet> candidates, int mapped) -> bool
            {
                if (++_nodes > _budget.search_nodes)
                    throw BudgetExceeded("isomorphism search exceeded " + std::to_string(_budget.search_nodes) + " nodes");

                int n = _g.size();
                if (mapped == n)
                    return true;

                int best = -1, best_count = n + 1;
                for (int v = 0 ; v < n ; ++v)
                    if (_image[v] < 0) {
                        int c = (candidates[v] - _used).count();
                        if (c < best_count) {
                            best = v;
                            best_count = c;
                        }
                    }
                if (best_count == 0)
                    return false;

                for (int x : candidates[best] - _used) {
                    _image[best] = x;
                    _used.set(x);

                    bool ok = true;
                    auto next = candidates;
                    VertexSet in = _h.neighbors(x), out = in.complement_within(n);
                    out.reset(x);
                    for (int y = 0 ; y < n && ok ; ++y)
                        if (_image[y] < 0) {
                            next[y] &= _g.adjacent(best, y) ? in : out;
                            if (! (next[y] - _used).any())
                                ok = false;
                        }

                    if (ok && search(std::move(next), mapped + 1))
                        return true;

                    _used.reset(x);
                    _image[best] = -1;
                }
                return false;
            }

            const Graph & _g;
            const Graph & _h;
            const Budget & _budget;
            Permutation _image;
            VertexSet _used;
            std::uint64_t _nodes = 0;
    };

    /// Candidates by equal color; nullopt when the color class sizes differ.
    auto candidates_from_colors(const std::vector<int> & cg, const std::vector<int> & ch)
        -> std::optional<std::vector<VertexSet>>
    {
        std::map<int, VertexSet> in_h;
        std::map<int, int> balance;
        for (std::size_t v = 0 ; v < ch.size() ; ++v) {
            in_h[ch[v]].set(int(v));
            ++balance[ch[v]];
        }
        for (int c : cg)
            --balance[c];
        for (auto & [c, b] : balance)
            if (b != 0)
                return std::nullopt;

        std::vector<VertexSet> result(cg.size());
        for (std::size_t v = 0 ; v < cg.size() ; ++v)
            result[v] = in_h[cg[v]];
        return result;
    }

    auto mapping_search(const Graph & g, const Graph & h, std::vector<int> initial_g, std::vector<int> initial_h,
            const Budget & budget) -> std::optional<Permutation>
    {
        if (g.size() != h.size() || g.edge_count() != h.edge_count())
            return std::nullopt;
        auto [cg, ch] = refine_colors(g, h, std::move(initial_g), std::move(initial_h));
        auto candidates = candidates_from_colors(cg, ch);
        if (! candidates)
            return std::nullopt;
        return Matcher(g, h, budget).run(std::move(*candidates));
    }

    auto compose(const Permutation & outer, const Permutation & inner) -> Permutation
    {
        Permutation result(inner.size());
        for (std::size_t v = 0 ; v < inner.size() ; ++v)
            result[v] = outer[inner[v]];
        return result;
    }

    struct UnionFind
    {
        std::vector<int> parent;

        explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

        auto find(int v) -> int
        {
            while (parent[v] != v)
                v = parent[v] = parent[parent[v]];
            return v;
        }

        auto unite(int a, int b) -> void
        {
            a = find(a), b = find(b);
            if (a != b)
                parent[std::max(a, b)] = std::min(a, b);
        }
    };
}

auto OrbitPartition::orbits() const -> std::vector<VertexSet>
{
    std::vector<VertexSet> result(orbit_count);
    for (std::size_t v = 0 ; v < orbit_of.size() ; ++v)
        result[orbit_of[v]].set(int(v));
    return result;
}

auto vtchroma::is_bijection(const Permutation & p) -> bool
{
    std::vector<bool> seen(p.size(), false);
    for (int x : p) {
        if (x < 0 || x >= int(p.size()) || seen[x])
            return false;
        seen[x] = true;
    }
    return true;
}

auto vtchroma::is_isomorphism(const Graph & g, const Graph & h, const Permutation & p) -> bool
{
    if (g.size() != h.size() || int(p.size()) != g.size() || ! is_bijection(p))
        return false;
    for (int u = 0 ; u < g.size() ; ++u)
        for (int v = u + 1 ; v < g.size() ; ++v)
            if (g.adjacent(u, v) != h.adjacent(p[u], p[v]))
                return false;
    return true;
}

auto vtchroma::is_automorphism(const Graph & g, const Permutation & p) -> bool
{
    return is_isomorphism(g, g, p);
}

auto vtchroma::refine_colors(const Graph & g, const Graph & h, std::vector<int> cg, std::vector<int> ch)
    -> std::pair<std::vector<int>, std::vector<int>>
{
    if (cg.empty())
        cg.assign(g.size(), 0);
    if (ch.empty())
        ch.assign(h.size(), 0);

    using Signature = std::pair<int, std::vector<int>>;
    auto signature = [] (const Graph & x, const std::vector<int> & color, int v) {
        Signature s{color[v], {}};
        for (int w : x.neighbors(v))
            s.second.push_back(color[w]);
        std::sort(s.second.begin(), s.second.end());
        return s;
    };

    int classes = -1;
    while (true) {
        std::vector<Signature> sg, sh;
        std::map<Signature, int> ids;
        for (int v = 0 ; v < g.size() ; ++v)
            ids.emplace(sg.emplace_back(signature(g, cg, v)), 0);
        for (int v = 0 ; v < h.size() ; ++v)
            ids.emplace(sh.emplace_back(signature(h, ch, v)), 0);
        int next_id = 0;
        for (auto & [s, id] : ids)
            id = next_id++;
        for (int v = 0 ; v < g.size() ; ++v)
            cg[v] = ids[sg[v]];
        for (int v = 0 ; v < h.size() ; ++v)
            ch[v] = ids[sh[v]];
        if (next_id == classes)
            break;
        classes = next_id;
    }
    return {std::move(cg), std::move(ch)};
}

auto vtchroma::find_automorphism(const Graph & g, int from, int to, const Budget & budget) -> std::optional<Permutation>
{
    if (from < 0 || to < 0 || from >= g.size() || to >= g.size())
        throw InvalidArgument("automorphism endpoint out of range");
    std::vector<int> cg(g.size(), 0), ch(g.size(), 0);
    cg[from] = 1;
    ch[to] = 1;
    return mapping_search(g, g, std::move(cg), std::move(ch), budget);
}

auto vtchroma::find_isomorphism(const Graph & g, const Graph & h, const Budget & budget) -> std::optional<Permutation>
{
    return mapping_search(g, h, {}, {}, budget);
}

auto vtchroma::are_isomorphic(const Graph & g, const Graph & h, const Budget & budget) -> bool
{
    return find_isomorphism(g, h, budget).has_value();
}

auto vtchroma::automorphism_orbits(const Graph & g, const Budget & budget) -> OrbitPartition
{
    int n = g.size();
    auto colors = refine_colors(g, g).first;
    UnionFind uf(n);
    std::vector<int> representatives;

    for (int w = 0 ; w < n ; ++w) {
        bool placed = false;
        for (int r : representatives) {
            if (colors[r] != colors[w])
                continue;
            if (uf.find(r) == uf.find(w)) {
                placed = true;
                break;
            }
            if (auto p = find_automorphism(g, r, w, budget)) {
                for (int x = 0 ; x < n ; ++x)
                    uf.unite(x, (*p)[x]);
                placed = true;
                break;
            }
        }
        if (! placed)
            representatives.push_back(w);
    }

    OrbitPartition result;
    result.orbit_of.assign(n, -1);
    std::map<int, int> ids;
    for (int v = 0 ; v < n ; ++v) {
        auto [it, fresh] = ids.emplace(uf.find(v), result.orbit_count);
        if (fresh)
            ++result.orbit_count;
        result.orbit_of[v] = it->second;
    }
    return result;
}

auto vtchroma::is_vertex_transitive(const Graph & g, const Budget & budget) -> TransitivityResult
{
    int n = g.size();
    if (n == 0)
        throw InvalidArgument("vertex transitivity of the empty graph");
    TransitivityResult result;
    if (! g.is_regular())
        return result;

    std::vector<Permutation> witnesses(n);
    witnesses[0].resize(n);
    std::iota(witnesses[0].begin(), witnesses[0].end(), 0);
    std::vector<Permutation> generators;
    int reached = 1;

    // Close the reached set under the generators found so far.
    auto close = [&] {
        bool grew = true;
        while (grew) {
            grew = false;
            for (int v = 0 ; v < n ; ++v) {
                if (witnesses[v].empty())
                    continue;
                for (auto & s : generators) {
                    int target = s[v];
                    if (witnesses[target].empty()) {
                        witnesses[target] = compose(s, witnesses[v]);
                        ++reached;
                        grew = true;
                    }
                }
            }
        }
    };

    while (reached < n) {
        int target = 0;
        while (! witnesses[target].empty())
            ++target;
        auto p = find_automorphism(g, 0, target, budget);
        if (! p)
            return result;
        witnesses[target] = *p;
        ++reached;
        generators.push_back(std::move(*p));
        close();
    }

    result.transitive = true;
    result.witnesses = std::move(witnesses);
    return result;
}

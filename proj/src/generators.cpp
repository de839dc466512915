#include <vtchroma/generators.hpp>
#include <vtchroma/error.hpp>

#include <algorithm>

using namespace vtchroma;

namespace
{
    auto check_size(long long n, const char * what) -> void
    {
        if (n > VertexSet::capacity)
            throw CapacityExceeded(std::string(what) + " would have " + std::to_string(n)
                    + " vertices, capacity is " + std::to_string(VertexSet::capacity));
    }
}

auto vtchroma::complete_graph(int n) -> Graph
{
    GraphBuilder b(n);
    for (int u = 0 ; u < n ; ++u)
        for (int v = u + 1 ; v < n ; ++v)
            b.add_edge(u, v);
    return std::move(b).build();
}

auto vtchroma::cycle_graph(int n) -> Graph
{
    if (n < 3)
        throw InvalidArgument("a cycle needs at least 3 vertices");
    GraphBuilder b(n);
    for (int v = 0 ; v < n ; ++v)
        b.add_edge(v, (v + 1) % n);
    return std::move(b).build();
}

auto vtchroma::path_graph(int n) -> Graph
{
    GraphBuilder b(n);
    for (int v = 0 ; v + 1 < n ; ++v)
        b.add_edge(v, v + 1);
    return std::move(b).build();
}

auto vtchroma::complement(const Graph & g) -> Graph
{
    GraphBuilder b(g.size());
    for (int u = 0 ; u < g.size() ; ++u)
        for (int v = u + 1 ; v < g.size() ; ++v)
            if (! g.adjacent(u, v))
                b.add_edge(u, v);
    return std::move(b).build();
}

auto vtchroma::disjoint_union(const Graph & g, const Graph & h) -> Graph
{
    check_size((long long) g.size() + h.size(), "disjoint union");
    int offset = g.size();
    GraphBuilder b(g.size() + h.size());
    for (auto [u, v] : g.edges())
        b.add_edge(u, v);
    for (auto [u, v] : h.edges())
        b.add_edge(u + offset, v + offset);
    return std::move(b).build();
}

auto vtchroma::join(const Graph & g, const Graph & h) -> Graph
{
    check_size((long long) g.size() + h.size(), "join");
    int offset = g.size();
    GraphBuilder b(g.size() + h.size());
    for (auto [u, v] : g.edges())
        b.add_edge(u, v);
    for (auto [u, v] : h.edges())
        b.add_edge(u + offset, v + offset);
    for (int u = 0 ; u < g.size() ; ++u)
        for (int v = 0 ; v < h.size() ; ++v)
            b.add_edge(u, v + offset);
    return std::move(b).build();
}

auto vtchroma::cartesian_product(const Graph & g, const Graph & h) -> Graph
{
    check_size((long long) g.size() * h.size(), "cartesian product");
    int m = h.size();
    GraphBuilder b(g.size() * m);
    for (int u = 0 ; u < g.size() ; ++u)
        for (auto [x, y] : h.edges())
            b.add_edge(u * m + x, u * m + y);
    for (auto [u, w] : g.edges())
        for (int x = 0 ; x < m ; ++x)
            b.add_edge(u * m + x, w * m + x);
    return std::move(b).build();
}

auto vtchroma::line_graph(const Multigraph & m) -> Graph
{
    m.validate();
    if (m.edges.empty())
        throw InvalidArgument("line graph of a multigraph with no edges");
    int count = int(m.edges.size());
    check_size(count, "line graph");

    GraphBuilder b(count);
    for (int i = 0 ; i < count ; ++i)
        for (int j = i + 1 ; j < count ; ++j) {
            auto [a, c] = m.edges[i];
            auto [x, y] = m.edges[j];
            if (a == x || a == y || c == x || c == y)
                b.add_edge(i, j);
        }
    return std::move(b).build();
}

auto vtchroma::multicycle(int length, int multiplicity) -> Multigraph
{
    if (length < 2 || multiplicity < 1)
        throw InvalidArgument("multicycle needs length >= 2 and multiplicity >= 1");
    Multigraph m{length, {}};
    for (int i = 0 ; i < length ; ++i)
        for (int c = 0 ; c < multiplicity ; ++c)
            m.edges.emplace_back(i, (i + 1) % length);
    return m;
}

auto vtchroma::blow_up(const Graph & g, int m) -> Graph
{
    if (m < 1)
        throw InvalidArgument("blow-up size must be at least 1");
    check_size((long long) g.size() * m, "blow-up");

    GraphBuilder b(g.size() * m);
    for (int v = 0 ; v < g.size() ; ++v)
        for (int i = 0 ; i < m ; ++i)
            for (int j = i + 1 ; j < m ; ++j)
                b.add_edge(v * m + i, v * m + j);
    for (auto [u, v] : g.edges())
        for (int i = 0 ; i < m ; ++i)
            for (int j = 0 ; j < m ; ++j)
                b.add_edge(u * m + i, v * m + j);
    return std::move(b).build();
}

auto vtchroma::circulant(int n, const std::vector<int> & gens) -> Graph
{
    if (n < 1)
        throw InvalidArgument("circulant needs n >= 1");
    GraphBuilder b(n);
    for (int s : gens) {
        if (s < 1 || s > n / 2)
            throw InvalidArgument("circulant offset " + std::to_string(s) + " outside 1.." + std::to_string(n / 2));
        for (int i = 0 ; i < n ; ++i)
            b.add_edge(i, (i + s) % n);
    }
    return std::move(b).build();
}

auto vtchroma::kneser(int n, int k) -> Graph
{
    if (k < 1 || n < 2 * k)
        throw InvalidArgument("kneser graph needs k >= 1 and n >= 2k");
    if (n > 63)
        throw CapacityExceeded("kneser ground set too large");

    std::vector<std::uint64_t> subsets;
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + k, true);
    do {
        std::uint64_t mask = 0;
        for (int i = 0 ; i < n ; ++i)
            if (pick[i])
                mask |= std::uint64_t{1} << i;
        subsets.push_back(mask);
        check_size((long long) subsets.size(), "kneser graph");
    } while (std::prev_permutation(pick.begin(), pick.end()));

    int count = int(subsets.size());
    GraphBuilder b(count);
    for (int i = 0 ; i < count ; ++i)
        for (int j = i + 1 ; j < count ; ++j)
            if (! (subsets[i] & subsets[j]))
                b.add_edge(i, j);
    return std::move(b).build();
}

auto vtchroma::catlin(int t, int k) -> Graph
{
    if (t < 2 || k < 1)
        throw InvalidArgument("catlin graph needs t >= 2 and k >= 1");
    return line_graph(multicycle(2 * t + 1, k));
}

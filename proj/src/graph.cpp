#include <vtchroma/graph.hpp>
#include <vtchroma/error.hpp>

#include <algorithm>

using namespace vtchroma;

namespace
{
    auto check_capacity(int n) -> void
    {
        if (n < 0)
            throw InvalidArgument("negative vertex count");
        if (n > VertexSet::capacity)
            throw CapacityExceeded("graph on " + std::to_string(n) + " vertices exceeds capacity "
                    + std::to_string(VertexSet::capacity));
    }
}

Graph::Graph(int n) :
    _n(n)
{
    check_capacity(n);
    _adj.resize(n);
}

auto Graph::add_edge(int u, int v) -> void
{
    if (u < 0 || v < 0 || u >= _n || v >= _n)
        throw InvalidArgument("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range for n = "
                + std::to_string(_n));
    if (u == v)
        throw InvalidArgument("loop at vertex " + std::to_string(u));
    _adj[u].set(v);
    _adj[v].set(u);
}

auto Graph::from_edges(int n, std::span<const Edge> edges) -> Graph
{
    GraphBuilder b(n);
    for (auto [u, v] : edges)
        b.add_edge(u, v);
    return std::move(b).build();
}

auto Graph::from_edges(int n, std::initializer_list<Edge> edges) -> Graph
{
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
}

auto Graph::max_degree() const -> int
{
    int d = 0;
    for (int v = 0 ; v < _n ; ++v)
        d = std::max(d, degree(v));
    return d;
}

auto Graph::min_degree() const -> int
{
    if (_n == 0)
        return 0;
    int d = _n;
    for (int v = 0 ; v < _n ; ++v)
        d = std::min(d, degree(v));
    return d;
}

auto Graph::is_regular() const -> bool
{
    return max_degree() == min_degree();
}

auto Graph::edge_count() const -> int
{
    int total = 0;
    for (int v = 0 ; v < _n ; ++v)
        total += degree(v);
    return total / 2;
}

auto Graph::edges() const -> std::vector<Edge>
{
    std::vector<Edge> result;
    for (int u = 0 ; u < _n ; ++u)
        for (int v : _adj[u])
            if (u < v)
                result.emplace_back(u, v);
    return result;
}

auto Graph::is_clique(const VertexSet & s) const -> bool
{
    for (int v : s)
        if (! (s - VertexSet::single(v)).is_subset_of(_adj[v]))
            return false;
    return true;
}

auto Graph::is_independent(const VertexSet & s) const -> bool
{
    for (int v : s)
        if (_adj[v].intersects(s))
            return false;
    return true;
}

auto Graph::components() const -> std::vector<VertexSet>
{
    std::vector<VertexSet> result;
    VertexSet unseen = vertices();
    while (unseen.any()) {
        VertexSet component = VertexSet::single(unseen.first()), frontier = component;
        while (frontier.any()) {
            VertexSet next;
            for (int v : frontier)
                next |= _adj[v];
            next -= component;
            component |= next;
            frontier = next;
        }
        unseen -= component;
        result.push_back(component);
    }
    return result;
}

auto Graph::is_connected() const -> bool
{
    return components().size() <= 1;
}

auto Graph::induced(const VertexSet & s) const -> Graph
{
    auto keep = s.to_vector();
    std::vector<int> index(_n, -1);
    for (std::size_t i = 0 ; i < keep.size() ; ++i)
        index[keep[i]] = int(i);

    GraphBuilder b(int(keep.size()));
    for (std::size_t i = 0 ; i < keep.size() ; ++i)
        for (int w : _adj[keep[i]] & s)
            if (index[w] > int(i))
                b.add_edge(int(i), index[w]);
    return std::move(b).build();
}

auto Graph::relabelled(std::span<const int> perm) const -> Graph
{
    if (int(perm.size()) != _n)
        throw InvalidArgument("relabelling has wrong length");
    GraphBuilder b(_n);
    for (auto [u, v] : edges())
        b.add_edge(perm[u], perm[v]);
    return std::move(b).build();
}

auto Graph::validate() const -> void
{
    check_capacity(_n);
    if (int(_adj.size()) != _n)
        throw InvalidArgument("adjacency row count differs from n");
    VertexSet all = vertices();
    for (int v = 0 ; v < _n ; ++v) {
        if (_adj[v].test(v))
            throw InvalidArgument("vertex " + std::to_string(v) + " is its own neighbor");
        if (! _adj[v].is_subset_of(all))
            throw InvalidArgument("vertex " + std::to_string(v) + " has a neighbor out of range");
        for (int w : _adj[v])
            if (! _adj[w].test(v))
                throw InvalidArgument("adjacency not symmetric at (" + std::to_string(v) + "," + std::to_string(w) + ")");
    }
}

GraphBuilder::GraphBuilder(int n) :
    _graph(n)
{
}

auto GraphBuilder::add_edge(int u, int v) -> void
{
    _graph.add_edge(u, v);
}

auto GraphBuilder::remove_edge(int u, int v) -> void
{
    _graph._adj[u].reset(v);
    _graph._adj[v].reset(u);
}

auto GraphBuilder::build() && -> Graph
{
    return std::move(_graph);
}

auto Multigraph::validate() const -> void
{
    if (n < 0)
        throw InvalidArgument("negative vertex count");
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw InvalidArgument("multigraph edge endpoint out of range");
        if (u == v)
            throw InvalidArgument("multigraph loop at vertex " + std::to_string(u));
    }
}

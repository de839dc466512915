#include <vtchroma/random.hpp>
#include <vtchroma/error.hpp>

#include <algorithm>
#include <numeric>

using namespace vtchroma;

namespace
{
    auto uniform(std::mt19937_64 & rng, int lo, int hi) -> int
    {
        return std::uniform_int_distribution<int>(lo, hi)(rng);
    }
}

auto vtchroma::random_graph(int n, double p, std::mt19937_64 & rng) -> Graph
{
    std::bernoulli_distribution coin(p);
    GraphBuilder b{n};
    for (int u = 0 ; u < n ; ++u)
        for (int v = u + 1 ; v < n ; ++v)
            if (coin(rng))
                b.add_edge(u, v);
    return std::move(b).build();
}

auto vtchroma::planted_clique_graph(int n, int cliques, int max_clique, double noise, std::mt19937_64 & rng) -> Graph
{
    std::bernoulli_distribution coin(noise);
    GraphBuilder b{n};
    for (int u = 0 ; u < n ; ++u)
        for (int v = u + 1 ; v < n ; ++v)
            if (coin(rng))
                b.add_edge(u, v);

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    for (int i = 0 ; i < cliques && n >= 2 ; ++i) {
        int size = uniform(rng, 2, std::max(2, std::min(max_clique, n)));
        std::shuffle(order.begin(), order.end(), rng);
        for (int a = 0 ; a < size ; ++a)
            for (int c = a + 1 ; c < size ; ++c)
                b.add_edge(order[a], order[c]);
    }
    return std::move(b).build();
}

auto vtchroma::random_corpus_graph(int max_n, std::mt19937_64 & rng) -> Graph
{
    int n = uniform(rng, 1, max_n);
    if (uniform(rng, 0, 1) == 0)
        return random_graph(n, double(uniform(rng, 1, 9)) / 10.0, rng);
    return planted_clique_graph(n, uniform(rng, 1, 3), n, double(uniform(rng, 0, 2)) / 20.0, rng);
}

auto vtchroma::random_transversal_instance(int max_n, std::mt19937_64 & rng) -> std::pair<Graph, VertexPartition>
{
    int max_d = std::max(1, max_n / 4);
    int d = uniform(rng, 1, std::min(3, max_d));
    int parts = uniform(rng, 2, std::max(2, max_n / (2 * d)));
    if (parts * 2 * d > max_n)
        throw InvalidArgument("transversal instance does not fit in max_n vertices");

    std::vector<int> sizes(parts, 2 * d);
    int spare = max_n - parts * 2 * d;
    for (auto & s : sizes) {
        int extra = uniform(rng, 0, spare);
        s += extra;
        spare -= extra;
    }
    int n = std::accumulate(sizes.begin(), sizes.end(), 0);

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<VertexSet> blocks;
    int next = 0;
    for (int s : sizes) {
        VertexSet block;
        for (int i = 0 ; i < s ; ++i)
            block.set(order[next++]);
        blocks.push_back(block);
    }

    GraphBuilder b{n};
    std::vector<VertexSet> adjacent(n);
    int attempts = uniform(rng, 0, 2 * n * d);
    for (int i = 0 ; i < attempts ; ++i) {
        int u = uniform(rng, 0, n - 1), v = uniform(rng, 0, n - 1);
        if (u == v || adjacent[u].test(v) || adjacent[u].count() == d || adjacent[v].count() == d)
            continue;
        b.add_edge(u, v);
        adjacent[u].set(v);
        adjacent[v].set(u);
    }
    return {std::move(b).build(), VertexPartition(n, std::move(blocks))};
}

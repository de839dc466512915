#include "oracles.hpp"

#include <vtchroma/cliques.hpp>
#include <vtchroma/error.hpp>
#include <vtchroma/generators.hpp>
#include <vtchroma/random.hpp>

#include <doctest.h>

using namespace vtchroma;

namespace
{
    auto prism() -> Graph
    {
        return Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
    }

    auto as_set(const CliqueCollection & c) -> std::set<VertexSet>
    {
        return {c.cliques.begin(), c.cliques.end()};
    }

    auto maximum_by_brute_force(const Graph & g) -> std::vector<VertexSet>
    {
        int omega = oracle::clique_number(g);
        std::vector<VertexSet> result;
        for (auto & q : oracle::maximal_cliques(g))
            if (q.count() == omega)
                result.push_back(q);
        return result;
    }

    auto subset_of(const std::vector<VertexSet> & all, std::uint64_t mask) -> std::vector<VertexSet>
    {
        std::vector<VertexSet> q;
        for (std::size_t i = 0 ; i < all.size() ; ++i)
            if ((mask >> i) & 1)
                q.push_back(all[i]);
        return q;
    }

    /// Random graphs for the clique-structure sweeps; arbitrary G(n,p) rarely
    /// has omega near Delta, so half are planted overlapping cliques.
    auto corpus(int count, std::uint64_t seed) -> std::vector<Graph>
    {
        std::mt19937_64 rng(seed);
        std::vector<Graph> out;
        for (int i = 0 ; i < count ; ++i)
            out.push_back(random_corpus_graph(12, rng));
        return out;
    }
}

TEST_CASE("maximal_cliques examples")
{
    auto k4 = maximal_cliques(complete_graph(4));
    REQUIRE(k4.size() == 1);
    CHECK(k4.cliques[0].count() == 4);

    auto c5 = maximal_cliques(cycle_graph(5));
    CHECK(c5.size() == 5);
    for (auto & q : c5.cliques)
        CHECK(q.count() == 2);

    auto petersen = maximal_cliques(kneser(5, 2));
    CHECK(petersen.size() == 15);

    CHECK(maximal_cliques(Graph(0)).size() == 0);
    CHECK(maximal_cliques(Graph(3)).size() == 3);
}

TEST_CASE("maximal_cliques agrees with subset enumeration")
{
    std::mt19937_64 rng(41);
    for (int i = 0 ; i < 300 ; ++i) {
        auto g = oracle::random_graph(1 + int(rng() % 10), 0.1 * double(1 + rng() % 9), rng);
        CHECK(as_set(maximal_cliques(g)) == oracle::maximal_cliques(g));
        CHECK(clique_number(g) == oracle::clique_number(g));
        auto best = maximum_clique(g);
        CHECK(g.is_clique(best));
        CHECK(best.count() == oracle::clique_number(g));
        auto all = maximum_cliques(g);
        CHECK(all.all_maximum);
        auto expected = maximum_by_brute_force(g);
        CHECK(as_set(all) == std::set<VertexSet>(expected.begin(), expected.end()));
    }
}

TEST_CASE("maximal clique limit aborts")
{
    Budget tight;
    tight.clique_limit = 4;
    CHECK_THROWS_AS(maximal_cliques(cycle_graph(9), tight), BudgetExceeded);
}

TEST_CASE("maximum cliques examples")
{
    CHECK(clique_number(catlin(2, 2)) == 4);
    auto p = maximum_cliques(prism());
    CHECK(clique_number(prism()) == 3);
    REQUIRE(p.size() == 2);
    CHECK_FALSE(p.cliques[0].intersects(p.cliques[1]));
    CHECK(clique_number(kneser(5, 2)) == 2);
}

TEST_CASE("clique graph")
{
    auto prism_x = build_clique_graph(maximum_cliques(prism()));
    CHECK(prism_x.cliques.size() == 2);
    CHECK(prism_x.is_edgeless());
    CHECK(prism_x.components.size() == 2);

    auto b = build_clique_graph(maximum_cliques(blow_up(cycle_graph(5), 2)));
    REQUIRE(b.cliques.size() == 5);
    CHECK(b.edge_count() == 5);
    CHECK(b.components.size() == 1);
    for (auto & nbrs : b.adjacent)
        CHECK(nbrs.size() == 2);

    std::vector<VertexSet> one{VertexSet{0, 1, 2}};
    auto single = build_clique_graph(one);
    CHECK(single.edge_count() == 0);
    CHECK(single.components.size() == 1);

    std::mt19937_64 rng(8);
    for (int i = 0 ; i < 100 ; ++i) {
        auto g = random_corpus_graph(10, rng);
        auto x = build_clique_graph(maximal_cliques(g));
        for (std::size_t a = 0 ; a < x.cliques.size() ; ++a) {
            std::size_t degree = 0;
            for (std::size_t c = 0 ; c < x.cliques.size() ; ++c)
                if (a != c && x.cliques[a].intersects(x.cliques[c]))
                    ++degree;
            CHECK(x.adjacent[a].size() == degree);
        }
    }
}

TEST_CASE("hajnal examples")
{
    auto k = complete_graph(5);
    std::vector<VertexSet> whole{k.vertices()};
    auto r = hajnal_check(k, whole);
    CHECK(r.union_size == 5);
    CHECK(r.intersection_size == 5);
    CHECK(r.holds);

    auto p = maximum_cliques(prism());
    auto rp = hajnal_check(prism(), p.cliques);
    CHECK(rp.union_size == 6);
    CHECK(rp.intersection_size == 0);
    CHECK(rp.holds);

    auto b = blow_up(cycle_graph(5), 2);
    auto rb = hajnal_check(b, maximum_cliques(b).cliques);
    CHECK(rb.union_size == 10);
    CHECK(rb.intersection_size == 0);
    CHECK(rb.holds);

    std::vector<VertexSet> small{VertexSet{0, 1}};
    CHECK_THROWS_AS(hajnal_check(prism(), small), InvalidArgument);
}

TEST_CASE("hajnal holds on every subset of maximum cliques")
{
    int subsets = 0;
    for (auto & g : corpus(400, 101)) {
        auto all = maximum_by_brute_force(g);
        int omega = oracle::clique_number(g);
        std::uint64_t limit = std::min<std::uint64_t>(std::uint64_t{1} << std::min<std::size_t>(all.size(), 12), 4096);
        for (std::uint64_t mask = 1 ; mask < limit ; ++mask) {
            auto q = subset_of(all, mask);
            VertexSet u, in = q[0];
            for (auto & c : q) {
                u |= c;
                in &= c;
            }
            auto r = hajnal_check(g, q);
            CHECK(r.union_size == u.count());
            CHECK(r.intersection_size == in.count());
            CHECK(r.holds);
            CHECK(u.count() + in.count() >= 2 * omega);
            ++subsets;
        }
    }
    CHECK(subsets > 400);
}

TEST_CASE("kostochka examples")
{
    auto p = prism();
    auto x = build_clique_graph(maximum_cliques(p));
    auto tri = kostochka_common_vertex(p, x.component_cliques(0));
    CHECK(tri == VertexSet{0, 1, 2});

    // Two 4-cliques sharing three vertices: Delta = 4, omega = 4.
    auto g = Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}, {3, 4}});
    CHECK(g.max_degree() == 4);
    auto q = maximum_cliques(g);
    REQUIRE(q.size() == 2);
    CHECK(kostochka_common_vertex(g, q.cliques) == VertexSet{1, 2, 3});

    auto c5 = cycle_graph(5);
    CHECK_THROWS_AS(kostochka_common_vertex(c5, maximum_cliques(c5).cliques), InvalidArgument);
}

TEST_CASE("kostochka and cek sweep")
{
    int strict = 0, borderline = 0;
    for (auto & g : corpus(1500, 202)) {
        int omega = oracle::clique_number(g);
        int delta = g.max_degree();
        if (! omega_at_least_two_thirds(omega, delta))
            continue;
        auto x = build_clique_graph(maximum_cliques(g));
        for (std::size_t c = 0 ; c < x.components.size() ; ++c) {
            auto component = x.component_cliques(c);
            VertexSet in = component[0];
            for (auto & q : component)
                in &= q;
            ClusterClassification k;
            CHECK_NOTHROW(k = cek_classify(g, component));
            if (omega_above_two_thirds(omega, delta)) {
                CHECK_FALSE(in.empty());
                CHECK(kostochka_common_vertex(g, component) == in);
                CHECK(std::holds_alternative<StarComponents>(k));
            }
        }
        (omega_above_two_thirds(omega, delta) ? strict : borderline) += 1;
    }
    CHECK(strict > 100);
    MESSAGE("strict graphs: " << strict << ", borderline graphs: " << borderline);
}

TEST_CASE("cek_classify examples")
{
    auto b = blow_up(cycle_graph(7), 3);
    auto q = maximum_cliques(b);
    auto k = cek_classify(b, q.cliques);
    REQUIRE(std::holds_alternative<CycleBlowup>(k));
    auto & cb = std::get<CycleBlowup>(k);
    CHECK(cb.cycle_length == 7);
    CHECK(cb.part_size == 3);
    for (std::size_t i = 0 ; i < q.cliques.size() ; ++i)
        for (std::size_t j = i + 1 ; j < q.cliques.size() ; ++j) {
            int s = (q.cliques[i] & q.cliques[j]).count();
            CHECK((s == 0 || s == 3));
        }
    CHECK(describe(k) == "CycleBlowup(7,3)");

    auto p = prism();
    auto x = build_clique_graph(maximum_cliques(p));
    auto star = cek_classify(p, x.component_cliques(1));
    CHECK(std::holds_alternative<StarComponents>(star));

    // A path of three 4-cliques: blocks {0,1},{2,3},{4,5},{6,7} in a row.
    auto path = blow_up(path_graph(4), 2);
    auto pq = maximum_cliques(path);
    CHECK(std::holds_alternative<OtherShape>(cek_classify(path, pq.cliques)));
}

TEST_CASE("vt_classify")
{
    auto e = vt_classify(prism());
    REQUIRE(std::holds_alternative<Edgeless>(e));
    auto & parts = std::get<Edgeless>(e).parts;
    CHECK(parts.size() == 2);
    CHECK((parts[0] | parts[1]) == prism().vertices());

    for (auto [m, s] : std::vector<std::pair<int, int>>{{5, 2}, {7, 3}, {5, 1}, {9, 2}}) {
        auto g = blow_up(cycle_graph(m), s);
        auto k = vt_classify(g);
        REQUIRE(std::holds_alternative<CycleBlowup>(k));
        auto & cb = std::get<CycleBlowup>(k);
        CHECK(cb.cycle_length == m);
        CHECK(cb.part_size == s);
        CHECK(is_isomorphism(g, blow_up(cycle_graph(m), s), cb.isomorphism));
    }

    CHECK(std::holds_alternative<Edgeless>(vt_classify(complete_graph(6))));
    CHECK_THROWS_AS(vt_classify(path_graph(3)), InvalidArgument);
    CHECK_THROWS_AS(vt_classify(disjoint_union(complete_graph(3), complete_graph(3))), InvalidArgument);
    CHECK_THROWS_AS(vt_classify(kneser(5, 2)), InvalidArgument);
}

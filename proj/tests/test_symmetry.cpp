#include "oracles.hpp"

#include <vtchroma/error.hpp>
#include <vtchroma/generators.hpp>
#include <vtchroma/symmetry.hpp>

#include <doctest.h>

using namespace vtchroma;

namespace
{
    auto orbit_lowest(const OrbitPartition & o) -> std::vector<int>
    {
        std::vector<int> low(o.orbit_of.size());
        auto orbits = o.orbits();
        for (auto & orbit : orbits)
            for (int v : orbit)
                low[v] = orbit.first();
        return low;
    }
}

TEST_CASE("automorphism_orbits examples")
{
    CHECK(automorphism_orbits(cycle_graph(5)).orbit_count == 1);

    auto p3 = automorphism_orbits(path_graph(3));
    CHECK(p3.orbit_count == 2);
    CHECK(p3.orbit_of[0] == p3.orbit_of[2]);
    CHECK(p3.orbit_of[0] != p3.orbit_of[1]);

    CHECK(automorphism_orbits(kneser(5, 2)).orbit_count == 1);
    CHECK(automorphism_orbits(Graph(4)).orbit_count == 1);
}

TEST_CASE("orbits agree with brute force")
{
    std::mt19937_64 rng(3);
    for (int i = 0 ; i < 120 ; ++i) {
        auto g = oracle::random_graph(1 + int(rng() % 8), i % 3 == 0 ? 0.2 : 0.5, rng);
        auto o = automorphism_orbits(g);
        CHECK(orbit_lowest(o) == oracle::orbits(g));
        for (int u = 0 ; u < g.size() ; ++u)
            for (int v = 0 ; v < g.size() ; ++v)
                if (o.orbit_of[u] == o.orbit_of[v])
                    CHECK(g.degree(u) == g.degree(v));
    }
}

TEST_CASE("is_vertex_transitive")
{
    auto c9 = circulant(9, {1, 3});
    auto r = is_vertex_transitive(c9);
    CHECK(r.transitive);
    REQUIRE(r.witnesses.size() == 9);
    for (int v = 0 ; v < 9 ; ++v) {
        CHECK(r.witnesses[v][0] == v);
        CHECK(is_automorphism(c9, r.witnesses[v]));
        CHECK(c9.relabelled(r.witnesses[v]) == c9);
    }

    CHECK_FALSE(is_vertex_transitive(join(complete_graph(11), cycle_graph(5))).transitive);
    CHECK(is_vertex_transitive(blow_up(cycle_graph(7), 3)).transitive);
    CHECK(is_vertex_transitive(kneser(5, 2)).transitive);
    CHECK(is_vertex_transitive(kneser(7, 3)).transitive);
    CHECK(is_vertex_transitive(complete_graph(1)).transitive);
    CHECK_THROWS_AS(is_vertex_transitive(Graph(0)), InvalidArgument);

    auto mixed = disjoint_union(cycle_graph(3), cycle_graph(4));
    CHECK(mixed.is_regular());
    CHECK_FALSE(is_vertex_transitive(mixed).transitive);
}

TEST_CASE("transitivity agrees with brute force")
{
    std::mt19937_64 rng(17);
    int regular = 0;
    for (int i = 0 ; i < 300 ; ++i) {
        auto g = oracle::random_graph(2 + int(rng() % 7), 0.5, rng);
        if (! g.is_regular())
            continue;
        ++regular;
        auto r = is_vertex_transitive(g);
        bool expected = std::ranges::all_of(oracle::orbits(g), [] (int low) { return low == 0; });
        CHECK(r.transitive == expected);
        if (r.transitive)
            for (auto & w : r.witnesses)
                CHECK(is_automorphism(g, w));
    }
    CHECK(regular > 5);
}

TEST_CASE("are_isomorphic")
{
    CHECK(are_isomorphic(cycle_graph(5), complement(cycle_graph(5))));
    CHECK_FALSE(are_isomorphic(cycle_graph(6), disjoint_union(complete_graph(3), complete_graph(3))));
    auto p = find_isomorphism(catlin(2, 2), blow_up(cycle_graph(5), 2));
    REQUIRE(p);
    CHECK(is_isomorphism(catlin(2, 2), blow_up(cycle_graph(5), 2), *p));
}

TEST_CASE("isomorphism under random relabelling")
{
    std::mt19937_64 rng(23);
    for (int i = 0 ; i < 200 ; ++i) {
        auto g = oracle::random_graph(1 + int(rng() % 10), 0.45, rng);
        auto h = oracle::shuffled(g, rng);
        auto p = find_isomorphism(g, h);
        REQUIRE(p);
        CHECK(is_isomorphism(g, h, *p));
    }
    for (int i = 0 ; i < 150 ; ++i) {
        int n = 1 + int(rng() % 7);
        auto g = oracle::random_graph(n, 0.5, rng);
        auto h = oracle::random_graph(n, 0.5, rng);
        CHECK(are_isomorphic(g, h) == oracle::isomorphic(g, h));
    }
}

TEST_CASE("search budget is reported, not guessed")
{
    Budget tiny;
    tiny.search_nodes = 3;
    CHECK_THROWS_AS(is_vertex_transitive(kneser(7, 3), tiny), BudgetExceeded);
}

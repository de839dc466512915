#include "oracles.hpp"

#include <vtchroma/cliques.hpp>
#include <vtchroma/error.hpp>
#include <vtchroma/generators.hpp>
#include <vtchroma/graph6.hpp>
#include <vtchroma/symmetry.hpp>

#include <doctest.h>

#include <sstream>

using namespace vtchroma;

namespace
{
    auto degrees(const Graph & g) -> std::vector<int>
    {
        std::vector<int> d;
        for (int v = 0 ; v < g.size() ; ++v)
            d.push_back(g.degree(v));
        return d;
    }
}

TEST_CASE("from_edges builds the stated adjacency")
{
    auto p3 = Graph::from_edges(3, {{0, 1}, {1, 2}});
    CHECK(degrees(p3) == std::vector<int>{1, 2, 1});
    CHECK(p3.edge_count() == 2);

    auto k1 = Graph::from_edges(1, {});
    CHECK(k1.size() == 1);
    CHECK(k1.edge_count() == 0);

    std::vector<Edge> ring;
    for (int i = 0 ; i < 5 ; ++i)
        ring.emplace_back(i, (i + 1) % 5);
    auto c5 = Graph::from_edges(5, ring);
    CHECK(c5.is_regular());
    CHECK(c5.max_degree() == 2);

    auto doubled = Graph::from_edges(3, {{0, 1}, {1, 0}, {0, 1}});
    CHECK(doubled.edge_count() == 1);

    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), InvalidArgument);
    CHECK_THROWS_AS(Graph::from_edges(3, {{1, 1}}), InvalidArgument);
    CHECK_THROWS_AS(Graph(VertexSet::capacity + 1), CapacityExceeded);
}

TEST_CASE("complement")
{
    CHECK(complement(complete_graph(4)).edge_count() == 0);
    CHECK(are_isomorphic(complement(cycle_graph(5)), cycle_graph(5)));

    std::mt19937_64 rng(11);
    for (int i = 0 ; i < 50 ; ++i) {
        auto g = oracle::random_graph(1 + int(rng() % 20), 0.4, rng);
        CHECK(complement(complement(g)) == g);
    }
}

TEST_CASE("join")
{
    auto wheel = join(complete_graph(1), cycle_graph(5));
    CHECK(wheel.size() == 6);
    CHECK(wheel.max_degree() == 5);
    CHECK(wheel.degree(0) == 5);

    auto h11 = join(complete_graph(11), cycle_graph(5));
    CHECK(h11.size() == 16);
    CHECK(h11.max_degree() == 15);
    CHECK(clique_number(h11) == 13);
    CHECK(h11.degree(11) == 13);

    auto g = cycle_graph(7);
    CHECK(join(Graph(0), g) == g);
}

TEST_CASE("line_graph")
{
    CHECK(line_graph(multicycle(5, 1)) == cycle_graph(5));

    auto l = line_graph(multicycle(5, 2));
    CHECK(l.size() == 10);
    CHECK(l.is_regular());
    CHECK(l.max_degree() == 5);

    for (int t : {2, 3})
        for (int k : {1, 2, 3})
            CHECK(are_isomorphic(line_graph(multicycle(2 * t + 1, k)), blow_up(cycle_graph(2 * t + 1), k)));

    CHECK_THROWS_AS(line_graph(Multigraph{3, {}}), InvalidArgument);
    CHECK_THROWS_AS(line_graph(Multigraph{3, {{0, 0}}}), InvalidArgument);
}

TEST_CASE("blow_up")
{
    CHECK(blow_up(cycle_graph(5), 1) == cycle_graph(5));

    auto b = blow_up(cycle_graph(5), 2);
    CHECK(b.size() == 10);
    CHECK(b.is_regular());
    CHECK(b.max_degree() == 5);
    CHECK(clique_number(b) == 4);

    auto b73 = blow_up(cycle_graph(7), 3);
    CHECK(b73.size() == 21);
    CHECK(b73.max_degree() == 8);
    CHECK(b73.is_regular());
    CHECK(clique_number(b73) == 6);

    std::mt19937_64 rng(5);
    for (int i = 0 ; i < 30 ; ++i) {
        auto g = oracle::random_graph(1 + int(rng() % 8), 0.5, rng);
        int m = 1 + int(rng() % 4);
        auto h = blow_up(g, m);
        h.validate();
        REQUIRE(h.size() == g.size() * m);
        for (int v = 0 ; v < h.size() ; ++v)
            CHECK(h.degree(v) == (m - 1) + m * g.degree(v / m));
    }

    CHECK_THROWS_AS(blow_up(cycle_graph(5), 0), InvalidArgument);
    CHECK_THROWS_AS(blow_up(cycle_graph(50), 3), CapacityExceeded);
}

TEST_CASE("circulant")
{
    CHECK(circulant(5, {1}) == cycle_graph(5));
    CHECK(circulant(7, {1, 2, 3}) == complete_graph(7));
    CHECK_THROWS_AS(circulant(7, {4}), InvalidArgument);
    CHECK_THROWS_AS(circulant(7, {0}), InvalidArgument);

    // Cubic on 10 vertices but not Petersen: 0-2-7-5 is a 4-cycle.
    auto c = circulant(10, {2, 5});
    CHECK(c.is_regular());
    CHECK(c.max_degree() == 3);
    CHECK_FALSE(are_isomorphic(c, kneser(5, 2)));

    for (auto & [n, gens] : std::vector<std::pair<int, std::vector<int>>>{{9, {1, 3}}, {10, {2, 5}}, {12, {1, 4}}, {8, {1, 2, 4}}})
        CHECK(is_vertex_transitive(circulant(n, gens)).transitive);
}

TEST_CASE("kneser")
{
    auto petersen = kneser(5, 2);
    CHECK(petersen.size() == 10);
    CHECK(petersen.is_regular());
    CHECK(petersen.max_degree() == 3);

    for (int k = 1 ; k <= 4 ; ++k) {
        auto m = kneser(2 * k, k);
        CHECK(m.is_regular());
        CHECK(m.max_degree() == 1);
    }

    auto k73 = kneser(7, 3);
    CHECK(k73.size() == 35);
    CHECK(k73.is_regular());
    CHECK(k73.max_degree() == 4);

    CHECK_THROWS_AS(kneser(5, 3), InvalidArgument);
}

TEST_CASE("catlin")
{
    CHECK(catlin(2, 1) == cycle_graph(5));

    auto g22 = catlin(2, 2);
    CHECK(g22.max_degree() == 5);
    CHECK(clique_number(g22) == 4);

    auto g33 = catlin(3, 3);
    CHECK(g33.size() == 21);
    CHECK(g33.max_degree() == 8);
    CHECK(clique_number(g33) == 6);

    CHECK(catlin(3, 2) == blow_up(cycle_graph(7), 2));

    CHECK_THROWS_AS(catlin(1, 2), InvalidArgument);
    CHECK_THROWS_AS(catlin(2, 0), InvalidArgument);
}

TEST_CASE("graph6 encoding")
{
    auto k1 = parse_graph6("@");
    CHECK(k1.size() == 1);
    CHECK(write_graph6(complete_graph(2)) == "A_");
    CHECK(parse_graph6("A_") == complete_graph(2));
    CHECK(write_graph6(Graph(0)) == "?");

    // Petersen graph in its usual nauty encoding.
    CHECK(are_isomorphic(parse_graph6("IheA@GUAo"), kneser(5, 2)));
    CHECK(parse_graph6(">>graph6<<A_\n") == complete_graph(2));

    for (auto & s : std::vector<std::string>{"@", "A_", "Bw", "DQc", "Dhc", "IheA@GUAo", "J" + std::string(10, '?'), "K" + std::string(11, '~')})
        CHECK(write_graph6(parse_graph6(s)) == s);

    std::mt19937_64 rng(99);
    for (int i = 0 ; i < 200 ; ++i) {
        auto g = oracle::random_graph(int(rng() % 21), 0.3 + 0.4 * double(rng() % 2), rng);
        CHECK(parse_graph6(write_graph6(g)) == g);
    }

    auto big = blow_up(cycle_graph(10), 10);
    auto text = write_graph6(big);
    CHECK(text[0] == '~');
    CHECK(parse_graph6(text) == big);
}

TEST_CASE("graph6 errors")
{
    CHECK_THROWS_AS(parse_graph6(""), ParseError);
    CHECK_THROWS_AS(parse_graph6("A"), ParseError);
    CHECK_THROWS_AS(parse_graph6("A_?"), ParseError);
    CHECK_THROWS_AS(parse_graph6("A "), ParseError);
    CHECK_THROWS_AS(parse_graph6("A`"), ParseError);
    CHECK_THROWS_AS(parse_graph6("~?B~"), CapacityExceeded);

    std::istringstream in("# comment\nA_\n\n@\nA!\n");
    try {
        read_graph6_stream(in);
        FAIL("expected a parse error");
    }
    catch (const ParseError & e) {
        CHECK(std::string(e.what()).find("line 5") != std::string::npos);
    }

    std::istringstream ok("# header\nA_\n@\n");
    auto lines = read_graph6_stream(ok);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0].line_number == 2);
    CHECK(lines[1].graph.size() == 1);
}

TEST_CASE("constructor outputs validate")
{
    std::vector<Graph> all{
        complete_graph(6), cycle_graph(9), path_graph(4), join(complete_graph(3), cycle_graph(5)),
        line_graph(multicycle(7, 3)), blow_up(kneser(5, 2), 3), circulant(12, {1, 5, 6}), kneser(7, 3),
        catlin(3, 2), cartesian_product(complete_graph(3), complete_graph(2)), complement(kneser(6, 2)),
        disjoint_union(cycle_graph(3), cycle_graph(4))};
    for (auto & g : all)
        CHECK_NOTHROW(g.validate());
}

TEST_CASE("graph helpers")
{
    auto g = disjoint_union(cycle_graph(3), path_graph(3));
    auto parts = g.components();
    REQUIRE(parts.size() == 2);
    CHECK(parts[0] == VertexSet{0, 1, 2});
    CHECK_FALSE(g.is_connected());
    CHECK(g.induced(VertexSet{3, 4, 5}) == path_graph(3));

    auto prism = cartesian_product(complete_graph(3), complete_graph(2));
    CHECK(prism.size() == 6);
    CHECK(prism.is_regular());
    CHECK(prism.max_degree() == 3);
}

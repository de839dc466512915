#include "oracles.hpp"

#include <vtchroma/cliques.hpp>
#include <vtchroma/coloring.hpp>
#include <vtchroma/error.hpp>
#include <vtchroma/fractional.hpp>
#include <vtchroma/generators.hpp>
#include <vtchroma/random.hpp>
#include <vtchroma/symmetry.hpp>

#include <doctest.h>

using namespace vtchroma;

namespace
{
    auto q(long p, long d) -> Rational
    {
        return make_rational(p, d);
    }

    auto grotzsch() -> Graph
    {
        return Graph::from_edges(11, {{0, 1}, {0, 3}, {0, 6}, {0, 8}, {1, 2}, {1, 5}, {1, 7}, {2, 4}, {2, 6}, {2, 9},
                {3, 4}, {3, 5}, {3, 9}, {4, 7}, {4, 8}, {5, 10}, {6, 10}, {7, 10}, {8, 10}, {9, 10}});
    }

    /// The LP value is optimal when both certificates verify and agree; the
    /// dual is checked against every independent set, not just maximal ones.
    auto check_certified(const Graph & g, const FractionalResult & r) -> void
    {
        CHECK(verify_primal(g, r.primal));
        auto all = oracle::all_independent_sets(g);
        CHECK(verify_dual(g, r.dual, all));
        CHECK(r.primal.value == r.value);
        CHECK(r.dual.value == r.value);
    }
}

TEST_CASE("independence_number")
{
    CHECK(independence_number(complete_graph(6)).independence_number == 1);
    CHECK(independence_number(cycle_graph(7)).independence_number == 3);
    auto p = independence_number(kneser(5, 2));
    CHECK(p.independence_number == 4);
    CHECK(kneser(5, 2).is_independent(p.witness));
    CHECK(p.witness.count() == 4);

    std::mt19937_64 rng(1);
    for (int i = 0 ; i < 200 ; ++i) {
        auto g = oracle::random_graph(1 + int(rng() % 12), 0.4, rng);
        auto r = independence_number(g);
        CHECK(r.independence_number == oracle::independence_number(g));
        CHECK(g.is_independent(r.witness));
    }
}

TEST_CASE("chromatic_number examples")
{
    CHECK(chromatic_number(cycle_graph(5)).chromatic_number == 3);
    CHECK(chromatic_number(kneser(5, 2)).chromatic_number == 3);
    CHECK(chromatic_number(catlin(2, 2)).chromatic_number == 5);
    CHECK(chromatic_number(grotzsch()).chromatic_number == 4);
    CHECK(chromatic_number(Graph(0)).chromatic_number == 0);
    CHECK(chromatic_number(Graph(3)).chromatic_number == 1);
    CHECK(chromatic_number(join(complete_graph(11), cycle_graph(5))).chromatic_number == 14);

    // Two colors never suffice for Petersen: the plain oracle agrees.
    std::vector<int> color(10, -1);
    CHECK_FALSE(oracle::colorable(kneser(5, 2), 2, color));
}

TEST_CASE("chromatic_number agrees with brute force")
{
    std::mt19937_64 rng(2);
    for (int i = 0 ; i < 250 ; ++i) {
        auto g = random_corpus_graph(10, rng);
        auto r = chromatic_number(g);
        CHECK(r.chromatic_number == oracle::chromatic_number(g));
        CHECK(is_proper(g, r.witness));
        CHECK(r.witness.colors == r.chromatic_number);
        for (int c = 0 ; c < r.witness.colors ; ++c)
            CHECK_FALSE(r.witness.class_of(c).empty());
        CHECK(is_proper(g, greedy_coloring(g)));
    }
}

TEST_CASE("chromatic budget")
{
    Budget tiny;
    tiny.search_nodes = 2;
    CHECK_THROWS_AS(chromatic_number(grotzsch(), tiny), BudgetExceeded);
}

TEST_CASE("fractional_chromatic examples")
{
    auto k4 = fractional_chromatic(complete_graph(4));
    CHECK(k4.value == 4);
    check_certified(complete_graph(4), k4);

    auto c5 = fractional_chromatic(cycle_graph(5));
    CHECK(c5.value == q(5, 2));
    check_certified(cycle_graph(5), c5);

    auto p = fractional_chromatic(kneser(5, 2));
    CHECK(p.value == q(5, 2));
    CHECK(to_string(p.value) == "5/2");
    check_certified(kneser(5, 2), p);

    // Value cross-checked with a floating-point LP solver (2.9).
    auto gr = fractional_chromatic(grotzsch());
    CHECK(gr.value == q(29, 10));
    check_certified(grotzsch(), gr);

    CHECK(fractional_chromatic(cycle_graph(7)).value == q(7, 3));
    CHECK(fractional_chromatic(Graph(1)).value == 1);
    CHECK(to_string(fractional_chromatic(Graph(1)).value) == "1/1");
}

TEST_CASE("fractional_chromatic certificates on random graphs")
{
    std::mt19937_64 rng(7);
    for (int i = 0 ; i < 150 ; ++i) {
        auto g = random_corpus_graph(11, rng);
        auto r = fractional_chromatic(g);
        check_certified(g, r);
        int omega = oracle::clique_number(g);
        int chi = oracle::chromatic_number(g);
        CHECK(Rational(omega) <= r.value);
        CHECK(r.value <= Rational(chi));
        CHECK(r.value * oracle::independence_number(g) >= g.size());
    }
}

TEST_CASE("fractional_chromatic_vt")
{
    CHECK(fractional_chromatic_vt(kneser(5, 2)) == q(5, 2));
    CHECK(fractional_chromatic_vt(blow_up(cycle_graph(5), 2)) == 5);
    CHECK(fractional_chromatic_vt(complete_graph(7)) == 7);
    CHECK_THROWS_AS(fractional_chromatic_vt(path_graph(3)), InvalidArgument);

    for (auto & g : {cycle_graph(9), circulant(10, {1, 3}), circulant(12, {1, 4}), circulant(11, {1, 2, 4}),
             blow_up(cycle_graph(5), 2), kneser(6, 2), cartesian_product(cycle_graph(5), complete_graph(2))}) {
        REQUIRE(is_vertex_transitive(g).transitive);
        CHECK(fractional_chromatic(g).value == fractional_chromatic_vt(g));
    }
}

TEST_CASE("fractional column budget")
{
    Budget tiny;
    tiny.lp_columns = 3;
    CHECK_THROWS_AS(fractional_chromatic(cycle_graph(7), tiny), BudgetExceeded);
}

TEST_CASE("maximal_independent_sets agree with brute force")
{
    std::mt19937_64 rng(9);
    for (int i = 0 ; i < 100 ; ++i) {
        auto g = oracle::random_graph(1 + int(rng() % 10), 0.5, rng);
        auto mis = maximal_independent_sets(g);
        CHECK(std::set<VertexSet>(mis.begin(), mis.end()) == oracle::maximal_cliques(complement(g)));
    }
}

#pragma once

#include <vtchroma/budget.hpp>
#include <vtchroma/graph.hpp>
#include <vtchroma/rational.hpp>

#include <span>
#include <utility>
#include <vector>

namespace vtchroma
{
    /// Nonnegative weights on independent sets covering every vertex at least once.
    struct FractionalCertificate
    {
        std::vector<std::pair<VertexSet, Rational>> sets;
        Rational value;
    };

    /// Nonnegative vertex weights with total at most 1 on every independent set.
    struct FractionalClique
    {
        std::vector<Rational> weight;
        Rational value;
    };

    struct FractionalResult
    {
        Rational value;
        FractionalCertificate primal;
        FractionalClique dual;
        /// Maximal independent sets offered to the LP.
        std::size_t columns = 0;
        std::size_t pivots = 0;
    };

    /// Exact fractional chromatic number: the covering LP over all maximal
    /// independent sets, solved by rational revised simplex. Raises
    /// BudgetExceeded when there are more than budget.lp_columns sets.
    auto fractional_chromatic(const Graph & g, const Budget & budget = {}) -> FractionalResult;

    /// n / alpha for a vertex-transitive g; InvalidArgument otherwise.
    auto fractional_chromatic_vt(const Graph & g, const Budget & budget = {}) -> Rational;

    /// Checks a primal certificate: sets independent, weights nonnegative,
    /// every vertex covered with total weight >= 1, value equal to the sum.
    auto verify_primal(const Graph & g, const FractionalCertificate & c) -> bool;

    /// Checks a dual certificate against every given independent set.
    auto verify_dual(const Graph & g, const FractionalClique & c, std::span<const VertexSet> independent_sets) -> bool;
}

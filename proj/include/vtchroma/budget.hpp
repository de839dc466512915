#pragma once

#include <cstdint>
#include <string>

namespace vtchroma
{
    /// Limits for the exact searches. Exceeding one raises BudgetExceeded.
    struct Budget
    {
        /// Backtracking nodes per individual search.
        std::uint64_t search_nodes = 200'000'000;
        /// Cliques (or independent sets) collected by one enumeration.
        std::uint64_t clique_limit = 2'000'000;
        /// Maximal independent sets admitted as LP columns.
        std::uint64_t lp_columns = 50'000;
        /// Largest padded vertex count for exhaustive strong-coloring checks.
        int strong_padded_limit = 12;
    };

    /// Overrides fields from a spec such as "nodes=1000,cliques=50,lp=100,strong=9".
    /// A bare integer sets the node limit. Throws InvalidArgument on a bad spec.
    auto parse_budget(const std::string & spec, Budget base = {}) -> Budget;
}

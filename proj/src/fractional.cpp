#include <vtchroma/fractional.hpp>
#include <vtchroma/coloring.hpp>
#include <vtchroma/error.hpp>
#include <vtchroma/symmetry.hpp>

#include <algorithm>
#include <optional>

using namespace vtchroma;

namespace
{
    /// Dual simplex for
    ///     min sum_j x_j  subject to  sum_{j : v in I_j} x_j >= 1 for each vertex v,  x >= 0.
    /// Rows are vertices. Columns are the independent sets, then one surplus
    /// column -e_v per row. The all-surplus basis is dual feasible (every
    /// reduced cost is 1), so the method needs no phase 1.
    class CoveringSimplex
    {
        public:
            CoveringSimplex(int rows, std::span<const VertexSet> sets) :
                _rows(rows), _sets(sets), _structural(int(sets.size())),
                _inverse(rows, std::vector<Rational>(rows)), _values(rows, Rational(-1)), _basis(rows)
            {
                for (int i = 0 ; i < rows ; ++i) {
                    _inverse[i][i] = -1;
                    _basis[i] = surplus(i);
                }
            }

            auto solve() -> void
            {
                int degenerate_streak = 0;
                bool bland = false;
                std::vector<bool> basic(_structural + _rows, false);
                for (int q : _basis)
                    basic[q] = true;

                while (true) {
                    // Leaving row: most negative basic value, or lowest basic index under Bland.
                    int row = -1;
                    for (int i = 0 ; i < _rows ; ++i) {
                        if (_values[i] >= 0)
                            continue;
                        if (row < 0 || (bland ? _basis[i] < _basis[row] : _values[i] < _values[row]))
                            row = i;
                    }
                    if (row < 0)
                        return;

                    auto y = duals();
                    std::optional<int> entering;
                    Rational best_ratio, best_alpha;
                    for (int q = 0 ; q < _structural + _rows ; ++q) {
                        if (basic[q])
                            continue;
                        Rational alpha = row_entry(row, q);
                        if (alpha >= 0)
                            continue;
                        Rational ratio = reduced_cost(q, y) / -alpha;
                        if (! entering || ratio < best_ratio) {
                            entering = q;
                            best_ratio = ratio;
                        }
                    }
                    if (! entering)
                        throw Error("covering LP infeasible; some vertex lies in no independent set");

                    // Ties in the ratio test can cycle; Bland's rule cannot.
                    if (best_ratio == 0) {
                        if (++degenerate_streak > 2 * _rows)
                            bland = true;
                    }
                    else
                        degenerate_streak = 0;

                    basic[_basis[row]] = false;
                    basic[*entering] = true;
                    pivot(row, *entering, direction(*entering));
                }
            }

            auto duals() const -> std::vector<Rational>
            {
                std::vector<Rational> y(_rows);
                for (int i = 0 ; i < _rows ; ++i) {
                    if (_basis[i] >= _structural)
                        continue;
                    for (int v = 0 ; v < _rows ; ++v)
                        y[v] += _inverse[i][v];
                }
                return y;
            }

            auto primal() const -> std::vector<std::pair<int, Rational>>
            {
                std::vector<std::pair<int, Rational>> result;
                for (int i = 0 ; i < _rows ; ++i)
                    if (_basis[i] < _structural && _values[i] != 0)
                        result.emplace_back(_basis[i], _values[i]);
                std::sort(result.begin(), result.end(), [] (const auto & a, const auto & b) { return a.first < b.first; });
                return result;
            }

            auto pivots() const -> std::size_t { return _pivots; }

        private:
            auto surplus(int k) const -> int { return _structural + k; }

            /// Row `row` of inverse * column q
            auto row_entry(int row, int q) const -> Rational
            {
                if (q >= _structural)
                    return -_inverse[row][q - _structural];
                Rational a;
                for (int v : _sets[q])
                    a += _inverse[row][v];
                return a;
            }

            /// inverse * column q
            auto direction(int q) const -> std::vector<Rational>
            {
                std::vector<Rational> d(_rows);
                for (int i = 0 ; i < _rows ; ++i)
                    d[i] = row_entry(i, q);
                return d;
            }

            auto reduced_cost(int q, const std::vector<Rational> & y) const -> Rational
            {
                if (q >= _structural)
                    return y[q - _structural];
                Rational r = 1;
                for (int v : _sets[q])
                    r -= y[v];
                return r;
            }

            auto pivot(int row, int q, const std::vector<Rational> & d) -> void
            {
                Rational p = d[row];
                for (int v = 0 ; v < _rows ; ++v)
                    _inverse[row][v] /= p;
                _values[row] /= p;
                for (int i = 0 ; i < _rows ; ++i) {
                    if (i == row || d[i] == 0)
                        continue;
                    Rational f = d[i];
                    for (int v = 0 ; v < _rows ; ++v)
                        _inverse[i][v] -= f * _inverse[row][v];
                    _values[i] -= f * _values[row];
                }
                _basis[row] = q;
                ++_pivots;
            }

            int _rows;
            std::span<const VertexSet> _sets;
            int _structural;
            std::vector<std::vector<Rational>> _inverse;
            std::vector<Rational> _values;
            std::vector<int> _basis;
            std::size_t _pivots = 0;
    };
}

auto vtchroma::fractional_chromatic(const Graph & g, const Budget & budget) -> FractionalResult
{
    int n = g.size();
    if (n == 0)
        throw InvalidArgument("fractional chromatic number of the empty graph");

    Budget enumeration = budget;
    enumeration.clique_limit = std::min(budget.clique_limit, budget.lp_columns);
    auto sets = maximal_independent_sets(g, enumeration);

    CoveringSimplex lp(n, sets);
    lp.solve();

    FractionalResult result;
    result.columns = sets.size();
    result.pivots = lp.pivots();
    for (auto & [j, x] : lp.primal()) {
        result.primal.sets.emplace_back(sets[j], x);
        result.primal.value += x;
    }
    result.dual.weight = lp.duals();
    for (auto & y : result.dual.weight)
        result.dual.value += y;

    if (result.primal.value != result.dual.value)
        throw Error("simplex terminated with a duality gap");
    if (! verify_primal(g, result.primal) || ! verify_dual(g, result.dual, sets))
        throw Error("simplex produced an invalid certificate");
    result.value = result.primal.value;
    return result;
}

auto vtchroma::fractional_chromatic_vt(const Graph & g, const Budget & budget) -> Rational
{
    if (g.size() == 0)
        throw InvalidArgument("fractional chromatic number of the empty graph");
    if (! is_vertex_transitive(g, budget).transitive)
        throw InvalidArgument("n / alpha formula needs a vertex-transitive graph");
    return make_rational(g.size(), independence_number(g, budget).independence_number);
}

auto vtchroma::verify_primal(const Graph & g, const FractionalCertificate & c) -> bool
{
    std::vector<Rational> cover(g.size());
    Rational total;
    for (auto & [set, weight] : c.sets) {
        if (weight < 0 || ! g.is_independent(set) || ! set.is_subset_of(g.vertices()))
            return false;
        for (int v : set)
            cover[v] += weight;
        total += weight;
    }
    if (total != c.value)
        return false;
    return std::all_of(cover.begin(), cover.end(), [] (const Rational & x) { return x >= 1; });
}

auto vtchroma::verify_dual(const Graph & g, const FractionalClique & c, std::span<const VertexSet> independent_sets) -> bool
{
    if (int(c.weight.size()) != g.size())
        return false;
    Rational total;
    for (auto & w : c.weight) {
        if (w < 0)
            return false;
        total += w;
    }
    if (total != c.value)
        return false;
    for (auto & set : independent_sets) {
        Rational load;
        for (int v : set)
            load += c.weight[v];
        if (load > 1)
            return false;
    }
    return true;
}

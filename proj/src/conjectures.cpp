#include <vtchroma/conjectures.hpp>
#include <vtchroma/cliques.hpp>
#include <vtchroma/coloring.hpp>
#include <vtchroma/error.hpp>
#include <vtchroma/fractional.hpp>
#include <vtchroma/generators.hpp>
#include <vtchroma/graph6.hpp>
#include <vtchroma/strong.hpp>
#include <vtchroma/symmetry.hpp>

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <fstream>
#include <limits>
#include <mutex>
#include <numeric>
#include <random>
#include <set>
#include <thread>
#include <tuple>

using namespace vtchroma;

auto vtchroma::to_string(StatementKind k) -> std::string
{
    return k == StatementKind::Proved ? "proved" : "conjecture";
}

auto vtchroma::to_string(Verdict v) -> std::string
{
    switch (v) {
        case Verdict::Holds: return "holds";
        case Verdict::Violated: return "violated";
        case Verdict::OutOfHypothesis: return "out_of_hypothesis";
        case Verdict::Undecided: return "undecided";
        case Verdict::NotChecked: return "not_checked";
    }
    return "unknown";
}

auto GraphRecord::check(const std::string & name) const -> const ConjectureReport *
{
    for (auto & c : checks)
        if (c.name == name)
            return &c;
    return nullptr;
}

namespace
{
    auto integer(long long v) -> std::string
    {
        return std::to_string(v) + "/1";
    }

    auto max_rational(const Rational & a, const Rational & b) -> Rational
    {
        return a < b ? b : a;
    }

    auto report(std::string name, StatementKind kind, bool in_hypothesis) -> ConjectureReport
    {
        ConjectureReport r;
        r.name = std::move(name);
        r.kind = kind;
        r.in_hypothesis = in_hypothesis;
        return r;
    }

    auto settle(ConjectureReport & r, bool holds, bool tight) -> void
    {
        r.holds = holds;
        r.tight = tight;
        if (! r.in_hypothesis)
            r.status = Verdict::OutOfHypothesis;
        else
            r.status = holds ? Verdict::Holds : Verdict::Violated;
    }

    auto out_of_hypothesis(ConjectureReport & r, std::string why) -> void
    {
        r.in_hypothesis = false;
        r.status = Verdict::OutOfHypothesis;
        r.notes = std::move(why);
    }

    auto undecided(ConjectureReport & r, std::string why) -> void
    {
        r.status = Verdict::Undecided;
        r.notes = std::move(why);
    }

    auto append_note(ConjectureReport & r, const std::string & note) -> void
    {
        r.notes += r.notes.empty() ? note : "; " + note;
    }

    /// Vertex transitivity is the hypothesis of most statements; when it is
    /// unknown the verdict cannot be placed and is reported undecided.
    auto vt_hypothesis(const GraphProfile & p, ConjectureReport & r) -> bool
    {
        if (! p.vertex_transitive) {
            undecided(r, "vertex transitivity undecided");
            return false;
        }
        r.in_hypothesis = *p.vertex_transitive;
        if (! r.in_hypothesis)
            r.notes = "not vertex-transitive";
        return true;
    }

    struct ClusterResult
    {
        std::string description;
        std::vector<ClusterClassification> components;
        /// Set when a classifier's structural claim failed.
        std::string falsified;
    };

    /// Everything computed once per graph and shared by the checks.
    struct Context
    {
        const Graph & g;
        AnalysisOptions options;
        GraphProfile p;
        std::optional<CliqueCollection> maximum;
        std::optional<CliqueGraph> x;
        std::optional<Rational> lp;
        std::optional<Rational> n_over_alpha;
        std::optional<ClusterClassification> vt_shape;
        std::string vt_shape_error;
        bool vt_shape_falsified = false;

        auto omega() const -> int { return *p.omega; }
        auto at_least() const -> bool { return omega_at_least_two_thirds(omega(), p.delta); }
        auto above() const -> bool { return omega_above_two_thirds(omega(), p.delta); }

        /// Maximum cliques partition V: X_Q edgeless and covering.
        auto clique_partition() const -> bool
        {
            return x && x->is_edgeless() && maximum->union_of() == g.vertices();
        }
    };

    template <typename F>
    auto attempt(GraphProfile & p, const std::string & what, F && f) -> bool
    {
        try {
            f();
            return true;
        }
        catch (const BudgetExceeded & e) {
            p.undecided.push_back(what + ": " + e.what());
            return false;
        }
    }

    auto classify_components(Context & c) -> ClusterResult
    {
        ClusterResult out;
        try {
            std::vector<VertexSet> commons;
            std::vector<std::string> shapes;
            bool all_star = true;
            for (std::size_t i = 0 ; i < c.x->components.size() ; ++i) {
                auto shape = cek_classify(c.g, c.x->component_cliques(i), c.omega());
                if (auto s = std::get_if<StarComponents>(&shape))
                    commons.insert(commons.end(), s->common.begin(), s->common.end());
                else
                    all_star = false;
                shapes.push_back(describe(shape));
                out.components.push_back(std::move(shape));
            }
            if (all_star)
                out.description = describe(StarComponents{commons});
            else if (shapes.size() == 1)
                out.description = shapes[0];
            else {
                out.description = "Components(";
                for (std::size_t i = 0 ; i < shapes.size() ; ++i)
                    out.description += (i ? ";" : "") + shapes[i];
                out.description += ")";
            }
        }
        catch (const LemmaFalsified & e) {
            out.falsified = e.what();
            out.description = "Falsified(" + out.falsified + ")";
        }
        return out;
    }

    auto build_context(const Graph & g, const AnalysisOptions & options, std::string label) -> Context
    {
        if (g.size() == 0)
            throw InvalidArgument("cannot analyze the empty graph");

        Context c{g, options, {}, {}, {}, {}, {}, {}, {}, {}};
        auto & p = c.p;
        auto & budget = c.options.budget;
        p.graph6 = write_graph6(g);
        p.label = std::move(label);
        p.n = g.size();
        p.delta = g.max_degree();
        p.connected = g.is_connected();

        attempt(p, "omega", [&] {
                c.maximum = maximum_cliques(g, budget);
                c.x = build_clique_graph(*c.maximum);
                p.omega = c.maximum->cliques.front().count();
            });
        if (! p.omega)
            attempt(p, "omega", [&] { p.omega = clique_number(g, budget); });

        attempt(p, "vertex_transitive", [&] { p.vertex_transitive = is_vertex_transitive(g, budget).transitive; });
        attempt(p, "alpha", [&] { p.alpha = independence_number(g, budget).independence_number; });
        attempt(p, "chi", [&] { p.chi = chromatic_number(g, budget).chromatic_number; });
        attempt(p, "chi_f", [&] { c.lp = fractional_chromatic(g, budget).value; });
        if (p.alpha)
            c.n_over_alpha = make_rational(p.n, *p.alpha);
        if (c.lp) {
            p.chi_f = c.lp;
            p.chi_f_source = "lp";
        }
        else if (p.vertex_transitive.value_or(false) && c.n_over_alpha) {
            p.chi_f = c.n_over_alpha;
            p.chi_f_source = "n/alpha";
        }

        if (! p.omega || ! c.x) {
            p.cluster_class = "undecided";
            return c;
        }
        if (! c.at_least()) {
            p.cluster_class = c.x->is_edgeless() ? "Edgeless" : "Other(omega below 2(Delta+1)/3)";
            return c;
        }
        if (p.vertex_transitive.value_or(false)) {
            try {
                if (p.connected)
                    c.vt_shape = vt_classify(g, *c.maximum);
                else
                    // Components of a vertex-transitive graph are isomorphic
                    // and vertex-transitive, so the first one speaks for all.
                    c.vt_shape = vt_classify(g.induced(g.components().front()), budget);
                p.cluster_class = describe(*c.vt_shape);
            }
            catch (const LemmaFalsified & e) {
                c.vt_shape_falsified = true;
                c.vt_shape_error = e.what();
                p.cluster_class = "Falsified(" + c.vt_shape_error + ")";
            }
            catch (const BudgetExceeded & e) {
                c.vt_shape_error = e.what();
                p.undecided.push_back(std::string("cluster_class: ") + e.what());
                p.cluster_class = "undecided";
            }
        }
        else
            p.cluster_class = classify_components(c).description;
        return c;
    }

    auto fnv1a(const std::string & s) -> std::uint64_t
    {
        std::uint64_t h = 1469598103934665603ull;
        for (unsigned char ch : s) {
            h ^= ch;
            h *= 1099511628211ull;
        }
        return h;
    }

    /// Nonempty subsets of 0..m-1: every one when they fit in cap, otherwise
    /// all singletons and pairs followed by seeded random subsets.
    auto hajnal_subsets(std::size_t m, std::uint64_t cap, std::uint64_t seed) -> std::vector<std::vector<int>>
    {
        std::vector<std::vector<int>> out;
        if (m < 63 && (std::uint64_t{1} << m) - 1 <= cap) {
            for (std::uint64_t mask = 1 ; mask < (std::uint64_t{1} << m) ; ++mask) {
                std::vector<int> s;
                for (std::size_t i = 0 ; i < m ; ++i)
                    if ((mask >> i) & 1)
                        s.push_back(int(i));
                out.push_back(std::move(s));
            }
            return out;
        }
        for (std::size_t i = 0 ; i < m && out.size() < cap ; ++i)
            out.push_back({int(i)});
        for (std::size_t i = 0 ; i < m && out.size() < cap ; ++i)
            for (std::size_t j = i + 1 ; j < m && out.size() < cap ; ++j)
                out.push_back({int(i), int(j)});
        std::mt19937_64 rng(seed);
        std::bernoulli_distribution coin(0.5);
        while (out.size() < cap) {
            std::vector<int> s;
            for (std::size_t i = 0 ; i < m ; ++i)
                if (coin(rng))
                    s.push_back(int(i));
            if (s.size() > 2)
                out.push_back(std::move(s));
        }
        return out;
    }

    auto check_hajnal(const Context & c) -> ConjectureReport
    {
        auto r = report("hajnal", StatementKind::Proved, true);
        if (! c.maximum) {
            undecided(r, "maximum cliques undecided");
            return r;
        }
        auto & q = c.maximum->cliques;
        auto subsets = hajnal_subsets(q.size(), c.options.hajnal_subset_cap, c.options.seed ^ fnv1a(c.p.graph6));
        int least = std::numeric_limits<int>::max();
        bool holds = true;
        std::vector<VertexSet> chosen;
        for (auto & s : subsets) {
            chosen.clear();
            for (int i : s)
                chosen.push_back(q[i]);
            auto h = hajnal_check(c.g, chosen, c.omega());
            least = std::min(least, h.union_size + h.intersection_size);
            holds = holds && h.holds;
        }
        r.value = integer(least);
        r.bound = integer(2 * c.omega());
        settle(r, holds, least == 2 * c.omega());
        r.notes = std::to_string(subsets.size()) + " of the subsets of " + std::to_string(q.size()) + " maximum cliques";
        return r;
    }

    auto check_kostochka(const Context & c) -> ConjectureReport
    {
        auto r = report("kostochka", StatementKind::Proved, true);
        if (! c.x) {
            undecided(r, "maximum cliques undecided");
            return r;
        }
        if (! c.above()) {
            out_of_hypothesis(r, "3 omega <= 2 (Delta + 1)");
            return r;
        }
        int least = std::numeric_limits<int>::max();
        try {
            for (std::size_t i = 0 ; i < c.x->components.size() ; ++i)
                least = std::min(least, kostochka_common_vertex(c.g, c.x->component_cliques(i), c.omega()).count());
            r.value = integer(least);
            r.bound = integer(1);
            settle(r, true, least == 1);
        }
        catch (const LemmaFalsified & e) {
            settle(r, false, false);
            r.notes = e.what();
        }
        append_note(r, std::to_string(c.x->components.size()) + " components");
        return r;
    }

    auto check_cek(Context & c) -> ConjectureReport
    {
        auto r = report("cek", StatementKind::Proved, true);
        if (! c.x) {
            undecided(r, "maximum cliques undecided");
            return r;
        }
        if (! c.at_least()) {
            out_of_hypothesis(r, "3 omega < 2 (Delta + 1)");
            return r;
        }
        auto shapes = classify_components(c);
        settle(r, shapes.falsified.empty(), false);
        r.notes = shapes.falsified.empty() ? shapes.description : shapes.falsified;
        return r;
    }

    auto check_clustering(const Context & c) -> ConjectureReport
    {
        auto r = report("clustering", StatementKind::Proved, false);
        if (! c.x) {
            undecided(r, "maximum cliques undecided");
            return r;
        }
        if (! vt_hypothesis(c.p, r))
            return r;
        if (! r.in_hypothesis) {
            r.status = Verdict::OutOfHypothesis;
            return r;
        }
        if (! c.at_least()) {
            out_of_hypothesis(r, "3 omega < 2 (Delta + 1)");
            return r;
        }
        if (c.vt_shape) {
            bool ok = std::holds_alternative<Edgeless>(*c.vt_shape) || std::holds_alternative<CycleBlowup>(*c.vt_shape);
            settle(r, ok, false);
            r.notes = describe(*c.vt_shape);
        }
        else if (c.vt_shape_falsified) {
            settle(r, false, false);
            r.notes = c.vt_shape_error;
        }
        else
            undecided(r, c.vt_shape_error);
        return r;
    }

    auto check_alpha_floor(const Context & c) -> ConjectureReport
    {
        auto r = report("alpha_floor", StatementKind::Proved, false);
        if (! c.p.alpha) {
            undecided(r, "alpha undecided");
            return r;
        }
        if (! vt_hypothesis(c.p, r))
            return r;
        bool vt = r.in_hypothesis;
        int n = c.p.n, omega = c.omega(), alpha = *c.p.alpha;
        r.value = integer(alpha);
        r.bound = integer(n / omega);
        bool divides = n % omega == 0;
        r.in_hypothesis = vt && c.at_least();
        settle(r, alpha == n / omega && (! c.above() || divides), alpha == n / omega);
        if (! vt)
            r.notes = "not vertex-transitive";
        else if (! c.at_least())
            r.notes = "3 omega < 2 (Delta + 1)";
        else
            r.notes = divides ? "omega divides n" : "omega does not divide n";
        return r;
    }

    auto check_clique_transversal(const Context & c) -> ConjectureReport
    {
        auto r = report("clique_transversal", StatementKind::Proved, false);
        if (! c.x) {
            undecided(r, "maximum cliques undecided");
            return r;
        }
        if (! vt_hypothesis(c.p, r))
            return r;
        r.in_hypothesis = r.in_hypothesis && c.above();
        if (! c.clique_partition()) {
            r.status = Verdict::OutOfHypothesis;
            append_note(r, "maximum cliques do not partition V");
            if (r.in_hypothesis) {
                // Under the hypothesis the partition is itself a claim.
                settle(r, false, false);
            }
            return r;
        }

        auto & parts = c.maximum->cliques;
        std::vector<int> part_of(c.p.n);
        for (std::size_t i = 0 ; i < parts.size() ; ++i)
            for (int v : parts[i])
                part_of[v] = int(i);
        GraphBuilder b{c.p.n};
        for (auto [u, v] : c.g.edges())
            if (part_of[u] != part_of[v])
                b.add_edge(u, v);
        auto h = std::move(b).build();

        try {
            auto t = independent_transversal(h, VertexPartition(c.p.n, parts), c.options.budget);
            settle(r, bool(t), false);
        }
        catch (const BudgetExceeded & e) {
            undecided(r, e.what());
            return r;
        }
        bool haxell = c.omega() >= 2 * h.max_degree();
        if (! c.above())
            append_note(r, "3 omega <= 2 (Delta + 1)");
        append_note(r, "parts of size " + std::to_string(c.omega()) + ", Delta(H) = " + std::to_string(h.max_degree())
                + (haxell ? "" : ", below 2 Delta(H)"));
        return r;
    }

    auto check_chi_f_consistency(const Context & c) -> ConjectureReport
    {
        auto r = report("chi_f_consistency", StatementKind::Proved, false);
        if (! c.lp || ! c.n_over_alpha) {
            undecided(r, c.lp ? "alpha undecided" : "linear program over budget");
            return r;
        }
        if (! vt_hypothesis(c.p, r))
            return r;
        r.value = to_string(*c.lp);
        r.bound = to_string(*c.n_over_alpha);
        settle(r, *c.lp == *c.n_over_alpha, *c.lp == *c.n_over_alpha);
        return r;
    }

    auto check_strong_conjecture(const Context & c) -> ConjectureReport
    {
        auto r = report("strong_conjecture", StatementKind::Conjecture, false);
        if (! vt_hypothesis(c.p, r))
            return r;
        if (c.p.delta == 0) {
            out_of_hypothesis(r, "Delta = 0");
            return r;
        }
        int rr = 5 * c.p.delta / 2;
        int padded = rr * ((c.p.n + rr - 1) / rr);
        r.bound = integer(rr);
        if (padded > c.options.budget.strong_padded_limit) {
            r.status = Verdict::NotChecked;
            append_note(r, "padded size " + std::to_string(padded) + " exceeds exhaustive limit "
                    + std::to_string(c.options.budget.strong_padded_limit));
            return r;
        }
        try {
            auto s = strong_chromatic_number_exhaustive(c.g, rr, c.options.budget);
            settle(r, s.strongly_colorable, false);
            append_note(r, std::to_string(s.partitions_checked) + " partitions checked");
        }
        catch (const BudgetExceeded & e) {
            undecided(r, e.what());
        }
        return r;
    }

    /// Runs the clique padding reduction with r colors. The statement's
    /// strength depends on Delta of the stripped graph: at least 3 Delta - 1
    /// parts size is a theorem, at least 2 Delta a conjecture.
    auto check_reduction(const Context & c, std::string name, int r_colors, const std::string & requirement) -> ConjectureReport
    {
        auto r = report(std::move(name), StatementKind::Proved, false);
        if (! c.x) {
            undecided(r, "maximum cliques undecided");
            return r;
        }
        r.bound = integer(r_colors);
        if (! c.clique_partition()) {
            out_of_hypothesis(r, "maximum cliques do not partition V");
            return r;
        }
        if (r_colors < c.omega()) {
            out_of_hypothesis(r, requirement);
            return r;
        }
        if ((long long) r_colors * (long long) c.maximum->size() > VertexSet::capacity) {
            r.status = Verdict::NotChecked;
            r.notes = "padded graph exceeds capacity";
            return r;
        }

        // Delta of the stripped graph is known before padding: padding adds
        // no edges between different cliques.
        int outside = 0;
        for (auto & q : c.maximum->cliques)
            for (int v : q)
                outside = std::max(outside, (c.g.neighbors(v) - q).count());
        std::string strip_note = "Delta(G'') = " + std::to_string(outside);
        if (r_colors >= 3 * outside - 1)
            r.kind = StatementKind::Proved;
        else if (r_colors >= 2 * outside)
            r.kind = StatementKind::Conjecture;
        else {
            r.kind = StatementKind::Conjecture;
            out_of_hypothesis(r, strip_note + ", r below 2 Delta(G'')");
            return r;
        }
        r.in_hypothesis = true;
        try {
            auto result = clique_padding_reduction(c.g, c.maximum->cliques, r_colors, c.options.budget);
            if (result.stripped.max_degree() != outside)
                throw Error("stripped graph degree disagrees with the clique count");
            settle(r, result.coloring.has_value(), false);
            if (result.coloring) {
                std::set<int> used(result.coloring->color.begin(), result.coloring->color.end());
                r.value = integer((long long) used.size());
            }
        }
        catch (const BudgetExceeded & e) {
            undecided(r, e.what());
        }
        append_note(r, strip_note);
        return r;
    }

    auto all_checks(Context & c) -> std::vector<ConjectureReport>
    {
        auto & p = c.p;
        std::vector<ConjectureReport> checks{
            check_main_conjecture(p), check_borodin_kostochka(p), check_reed(p), check_fractional_theorem(p),
            check_independence_theorem(p), check_fajtlowicz(p)};
        if (! p.omega) {
            for (auto name : {"hajnal", "kostochka", "cek", "clustering", "alpha_floor", "clique_transversal"}) {
                auto r = report(name, StatementKind::Proved, false);
                undecided(r, "omega undecided");
                checks.push_back(r);
            }
        }
        else {
            checks.push_back(check_hajnal(c));
            checks.push_back(check_kostochka(c));
            checks.push_back(check_cek(c));
            checks.push_back(check_clustering(c));
            checks.push_back(check_alpha_floor(c));
            checks.push_back(check_clique_transversal(c));
        }
        checks.push_back(check_chi_f_consistency(c));
        checks.push_back(check_strong_conjecture(c));
        if (p.omega) {
            int main_bound = std::max(*p.omega, int(ceil_div(5 * p.delta + 3, 6)));
            checks.push_back(check_reduction(c, "padding_reduction", main_bound, "r below omega"));
            checks.push_back(check_reduction(c, "bk_reduction", p.delta - 1, "Delta - 1 < omega"));
        }
        else
            for (auto name : {"padding_reduction", "bk_reduction"}) {
                auto r = report(name, StatementKind::Proved, false);
                undecided(r, "omega undecided");
                checks.push_back(r);
            }
        return checks;
    }

    /// Common shape of the three chi-versus-integer-bound checks.
    auto chi_check(const GraphProfile & p, std::string name, StatementKind kind, long long bound) -> ConjectureReport
    {
        auto r = report(std::move(name), kind, false);
        r.bound = integer(bound);
        if (! p.chi) {
            undecided(r, "chi undecided");
            return r;
        }
        r.value = integer(*p.chi);
        if (! vt_hypothesis(p, r))
            return r;
        settle(r, *p.chi <= bound, *p.chi == bound);
        return r;
    }
}

auto vtchroma::check_main_conjecture(const GraphProfile & p) -> ConjectureReport
{
    if (! p.omega) {
        auto r = report("main_conjecture", StatementKind::Conjecture, false);
        undecided(r, "omega undecided");
        return r;
    }
    return chi_check(p, "main_conjecture", StatementKind::Conjecture, std::max<long long>(*p.omega, ceil_div(5 * p.delta + 3, 6)));
}

auto vtchroma::check_borodin_kostochka(const GraphProfile & p) -> ConjectureReport
{
    auto r = report("borodin_kostochka", StatementKind::Proved, false);
    if (! p.omega) {
        undecided(r, "omega undecided");
        return r;
    }
    r = chi_check(p, "borodin_kostochka", StatementKind::Proved, p.delta - 1);
    if (r.status == Verdict::Undecided)
        return r;
    std::vector<std::string> failed;
    if (! *p.vertex_transitive)
        failed.push_back("not vertex-transitive");
    if (p.delta < 13)
        failed.push_back("Delta < 13");
    if (*p.omega >= p.delta)
        failed.push_back("contains K_Delta");
    r.in_hypothesis = failed.empty();
    r.notes.clear();
    for (auto & f : failed)
        append_note(r, f);
    settle(r, *r.holds, r.tight);
    return r;
}

auto vtchroma::check_reed(const GraphProfile & p) -> ConjectureReport
{
    auto r = report("reed", StatementKind::Conjecture, true);
    if (! p.omega || ! p.chi) {
        undecided(r, p.omega ? "chi undecided" : "omega undecided");
        return r;
    }
    long long bound = ceil_div(*p.omega + p.delta + 1, 2);
    r.value = integer(*p.chi);
    r.bound = integer(bound);
    settle(r, *p.chi <= bound, *p.chi == bound);
    return r;
}

auto vtchroma::check_fractional_theorem(const GraphProfile & p) -> ConjectureReport
{
    auto r = report("fractional_theorem", StatementKind::Proved, false);
    if (! p.omega) {
        undecided(r, "omega undecided");
        return r;
    }
    Rational bound = max_rational(Rational(*p.omega), make_rational(5 * (p.delta + 1), 6));
    r.bound = to_string(bound);
    if (! p.chi_f) {
        undecided(r, "chi_f undecided");
        return r;
    }
    r.value = to_string(*p.chi_f);
    if (! vt_hypothesis(p, r))
        return r;
    settle(r, *p.chi_f <= bound, *p.chi_f == bound);
    return r;
}

auto vtchroma::check_independence_theorem(const GraphProfile & p) -> ConjectureReport
{
    auto r = report("independence_theorem", StatementKind::Proved, false);
    if (! p.omega) {
        undecided(r, "omega undecided");
        return r;
    }
    Rational bound = Rational(p.n) / max_rational(Rational(*p.omega), make_rational(5 * (p.delta + 1), 6));
    r.bound = to_string(bound);
    if (! p.alpha) {
        undecided(r, "alpha undecided");
        return r;
    }
    r.value = integer(*p.alpha);
    if (! vt_hypothesis(p, r))
        return r;
    settle(r, Rational(*p.alpha) >= bound, Rational(*p.alpha) == bound);
    return r;
}

auto vtchroma::check_fajtlowicz(const GraphProfile & p) -> ConjectureReport
{
    auto r = report("fajtlowicz", StatementKind::Proved, true);
    if (! p.omega || ! p.alpha) {
        undecided(r, p.omega ? "alpha undecided" : "omega undecided");
        return r;
    }
    Rational bound = make_rational(2 * p.n, *p.omega + p.delta + 1);
    r.value = integer(*p.alpha);
    r.bound = to_string(bound);
    settle(r, Rational(*p.alpha) >= bound, Rational(*p.alpha) == bound);
    return r;
}

auto vtchroma::profile_graph(const Graph & g, const Budget & budget, std::string label) -> GraphProfile
{
    AnalysisOptions options;
    options.budget = budget;
    return build_context(g, options, std::move(label)).p;
}

auto vtchroma::analyze(const Graph & g, const AnalysisOptions & options, std::string label) -> GraphRecord
{
    auto c = build_context(g, options, std::move(label));
    auto checks = all_checks(c);
    return GraphRecord{std::move(c.p), std::move(checks)};
}

auto vtchroma::check_main_conjecture(const Graph & g, const Budget & budget) -> ConjectureReport
{
    return check_main_conjecture(profile_graph(g, budget));
}

auto vtchroma::check_borodin_kostochka(const Graph & g, const Budget & budget) -> ConjectureReport
{
    return check_borodin_kostochka(profile_graph(g, budget));
}

auto vtchroma::check_reed(const Graph & g, const Budget & budget) -> ConjectureReport
{
    return check_reed(profile_graph(g, budget));
}

auto vtchroma::check_fractional_theorem(const Graph & g, const Budget & budget) -> ConjectureReport
{
    auto p = profile_graph(g, budget);
    if (p.vertex_transitive && ! *p.vertex_transitive)
        throw InvalidArgument("fractional bound is stated for vertex-transitive graphs");
    return check_fractional_theorem(p);
}

auto vtchroma::check_fajtlowicz(const Graph & g, const Budget & budget) -> ConjectureReport
{
    return check_fajtlowicz(profile_graph(g, budget));
}

auto vtchroma::check_catlin_formula(int t, int k, const Budget & budget) -> ConjectureReport
{
    auto g = catlin(t, k);
    auto r = report("catlin_formula", StatementKind::Proved, true);
    long long expected = 2 * k + ceil_div(k, t);
    r.bound = integer(expected);
    try {
        int chi = chromatic_number(g, budget).chromatic_number;
        int omega = clique_number(g, budget);
        int delta = g.max_degree();
        r.value = integer(chi);
        bool shape = delta == 3 * k - 1 && omega == 2 * k;
        settle(r, chi == expected && shape, chi == expected);
        r.notes = "Delta = " + std::to_string(delta) + ", omega = " + std::to_string(omega);
    }
    catch (const BudgetExceeded & e) {
        undecided(r, e.what());
    }
    return r;
}

auto vtchroma::circulant_generator_sets(int n, bool connected_only, const Budget & budget) -> std::vector<std::vector<int>>
{
    if (n < 1 || n > VertexSet::capacity)
        throw InvalidArgument("circulant order out of range");
    if (n == 1)
        return {{}};
    int half = n / 2;
    if (half > 30)
        throw InvalidArgument("circulant enumeration is limited to n <= 61");

    std::vector<int> units;
    for (int a = 1 ; a < n ; ++a)
        if (std::gcd(a, n) == 1)
            units.push_back(a);

    auto normalize = [n] (int x) { x %= n; return std::min(x, n - x); };

    std::vector<std::vector<int>> representatives;
    for (std::uint64_t mask = connected_only ? 1 : 0 ; mask < (std::uint64_t{1} << half) ; ++mask) {
        std::vector<int> s;
        int g = n;
        for (int i = 0 ; i < half ; ++i)
            if ((mask >> i) & 1) {
                s.push_back(i + 1);
                g = std::gcd(g, i + 1);
            }
        if (connected_only && g != 1)
            continue;

        // Smallest image under the multipliers; offsets are already folded
        // into 1..n/2, which accounts for reflection.
        bool canonical = true;
        for (int a : units) {
            std::vector<int> image;
            for (int x : s)
                image.push_back(normalize(a * x));
            std::ranges::sort(image);
            if (image < s) {
                canonical = false;
                break;
            }
        }
        if (canonical)
            representatives.push_back(std::move(s));
    }
    std::ranges::sort(representatives);

    // Multiplier classes can still be isomorphic, so confirm pairwise.
    std::vector<std::vector<int>> distinct;
    std::vector<Graph> kept;
    for (auto & s : representatives) {
        auto g = circulant(n, s);
        bool seen = false;
        for (auto & h : kept)
            if (h.edge_count() == g.edge_count() && are_isomorphic(g, h, budget)) {
                seen = true;
                break;
            }
        if (! seen) {
            kept.push_back(g);
            distinct.push_back(s);
        }
    }
    return distinct;
}

auto vtchroma::enumerate_family(const FamilySpec & family, const Budget & budget) -> std::vector<LabelledGraph>
{
    std::vector<LabelledGraph> out;
    if (auto c = std::get_if<CirculantFamily>(&family)) {
        for (int n = std::max(1, c->min_n) ; n <= c->max_n ; ++n)
            for (auto & s : circulant_generator_sets(n, c->connected_only, budget)) {
                std::string label = "C" + std::to_string(n) + "(";
                for (std::size_t i = 0 ; i < s.size() ; ++i)
                    label += (i ? " " : "") + std::to_string(s[i]);
                out.push_back({label + ")", circulant(n, s)});
            }
    }
    else if (auto f = std::get_if<CatlinFamily>(&family)) {
        for (int t = f->min_t ; t <= f->max_t ; ++t)
            for (int k = f->min_k ; k <= f->max_k ; ++k)
                out.push_back({"catlin(" + std::to_string(t) + " " + std::to_string(k) + ")", catlin(t, k)});
    }
    else if (auto kn = std::get_if<KneserFamily>(&family)) {
        for (auto [n, k] : kn->parameters)
            out.push_back({"kneser(" + std::to_string(n) + " " + std::to_string(k) + ")", kneser(n, k)});
    }
    else if (auto b = std::get_if<BlowupFamily>(&family)) {
        for (int m : b->cycles)
            for (int s : b->sizes)
                out.push_back({"blowup(C" + std::to_string(m) + " " + std::to_string(s) + ")", blow_up(cycle_graph(m), s)});
    }
    else {
        auto & path = std::get<Graph6File>(family).path;
        std::ifstream in(path);
        if (! in)
            throw InvalidArgument("cannot open " + path);
        for (auto & line : read_graph6_stream(in))
            out.push_back({path + ":" + std::to_string(line.line_number), std::move(line.graph)});
    }
    return out;
}

auto vtchroma::scan(const std::vector<LabelledGraph> & graphs, const AnalysisOptions & options, unsigned threads)
    -> std::vector<GraphRecord>
{
    std::vector<std::optional<GraphRecord>> slots(graphs.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_lock;

    auto work = [&] {
        while (true) {
            std::size_t i = next++;
            if (i >= graphs.size())
                return;
            try {
                slots[i] = analyze(graphs[i].graph, options, graphs[i].label);
            }
            catch (...) {
                std::lock_guard lock(failure_lock);
                if (! failure)
                    failure = std::current_exception();
                next = graphs.size();
            }
        }
    };

    threads = std::max(1u, std::min<unsigned>(threads, unsigned(graphs.size())));
    if (threads == 1)
        work();
    else {
        std::vector<std::thread> pool;
        for (unsigned i = 0 ; i < threads ; ++i)
            pool.emplace_back(work);
        for (auto & t : pool)
            t.join();
    }
    if (failure)
        std::rethrow_exception(failure);

    std::vector<GraphRecord> out;
    for (auto & s : slots)
        out.push_back(std::move(*s));
    std::ranges::stable_sort(out, [] (const GraphRecord & a, const GraphRecord & b) {
            return std::tie(a.profile.graph6, a.profile.label) < std::tie(b.profile.graph6, b.profile.label); });
    return out;
}

auto vtchroma::scan_family(const FamilySpec & family, const AnalysisOptions & options, unsigned threads)
    -> std::vector<GraphRecord>
{
    auto records = scan(enumerate_family(family, options.budget), options, threads);
    if (std::holds_alternative<CatlinFamily>(family)) {
        // Labels carry the parameters; the formula check is appended per record.
        for (auto & r : records) {
            int t = 0, k = 0;
            std::sscanf(r.profile.label.c_str(), "catlin(%d %d)", &t, &k);
            r.checks.push_back(check_catlin_formula(t, k, options.budget));
        }
    }
    return records;
}

auto vtchroma::summarize(const std::vector<GraphRecord> & records) -> ScanSummary
{
    ScanSummary s;
    s.records = records.size();
    for (auto & r : records) {
        bool vt = r.profile.vertex_transitive.value_or(false);
        if (vt)
            ++s.vertex_transitive;
        bool witness = false;
        for (auto & c : r.checks) {
            switch (c.status) {
                case Verdict::Holds: ++s.holds; break;
                case Verdict::Violated: ++s.violated; break;
                case Verdict::OutOfHypothesis: ++s.out_of_hypothesis; break;
                case Verdict::Undecided: ++s.undecided; break;
                case Verdict::NotChecked: ++s.not_checked; break;
            }
            if (c.tight && c.status == Verdict::Holds)
                ++s.tight;
            if (c.status == Verdict::Violated) {
                witness = true;
                ++(c.kind == StatementKind::Proved ? s.violations_of_proved : s.violations_of_conjecture);
            }
        }
        if (witness)
            s.witnesses.push_back(r.profile.graph6);
        if (vt && r.profile.chi && r.profile.omega) {
            Rational excess = make_rational(std::max(0, *r.profile.chi - *r.profile.omega), r.profile.delta + 1);
            if (s.max_excess_graph6.empty() || excess > s.max_excess_ratio) {
                s.max_excess_graph6 = r.profile.graph6;
                s.max_excess_ratio = excess;
            }
        }
    }
    return s;
}

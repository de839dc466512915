#pragma once

#include <vtchroma/budget.hpp>
#include <vtchroma/graph.hpp>
#include <vtchroma/rational.hpp>

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace vtchroma
{
    enum class StatementKind
    {
        Proved,
        Conjecture,
    };

    enum class Verdict
    {
        Holds,
        Violated,
        /// Computed, but the graph does not meet the statement's hypotheses.
        OutOfHypothesis,
        /// A search budget ran out before the quantity was known.
        Undecided,
        /// Deliberately skipped, e.g. beyond the exhaustive size limit.
        NotChecked,
    };

    auto to_string(StatementKind k) -> std::string;
    auto to_string(Verdict v) -> std::string;

    struct ConjectureReport
    {
        std::string name;
        StatementKind kind = StatementKind::Proved;
        bool in_hypothesis = false;
        Verdict status = Verdict::NotChecked;
        /// Unset when the compared quantity could not be computed.
        std::optional<bool> holds;
        bool tight = false;
        /// Exact "p/q" strings; empty when not applicable.
        std::string value;
        std::string bound;
        std::string notes;
    };

    struct GraphProfile
    {
        std::string graph6;
        std::string label;
        int n = 0;
        int delta = 0;
        std::optional<int> omega;
        std::optional<int> alpha;
        std::optional<int> chi;
        std::optional<Rational> chi_f;
        /// "lp" or "n/alpha".
        std::string chi_f_source;
        std::optional<bool> vertex_transitive;
        bool connected = false;
        std::string cluster_class;
        /// Quantities whose search ran out of budget, with the message.
        std::vector<std::string> undecided;
    };

    struct GraphRecord
    {
        GraphProfile profile;
        std::vector<ConjectureReport> checks;

        auto check(const std::string & name) const -> const ConjectureReport *;
    };

    struct AnalysisOptions
    {
        Budget budget;
        /// Subsets of maximum cliques tried by the hajnal check.
        std::uint64_t hajnal_subset_cap = 4096;
        /// Seeds the random subset choice in the hajnal check.
        std::uint64_t seed = 1;
    };

    /// Full profile and every checker for one graph. Budget exhaustion is
    /// recorded in the result rather than thrown.
    auto analyze(const Graph & g, const AnalysisOptions & options = {}, std::string label = "") -> GraphRecord;

    /// Profile alone. Quantities that exhaust the budget stay unset.
    auto profile_graph(const Graph & g, const Budget & budget = {}, std::string label = "") -> GraphProfile;

    /// chi <= max{omega, ceil((5 Delta + 3) / 6)}; in hypothesis for vertex-transitive graphs.
    auto check_main_conjecture(const GraphProfile & p) -> ConjectureReport;
    /// chi <= Delta - 1 for vertex-transitive graphs with Delta >= 13 and omega < Delta.
    auto check_borodin_kostochka(const GraphProfile & p) -> ConjectureReport;
    /// chi <= ceil((omega + Delta + 1) / 2), conjectured for every graph.
    auto check_reed(const GraphProfile & p) -> ConjectureReport;
    /// chi_f <= max{omega, 5 (Delta + 1) / 6} for vertex-transitive graphs.
    auto check_fractional_theorem(const GraphProfile & p) -> ConjectureReport;
    /// alpha >= n / max{omega, 5 (Delta + 1) / 6} for vertex-transitive graphs.
    auto check_independence_theorem(const GraphProfile & p) -> ConjectureReport;
    /// alpha >= 2n / (omega + Delta + 1), for every graph.
    auto check_fajtlowicz(const GraphProfile & p) -> ConjectureReport;

    auto check_main_conjecture(const Graph & g, const Budget & budget = {}) -> ConjectureReport;
    auto check_borodin_kostochka(const Graph & g, const Budget & budget = {}) -> ConjectureReport;
    auto check_reed(const Graph & g, const Budget & budget = {}) -> ConjectureReport;
    auto check_fractional_theorem(const Graph & g, const Budget & budget = {}) -> ConjectureReport;
    auto check_fajtlowicz(const Graph & g, const Budget & budget = {}) -> ConjectureReport;

    /// Exact chi, Delta and omega of catlin(t, k) against 2k + ceil(k/t), 3k - 1 and 2k.
    auto check_catlin_formula(int t, int k, const Budget & budget = {}) -> ConjectureReport;

    struct LabelledGraph
    {
        std::string label;
        Graph graph;
    };

    struct CirculantFamily
    {
        int min_n = 1;
        int max_n = 10;
        bool connected_only = true;
    };

    struct CatlinFamily
    {
        int min_t = 2;
        int max_t = 3;
        int min_k = 1;
        int max_k = 3;
    };

    struct KneserFamily
    {
        std::vector<std::pair<int, int>> parameters;
    };

    struct BlowupFamily
    {
        std::vector<int> cycles;
        std::vector<int> sizes;
    };

    struct Graph6File
    {
        std::string path;
    };

    using FamilySpec = std::variant<CirculantFamily, CatlinFamily, KneserFamily, BlowupFamily, Graph6File>;

    /// Generator sets of the circulants on n vertices, one per isomorphism class.
    auto circulant_generator_sets(int n, bool connected_only = true, const Budget & budget = {}) -> std::vector<std::vector<int>>;

    /// The family's graphs in a fixed order. Graph6 files raise ParseError with the line number.
    auto enumerate_family(const FamilySpec & family, const Budget & budget = {}) -> std::vector<LabelledGraph>;

    /// Analyzes every graph on up to `threads` workers; records are sorted by
    /// graph6 then label, so the thread count never changes the result.
    auto scan(const std::vector<LabelledGraph> & graphs, const AnalysisOptions & options = {}, unsigned threads = 1)
        -> std::vector<GraphRecord>;

    auto scan_family(const FamilySpec & family, const AnalysisOptions & options = {}, unsigned threads = 1)
        -> std::vector<GraphRecord>;

    struct ScanSummary
    {
        std::size_t records = 0;
        std::size_t vertex_transitive = 0;
        std::size_t holds = 0;
        std::size_t tight = 0;
        std::size_t violated = 0;
        std::size_t out_of_hypothesis = 0;
        std::size_t undecided = 0;
        std::size_t not_checked = 0;
        /// In-hypothesis violations of proved statements; must stay zero.
        std::size_t violations_of_proved = 0;
        /// In-hypothesis violations of conjectures; each would be a counterexample.
        std::size_t violations_of_conjecture = 0;
        /// Graph6 strings of graphs with an in-hypothesis violation.
        std::vector<std::string> witnesses;
        /// max over vertex-transitive graphs of max(chi - omega, 0) / (Delta + 1); descriptive only.
        Rational max_excess_ratio = 0;
        std::string max_excess_graph6;
    };

    auto summarize(const std::vector<GraphRecord> & records) -> ScanSummary;
}

#include <vtchroma/cliques.hpp>
#include <vtchroma/conjectures.hpp>
#include <vtchroma/error.hpp>
#include <vtchroma/generators.hpp>
#include <vtchroma/graph6.hpp>
#include <vtchroma/random.hpp>
#include <vtchroma/report.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

using namespace vtchroma;

namespace
{
    enum Exit
    {
        ok = 0,
        violation = 1,
        input_error = 2,
        budget_exhausted = 3,
    };

    struct Range
    {
        int lo = 0;
        int hi = 0;
    };

    /// "4" or "2..5".
    auto parse_range(const std::string & s) -> Range
    {
        auto dots = s.find("..");
        try {
            if (dots == std::string::npos) {
                int v = std::stoi(s);
                return {v, v};
            }
            return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
        }
        catch (const std::logic_error &) {
            throw InvalidArgument("bad range '" + s + "'");
        }
    }

    auto parse_list(const std::string & s) -> std::vector<int>
    {
        std::vector<int> out;
        std::stringstream in(s);
        std::string item;
        while (std::getline(in, item, ',')) {
            auto r = parse_range(item);
            for (int v = r.lo ; v <= r.hi ; ++v)
                out.push_back(v);
        }
        return out;
    }

    /// "5:2,7:3".
    auto parse_pairs(const std::string & s) -> std::vector<std::pair<int, int>>
    {
        std::vector<std::pair<int, int>> out;
        std::stringstream in(s);
        std::string item;
        while (std::getline(in, item, ',')) {
            auto colon = item.find(':');
            if (colon == std::string::npos)
                throw InvalidArgument("expected n:k, got '" + item + "'");
            try {
                out.emplace_back(std::stoi(item.substr(0, colon)), std::stoi(item.substr(colon + 1)));
            }
            catch (const std::logic_error &) {
                throw InvalidArgument("expected n:k, got '" + item + "'");
            }
        }
        return out;
    }

    struct Common
    {
        std::string format = "json";
        std::string output;
        unsigned threads = std::max(1u, std::thread::hardware_concurrency());
        std::uint64_t seed = 1;
        std::optional<std::uint64_t> nodes, cliques, lp_columns;
        std::optional<int> strong_limit;

        auto budget() const -> Budget
        {
            Budget b;
            if (const char * env = std::getenv("VTCHROMA_BUDGET"))
                b = parse_budget(env, b);
            if (nodes)
                b.search_nodes = *nodes;
            if (cliques)
                b.clique_limit = *cliques;
            if (lp_columns)
                b.lp_columns = *lp_columns;
            if (strong_limit)
                b.strong_padded_limit = *strong_limit;
            if (b.search_nodes == 0 || b.clique_limit == 0 || b.lp_columns == 0)
                throw InvalidArgument("budgets must be positive");
            return b;
        }

        auto options() const -> AnalysisOptions
        {
            AnalysisOptions o;
            o.budget = budget();
            o.seed = seed;
            return o;
        }
    };

    auto add_common(CLI::App * app, Common & c, bool analysis) -> void
    {
        app->add_option("-o,--output", c.output, "Output file (default stdout)");
        if (! analysis)
            return;
        app->add_option("--format", c.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
        app->add_option("-j,--jobs", c.threads, "Worker threads")->check(CLI::PositiveNumber);
        app->add_option("--seed", c.seed, "Seed for randomized choices");
        app->add_option("--nodes", c.nodes, "Search node limit per search");
        app->add_option("--cliques", c.cliques, "Clique enumeration limit");
        app->add_option("--lp-columns", c.lp_columns, "Linear program column limit");
        app->add_option("--strong-limit", c.strong_limit, "Largest padded size for exhaustive strong coloring");
    }

    /// Writes to the file named by path, or stdout when it is empty.
    template <typename F>
    auto with_output(const std::string & path, F && f) -> void
    {
        if (path.empty()) {
            f(std::cout);
            std::cout.flush();
            return;
        }
        std::ofstream out(path);
        if (! out)
            throw InvalidArgument("cannot write " + path);
        f(out);
    }

    auto read_input(const std::string & path) -> std::vector<Graph6Line>
    {
        if (path.empty() || path == "-")
            return read_graph6_stream(std::cin);
        std::ifstream in(path);
        if (! in)
            throw InvalidArgument("cannot open " + path);
        return read_graph6_stream(in);
    }

    auto exit_for(const std::vector<GraphRecord> & records) -> int
    {
        auto s = summarize(records);
        if (s.violations_of_proved + s.violations_of_conjecture > 0)
            return violation;
        std::size_t undecided = s.undecided;
        for (auto & r : records)
            undecided += r.profile.undecided.size();
        return undecided > 0 ? budget_exhausted : ok;
    }

    auto report_witnesses(const ScanSummary & s) -> void
    {
        for (auto & w : s.witnesses)
            std::cerr << "violation witness: " << w << '\n';
    }

    struct GenArgs
    {
        std::string family;
        std::string t = "2", k = "1", n = "5", gens, cycle = "5", size = "2";
        double p = 0.5;
        int count = 1;
    };

    auto generate(const GenArgs & a, std::uint64_t seed) -> std::vector<Graph>
    {
        std::vector<Graph> out;
        auto & f = a.family;
        if (f == "catlin") {
            for (int t : parse_list(a.t))
                for (int k : parse_list(a.k))
                    out.push_back(catlin(t, k));
        }
        else if (f == "circulant") {
            for (int n : parse_list(a.n)) {
                if (! a.gens.empty())
                    out.push_back(circulant(n, parse_list(a.gens)));
                else
                    for (auto & s : circulant_generator_sets(n))
                        out.push_back(circulant(n, s));
            }
        }
        else if (f == "kneser") {
            for (int n : parse_list(a.n))
                for (int k : parse_list(a.k))
                    out.push_back(kneser(n, k));
        }
        else if (f == "blowup") {
            for (int m : parse_list(a.cycle))
                for (int s : parse_list(a.size))
                    out.push_back(blow_up(cycle_graph(m), s));
        }
        else if (f == "clique-join") {
            for (int t : parse_list(a.t))
                out.push_back(join(complete_graph(t), cycle_graph(5)));
        }
        else if (f == "complete" || f == "cycle" || f == "path") {
            for (int n : parse_list(a.n))
                out.push_back(f == "complete" ? complete_graph(n) : f == "cycle" ? cycle_graph(n) : path_graph(n));
        }
        else if (f == "random") {
            std::mt19937_64 rng(seed);
            for (int i = 0 ; i < a.count ; ++i)
                for (int n : parse_list(a.n))
                    out.push_back(random_graph(n, a.p, rng));
        }
        else
            throw InvalidArgument("unknown family '" + f + "'");
        return out;
    }

    struct ScanArgs
    {
        std::string family;
        std::string t = "2..3", k = "1..3", n, cycles = "5,7", sizes = "1..3", params = "5:2,7:3", path;
        int min_n = 1, max_n = 10;
    };

    auto family_spec(const ScanArgs & a) -> FamilySpec
    {
        if (a.family == "circulant")
            return CirculantFamily{a.min_n, a.max_n, true};
        if (a.family == "catlin") {
            auto t = parse_range(a.t), k = parse_range(a.k);
            return CatlinFamily{t.lo, t.hi, k.lo, k.hi};
        }
        if (a.family == "kneser")
            return KneserFamily{parse_pairs(a.params)};
        if (a.family == "blowup")
            return BlowupFamily{parse_list(a.cycles), parse_list(a.sizes)};
        if (a.family == "file") {
            if (a.path.empty())
                throw InvalidArgument("scan file needs a path");
            return Graph6File{a.path};
        }
        throw InvalidArgument("unknown family '" + a.family + "'");
    }

    struct LemmaTally
    {
        std::size_t graphs = 0, hajnal_subsets = 0, kostochka_components = 0, cek_components = 0, clustering_graphs = 0;
        std::size_t failures = 0;
        std::vector<std::string> failed;
    };

    /// The clique-structure properties on one graph; failures are tallied with a witness.
    auto verify_lemmas_on(const Graph & g, const Budget & budget, LemmaTally & t) -> void
    {
        ++t.graphs;
        if (g.size() == 0)
            return;
        auto fail = [&] (const std::string & what) {
            ++t.failures;
            t.failed.push_back(what + " " + write_graph6(g));
        };
        auto q = maximum_cliques(g, budget);
        int omega = q.cliques.front().count();
        int delta = g.max_degree();
        std::size_t m = std::min<std::size_t>(q.size(), 12);
        std::vector<VertexSet> chosen;
        for (std::uint64_t mask = 1 ; mask < (std::uint64_t{1} << m) ; ++mask) {
            chosen.clear();
            for (std::size_t i = 0 ; i < m ; ++i)
                if ((mask >> i) & 1)
                    chosen.push_back(q.cliques[i]);
            ++t.hajnal_subsets;
            if (! hajnal_check(g, chosen, omega).holds)
                fail("hajnal");
        }

        if (! omega_at_least_two_thirds(omega, delta))
            return;
        auto x = build_clique_graph(q);
        for (std::size_t c = 0 ; c < x.components.size() ; ++c) {
            auto component = x.component_cliques(c);
            try {
                ++t.cek_components;
                cek_classify(g, component, omega);
                if (omega_above_two_thirds(omega, delta)) {
                    ++t.kostochka_components;
                    kostochka_common_vertex(g, component, omega);
                }
            }
            catch (const LemmaFalsified & e) {
                fail(e.what());
            }
        }
        if (g.is_connected() && is_vertex_transitive(g, budget).transitive) {
            ++t.clustering_graphs;
            try {
                auto shape = vt_classify(g, q);
                if (! std::holds_alternative<Edgeless>(shape) && ! std::holds_alternative<CycleBlowup>(shape))
                    fail("clustering");
            }
            catch (const LemmaFalsified & e) {
                fail(e.what());
            }
        }
    }
}

auto main(int argc, char ** argv) -> int
{
    CLI::App app{"Exact coloring invariants and bound checks for vertex-transitive graphs"};
    app.require_subcommand(1);

    GenArgs gen;
    Common gen_common;
    auto gen_cmd = app.add_subcommand("gen", "Write graphs as graph6, one per line");
    gen_cmd->add_option("family", gen.family,
            "catlin, circulant, kneser, blowup, clique-join, complete, cycle, path or random")->required();
    gen_cmd->add_option("--t", gen.t, "catlin / clique-join parameter (a or a..b)");
    gen_cmd->add_option("--k", gen.k, "catlin / kneser parameter");
    gen_cmd->add_option("--n", gen.n, "vertex count");
    gen_cmd->add_option("--gens", gen.gens, "circulant offsets, comma separated (all classes when omitted)");
    gen_cmd->add_option("--cycle", gen.cycle, "blow-up base cycle length");
    gen_cmd->add_option("--size", gen.size, "blow-up clique size");
    gen_cmd->add_option("--p", gen.p, "edge probability for random graphs");
    gen_cmd->add_option("--count", gen.count, "number of random graphs");
    gen_cmd->add_option("--seed", gen_common.seed, "random seed");
    add_common(gen_cmd, gen_common, false);

    std::string analyze_input, analyze_graph6;
    Common analyze_common;
    auto analyze_cmd = app.add_subcommand("analyze", "Profile and check graphs read as graph6");
    analyze_cmd->add_option("input", analyze_input, "graph6 file, or - for stdin (default)");
    analyze_cmd->add_option("-g,--graph6", analyze_graph6, "a single graph6 string");
    add_common(analyze_cmd, analyze_common, true);

    ScanArgs scan_args;
    Common scan_common;
    auto scan_cmd = app.add_subcommand("scan", "Check every graph of a family");
    scan_cmd->add_option("family", scan_args.family, "circulant, catlin, kneser, blowup or file")->required();
    scan_cmd->add_option("path", scan_args.path, "graph6 file for the file family");
    scan_cmd->add_option("--min-n", scan_args.min_n, "circulant minimum order");
    scan_cmd->add_option("--max-n", scan_args.max_n, "circulant maximum order");
    scan_cmd->add_option("--t", scan_args.t, "catlin t range");
    scan_cmd->add_option("--k", scan_args.k, "catlin k range");
    scan_cmd->add_option("--params", scan_args.params, "kneser n:k list");
    scan_cmd->add_option("--cycles", scan_args.cycles, "blow-up cycle lengths");
    scan_cmd->add_option("--sizes", scan_args.sizes, "blow-up clique sizes");
    add_common(scan_cmd, scan_common, true);

    std::string lemmas_input;
    int random_count = 0, random_max_n = 12;
    Common lemmas_common;
    auto lemmas_cmd = app.add_subcommand("verify-lemmas", "Run the clique-structure property checks on a corpus");
    lemmas_cmd->add_option("input", lemmas_input, "graph6 file, or - for stdin");
    lemmas_cmd->add_option("--random", random_count, "use this many random graphs instead of input");
    lemmas_cmd->add_option("--max-n", random_max_n, "largest random graph")->check(CLI::Range(1, 16));
    add_common(lemmas_cmd, lemmas_common, true);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        return app.exit(e) == 0 ? ok : input_error;
    }

    try {
        if (*gen_cmd) {
            auto graphs = generate(gen, gen_common.seed);
            with_output(gen_common.output, [&] (std::ostream & out) {
                    for (auto & g : graphs)
                        out << write_graph6(g) << '\n';
                });
            return ok;
        }

        if (*analyze_cmd) {
            auto options = analyze_common.options();
            std::vector<LabelledGraph> graphs;
            if (! analyze_graph6.empty())
                graphs.push_back({"", parse_graph6(analyze_graph6)});
            else
                for (auto & line : read_input(analyze_input))
                    graphs.push_back({"line " + std::to_string(line.line_number), std::move(line.graph)});
            // Input order is kept for analyze; only scans sort.
            std::vector<GraphRecord> records;
            for (auto & g : graphs)
                records.push_back(analyze(g.graph, options, g.label));
            auto format = parse_report_format(analyze_common.format);
            with_output(analyze_common.output, [&] (std::ostream & out) { write_records(out, records, format); });
            report_witnesses(summarize(records));
            return exit_for(records);
        }

        if (*scan_cmd) {
            auto options = scan_common.options();
            auto records = scan_family(family_spec(scan_args), options, scan_common.threads);
            auto format = parse_report_format(scan_common.format);
            auto summary = summarize(records);
            with_output(scan_common.output, [&] (std::ostream & out) { write_records(out, records, format); });
            write_summary(std::cerr, summary, format);
            report_witnesses(summary);
            return exit_for(records);
        }

        if (*lemmas_cmd) {
            auto budget = lemmas_common.budget();
            LemmaTally tally;
            if (random_count > 0) {
                std::mt19937_64 rng(lemmas_common.seed);
                for (int i = 0 ; i < random_count ; ++i)
                    verify_lemmas_on(random_corpus_graph(random_max_n, rng), budget, tally);
            }
            else
                for (auto & line : read_input(lemmas_input))
                    verify_lemmas_on(line.graph, budget, tally);
            nlohmann::ordered_json j;
            j["graphs"] = tally.graphs;
            j["hajnal_subsets"] = tally.hajnal_subsets;
            j["kostochka_components"] = tally.kostochka_components;
            j["cek_components"] = tally.cek_components;
            j["clustering_graphs"] = tally.clustering_graphs;
            j["failures"] = tally.failures;
            j["failed"] = tally.failed;
            with_output(lemmas_common.output, [&] (std::ostream & out) { out << j.dump() << '\n'; });
            return tally.failures > 0 ? violation : ok;
        }
    }
    catch (const ParseError & e) {
        std::cerr << "error: " << e.what() << '\n';
        return input_error;
    }
    catch (const BudgetExceeded & e) {
        std::cerr << "budget exhausted: " << e.what() << '\n';
        return budget_exhausted;
    }
    catch (const LemmaFalsified & e) {
        std::cerr << "falsified: " << e.what() << '\n';
        return violation;
    }
    catch (const Error & e) {
        std::cerr << "error: " << e.what() << '\n';
        return input_error;
    }
    return ok;
}

#include <vtchroma/conjectures.hpp>
#include <vtchroma/error.hpp>
#include <vtchroma/generators.hpp>
#include <vtchroma/report.hpp>

#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>

using namespace vtchroma;

namespace
{
    auto read_file(const std::string & path) -> std::string
    {
        std::ifstream in(path);
        REQUIRE(in);
        std::stringstream s;
        s << in.rdbuf();
        return s.str();
    }

    auto lines(const std::string & text) -> std::vector<std::string>
    {
        std::vector<std::string> out;
        std::istringstream in(text);
        for (std::string line ; std::getline(in, line) ; )
            out.push_back(line);
        return out;
    }
}

TEST_CASE("Petersen record matches the golden file")
{
    std::ostringstream out;
    write_records(out, {analyze(kneser(5, 2), {}, "line 1")}, ReportFormat::Json);
    CHECK(out.str() == read_file(VTCHROMA_TEST_DIR "/golden/petersen.json"));
}

TEST_CASE("every record carries the fixed key set")
{
    std::set<std::string> required{"graph6", "n", "delta", "omega", "alpha", "chi", "chi_f", "vertex_transitive",
        "cluster_class", "checks"};
    std::vector<std::string> check_keys{"kind", "in_hypothesis", "status", "holds", "tight", "value", "bound", "notes"};
    AnalysisOptions starved;
    starved.budget.search_nodes = 2;
    for (auto & r : {analyze(Graph(1)), analyze(path_graph(3)), analyze(cycle_graph(5), starved)}) {
        auto j = to_json(r);
        for (auto & key : required)
            CHECK(j.contains(key));
        for (auto & [name, c] : j["checks"].items()) {
            std::vector<std::string> keys;
            for (auto & [k, v] : c.items())
                keys.push_back(k);
            CHECK(keys == check_keys);
        }
        // Rationals are strings, never floating point.
        CHECK((j["chi_f"].is_string() || j["chi_f"].is_null()));
    }
    auto undecided = to_json(analyze(cycle_graph(5), starved));
    CHECK(undecided["chi"].is_null());
    CHECK_FALSE(undecided["undecided"].empty());
    CHECK(to_json(analyze(Graph(1)))["chi_f"] == "1/1");
}

TEST_CASE("csv and text output")
{
    std::vector<GraphRecord> records{analyze(kneser(5, 2), {}, "petersen"), analyze(cycle_graph(5), {}, "c5")};
    std::ostringstream csv;
    write_records(csv, records, ReportFormat::Csv);
    auto rows = lines(csv.str());
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].starts_with("graph6,label,n,delta,omega,alpha,chi,chi_f,"));
    CHECK(rows[0].find("main_conjecture.status") != std::string::npos);
    CHECK(rows[1].find(",5/2,") != std::string::npos);

    std::ostringstream text;
    write_records(text, records, ReportFormat::Text);
    CHECK(text.str().find("petersen") != std::string::npos);
    CHECK(text.str().find("main_conjecture") != std::string::npos);

    std::ostringstream summary;
    write_summary(summary, summarize(records), ReportFormat::Json);
    auto j = nlohmann::json::parse(summary.str());
    CHECK(j["summary"]["records"] == 2);
    CHECK(j["summary"]["violations_of_proved"] == 0);
    CHECK(j["summary"]["max_excess_ratio"] == "1/3");

    CHECK(parse_report_format("csv") == ReportFormat::Csv);
    CHECK_THROWS_AS(parse_report_format("xml"), InvalidArgument);
}

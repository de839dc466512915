#include <vtchroma/report.hpp>
#include <vtchroma/error.hpp>

using namespace vtchroma;
using nlohmann::ordered_json;

namespace
{
    template <typename T>
    auto nullable(const std::optional<T> & v) -> ordered_json
    {
        return v ? ordered_json(*v) : ordered_json(nullptr);
    }

    auto nullable_text(const std::string & s) -> ordered_json
    {
        return s.empty() ? ordered_json(nullptr) : ordered_json(s);
    }

    auto csv_field(const std::string & s) -> std::string
    {
        if (s.find_first_of(",\"\n") == std::string::npos)
            return s;
        std::string out = "\"";
        for (char c : s) {
            if (c == '"')
                out += '"';
            out += c;
        }
        return out + "\"";
    }

    auto text_value(const ordered_json & v) -> std::string
    {
        if (v.is_null())
            return "";
        if (v.is_string())
            return v.get<std::string>();
        return v.dump();
    }

    const std::vector<std::string> profile_columns{
        "graph6", "label", "n", "delta", "omega", "alpha", "chi", "chi_f", "vertex_transitive", "cluster_class"};
}

auto vtchroma::parse_report_format(const std::string & name) -> ReportFormat
{
    if (name == "json")
        return ReportFormat::Json;
    if (name == "csv")
        return ReportFormat::Csv;
    if (name == "text")
        return ReportFormat::Text;
    throw InvalidArgument("unknown report format '" + name + "'");
}

auto vtchroma::to_json(const GraphRecord & r) -> ordered_json
{
    auto & p = r.profile;
    ordered_json j;
    j["graph6"] = p.graph6;
    j["label"] = p.label;
    j["n"] = p.n;
    j["delta"] = p.delta;
    j["omega"] = nullable(p.omega);
    j["alpha"] = nullable(p.alpha);
    j["chi"] = nullable(p.chi);
    j["chi_f"] = p.chi_f ? ordered_json(to_string(*p.chi_f)) : ordered_json(nullptr);
    j["chi_f_source"] = nullable_text(p.chi_f_source);
    j["vertex_transitive"] = nullable(p.vertex_transitive);
    j["connected"] = p.connected;
    j["cluster_class"] = p.cluster_class;

    ordered_json checks = ordered_json::object();
    for (auto & c : r.checks) {
        ordered_json e;
        e["kind"] = to_string(c.kind);
        e["in_hypothesis"] = c.in_hypothesis;
        e["status"] = to_string(c.status);
        e["holds"] = nullable(c.holds);
        e["tight"] = c.tight;
        e["value"] = nullable_text(c.value);
        e["bound"] = nullable_text(c.bound);
        e["notes"] = c.notes;
        checks[c.name] = std::move(e);
    }
    j["checks"] = std::move(checks);
    j["undecided"] = p.undecided;
    return j;
}

auto vtchroma::to_json(const ScanSummary & s) -> ordered_json
{
    ordered_json j;
    j["records"] = s.records;
    j["vertex_transitive"] = s.vertex_transitive;
    j["holds"] = s.holds;
    j["tight"] = s.tight;
    j["violated"] = s.violated;
    j["out_of_hypothesis"] = s.out_of_hypothesis;
    j["undecided"] = s.undecided;
    j["not_checked"] = s.not_checked;
    j["violations_of_proved"] = s.violations_of_proved;
    j["violations_of_conjecture"] = s.violations_of_conjecture;
    j["witnesses"] = s.witnesses;
    j["max_excess_ratio"] = to_string(s.max_excess_ratio);
    j["max_excess_graph6"] = nullable_text(s.max_excess_graph6);
    return j;
}

auto vtchroma::write_records(std::ostream & out, const std::vector<GraphRecord> & records, ReportFormat format) -> void
{
    if (format == ReportFormat::Json) {
        for (auto & r : records)
            out << to_json(r).dump() << '\n';
        return;
    }

    if (format == ReportFormat::Csv) {
        // Check columns come from the first record; every record carries the same checks.
        std::vector<std::string> names;
        if (! records.empty())
            for (auto & c : records.front().checks)
                names.push_back(c.name);
        std::string header;
        for (auto & col : profile_columns)
            header += (header.empty() ? "" : ",") + col;
        for (auto & name : names)
            for (auto part : {"status", "holds", "value", "bound"})
                header += "," + name + "." + part;
        out << header << '\n';

        for (auto & r : records) {
            auto j = to_json(r);
            std::string row;
            for (auto & col : profile_columns)
                row += (row.empty() ? "" : ",") + csv_field(text_value(j[col]));
            for (auto & name : names) {
                auto & c = j["checks"][name];
                for (auto part : {"status", "holds", "value", "bound"})
                    row += "," + csv_field(c.is_null() ? "" : text_value(c[part]));
            }
            out << row << '\n';
        }
        return;
    }

    for (auto & r : records) {
        auto & p = r.profile;
        auto j = to_json(r);
        out << p.graph6 << (p.label.empty() ? "" : "  " + p.label) << '\n';
        out << "  n=" << p.n << " delta=" << p.delta;
        for (auto key : {"omega", "alpha", "chi", "chi_f"})
            out << ' ' << key << '=' << (j[key].is_null() ? "?" : text_value(j[key]));
        out << " vertex_transitive=" << (p.vertex_transitive ? (*p.vertex_transitive ? "yes" : "no") : "?")
            << " cluster=" << p.cluster_class << '\n';
        for (auto & c : r.checks) {
            out << "  " << c.name << ": " << to_string(c.status);
            if (! c.value.empty() || ! c.bound.empty())
                out << " (" << c.value << " vs " << c.bound << ")";
            if (c.tight)
                out << " tight";
            if (! c.notes.empty())
                out << " [" << c.notes << "]";
            out << '\n';
        }
        for (auto & u : p.undecided)
            out << "  undecided: " << u << '\n';
    }
}

auto vtchroma::write_summary(std::ostream & out, const ScanSummary & s, ReportFormat format) -> void
{
    auto j = to_json(s);
    if (format == ReportFormat::Json) {
        ordered_json wrapped;
        wrapped["summary"] = j;
        out << wrapped.dump() << '\n';
        return;
    }
    std::string line = "summary";
    for (auto & [key, value] : j.items())
        line += " " + key + "=" + (value.is_array() ? std::to_string(value.size()) : text_value(value));
    out << line << '\n';
}

#pragma once

#include <vtchroma/conjectures.hpp>

#include <json.hpp>

#include <ostream>
#include <string>
#include <vector>

namespace vtchroma
{
    enum class ReportFormat
    {
        Json,
        Csv,
        Text,
    };

    /// "json", "csv" or "text"; InvalidArgument otherwise.
    auto parse_report_format(const std::string & name) -> ReportFormat;

    /// Fixed key order; unknown quantities are null and rationals are "p/q".
    auto to_json(const GraphRecord & r) -> nlohmann::ordered_json;
    auto to_json(const ScanSummary & s) -> nlohmann::ordered_json;

    /// One record per line (JSON lines), a header plus one row per record
    /// (CSV), or an indented listing (text).
    auto write_records(std::ostream & out, const std::vector<GraphRecord> & records, ReportFormat format) -> void;

    /// Single-line summary: JSON for the json format, key=value otherwise.
    auto write_summary(std::ostream & out, const ScanSummary & s, ReportFormat format) -> void;
}

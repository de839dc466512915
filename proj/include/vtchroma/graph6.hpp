#pragma once

#include <vtchroma/graph.hpp>

#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace vtchroma
{
    /// Parses one graph6 string. A trailing newline and the optional
    /// ">>graph6<<" header are tolerated; nonzero padding bits are not.
    auto parse_graph6(std::string_view text) -> Graph;

    auto write_graph6(const Graph & g) -> std::string;

    struct Graph6Line
    {
        int line_number;
        std::string text;
        Graph graph;
    };

    /// One graph per line; blank lines and lines starting with '#' are skipped.
    /// A malformed line raises ParseError naming its line number.
    auto read_graph6_stream(std::istream & in) -> std::vector<Graph6Line>;
}

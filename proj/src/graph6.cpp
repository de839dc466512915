#include <vtchroma/graph6.hpp>
#include <vtchroma/error.hpp>

using namespace vtchroma;

namespace
{
    constexpr std::string_view header = ">>graph6<<";

    auto sextet(std::string_view s, std::size_t pos) -> int
    {
        if (pos >= s.size())
            throw ParseError("graph6 string truncated", pos);
        int c = static_cast<unsigned char>(s[pos]);
        if (c < 63 || c > 126)
            throw ParseError("graph6 byte " + std::to_string(c) + " outside 63..126", pos);
        return c - 63;
    }
}

auto vtchroma::parse_graph6(std::string_view text) -> Graph
{
    while (! text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.remove_suffix(1);
    std::size_t offset = 0;
    if (text.starts_with(header))
        offset = header.size();
    std::string_view s = text.substr(offset);

    if (s.empty())
        throw ParseError("empty graph6 string", offset);

    long long n;
    std::size_t pos;
    if (s[0] != '~') {
        n = sextet(s, 0);
        pos = 1;
    }
    else if (s.size() > 1 && s[1] == '~') {
        n = 0;
        for (std::size_t i = 2 ; i < 8 ; ++i)
            n = (n << 6) | sextet(s, i);
        pos = 8;
    }
    else {
        n = 0;
        for (std::size_t i = 1 ; i < 4 ; ++i)
            n = (n << 6) | sextet(s, i);
        pos = 4;
    }

    if (n > VertexSet::capacity)
        throw CapacityExceeded("graph6 graph has " + std::to_string(n) + " vertices, capacity is "
                + std::to_string(VertexSet::capacity));

    long long bit_count = n * (n - 1) / 2;
    std::size_t byte_count = std::size_t((bit_count + 5) / 6);
    if (s.size() < pos + byte_count)
        throw ParseError("graph6 bit stream truncated", offset + s.size());
    if (s.size() > pos + byte_count)
        throw ParseError("trailing bytes after graph6 bit stream", offset + pos + byte_count);

    GraphBuilder b{int(n)};
    long long k = 0;
    int current = 0;
    for (int j = 1 ; j < n ; ++j)
        for (int i = 0 ; i < j ; ++i, ++k) {
            if (k % 6 == 0)
                current = sextet(s, pos + std::size_t(k / 6));
            if ((current >> (5 - k % 6)) & 1)
                b.add_edge(i, j);
        }
    if (k % 6 != 0) {
        int padding_mask = (1 << (6 - k % 6)) - 1;
        if (current & padding_mask)
            throw ParseError("nonzero graph6 padding bits", offset + pos + byte_count - 1);
    }

    return std::move(b).build();
}

auto vtchroma::write_graph6(const Graph & g) -> std::string
{
    int n = g.size();
    std::string out;
    if (n <= 62)
        out.push_back(char(63 + n));
    else {
        out.push_back('~');
        for (int shift = 12 ; shift >= 0 ; shift -= 6)
            out.push_back(char(63 + ((n >> shift) & 63)));
    }

    int current = 0, filled = 0;
    for (int j = 1 ; j < n ; ++j)
        for (int i = 0 ; i < j ; ++i) {
            current = (current << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(char(63 + current));
                current = 0;
                filled = 0;
            }
        }
    if (filled > 0)
        out.push_back(char(63 + (current << (6 - filled))));
    return out;
}

auto vtchroma::read_graph6_stream(std::istream & in) -> std::vector<Graph6Line>
{
    std::vector<Graph6Line> result;
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        while (! line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
            line.pop_back();
        if (line.empty() || line[0] == '#')
            continue;
        try {
            result.push_back(Graph6Line{number, line, parse_graph6(line)});
        }
        catch (const ParseError & e) {
            throw ParseError("line " + std::to_string(number) + ": " + e.what(), e.position());
        }
        catch (const CapacityExceeded & e) {
            throw ParseError("line " + std::to_string(number) + ": " + e.what(), 0);
        }
    }
    return result;
}

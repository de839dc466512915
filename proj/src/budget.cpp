#include <vtchroma/budget.hpp>
#include <vtchroma/error.hpp>

#include <charconv>
#include <sstream>

using namespace vtchroma;

namespace
{
    auto parse_count(const std::string & s) -> std::uint64_t
    {
        std::uint64_t value = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
        if (ec != std::errc{} || ptr != s.data() + s.size() || value == 0)
            throw InvalidArgument("budget value '" + s + "' is not a positive integer");
        return value;
    }
}

auto vtchroma::parse_budget(const std::string & spec, Budget base) -> Budget
{
    if (spec.empty())
        return base;
    if (spec.find('=') == std::string::npos) {
        base.search_nodes = parse_count(spec);
        return base;
    }

    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw InvalidArgument("budget item '" + item + "' lacks '='");
        auto key = item.substr(0, eq);
        auto value = parse_count(item.substr(eq + 1));
        if (key == "nodes")
            base.search_nodes = value;
        else if (key == "cliques")
            base.clique_limit = value;
        else if (key == "lp")
            base.lp_columns = value;
        else if (key == "strong")
            base.strong_padded_limit = int(value);
        else
            throw InvalidArgument("unknown budget key '" + key + "'");
    }
    return base;
}

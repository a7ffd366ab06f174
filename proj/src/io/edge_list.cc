#include <edrg/errors.hh>
#include <edrg/io.hh>

#include <charconv>
#include <set>
#include <vector>

namespace edrg {

namespace {

std::vector<std::string_view> tokens(std::string_view line)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
            ++i;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r')
            ++i;
        if (i > start)
            out.push_back(line.substr(start, i - start));
    }
    return out;
}

int to_vertex(std::string_view tok, int line)
{
    int v = 0;
    const auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec == std::errc::result_out_of_range)
        throw ParseError(ParseErrorKind::out_of_range, "line " + std::to_string(line) + ": '" + std::string(tok)
                + "' is too large", line);
    if (ec != std::errc{} || end != tok.data() + tok.size() || v < 0)
        throw ParseError(ParseErrorKind::non_integer, "line " + std::to_string(line) + ": '" + std::string(tok)
                + "' is not a nonnegative integer", line);
    return v;
}

}

Graph parse_edge_list(std::string_view text)
{
    std::vector<Edge> edges;
    std::set<Edge> seen;
    int declared = -1;
    int largest = -1;
    bool first = true;
    int lineno = 0;

    while (! text.empty()) {
        const auto nl = text.find('\n');
        const std::string_view line = text.substr(0, nl);
        text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
        ++lineno;

        const auto toks = tokens(line);
        if (toks.empty() || toks[0].starts_with('#'))
            continue;
        const std::string where = "line " + std::to_string(lineno) + ": ";
        if (toks.size() != 2)
            throw ParseError(ParseErrorKind::bad_arity, where + "expected two fields, found "
                    + std::to_string(toks.size()), lineno);
        if (first && toks[0] == "n") {
            first = false;
            declared = to_vertex(toks[1], lineno);
            continue;
        }
        first = false;

        const int u = to_vertex(toks[0], lineno);
        const int v = to_vertex(toks[1], lineno);
        if (u == v)
            throw ParseError(ParseErrorKind::self_loop, where + "self-loop at vertex " + std::to_string(u), lineno);
        if (declared >= 0 && std::max(u, v) >= declared)
            throw ParseError(ParseErrorKind::out_of_range, where + "vertex " + std::to_string(std::max(u, v))
                    + " is not below the declared order " + std::to_string(declared), lineno);
        const Edge e{std::min(u, v), std::max(u, v)};
        if (! seen.insert(e).second)
            throw ParseError(ParseErrorKind::duplicate_edge, where + "edge " + std::to_string(e.u) + " "
                    + std::to_string(e.v) + " repeats an earlier line", lineno);
        edges.push_back(e);
        largest = std::max(largest, e.v);
    }

    if (declared < 0 && edges.empty())
        throw ParseError(ParseErrorKind::empty_input, "edge list has no edges and no order line");
    return Graph::from_edges(declared >= 0 ? declared : largest + 1, edges);
}

} // namespace edrg

#include <edrg/errors.hh>
#include <edrg/io.hh>

#include <fstream>
#include <sstream>
#include <vector>

namespace edrg {

const char * parse_error_kind_name(ParseErrorKind kind) noexcept
{
    switch (kind) {
    case ParseErrorKind::bad_char: return "bad_char";
    case ParseErrorKind::truncated: return "truncated";
    case ParseErrorKind::trailing_garbage: return "trailing_garbage";
    case ParseErrorKind::nonzero_padding: return "nonzero_padding";
    case ParseErrorKind::self_loop: return "self_loop";
    case ParseErrorKind::duplicate_edge: return "duplicate_edge";
    case ParseErrorKind::non_integer: return "non_integer";
    case ParseErrorKind::bad_arity: return "bad_arity";
    case ParseErrorKind::out_of_range: return "out_of_range";
    case ParseErrorKind::empty_input: return "empty_input";
    }
    return "unknown";
}

ParseError::ParseError(ParseErrorKind kind, std::string what, int line, std::size_t offset) :
    std::runtime_error(std::move(what)), kind_(kind), line_(line), offset_(offset)
{
}

namespace {

constexpr std::string_view header = ">>graph6<<";

class Reader {
public:
    explicit Reader(std::string_view body) : body_(body) {}

    int next()
    {
        if (pos_ >= body_.size())
            throw ParseError(ParseErrorKind::truncated, "graph6 data ends at byte " + std::to_string(pos_), 0, pos_);
        const auto ch = static_cast<unsigned char>(body_[pos_]);
        if (ch < 63 || ch > 126)
            throw ParseError(ParseErrorKind::bad_char,
                    "graph6 byte " + std::to_string(pos_) + " has value " + std::to_string(ch) + " outside 63..126", 0,
                    pos_);
        ++pos_;
        return ch - 63;
    }

    std::size_t position() const { return pos_; }
    bool done() const { return pos_ == body_.size(); }

private:
    std::string_view body_;
    std::size_t pos_ = 0;
};

long read_order(Reader & in)
{
    const int first = in.next();
    if (first != 63)
        return first;
    const int second = in.next();
    int groups = 3;
    long n = 0;
    if (second == 63)
        groups = 6;
    else
        n = second, groups = 2;
    for (int k = 0; k < groups; ++k)
        n = (n << 6) | in.next();
    return n;
}

void write_order(std::string & out, long n)
{
    if (n <= 62) {
        out += static_cast<char>(63 + n);
        return;
    }
    const int groups = n <= 258047 ? 3 : 6;
    out += '~';
    if (groups == 6)
        out += '~';
    for (int k = groups - 1; k >= 0; --k)
        out += static_cast<char>(63 + ((n >> (6 * k)) & 63));
}

}

Graph parse_graph6(std::string_view text)
{
    while (! text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.remove_suffix(1);
    if (text.starts_with(header))
        text.remove_prefix(header.size());
    if (text.empty())
        throw ParseError(ParseErrorKind::empty_input, "empty graph6 string");

    Reader in(text);
    const long n = read_order(in);
    if (n > 100000)
        throw ParseError(ParseErrorKind::out_of_range, "graph6 order " + std::to_string(n) + " is too large");

    std::vector<Edge> edges;
    const long bits = n * (n - 1) / 2;
    int chunk = 0;
    int left = 0;
    long k = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++k) {
            if (left == 0) {
                chunk = in.next();
                left = 6;
            }
            --left;
            if ((chunk >> left) & 1)
                edges.push_back({u, v});
        }
    }
    if (bits > 0 && (chunk & ((1 << left) - 1)) != 0)
        throw ParseError(ParseErrorKind::nonzero_padding, "graph6 padding bits are not zero", 0, in.position() - 1);
    if (! in.done())
        throw ParseError(ParseErrorKind::trailing_garbage,
                "graph6 data continues past byte " + std::to_string(in.position()), 0, in.position());
    return Graph::from_edges(static_cast<int>(n), edges);
}

std::string encode_graph6(const Graph & g)
{
    std::string out;
    const int n = g.order();
    write_order(out, n);
    int chunk = 0;
    int used = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            chunk = (chunk << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++used == 6) {
                out += static_cast<char>(63 + chunk);
                chunk = used = 0;
            }
        }
    }
    if (used)
        out += static_cast<char>(63 + (chunk << (6 - used)));
    return out;
}

std::string read_file(const std::string & path)
{
    std::ifstream in(path, std::ios::binary);
    if (! in)
        throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace edrg

#include <edrg/distances.hh>
#include <edrg/errors.hh>
#include <edrg/families.hh>
#include <edrg/io.hh>

#include <bit>
#include <charconv>
#include <cstdlib>
#include <functional>
#include <map>

namespace edrg {

namespace {

constexpr long max_order = 5000;

void require(bool ok, const std::string & what)
{
    if (! ok)
        throw std::invalid_argument(what);
}

int to_int(std::string_view tok, const std::string & context)
{
    int v = 0;
    const auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || end != tok.data() + tok.size())
        throw std::invalid_argument(context + ": '" + std::string(tok) + "' is not an integer");
    return v;
}

std::string_view trim(std::string_view s)
{
    while (! s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (! s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> out;
    for (;;) {
        const auto at = s.find(sep);
        out.push_back(s.substr(0, at));
        if (at == std::string_view::npos)
            return out;
        s.remove_prefix(at + 1);
    }
}

long binomial(int n, int k)
{
    long r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > max_order)
            return max_order + 1;
    }
    return r;
}

Graph from_predicate(int n, const std::function<bool(int, int)> & adjacent)
{
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (adjacent(u, v))
                edges.push_back({u, v});
    return Graph::from_edges(n, edges);
}

using Builder = std::function<Graph(const std::vector<int> &)>;

struct FamilyEntry {
    std::size_t arity;
    Builder build;
};

const std::map<std::string, FamilyEntry> & registry()
{
    static const std::map<std::string, FamilyEntry> table = {
        {"complete", {1, [](const auto & p) { return complete(p[0]); }}},
        {"complete_bipartite", {2, [](const auto & p) { return complete_bipartite(p[0], p[1]); }}},
        {"cycle", {1, [](const auto & p) { return cycle(p[0]); }}},
        {"path", {1, [](const auto & p) { return path(p[0]); }}},
        {"hypercube", {1, [](const auto & p) { return hypercube(p[0]); }}},
        {"hamming", {2, [](const auto & p) { return hamming(p[0], p[1]); }}},
        {"kneser", {2, [](const auto & p) { return kneser(p[0], p[1]); }}},
        {"odd", {1, [](const auto & p) { return odd_graph(p[0]); }}},
        {"petersen", {0, [](const auto &) { return petersen(); }}},
    };
    return table;
}

}

std::string FamilySpec::to_string() const
{
    std::string s = name;
    for (std::size_t k = 0; k < params.size(); ++k)
        s += (k ? "," : ":") + std::to_string(params[k]);
    return s;
}

FamilySpec parse_family_spec(std::string_view text)
{
    text = trim(text);
    FamilySpec spec;
    const auto colon = text.find(':');
    spec.name = std::string(text.substr(0, colon));
    if (spec.name.empty())
        throw std::invalid_argument("family spec '" + std::string(text) + "' has no name");
    if (colon != std::string_view::npos)
        for (auto tok : split(text.substr(colon + 1), ','))
            spec.params.push_back(to_int(trim(tok), "family spec '" + std::string(text) + "'"));
    return spec;
}

std::vector<std::string> family_names()
{
    std::vector<std::string> out;
    for (const auto & [name, entry] : registry())
        out.push_back(name);
    return out;
}

Graph generate(const FamilySpec & spec)
{
    const auto & table = registry();
    const auto it = table.find(spec.name);
    if (it == table.end())
        throw std::invalid_argument("unknown family '" + spec.name + "'");
    require(spec.params.size() == it->second.arity, "family '" + spec.name + "' takes "
            + std::to_string(it->second.arity) + " parameter(s), got " + std::to_string(spec.params.size()));
    return it->second.build(spec.params);
}

Graph complete(int n)
{
    require(n >= 1 && n <= max_order, "complete(n) needs 1 <= n <= " + std::to_string(max_order));
    return from_predicate(n, [](int, int) { return true; });
}

Graph complete_bipartite(int a, int b)
{
    require(a >= 1 && b >= 1 && long{a} + b <= max_order, "complete_bipartite(a,b) needs a, b >= 1");
    return from_predicate(a + b, [a](int u, int v) { return (u < a) != (v < a); });
}

Graph cycle(int n)
{
    require(n >= 3 && n <= max_order, "cycle(n) needs n >= 3");
    return from_predicate(n, [n](int u, int v) { return v == u + 1 || (u == 0 && v == n - 1); });
}

Graph path(int n)
{
    require(n >= 1 && n <= max_order, "path(n) needs n >= 1");
    return from_predicate(n, [](int u, int v) { return v == u + 1; });
}

Graph hypercube(int k)
{
    require(k >= 1 && k <= 12, "hypercube(k) needs 1 <= k <= 12");
    return from_predicate(1 << k, [](int u, int v) { return std::popcount(static_cast<unsigned>(u ^ v)) == 1; });
}

Graph hamming(int d, int q)
{
    require(d >= 1 && q >= 2, "hamming(d,q) needs d >= 1 and q >= 2");
    long n = 1;
    for (int i = 0; i < d; ++i) {
        n *= q;
        require(n <= max_order, "hamming(d,q) has more than " + std::to_string(max_order) + " vertices");
    }
    return from_predicate(static_cast<int>(n), [d, q](int u, int v) {
        int differ = 0;
        for (int i = 0; i < d; ++i, u /= q, v /= q)
            differ += u % q != v % q;
        return differ == 1;
    });
}

Graph kneser(int n, int k)
{
    require(k >= 1 && n >= 2 * k && n <= 62, "kneser(n,k) needs k >= 1, n >= 2k and n <= 62");
    require(binomial(n, k) <= max_order, "kneser(n,k) has more than " + std::to_string(max_order) + " vertices");
    // Increasing bitmasks of weight k enumerate k-subsets in colex order.
    std::vector<std::uint64_t> sets;
    for (std::uint64_t s = (std::uint64_t{1} << k) - 1; s < (std::uint64_t{1} << n);) {
        sets.push_back(s);
        const std::uint64_t low = s & -s;
        const std::uint64_t ripple = s + low;
        s = ripple | (((s ^ ripple) >> 2) / low);
    }
    return from_predicate(static_cast<int>(sets.size()), [&sets](int u, int v) {
        return (sets[static_cast<std::size_t>(u)] & sets[static_cast<std::size_t>(v)]) == 0;
    });
}

Graph odd_graph(int k)
{
    require(k >= 2, "odd(k) needs k >= 2");
    return kneser(2 * k - 1, k - 1);
}

Graph petersen()
{
    return kneser(5, 2);
}

std::uint64_t fnv1a64(std::string_view bytes)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : bytes) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    return h;
}

IntersectionArray parse_intersection_array(std::string_view text)
{
    text = trim(text);
    if (text.size() < 3 || text.front() != '{' || text.back() != '}')
        throw std::invalid_argument("intersection array '" + std::string(text) + "' is not of the form {..;..}");
    const auto halves = split(text.substr(1, text.size() - 2), ';');
    if (halves.size() != 2)
        throw std::invalid_argument("intersection array '" + std::string(text) + "' needs exactly one ';'");
    IntersectionArray arr;
    for (auto tok : split(halves[0], ','))
        arr.b.push_back(to_int(trim(tok), "intersection array"));
    for (auto tok : split(halves[1], ','))
        arr.c.push_back(to_int(trim(tok), "intersection array"));
    if (arr.b.size() != arr.c.size())
        throw std::invalid_argument("intersection array '" + std::string(text) + "' has unequal halves");
    arr.degree = arr.b.front();
    return arr;
}

FixtureProps parse_fixture_props(std::string_view text)
{
    std::map<std::string, std::string> kv;
    for (auto line : split(text, '\n')) {
        line = trim(line);
        if (line.empty() || line.front() == '#')
            continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw std::invalid_argument("sidecar line '" + std::string(line) + "' has no '='");
        kv[std::string(trim(line.substr(0, eq)))] = std::string(trim(line.substr(eq + 1)));
    }
    const auto get = [&kv](const std::string & key) -> const std::string & {
        const auto it = kv.find(key);
        if (it == kv.end())
            throw std::invalid_argument("sidecar lacks '" + key + "'");
        return it->second;
    };

    FixtureProps p;
    p.n = to_int(get("n"), "sidecar n");
    p.m = to_int(get("m"), "sidecar m");
    p.degree = to_int(get("degree"), "sidecar degree");
    p.array = parse_intersection_array(get("intersection_array"));
    const std::string & sum = get("graph6_fnv1a64");
    std::string_view hex = sum;
    if (hex.starts_with("0x"))
        hex.remove_prefix(2);
    const auto [end, ec] = std::from_chars(hex.data(), hex.data() + hex.size(), p.checksum, 16);
    if (ec != std::errc{} || end != hex.data() + hex.size())
        throw std::invalid_argument("sidecar checksum '" + sum + "' is not hexadecimal");
    return p;
}

std::string fixture_dir()
{
    if (const char * env = std::getenv("EDRG_DATA_DIR"); env && *env)
        return env;
    return EDRG_DATA_DIR;
}

Graph load_fixture(const std::string & name)
{
    require(! name.empty() && name.find_first_not_of("abcdefghijklmnopqrstuvwxyz0123456789_") == std::string::npos,
            "fixture name '" + name + "' may only contain [a-z0-9_]");
    const std::string base = fixture_dir() + "/" + name;

    std::string g6, props_text;
    try {
        g6 = read_file(base + ".g6");
        props_text = read_file(base + ".props");
    }
    catch (const std::runtime_error & e) {
        throw FixtureError("fixture '" + name + "': " + e.what());
    }
    while (! g6.empty() && (g6.back() == '\n' || g6.back() == '\r'))
        g6.pop_back();

    const FixtureProps want = parse_fixture_props(props_text);
    const auto fail = [&name](const std::string & what) { return FixtureError("fixture '" + name + "': " + what); };

    if (fnv1a64(g6) != want.checksum)
        throw fail("graph6 checksum does not match the sidecar");
    const Graph g = parse_graph6(g6);
    if (g.order() != want.n)
        throw fail("order " + std::to_string(g.order()) + ", sidecar says " + std::to_string(want.n));
    if (g.size() != want.m)
        throw fail("size " + std::to_string(g.size()) + ", sidecar says " + std::to_string(want.m));
    const auto delta = regular_degree(g);
    if (! delta || *delta != want.degree)
        throw fail("graph is not " + std::to_string(want.degree) + "-regular");
    const auto drg = classify_drg(g, compute_distances(g));
    if (! drg || ! (*drg.value == want.array))
        throw fail("intersection array " + (drg ? drg.value->to_string() : std::string("none")) + ", sidecar says "
                + want.array.to_string());
    return g;
}

} // namespace edrg

#include <edrg/cli.hh>
#include <edrg/errors.hh>
#include <edrg/families.hh>
#include <edrg/io.hh>

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <ostream>

namespace edrg {

namespace {

struct Options {
    std::string graph6, edges, family, fixture;
    bool machine = false;
    bool no_timing = false;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::pair<Graph, std::string> load_input(const Options & o)
{
    const int given = ! o.graph6.empty() + ! o.edges.empty() + ! o.family.empty() + ! o.fixture.empty();
    if (given != 1)
        throw UsageError("exactly one of --graph6, --edges, --family, --fixture is required");

    if (! o.graph6.empty()) {
        std::error_code ec;
        if (std::filesystem::is_regular_file(o.graph6, ec))
            return {parse_graph6(read_file(o.graph6)), "graph6 file " + o.graph6};
        return {parse_graph6(o.graph6), "graph6 " + o.graph6};
    }
    if (! o.edges.empty())
        return {parse_edge_list(read_file(o.edges)), "edge list " + o.edges};
    if (! o.family.empty()) {
        const FamilySpec spec = parse_family_spec(o.family);
        return {generate(spec), "family " + spec.to_string()};
    }
    return {load_fixture(o.fixture), "fixture " + o.fixture};
}

int execute(Command cmd, const Options & o, std::ostream & out)
{
    auto [g, source] = load_input(o);
    if (cmd == Command::gen) {
        out << encode_graph6(g) << "\n";
        return 0;
    }

    const auto start = std::chrono::steady_clock::now();
    Report r;
    r.command = cmd;
    r.source = std::move(source);
    r.analysis = analyse(g, cmd != Command::classify);
    if (cmd == Command::verify)
        r.ledger = build_ledger(r.analysis);
    if (! o.no_timing)
        r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    out << (o.machine ? render_machine(r) : render_human(r));
    return r.ledger && ! r.ledger->all_pass() ? 1 : 0;
}

}

int run_cli(const std::vector<std::string> & args, std::ostream & out, std::ostream & err)
{
    CLI::App app{"Exact classification of distance-regular and edge-distance-regular graphs", "edrg"};
    app.require_subcommand(1);

    Options o;
    Command chosen = Command::classify;
    const std::pair<Command, const char *> commands[] = {
        {Command::classify, "Report bipartiteness, diameters and the DRG / EDRG / homogeneous verdicts"},
        {Command::polys, "Classification plus the predistance and edge-predistance polynomials"},
        {Command::verify, "Classification, polynomials and the full identity ledger"},
        {Command::gen, "Print the input graph in graph6"},
    };
    const char * names[] = {"classify", "polys", "verify", "gen"};
    for (std::size_t k = 0; k < std::size(commands); ++k) {
        auto * sc = app.add_subcommand(names[k], commands[k].second);
        sc->add_option("--graph6", o.graph6, "graph6 string, or a file holding one");
        sc->add_option("--edges", o.edges, "edge-list file");
        sc->add_option("--family", o.family, "generated family, e.g. hypercube:3 or kneser:7,3");
        sc->add_option("--fixture", o.fixture, "fixture from the data directory, e.g. wells");
        sc->add_flag("--machine", o.machine, "JSON output");
        sc->add_flag("--no-timing", o.no_timing, "omit the timing field");
        const Command c = commands[k].first;
        sc->parse_complete_callback([&chosen, c] { chosen = c; });
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    }
    catch (const CLI::CallForHelp &) {
        out << app.help();
        return 0;
    }
    catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    }
    catch (const CLI::ParseError & e) {
        err << "edrg: " << e.what() << "\n";
        return 2;
    }

    try {
        return execute(chosen, o, out);
    }
    catch (const InternalInconsistency & e) {
        err << "edrg: internal inconsistency: " << e.what() << "\n";
        return 1;
    }
    catch (const ParseError & e) {
        err << "edrg: parse error (" << parse_error_kind_name(e.kind()) << "): " << e.what() << "\n";
        return 2;
    }
    catch (const std::exception & e) {
        // Usage errors, unreadable files, bad family parameters, fixture mismatches,
        // disconnected or edgeless graphs.
        err << "edrg: " << e.what() << "\n";
        return 2;
    }
}

} // namespace edrg

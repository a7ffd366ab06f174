#include <edrg/cli.hh>

#include <json.hpp>

#include <cstdio>
#include <sstream>

namespace edrg {

namespace {

using ordered_json = nlohmann::ordered_json;

const char * command_name(Command c)
{
    switch (c) {
    case Command::classify: return "classify";
    case Command::polys: return "polys";
    case Command::verify: return "verify";
    case Command::gen: return "gen";
    }
    return "?";
}

std::string optional_int(const std::optional<int> & v)
{
    return v ? std::to_string(*v) : "none";
}

std::string quotient_text(const HomogeneousQuotient & q)
{
    std::string s = "cells";
    for (const auto & l : q.labels)
        s += " (" + std::to_string(l.i) + "," + std::to_string(l.j) + ")";
    return s;
}

template <class T>
std::string verdict_text(const Verdict<T> & v, const std::string & value_text)
{
    if (v.value)
        return value_text;
    std::string s = "none";
    if (v.witness)
        s += " (" + v.witness->describe() + ")";
    else if (! v.reason.empty())
        s += " (" + v.reason + ")";
    return s;
}

std::string format_ms(double ms)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", ms);
    return buf;
}

void poly_lines(std::ostringstream & os, const std::string & name, const PolySequence & seq)
{
    for (std::size_t i = 0; i < seq.polys.size(); ++i)
        os << name << "_" << i << " = " << seq.polys[i].to_string() << "\n";
}

ordered_json poly_json(const PolySequence & seq)
{
    ordered_json arr = ordered_json::array();
    for (const auto & p : seq.polys) {
        ordered_json coeffs = ordered_json::array();
        for (const auto & c : p.coefficients())
            coeffs.push_back(c.to_string());
        arr.push_back({{"text", p.to_string()}, {"coefficients", coeffs}});
    }
    return arr;
}

template <class T>
ordered_json verdict_json(const Verdict<T> & v, ordered_json value)
{
    if (v.value)
        return value;
    ordered_json j = {{"value", nullptr}};
    if (v.witness)
        j["witness"] = v.witness->describe();
    else if (! v.reason.empty())
        j["witness"] = v.reason;
    return j;
}

}

std::string render_human(const Report & r)
{
    const auto & a = r.analysis;
    const auto & c = a.report;
    std::ostringstream os;
    os << "command: " << command_name(r.command) << "\n";
    os << "input: " << r.source << "\n";
    os << "order: " << c.order << "\n";
    os << "size: " << c.size << "\n";
    os << "regular: " << optional_int(c.regular) << "\n";
    os << "bipartite: " << (c.bipartite ? "yes" : "no") << "\n";
    os << "odd_girth: " << optional_int(c.odd_girth) << "\n";
    os << "diameter: " << c.diameter << "\n";
    os << "edge_diameter: " << c.edge_diameter << "\n";
    os << "drg: " << verdict_text(c.drg, c.drg ? c.drg.value->to_string() : "") << "\n";
    os << "edrg: " << verdict_text(c.edrg, c.edrg ? c.edrg.value->to_string() + (c.edrg_vacuous ? " (vacuous)" : "") : "")
       << "\n";
    os << "homogeneous: " << verdict_text(c.homogeneous, c.homogeneous ? quotient_text(*c.homogeneous.value) : "") << "\n";
    os << "generalized_odd: " << (c.generalized_odd ? "yes" : "no") << "\n";

    if (r.command != Command::classify) {
        if (a.vertex_polys && a.edge_polys) {
            poly_lines(os, "p", *a.vertex_polys);
            poly_lines(os, "p~", *a.edge_polys);
        }
        else
            os << "polynomials: none (graph is not regular)\n";
    }
    if (r.ledger) {
        for (const auto & e : r.ledger->entries) {
            os << "[" << ledger_status_name(e.status) << "] " << e.id << ": " << e.claim;
            if (! e.detail.empty())
                os << " -- " << e.detail;
            os << "\n";
        }
        os << "ledger: " << (r.ledger->all_pass() ? "pass" : "FAIL") << "\n";
    }
    if (r.elapsed_ms)
        os << "time_ms: " << format_ms(*r.elapsed_ms) << "\n";
    return os.str();
}

std::string render_machine(const Report & r)
{
    const auto & a = r.analysis;
    const auto & c = a.report;
    ordered_json j;
    j["command"] = command_name(r.command);
    j["input"] = r.source;
    j["graph"] = {{"order", c.order}, {"size", c.size}};
    j["regular"] = c.regular ? ordered_json(*c.regular) : ordered_json(nullptr);
    j["bipartite"] = c.bipartite;
    j["odd_girth"] = c.odd_girth ? ordered_json(*c.odd_girth) : ordered_json(nullptr);
    j["diameter"] = c.diameter;
    j["edge_diameter"] = c.edge_diameter;
    j["drg"] = verdict_json(c.drg, c.drg ? ordered_json(c.drg.value->to_string()) : ordered_json());
    j["edrg"] = verdict_json(c.edrg, c.edrg ? ordered_json(c.edrg.value->to_string()) : ordered_json());
    j["edrg_vacuous"] = c.edrg_vacuous;
    ordered_json hq;
    if (c.homogeneous) {
        ordered_json labels = ordered_json::array();
        for (const auto & l : c.homogeneous.value->labels)
            labels.push_back({l.i, l.j});
        hq = {{"cells", labels}, {"quotient", c.homogeneous.value->counts}};
    }
    j["homogeneous"] = verdict_json(c.homogeneous, hq);
    j["generalized_odd"] = c.generalized_odd;

    if (r.command != Command::classify) {
        if (a.vertex_polys && a.edge_polys)
            j["polynomials"] = {{"vertex", poly_json(*a.vertex_polys)}, {"edge", poly_json(*a.edge_polys)}};
        else
            j["polynomials"] = nullptr;
    }
    if (r.ledger) {
        ordered_json entries = ordered_json::array();
        for (const auto & e : r.ledger->entries)
            entries.push_back({{"id", e.id}, {"status", ledger_status_name(e.status)}, {"claim", e.claim},
                    {"detail", e.detail}});
        j["ledger"] = {{"pass", r.ledger->all_pass()}, {"entries", entries}};
    }
    if (r.elapsed_ms)
        j["time_ms"] = *r.elapsed_ms;
    return j.dump(2) + "\n";
}

} // namespace edrg

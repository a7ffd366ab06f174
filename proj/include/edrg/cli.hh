#pragma once

#include <edrg/verify.hh>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace edrg {

enum class Command { classify, polys, verify, gen };

/// What one invocation produced; rendering is separate so the same report can be
/// printed line by line or as JSON.
struct Report {
    Command command = Command::classify;
    std::string source;           // e.g. "family hypercube:3"
    Analysis analysis;
    std::optional<Ledger> ledger; // verify only
    std::optional<double> elapsed_ms;
};

/// "key: value" lines. Deterministic apart from the final "time_ms" line.
std::string render_human(const Report & r);

/// Pretty-printed JSON with a fixed key order.
std::string render_machine(const Report & r);

/// Exit codes: 0 all requested checks pass, 1 a verification failed, 2 usage or input error.
/// `args` excludes the program name.
int run_cli(const std::vector<std::string> & args, std::ostream & out, std::ostream & err);

} // namespace edrg

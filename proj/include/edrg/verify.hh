#pragma once

#include <edrg/classify.hh>
#include <edrg/distances.hh>
#include <edrg/graph.hh>
#include <edrg/polynomials.hh>

#include <optional>
#include <string>
#include <vector>

namespace edrg {

/// Everything computed about one graph. Polynomial sequences are present only for
/// regular graphs (the normalisation evaluates at the valency).
struct Analysis {
    Graph graph;
    DistanceData dd;
    ClassificationReport report;
    std::optional<PolySequence> vertex_polys; // Gram-Schmidt
    std::optional<PolySequence> edge_polys;   // Gram-Schmidt
};

/// Throws DisconnectedGraph / GraphError for graphs the analysis does not apply to.
Analysis analyse(const Graph & g, bool with_polys);

enum class LedgerStatus { pass, fail, not_applicable };

const char * ledger_status_name(LedgerStatus s) noexcept;

struct LedgerEntry {
    std::string id;     // stable short key, e.g. "edrg_iff", "rel.top_nonbipartite"
    std::string claim;  // one-line statement
    LedgerStatus status = LedgerStatus::not_applicable;
    std::string detail; // witness on failure, reason when not applicable
};

struct Ledger {
    std::vector<LedgerEntry> entries;

    bool all_pass() const;
    const LedgerEntry * find(const std::string & id) const;
};

/// Limits above which the quadratic-in-n spot checks are reported as not applicable.
struct LedgerLimits {
    int max_order_triples = 128;
    int max_order_proof_facts = 64;
};

/// Runs every identity that applies to the graph. Requires `a.vertex_polys` when the
/// graph is regular.
Ledger build_ledger(const Analysis & a, const LedgerLimits & limits = {});

/// Tallies of the pointwise counting identities over all (oriented edge, vertex) triples.
struct ProofFactTally {
    std::size_t equations = 0;
    std::size_t equation_failures = 0;
    std::size_t containment_checks = 0;
    std::size_t containment_failures = 0;
    std::string first_failure;
};

/// a_known_zero is derived from the intersection array when the graph is distance-regular.
ProofFactTally tally_proof_facts(const Graph & g, const DistanceData & dd, const std::optional<IntersectionArray> & arr);

/// Edge array predicted from a vertex array for bipartite graphs and generalized odd
/// graphs; empty when neither applies.
std::optional<EdgeIntersectionArray> predicted_edge_array(const IntersectionArray & arr, bool bipartite,
        bool generalized_odd);

} // namespace edrg

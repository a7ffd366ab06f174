#pragma once

#include <edrg/distances.hh>
#include <edrg/graph.hh>
#include <edrg/vertex_set.hh>

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace edrg {

/// Neighbours of w split by their distance from u, where i = dist(w, u):
/// c in stratum i-1, a in stratum i, b in stratum i+1.
struct LocalCounts {
    int i = 0;
    int c = 0, a = 0, b = 0;

    friend bool operator==(const LocalCounts &, const LocalCounts &) = default;
};

LocalCounts local_counts(const Graph & g, const DistanceData & dd, Vertex w, Vertex u);

/// Label (i, j) of the cell V_{i,j}(u,v) = Γ_i(u) ∩ Γ_j(v).
struct CellLabel {
    int i, j;

    friend auto operator<=>(const CellLabel &, const CellLabel &) = default;
};

/// Joint distance partition from two adjacent vertices. Only nonempty cells are stored.
struct PairPartition {
    Vertex u = 0, v = 0;
    std::map<CellLabel, std::vector<Vertex>> cells;
    std::vector<CellLabel> label_of;

    std::span<const Vertex> cell(int i, int j) const;
    bool is_empty(int i, int j) const { return cell(i, j).empty(); }
};

/// Throws GraphError if u and v are not adjacent.
PairPartition pair_partition(const Graph & g, const DistanceData & dd, Vertex u, Vertex v);

/// Distance partition Ṽ_0..Ṽ_ecc from the edge {u, v}; built by breadth-first search
/// from the pair, independently of the all-pairs distance table.
struct EdgePartition {
    Vertex u = 0, v = 0;
    std::vector<std::vector<Vertex>> layers;
    std::vector<VertexSet> layer_sets;
    std::vector<int> layer_of;

    int eccentricity() const { return static_cast<int>(layers.size()) - 1; }
};

/// Throws GraphError if u and v are not adjacent.
EdgePartition edge_partition(const Graph & g, Vertex u, Vertex v);

/// Neighbours of w in Ṽ_{i-1}, Ṽ_i, Ṽ_{i+1} where w ∈ Ṽ_i.
LocalCounts edge_local_counts(const Graph & g, const EdgePartition & part, Vertex w);

/// Quotient matrix q[s][t] = neighbours a vertex of cell s has in cell t.
using Quotient = std::vector<std::vector<int>>;

/// Quotient if the partition is equitable, empty otherwise.
/// Throws std::invalid_argument when `cells` is not a partition of the vertex set into nonempty cells.
std::optional<Quotient> is_equitable(const Graph & g, std::span<const std::vector<Vertex>> cells);

/// One side-by-side evaluation of a counting identity from the characterisation proof.
struct EquationCheck {
    std::string name;   // desig1, desig3, desig3b, desig5
    int stratum = 0;    // the i in the equation
    long lhs = 0, rhs = 0;

    bool balanced() const { return lhs == rhs; }
};

struct ProofFacts {
    Vertex u = 0, v = 0, w = 0;
    CellLabel cell{0, 0};
    std::vector<EquationCheck> equations;
    std::vector<std::string> skipped;        // "<equation>: <reason>"
    std::size_t containment_checks = 0;      // neighbour-level facts (i)-(iii) checked
    std::size_t containment_failures = 0;
};

/// Evaluates both sides of every equation applicable to w's cell, counting each side
/// from raw neighbour lists. The edge-layer side uses the BFS-from-pair partition; the
/// vertex side uses the all-pairs table. desig3b is evaluated only for strata i with
/// a_known_zero[i] set by the caller.
ProofFacts proof_fact_oracles(const Graph & g, const DistanceData & dd, const EdgePartition & part, Vertex w,
        const std::vector<bool> & a_known_zero);

ProofFacts proof_fact_oracles(const Graph & g, const DistanceData & dd, Vertex u, Vertex v, Vertex w,
        const std::vector<bool> & a_known_zero);

} // namespace edrg

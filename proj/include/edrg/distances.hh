#pragma once

#include <edrg/graph.hh>
#include <edrg/rat_matrix.hh>

#include <optional>
#include <span>
#include <vector>

namespace edrg {

/// dist(i, sources) for every vertex i. Throws DisconnectedGraph naming the first
/// vertex left unreached, or std::invalid_argument if `sources` is empty.
std::vector<int> bfs_from_set(const Graph & g, std::span<const Vertex> sources);

/// All-pairs distances plus the edge-rooted quantities derived from them.
struct DistanceData {
    int n = 0;
    std::vector<int> dist;              // n*n, row-major
    int diameter = 0;
    std::vector<int> edge_eccentricity; // aligned with Graph::edges()
    int edge_diameter = 0;

    int at(Vertex u, Vertex v) const { return dist[static_cast<std::size_t>(u) * static_cast<std::size_t>(n) + static_cast<std::size_t>(v)]; }

    /// dist(w, {e.u, e.v})
    int to_edge(Vertex w, const Edge & e) const { return std::min(at(w, e.u), at(w, e.v)); }

    std::span<const int> row(Vertex u) const
    {
        return std::span<const int>(dist).subspan(static_cast<std::size_t>(u) * static_cast<std::size_t>(n),
                static_cast<std::size_t>(n));
    }
};

/// Throws DisconnectedGraph for disconnected input, GraphError for a graph without edges.
DistanceData compute_distances(const Graph & g);

/// A_0 .. A_D with (A_i)_{uv} = 1 iff dist(u,v) = i.
std::vector<RatMatrix> distance_matrix_family(const Graph & g, const DistanceData & dd);
std::vector<RatMatrix> distance_matrix_family(const Graph & g);

/// B_0 .. B_{D~}, n x m, with (B_i)_{ue} = 1 iff dist(u, e) = i; columns follow Graph::edges().
std::vector<RatMatrix> incidence_matrix_family(const Graph & g, const DistanceData & dd);
std::vector<RatMatrix> incidence_matrix_family(const Graph & g);

RatMatrix adjacency_matrix(const Graph & g);

/// Common degree, or empty if the graph is not regular.
std::optional<int> regular_degree(const Graph & g);

/// Two-colouring (0/1 per vertex) if the graph is bipartite.
std::optional<std::vector<int>> bipartition(const Graph & g);
inline bool is_bipartite(const Graph & g) { return bipartition(g).has_value(); }

/// Length of a shortest odd cycle; empty exactly when the graph is bipartite.
/// For every root r, an edge xy with dist(r,x) == dist(r,y) closes an odd walk of
/// length 2 dist(r,x) + 1 through r; the minimum over roots and edges is the odd girth.
std::optional<int> odd_girth(const Graph & g, const DistanceData & dd);

} // namespace edrg

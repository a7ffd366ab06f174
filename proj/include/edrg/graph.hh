#pragma once

#include <edrg/vertex_set.hh>

#include <compare>
#include <span>
#include <vector>

namespace edrg {

using Vertex = int;

/// Unordered edge in canonical form u < v.
struct Edge {
    Vertex u, v;

    friend auto operator<=>(const Edge &, const Edge &) = default;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Edges are kept in lexicographic order of their canonical (min, max) pairs; that
/// order is the column order of every vertex-by-edge matrix built from the graph.
class Graph {
public:
    Graph() = default;

    /// Throws GraphError on loops, repeated edges or out-of-range endpoints.
    /// Endpoint order within an edge is irrelevant.
    static Graph from_edges(int n, std::span<const Edge> edges);

    int order() const noexcept { return n_; }
    int size() const noexcept { return static_cast<int>(edges_.size()); }

    std::span<const Vertex> neighbours(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)]; }
    const VertexSet & neighbour_set(Vertex v) const { return neighbour_sets_[static_cast<std::size_t>(v)]; }
    int degree(Vertex v) const { return static_cast<int>(adjacency_[static_cast<std::size_t>(v)].size()); }
    bool adjacent(Vertex u, Vertex v) const { return neighbour_sets_[static_cast<std::size_t>(u)].contains(v); }

    std::span<const Edge> edges() const noexcept { return edges_; }

    /// Index of edge {u,v} in edges(), or -1 if absent.
    int edge_index(Vertex u, Vertex v) const;

    friend bool operator==(const Graph & a, const Graph & b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

private:
    int n_ = 0;
    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<VertexSet> neighbour_sets_;
    std::vector<Edge> edges_;
};

} // namespace edrg

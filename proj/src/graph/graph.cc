#include <edrg/errors.hh>
#include <edrg/graph.hh>

#include <algorithm>
#include <string>

namespace edrg {

Graph Graph::from_edges(int n, std::span<const Edge> edges)
{
    if (n < 0)
        throw GraphError("negative vertex count");

    Graph g;
    g.n_ = n;
    g.adjacency_.resize(static_cast<std::size_t>(n));
    g.neighbour_sets_.assign(static_cast<std::size_t>(n), VertexSet(n));
    g.edges_.reserve(edges.size());

    for (const auto & e : edges) {
        if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
            throw GraphError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} has an endpoint outside 0.."
                    + std::to_string(n - 1));
        if (e.u == e.v)
            throw GraphError("self-loop at vertex " + std::to_string(e.u));
        g.edges_.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    if (auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end()); dup != g.edges_.end())
        throw GraphError("repeated edge {" + std::to_string(dup->u) + "," + std::to_string(dup->v) + "}");

    for (const auto & e : g.edges_) {
        g.adjacency_[static_cast<std::size_t>(e.u)].push_back(e.v);
        g.adjacency_[static_cast<std::size_t>(e.v)].push_back(e.u);
        g.neighbour_sets_[static_cast<std::size_t>(e.u)].insert(e.v);
        g.neighbour_sets_[static_cast<std::size_t>(e.v)].insert(e.u);
    }
    for (auto & nb : g.adjacency_)
        std::sort(nb.begin(), nb.end());
    return g;
}

int Graph::edge_index(Vertex u, Vertex v) const
{
    const Edge key{std::min(u, v), std::max(u, v)};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it == edges_.end() || *it != key)
        return -1;
    return static_cast<int>(it - edges_.begin());
}

} // namespace edrg

#include <edrg/distances.hh>
#include <edrg/errors.hh>

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace edrg {

std::vector<int> bfs_from_set(const Graph & g, std::span<const Vertex> sources)
{
    if (sources.empty())
        throw std::invalid_argument("breadth-first search needs at least one source");

    std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
    std::deque<Vertex> queue;
    for (auto s : sources) {
        if (s < 0 || s >= g.order())
            throw GraphError("source vertex " + std::to_string(s) + " out of range");
        if (dist[static_cast<std::size_t>(s)] != 0) {
            dist[static_cast<std::size_t>(s)] = 0;
            queue.push_back(s);
        }
    }
    while (! queue.empty()) {
        const Vertex x = queue.front();
        queue.pop_front();
        for (auto y : g.neighbours(x))
            if (dist[static_cast<std::size_t>(y)] < 0) {
                dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
                queue.push_back(y);
            }
    }
    if (auto it = std::find(dist.begin(), dist.end(), -1); it != dist.end())
        throw DisconnectedGraph(static_cast<int>(it - dist.begin()));
    return dist;
}

DistanceData compute_distances(const Graph & g)
{
    if (g.size() == 0)
        throw GraphError("analysis needs a graph with at least one edge");

    DistanceData dd;
    dd.n = g.order();
    dd.dist.reserve(static_cast<std::size_t>(dd.n) * static_cast<std::size_t>(dd.n));
    for (Vertex u = 0; u < dd.n; ++u) {
        const Vertex src[] = {u};
        auto row = bfs_from_set(g, src);
        dd.diameter = std::max(dd.diameter, *std::max_element(row.begin(), row.end()));
        dd.dist.insert(dd.dist.end(), row.begin(), row.end());
    }
    for (const auto & e : g.edges()) {
        int ecc = 0;
        for (Vertex w = 0; w < dd.n; ++w)
            ecc = std::max(ecc, dd.to_edge(w, e));
        dd.edge_eccentricity.push_back(ecc);
        dd.edge_diameter = std::max(dd.edge_diameter, ecc);
    }
    return dd;
}

RatMatrix adjacency_matrix(const Graph & g)
{
    const auto n = static_cast<std::size_t>(g.order());
    RatMatrix a(n, n);
    for (const auto & e : g.edges()) {
        a(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v)) = 1;
        a(static_cast<std::size_t>(e.v), static_cast<std::size_t>(e.u)) = 1;
    }
    return a;
}

std::vector<RatMatrix> distance_matrix_family(const Graph & g, const DistanceData & dd)
{
    const auto n = static_cast<std::size_t>(g.order());
    std::vector<RatMatrix> family(static_cast<std::size_t>(dd.diameter) + 1, RatMatrix(n, n));
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
            family[static_cast<std::size_t>(dd.at(static_cast<Vertex>(u), static_cast<Vertex>(v)))](u, v) = 1;
    return family;
}

std::vector<RatMatrix> distance_matrix_family(const Graph & g)
{
    return distance_matrix_family(g, compute_distances(g));
}

std::vector<RatMatrix> incidence_matrix_family(const Graph & g, const DistanceData & dd)
{
    const auto n = static_cast<std::size_t>(g.order());
    const auto m = static_cast<std::size_t>(g.size());
    std::vector<RatMatrix> family(static_cast<std::size_t>(dd.edge_diameter) + 1, RatMatrix(n, m));
    const auto edges = g.edges();
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t e = 0; e < m; ++e)
            family[static_cast<std::size_t>(dd.to_edge(static_cast<Vertex>(u), edges[e]))](u, e) = 1;
    return family;
}

std::vector<RatMatrix> incidence_matrix_family(const Graph & g)
{
    return incidence_matrix_family(g, compute_distances(g));
}

std::optional<int> regular_degree(const Graph & g)
{
    if (g.order() == 0)
        return std::nullopt;
    const int d = g.degree(0);
    for (Vertex v = 1; v < g.order(); ++v)
        if (g.degree(v) != d)
            return std::nullopt;
    return d;
}

std::optional<std::vector<int>> bipartition(const Graph & g)
{
    std::vector<int> colour(static_cast<std::size_t>(g.order()), -1);
    for (Vertex s = 0; s < g.order(); ++s) {
        if (colour[static_cast<std::size_t>(s)] >= 0)
            continue;
        colour[static_cast<std::size_t>(s)] = 0;
        std::deque<Vertex> queue{s};
        while (! queue.empty()) {
            const Vertex x = queue.front();
            queue.pop_front();
            for (auto y : g.neighbours(x)) {
                auto & cy = colour[static_cast<std::size_t>(y)];
                if (cy < 0) {
                    cy = 1 - colour[static_cast<std::size_t>(x)];
                    queue.push_back(y);
                }
                else if (cy == colour[static_cast<std::size_t>(x)])
                    return std::nullopt;
            }
        }
    }
    return colour;
}

std::optional<int> odd_girth(const Graph & g, const DistanceData & dd)
{
    std::optional<int> best;
    for (Vertex r = 0; r < g.order(); ++r)
        for (const auto & e : g.edges()) {
            const int du = dd.at(r, e.u);
            if (du == dd.at(r, e.v) && (! best || 2 * du + 1 < *best))
                best = 2 * du + 1;
        }
    return best;
}

} // namespace edrg

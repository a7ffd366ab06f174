#pragma once
// Graph corpus shared by the property tests and the acceptance run.

#include <edrg/distances.hh>
#include <edrg/errors.hh>
#include <edrg/families.hh>

#include <random>
#include <string>
#include <vector>

namespace edrg::testing {

struct NamedGraph {
    std::string name;
    Graph graph;
};

inline bool connected(const Graph & g)
{
    try {
        const Vertex root = 0;
        bfs_from_set(g, std::span<const Vertex>(&root, 1));
        return true;
    }
    catch (const DisconnectedGraph &) {
        return false;
    }
}

// G(n,p), resampled until connected.
inline Graph random_gnp(std::mt19937_64 & rng, int n, double p)
{
    std::bernoulli_distribution coin(p);
    for (;;) {
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng))
                    edges.push_back({u, v});
        Graph g = Graph::from_edges(n, edges);
        if (g.size() > 0 && connected(g))
            return g;
    }
}

// Uniform-ish k-regular graph by repeated random pairing; n*k must be even.
inline Graph random_regular(std::mt19937_64 & rng, int n, int k)
{
    for (;;) {
        std::vector<Vertex> stubs;
        for (int v = 0; v < n; ++v)
            for (int j = 0; j < k; ++j)
                stubs.push_back(v);
        std::shuffle(stubs.begin(), stubs.end(), rng);
        std::vector<Edge> edges;
        bool ok = true;
        for (std::size_t s = 0; s + 1 < stubs.size() && ok; s += 2) {
            const Edge e{std::min(stubs[s], stubs[s + 1]), std::max(stubs[s], stubs[s + 1])};
            ok = e.u != e.v && std::find(edges.begin(), edges.end(), e) == edges.end();
            edges.push_back(e);
        }
        if (! ok)
            continue;
        Graph g = Graph::from_edges(n, edges);
        if (connected(g))
            return g;
    }
}

inline std::vector<NamedGraph> named_corpus()
{
    std::vector<NamedGraph> out;
    for (int n = 2; n <= 6; ++n)
        out.push_back({"K" + std::to_string(n), complete(n)});
    for (int n = 4; n <= 9; ++n)
        out.push_back({"C" + std::to_string(n), cycle(n)});
    for (int k = 1; k <= 5; ++k)
        out.push_back({"Q" + std::to_string(k), hypercube(k)});
    for (int k = 2; k <= 4; ++k)
        out.push_back({"O" + std::to_string(k), odd_graph(k)});
    out.push_back({"H(2,3)", hamming(2, 3)});
    out.push_back({"K3,3", complete_bipartite(3, 3)});
    out.push_back({"Petersen", petersen()});
    out.push_back({"Wells", load_fixture("wells")});
    out.push_back({"P4", path(4)});
    return out;
}

// 200 connected graphs on at most 12 vertices: half G(n,p), half random regular.
inline std::vector<NamedGraph> random_corpus(std::size_t count = 200, std::uint64_t seed = 20240601)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> order(4, 12);
    std::uniform_real_distribution<double> density(0.2, 0.8);
    std::vector<NamedGraph> out;
    for (std::size_t i = 0; i < count; ++i) {
        const int n = order(rng);
        if (i % 2 == 0) {
            out.push_back({"gnp#" + std::to_string(i), random_gnp(rng, n, density(rng))});
            continue;
        }
        std::uniform_int_distribution<int> deg(2, std::min(4, n - 1));
        int k = deg(rng);
        if ((n * k) % 2)
            --k;
        out.push_back({"reg#" + std::to_string(i), random_regular(rng, n, k)});
    }
    return out;
}

inline std::vector<NamedGraph> full_corpus()
{
    auto out = named_corpus();
    for (auto & g : random_corpus())
        out.push_back(std::move(g));
    return out;
}

} // namespace edrg::testing

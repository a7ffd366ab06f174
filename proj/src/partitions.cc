#include <edrg/errors.hh>
#include <edrg/partitions.hh>

#include <algorithm>
#include <stdexcept>

namespace edrg {

namespace {

void require_adjacent(const Graph & g, Vertex u, Vertex v)
{
    if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || ! g.adjacent(u, v))
        throw GraphError("vertices " + std::to_string(u) + " and " + std::to_string(v) + " are not adjacent");
}

}

LocalCounts local_counts(const Graph & g, const DistanceData & dd, Vertex w, Vertex u)
{
    LocalCounts lc;
    lc.i = dd.at(w, u);
    for (auto x : g.neighbours(w)) {
        const int dx = dd.at(x, u);
        if (dx == lc.i - 1)
            ++lc.c;
        else if (dx == lc.i)
            ++lc.a;
        else
            ++lc.b;
    }
    return lc;
}

std::span<const Vertex> PairPartition::cell(int i, int j) const
{
    auto it = cells.find({i, j});
    if (it == cells.end())
        return {};
    return it->second;
}

PairPartition pair_partition(const Graph & g, const DistanceData & dd, Vertex u, Vertex v)
{
    require_adjacent(g, u, v);
    PairPartition p;
    p.u = u;
    p.v = v;
    p.label_of.resize(static_cast<std::size_t>(g.order()));
    for (Vertex w = 0; w < g.order(); ++w) {
        const CellLabel label{dd.at(w, u), dd.at(w, v)};
        p.label_of[static_cast<std::size_t>(w)] = label;
        p.cells[label].push_back(w);
    }
    return p;
}

EdgePartition edge_partition(const Graph & g, Vertex u, Vertex v)
{
    require_adjacent(g, u, v);
    const Vertex base[] = {u, v};
    EdgePartition p;
    p.u = u;
    p.v = v;
    p.layer_of = bfs_from_set(g, base);
    const int ecc = *std::max_element(p.layer_of.begin(), p.layer_of.end());
    p.layers.resize(static_cast<std::size_t>(ecc) + 1);
    p.layer_sets.assign(static_cast<std::size_t>(ecc) + 1, VertexSet(g.order()));
    for (Vertex w = 0; w < g.order(); ++w) {
        const auto layer = static_cast<std::size_t>(p.layer_of[static_cast<std::size_t>(w)]);
        p.layers[layer].push_back(w);
        p.layer_sets[layer].insert(w);
    }
    return p;
}

LocalCounts edge_local_counts(const Graph & g, const EdgePartition & part, Vertex w)
{
    LocalCounts lc;
    lc.i = part.layer_of[static_cast<std::size_t>(w)];
    const auto & nb = g.neighbour_set(w);
    const auto layer_count = [&](int k) -> int {
        if (k < 0 || k > part.eccentricity())
            return 0;
        return static_cast<int>(nb.count_common(part.layer_sets[static_cast<std::size_t>(k)]));
    };
    lc.c = layer_count(lc.i - 1);
    lc.a = layer_count(lc.i);
    lc.b = layer_count(lc.i + 1);
    return lc;
}

std::optional<Quotient> is_equitable(const Graph & g, std::span<const std::vector<Vertex>> cells)
{
    std::vector<int> owner(static_cast<std::size_t>(g.order()), -1);
    std::vector<VertexSet> sets;
    sets.reserve(cells.size());
    for (std::size_t s = 0; s < cells.size(); ++s) {
        if (cells[s].empty())
            throw std::invalid_argument("partition cell " + std::to_string(s) + " is empty");
        VertexSet set(g.order());
        for (auto x : cells[s]) {
            if (x < 0 || x >= g.order())
                throw std::invalid_argument("partition mentions vertex " + std::to_string(x) + " outside the graph");
            if (owner[static_cast<std::size_t>(x)] >= 0)
                throw std::invalid_argument("vertex " + std::to_string(x) + " lies in two partition cells");
            owner[static_cast<std::size_t>(x)] = static_cast<int>(s);
            set.insert(x);
        }
        sets.push_back(std::move(set));
    }
    if (auto it = std::find(owner.begin(), owner.end(), -1); it != owner.end())
        throw std::invalid_argument("vertex " + std::to_string(it - owner.begin()) + " is in no partition cell");

    Quotient q(cells.size(), std::vector<int>(cells.size(), 0));
    for (std::size_t s = 0; s < cells.size(); ++s)
        for (std::size_t t = 0; t < cells.size(); ++t) {
            const auto expect = g.neighbour_set(cells[s].front()).count_common(sets[t]);
            for (auto x : cells[s])
                if (g.neighbour_set(x).count_common(sets[t]) != expect)
                    return std::nullopt;
            q[s][t] = static_cast<int>(expect);
        }
    return q;
}

ProofFacts proof_fact_oracles(const Graph & g, const DistanceData & dd, const EdgePartition & part, Vertex w,
        const std::vector<bool> & a_known_zero)
{
    const Vertex u = part.u, v = part.v;
    const int d = dd.diameter;
    ProofFacts f;
    f.u = u;
    f.v = v;
    f.w = w;
    const int i = dd.at(w, u);
    const int j = dd.at(w, v);
    f.cell = {i, j};

    const auto nbrs = g.neighbours(w);
    const auto in_layer = [&](int k) -> long {
        return std::count_if(nbrs.begin(), nbrs.end(),
                [&](Vertex x) { return part.layer_of[static_cast<std::size_t>(x)] == k; });
    };
    const auto at_u = [&](int k) -> long {
        return std::count_if(nbrs.begin(), nbrs.end(), [&](Vertex x) { return dd.at(x, u) == k; });
    };
    const auto at_v = [&](int k) -> long {
        return std::count_if(nbrs.begin(), nbrs.end(), [&](Vertex x) { return dd.at(x, v) == k; });
    };
    const auto in_cell = [&](int r, int s) -> long {
        return std::count_if(nbrs.begin(), nbrs.end(), [&](Vertex x) { return dd.at(x, u) == r && dd.at(x, v) == s; });
    };
    const auto contain = [&](bool ok) {
        ++f.containment_checks;
        if (! ok)
            ++f.containment_failures;
    };
    const std::string range_note = "stratum " + std::to_string(i) + " outside ";

    if (j == i - 1) {
        if (i >= 1 && i <= d - 1) {
            f.equations.push_back({"desig1", i, in_layer(i), at_u(i + 1) + in_cell(i, i)});
            for (auto x : nbrs)
                if (dd.at(x, u) == i + 1)
                    contain(dd.at(x, v) == i);
        }
        else
            f.skipped.push_back("desig1: " + range_note + "1..d-1");
    }
    else if (j == i + 1) {
        if (i >= 1 && i <= d - 1) {
            f.equations.push_back({"desig3", i, in_layer(i - 1), at_u(i - 1)});
            for (auto x : nbrs)
                if (dd.at(x, u) == i - 1)
                    contain(dd.at(x, v) == i);
            if (static_cast<std::size_t>(i) < a_known_zero.size() && a_known_zero[static_cast<std::size_t>(i)])
                f.equations.push_back({"desig3b", i, in_layer(i - 1) + in_layer(i), at_v(i)});
            else
                f.skipped.push_back("desig3b: a_" + std::to_string(i) + " not known to be zero");
        }
        else {
            f.skipped.push_back("desig3: " + range_note + "1..d-1");
            f.skipped.push_back("desig3b: " + range_note + "1..d-1");
        }
    }
    else if (j == i) {
        if (i >= 1 && i <= d) {
            f.equations.push_back({"desig5", i, in_layer(i - 1), at_u(i - 1) + at_v(i - 1) - in_cell(i - 1, i - 1)});
            for (auto x : nbrs) {
                if (dd.at(x, u) == i - 1)
                    contain(dd.at(x, v) == i || dd.at(x, v) == i - 1);
                if (dd.at(x, v) == i - 1)
                    contain(dd.at(x, u) == i || dd.at(x, u) == i - 1);
            }
        }
        else
            f.skipped.push_back("desig5: " + range_note + "1..d");
    }
    else
        throw InternalInconsistency("vertex " + std::to_string(w) + " has |dist(w,u) - dist(w,v)| > 1 for an edge");
    return f;
}

ProofFacts proof_fact_oracles(const Graph & g, const DistanceData & dd, Vertex u, Vertex v, Vertex w,
        const std::vector<bool> & a_known_zero)
{
    return proof_fact_oracles(g, dd, edge_partition(g, u, v), w, a_known_zero);
}

} // namespace edrg

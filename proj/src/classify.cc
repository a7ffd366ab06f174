#include <edrg/classify.hh>
#include <edrg/errors.hh>

#include <algorithm>

namespace edrg {

namespace {

std::string counts_text(const LocalCounts & lc)
{
    return "(c,a,b)=(" + std::to_string(lc.c) + "," + std::to_string(lc.a) + "," + std::to_string(lc.b) + ")";
}

// Per-stratum "all equal" reduction that remembers the first observation.
class StratumAgreement {
public:
    // Returns false (and records a witness) on the first disagreement.
    bool observe(const LocalCounts & lc, const std::string & where)
    {
        const auto i = static_cast<std::size_t>(lc.i);
        if (seen_.size() <= i) {
            seen_.resize(i + 1);
            where_.resize(i + 1);
        }
        if (! seen_[i]) {
            seen_[i] = lc;
            where_[i] = where;
            return true;
        }
        if (*seen_[i] == lc)
            return true;
        witness_ = DisagreementWitness{where_[i], where, *seen_[i], lc};
        return false;
    }

    const std::optional<DisagreementWitness> & witness() const { return witness_; }
    const std::vector<std::optional<LocalCounts>> & seen() const { return seen_; }

private:
    std::vector<std::optional<LocalCounts>> seen_;
    std::vector<std::string> where_;
    std::optional<DisagreementWitness> witness_;
};

template <class Array>
Array array_from_strata(const std::vector<std::optional<LocalCounts>> & seen)
{
    Array arr;
    const int top = static_cast<int>(seen.size()) - 1;
    arr.degree = seen[0]->a + seen[0]->b;
    for (int i = 0; i < top; ++i)
        arr.b.push_back(seen[static_cast<std::size_t>(i)]->b);
    for (int i = 1; i <= top; ++i)
        arr.c.push_back(seen[static_cast<std::size_t>(i)]->c);
    return arr;
}

// Layer sets Γ_0(u), ..., Γ_D(u).
std::vector<VertexSet> spheres(const Graph & g, const DistanceData & dd, Vertex u)
{
    std::vector<VertexSet> out(static_cast<std::size_t>(dd.diameter) + 1, VertexSet(g.order()));
    for (Vertex w = 0; w < g.order(); ++w)
        out[static_cast<std::size_t>(dd.at(u, w))].insert(w);
    return out;
}

}

std::string DisagreementWitness::describe() const
{
    return "stratum " + std::to_string(first.i) + ": " + counts_text(first) + " at " + first_at + " but "
        + counts_text(second) + " at " + second_at;
}

Verdict<IntersectionArray> classify_drg(const Graph & g, const DistanceData & dd)
{
    Verdict<IntersectionArray> out;
    StratumAgreement agree;
    for (Vertex u = 0; u < g.order(); ++u) {
        const auto layers = spheres(g, dd, u);
        const auto count = [&](const VertexSet & nb, int k) -> int {
            return k < 0 || k > dd.diameter ? 0 : static_cast<int>(nb.count_common(layers[static_cast<std::size_t>(k)]));
        };
        for (Vertex w = 0; w < g.order(); ++w) {
            const auto & nb = g.neighbour_set(w);
            const int i = dd.at(w, u);
            const LocalCounts lc{i, count(nb, i - 1), count(nb, i), count(nb, i + 1)};
            if (! agree.observe(lc, "w=" + std::to_string(w) + ",u=" + std::to_string(u))) {
                out.witness = agree.witness();
                out.reason = "local counts depend on more than the distance: " + out.witness->describe();
                return out;
            }
        }
    }
    out.value = array_from_strata<IntersectionArray>(agree.seen());
    return out;
}

Verdict<EdgeIntersectionArray> classify_edrg(const Graph & g, const DistanceData & dd)
{
    (void) dd;
    Verdict<EdgeIntersectionArray> out;
    StratumAgreement agree;
    for (const auto & e : g.edges()) {
        const auto part = edge_partition(g, e.u, e.v);
        for (Vertex w = 0; w < g.order(); ++w) {
            const auto lc = edge_local_counts(g, part, w);
            if (! agree.observe(lc, "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "},w=" + std::to_string(w))) {
                out.witness = agree.witness();
                out.reason = "edge local counts depend on more than the layer: " + out.witness->describe();
                return out;
            }
        }
    }
    out.value = array_from_strata<EdgeIntersectionArray>(agree.seen());
    return out;
}

Verdict<HomogeneousQuotient> classify_homogeneous(const Graph & g, const DistanceData & dd)
{
    Verdict<HomogeneousQuotient> out;
    std::optional<HomogeneousQuotient> first;
    std::string first_at;
    for (const auto & e : g.edges())
        for (const auto & [u, v] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
            const auto part = pair_partition(g, dd, u, v);
            HomogeneousQuotient hq;
            std::vector<std::vector<Vertex>> cells;
            for (const auto & [label, members] : part.cells) {
                hq.labels.push_back(label);
                cells.push_back(members);
            }
            const std::string at = "(" + std::to_string(u) + "," + std::to_string(v) + ")";
            auto q = is_equitable(g, cells);
            if (! q) {
                out.reason = "joint distance partition from " + at + " is not equitable";
                return out;
            }
            hq.counts = std::move(*q);
            if (! first) {
                first = std::move(hq);
                first_at = at;
            }
            else if (hq != *first) {
                out.reason = "joint distance partitions from " + first_at + " and " + at + " have different quotients";
                return out;
            }
        }
    out.value = std::move(first);
    return out;
}

bool is_generalized_odd(const Graph & g, const DistanceData & dd, const IntersectionArray & arr)
{
    const int d = arr.diameter();
    bool by_array = arr.a_at(d) != 0;
    for (int i = 0; i < d; ++i)
        by_array = by_array && arr.a_at(i) == 0;
    const auto og = odd_girth(g, dd);
    const bool by_girth = og && *og == 2 * d + 1;
    if (by_array != by_girth)
        throw InternalInconsistency("generalized-odd criteria disagree: array says " + std::string(by_array ? "yes" : "no")
                + ", odd girth " + (og ? std::to_string(*og) : std::string("none")) + " with d=" + std::to_string(d));
    return by_array;
}

TripleIntersection triple_intersection(const Graph & g, const DistanceData & dd, int i, int j, int k)
{
    TripleIntersection out;
    if (i < 0 || j < 0 || k < 0 || i > dd.diameter || j > dd.diameter || k > dd.diameter)
        return out;
    std::vector<std::vector<VertexSet>> sph;
    sph.reserve(static_cast<std::size_t>(g.order()));
    for (Vertex u = 0; u < g.order(); ++u)
        sph.push_back(spheres(g, dd, u));

    bool constant = true;
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = 0; v < g.order(); ++v) {
            if (dd.at(u, v) != k)
                continue;
            const auto count = static_cast<long>(sph[static_cast<std::size_t>(u)][static_cast<std::size_t>(i)]
                    .count_common(sph[static_cast<std::size_t>(v)][static_cast<std::size_t>(j)]));
            out.per_pair[{u, v}] = count;
            if (out.pairs++ == 0)
                out.value = count;
            else if (*out.value != count)
                constant = false;
        }
    if (! constant)
        out.value.reset();
    else
        out.per_pair.clear();
    return out;
}

std::vector<long> sphere_sizes(const IntersectionArray & arr)
{
    std::vector<long> n{1};
    for (int i = 0; i < arr.diameter(); ++i) {
        const long num = n.back() * arr.b_at(i);
        if (arr.c_at(i + 1) == 0 || num % arr.c_at(i + 1) != 0)
            throw InternalInconsistency("intersection array " + arr.to_string() + " gives non-integral sphere sizes");
        n.push_back(num / arr.c_at(i + 1));
    }
    return n;
}

ClassificationReport classify(const Graph & g, const DistanceData & dd)
{
    ClassificationReport r;
    r.order = g.order();
    r.size = g.size();
    r.regular = regular_degree(g);
    r.bipartite = is_bipartite(g);
    r.odd_girth = odd_girth(g, dd);
    r.diameter = dd.diameter;
    r.edge_diameter = dd.edge_diameter;
    r.drg = classify_drg(g, dd);
    r.edrg = classify_edrg(g, dd);
    r.homogeneous = classify_homogeneous(g, dd);
    if (r.drg)
        r.generalized_odd = is_generalized_odd(g, dd, *r.drg.value);
    r.edrg_vacuous = r.edrg && r.edrg.value->diameter() == 0;
    return r;
}

ClassificationReport classify(const Graph & g)
{
    return classify(g, compute_distances(g));
}

} // namespace edrg

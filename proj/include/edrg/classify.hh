#pragma once

#include <edrg/distances.hh>
#include <edrg/graph.hh>
#include <edrg/partitions.hh>

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace edrg {

/// {b_0,...,b_{d-1}; c_1,...,c_d} together with the degree, so that a_i = δ - b_i - c_i
/// is available even when the lists are empty (K_2's edge array). The tag keeps vertex
/// and edge arrays from being mixed up.
template <class Tag>
struct BasicIntersectionArray {
    int degree = 0;
    std::vector<int> b; // b_0 .. b_{d-1}
    std::vector<int> c; // c_1 .. c_d

    int diameter() const { return static_cast<int>(b.size()); }

    /// b_i with b_d = 0.
    int b_at(int i) const { return i < diameter() ? b[static_cast<std::size_t>(i)] : 0; }
    /// c_i with c_0 = 0.
    int c_at(int i) const { return i == 0 ? 0 : c[static_cast<std::size_t>(i - 1)]; }
    int a_at(int i) const { return degree - b_at(i) - c_at(i); }

    /// "{b_0,...;c_1,...}"
    std::string to_string() const
    {
        std::string s = "{";
        for (std::size_t k = 0; k < b.size(); ++k)
            s += (k ? "," : "") + std::to_string(b[k]);
        s += ";";
        for (std::size_t k = 0; k < c.size(); ++k)
            s += (k ? "," : "") + std::to_string(c[k]);
        return s + "}";
    }

    friend bool operator==(const BasicIntersectionArray &, const BasicIntersectionArray &) = default;
};

struct VertexArrayTag;
struct EdgeArrayTag;
using IntersectionArray = BasicIntersectionArray<VertexArrayTag>;
using EdgeIntersectionArray = BasicIntersectionArray<EdgeArrayTag>;

/// Two count tuples that should have agreed, with where each was observed.
struct DisagreementWitness {
    std::string first_at, second_at;
    LocalCounts first, second;

    std::string describe() const;
};

/// Joint distance partition quotient keyed by cell labels (i,j), in label order.
struct HomogeneousQuotient {
    std::vector<CellLabel> labels;
    Quotient counts;

    friend bool operator==(const HomogeneousQuotient &, const HomogeneousQuotient &) = default;
};

/// Either a value or the reason there is none.
template <class T>
struct Verdict {
    std::optional<T> value;
    std::optional<DisagreementWitness> witness;
    std::string reason; // set when value is empty

    explicit operator bool() const { return value.has_value(); }
};

/// Checks local counts over all ordered vertex pairs.
Verdict<IntersectionArray> classify_drg(const Graph & g, const DistanceData & dd);

/// Checks edge local counts over all edges and all vertices.
Verdict<EdgeIntersectionArray> classify_edrg(const Graph & g, const DistanceData & dd);

/// Every ordered adjacent pair must give an equitable joint distance partition with
/// the same labelled quotient.
Verdict<HomogeneousQuotient> classify_homogeneous(const Graph & g, const DistanceData & dd);

/// a_0 = ... = a_{d-1} = 0 and a_d != 0, cross-checked against odd girth 2d+1.
/// Throws InternalInconsistency if the two criteria disagree.
bool is_generalized_odd(const Graph & g, const DistanceData & dd, const IntersectionArray & arr);

/// p_{ij}^k = |Γ_i(u) ∩ Γ_j(v)| over all pairs at distance k. `value` is set when the
/// count is the same for every such pair; otherwise `per_pair` lists every count.
struct TripleIntersection {
    std::optional<long> value;
    std::map<std::pair<Vertex, Vertex>, long> per_pair;
    std::size_t pairs = 0;
};

TripleIntersection triple_intersection(const Graph & g, const DistanceData & dd, int i, int j, int k);

/// |Γ_i(u)| from the array: n_0 = 1, n_{i+1} = n_i b_i / c_{i+1}.
std::vector<long> sphere_sizes(const IntersectionArray & arr);

struct ClassificationReport {
    int order = 0, size = 0;
    std::optional<int> regular;
    bool bipartite = false;
    std::optional<int> odd_girth;
    int diameter = 0, edge_diameter = 0;
    Verdict<IntersectionArray> drg;
    Verdict<EdgeIntersectionArray> edrg;
    Verdict<HomogeneousQuotient> homogeneous;
    bool generalized_odd = false;
    bool edrg_vacuous = false; // K_2: a single edge, no layer beyond Ṽ_0
};

/// Full verdict bundle. Throws DisconnectedGraph / GraphError for unusable input.
ClassificationReport classify(const Graph & g, const DistanceData & dd);
ClassificationReport classify(const Graph & g);

} // namespace edrg

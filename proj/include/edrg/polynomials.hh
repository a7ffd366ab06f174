#pragma once

#include <edrg/classify.hh>
#include <edrg/distances.hh>
#include <edrg/graph.hh>
#include <edrg/rat_matrix.hh>
#include <edrg/rat_poly.hh>

#include <cstddef>
#include <string>
#include <vector>

namespace edrg {

/// Trace-form scalar product on polynomials in the adjacency matrix A:
///
///   vertex form  <f,g>   = (1/n)  tr(f(A) g(A))
///   edge form    <f,g>_E = (1/2m) tr(f(A) g(A) B0 B0^T)
///
/// Values are computed from the cached moments tr(A^k W) (W = I or B0 B0^T);
/// `direct` evaluates the defining trace instead and serves as its reference.
class InnerProductSpace {
public:
    enum class Kind { vertex, edge };

    static InnerProductSpace vertex(const Graph & g);
    static InnerProductSpace edge(const Graph & g);

    Kind kind() const noexcept { return kind_; }
    const RatMatrix & adjacency() const noexcept { return adjacency_; }

    /// Degree of the minimal polynomial of A.
    std::size_t min_poly_degree() const noexcept { return min_poly_degree_; }

    Rational operator()(const RatPoly & f, const RatPoly & g) const;
    Rational direct(const RatPoly & f, const RatPoly & g) const;

private:
    InnerProductSpace(Kind kind, RatMatrix adjacency, RatMatrix weight, Rational scale);

    Rational moment(std::size_t k) const;

    Kind kind_;
    RatMatrix adjacency_;
    RatMatrix weight_;
    Rational scale_;
    std::size_t min_poly_degree_ = 0;
    std::vector<Rational> moments_; // scale * tr(A^k W)
};

Rational inner_product(const InnerProductSpace & sp, const RatPoly & f, const RatPoly & g);

enum class SequenceKind { vertex, edge };
enum class SequenceSource { gram_schmidt, recurrence };

struct PolySequence {
    std::vector<RatPoly> polys;
    SequenceKind kind = SequenceKind::vertex;
    SequenceSource source = SequenceSource::gram_schmidt;

    /// Index of the last polynomial (d or d~).
    int top() const { return static_cast<int>(polys.size()) - 1; }
    const RatPoly & operator[](std::size_t i) const { return polys[i]; }
};

/// Gram-Schmidt on 1, x, x^2, ... in the vertex space, stopping at the first residual of
/// zero norm, each q_i rescaled by q_i(δ)/||q_i||^2 so that ||p_i||^2 = p_i(δ).
/// Throws InternalInconsistency if q_i(δ) = 0 or the length disagrees with the minimal
/// polynomial degree of A.
PolySequence predistance_polys(const InnerProductSpace & sp, int degree);

/// The same construction in the edge space; its length is d~ + 1.
PolySequence edge_predistance_polys(const InnerProductSpace & sp, int degree);

/// Three-term recurrence x r_i = β_{i-1} r_{i-1} + α_i r_i + γ_{i+1} r_{i+1} with
/// (γ, α, β) = (c, a, b). Throws std::invalid_argument when some γ_{i+1} is zero.
PolySequence polys_from_array(const IntersectionArray & arr);
PolySequence polys_from_array(const EdgeIntersectionArray & arr);

/// Outcome of an exact identity check with a short human-readable explanation.
struct CheckOutcome {
    bool holds = false;
    std::string detail;

    explicit operator bool() const { return holds; }
};

/// p_d(A) == A_d, and with `all_degrees` also p_i(A) == A_i for every i.
/// Fails (without evaluating) when the sequence length is not D+1.
CheckOutcome check_distance_regular_via_pd(const Graph & g, const DistanceData & dd, const PolySequence & seq,
        bool all_degrees = true);

/// p~_i(A) B_0 == B_i for i = 0..D~ and |Γ_{D~}(e)| == 2 p~_{D~}(δ) for every edge.
CheckOutcome check_edrg_via_incidence(const Graph & g, const DistanceData & dd, const PolySequence & seq);

/// p_0 + ... + p_d.
RatPoly hoffman_poly(const PolySequence & seq);

/// H(A) == J.
bool check_hoffman(const Graph & g, const RatPoly & hoffman);

/// One vertex/edge polynomial relation checked by exact polynomial equality.
struct RelationCheck {
    std::string equation; // "alt_sum", "consecutive_sum", "top_alt_sum", "top_nonbipartite", "top_bipartite"
    int index = 0;
    bool holds = false;
    std::string detail;
};

/// Relations between predistance and edge-predistance sequences (H = p_0 + ... + p_d,
/// q~_k = p~_0 + ... + p~_k):
///   alt_sum           p~_i = p_i - p_{i-1} + ... + (-1)^i p_0       i = 0..d-1
///   consecutive_sum   p_i = p~_i + p~_{i-1}                         i = 0..d-1
///   top_alt_sum       p~_d = (p_d - p_{d-1} + ... + (-1)^d p_0)/2   nonbipartite
///   top_nonbipartite  p_d = 2 p~_d + p~_{d-1}                       nonbipartite
///   top_bipartite     p_d = H - q~_{d-1} - q~_{d-2}                 bipartite
std::vector<RelationCheck> relate_vertex_edge_polys(const PolySequence & vertex_seq, const PolySequence & edge_seq,
        bool bipartite);

/// p_{i+1} = ((x + δ) p~_i - b~_{i-1} p_i) / (a~_i + c_i), defined for i >= 1.
/// Throws std::invalid_argument for i < 1 or a zero denominator.
RatPoly reconstruct_next_poly(const RatPoly & edge_poly_i, const RatPoly & poly_i, const Rational & edge_a_i,
        const Rational & c_i, const Rational & edge_b_prev, int degree, int i);

/// a~_i == b~_{i-1} - b~_i for i = 1..d~-1.
CheckOutcome check_lemma_edge_counts(const EdgeIntersectionArray & earr);

} // namespace edrg

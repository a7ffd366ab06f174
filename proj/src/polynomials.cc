#include <edrg/errors.hh>
#include <edrg/linalg.hh>
#include <edrg/polynomials.hh>

#include <stdexcept>

namespace edrg {

namespace {

// tr(x y) without forming the product.
Rational trace_of_product(const RatMatrix & x, const RatMatrix & y)
{
    Rational t;
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j)
            if (! x(i, j).is_zero() && ! y(j, i).is_zero())
                t += x(i, j) * y(j, i);
    return t;
}

RatMatrix vertex_edge_incidence(const Graph & g)
{
    RatMatrix b(static_cast<std::size_t>(g.order()), static_cast<std::size_t>(g.size()));
    const auto edges = g.edges();
    for (std::size_t e = 0; e < edges.size(); ++e) {
        b(static_cast<std::size_t>(edges[e].u), e) = 1;
        b(static_cast<std::size_t>(edges[e].v), e) = 1;
    }
    return b;
}

PolySequence gram_schmidt(const InnerProductSpace & sp, int degree, SequenceKind kind)
{
    const Rational lambda0(degree);
    std::vector<RatPoly> qs;
    std::vector<Rational> norms;
    const std::size_t limit = sp.adjacency().rows() + 1;
    for (std::size_t k = 0; k < limit; ++k) {
        const RatPoly xk = RatPoly::monomial(k);
        RatPoly q = xk;
        for (std::size_t j = 0; j < qs.size(); ++j)
            q -= qs[j] * (sp(xk, qs[j]) / norms[j]);
        Rational norm = sp(q, q);
        if (norm.is_zero())
            break;
        if (norm.sign() < 0)
            throw InternalInconsistency("negative squared norm in Gram-Schmidt at degree " + std::to_string(k));
        qs.push_back(std::move(q));
        norms.push_back(std::move(norm));
    }

    PolySequence seq;
    seq.kind = kind;
    seq.source = SequenceSource::gram_schmidt;
    for (std::size_t k = 0; k < qs.size(); ++k) {
        const Rational at = qs[k](lambda0);
        if (at.is_zero())
            throw InternalInconsistency("orthogonal polynomial of degree " + std::to_string(k)
                    + " vanishes at the degree; cannot normalise");
        seq.polys.push_back(qs[k] * (at / norms[k]));
    }
    return seq;
}

template <class Tag>
PolySequence recurrence(const BasicIntersectionArray<Tag> & arr, SequenceKind kind)
{
    PolySequence seq;
    seq.kind = kind;
    seq.source = SequenceSource::recurrence;
    seq.polys.emplace_back(Rational(1));
    for (int i = 0; i < arr.diameter(); ++i) {
        const int gamma = arr.c_at(i + 1);
        if (gamma == 0)
            throw std::invalid_argument("intersection array " + arr.to_string() + " has c_" + std::to_string(i + 1)
                    + " = 0");
        RatPoly next = (RatPoly::x() - RatPoly(Rational(arr.a_at(i)))) * seq.polys.back();
        if (i > 0)
            next -= seq.polys[static_cast<std::size_t>(i - 1)] * Rational(arr.b_at(i - 1));
        seq.polys.push_back(next / Rational(gamma));
    }
    return seq;
}

RatPoly alternating_sum(const PolySequence & seq, int top)
{
    RatPoly s;
    for (int j = 0; j <= top; ++j) {
        if ((top - j) % 2 == 0)
            s += seq[static_cast<std::size_t>(j)];
        else
            s -= seq[static_cast<std::size_t>(j)];
    }
    return s;
}

RatPoly partial_sum(const PolySequence & seq, int top)
{
    RatPoly s;
    for (int j = 0; j <= top; ++j)
        s += seq[static_cast<std::size_t>(j)];
    return s;
}

}

InnerProductSpace::InnerProductSpace(Kind kind, RatMatrix adjacency, RatMatrix weight, Rational scale) :
    kind_(kind), adjacency_(std::move(adjacency)), weight_(std::move(weight)), scale_(std::move(scale))
{
    min_poly_degree_ = edrg::min_poly_degree(adjacency_);
    RatMatrix power = RatMatrix::identity(adjacency_.rows());
    for (std::size_t k = 0; k <= 2 * min_poly_degree_ + 1; ++k) {
        moments_.push_back(scale_ * trace_of_product(power, weight_));
        power = mat_mul(power, adjacency_);
    }
}

InnerProductSpace InnerProductSpace::vertex(const Graph & g)
{
    if (g.order() == 0)
        throw GraphError("inner product on an empty graph");
    const auto n = static_cast<std::size_t>(g.order());
    return InnerProductSpace(Kind::vertex, adjacency_matrix(g), RatMatrix::identity(n), Rational(1, g.order()));
}

InnerProductSpace InnerProductSpace::edge(const Graph & g)
{
    if (g.size() == 0)
        throw GraphError("edge inner product on a graph without edges");
    const RatMatrix b0 = vertex_edge_incidence(g);
    return InnerProductSpace(Kind::edge, adjacency_matrix(g), mat_mul(b0, b0.transpose()), Rational(1, 2L * g.size()));
}

Rational InnerProductSpace::moment(std::size_t k) const
{
    if (k < moments_.size())
        return moments_[k];
    RatMatrix power = RatMatrix::identity(adjacency_.rows());
    for (std::size_t j = 0; j < k; ++j)
        power = mat_mul(power, adjacency_);
    return scale_ * trace_of_product(power, weight_);
}

Rational InnerProductSpace::operator()(const RatPoly & f, const RatPoly & g) const
{
    const auto fc = f.coefficients();
    const auto gc = g.coefficients();
    Rational s;
    for (std::size_t a = 0; a < fc.size(); ++a) {
        if (fc[a].is_zero())
            continue;
        for (std::size_t b = 0; b < gc.size(); ++b)
            if (! gc[b].is_zero())
                s += fc[a] * gc[b] * moment(a + b);
    }
    return s;
}

Rational InnerProductSpace::direct(const RatPoly & f, const RatPoly & g) const
{
    const RatMatrix fa = eval_poly_at_matrix(f, adjacency_);
    const RatMatrix ga = eval_poly_at_matrix(g, adjacency_);
    return scale_ * trace(mat_mul(mat_mul(fa, ga), weight_));
}

Rational inner_product(const InnerProductSpace & sp, const RatPoly & f, const RatPoly & g)
{
    return sp(f, g);
}

PolySequence predistance_polys(const InnerProductSpace & sp, int degree)
{
    if (sp.kind() != InnerProductSpace::Kind::vertex)
        throw std::invalid_argument("predistance polynomials need the vertex scalar product");
    auto seq = gram_schmidt(sp, degree, SequenceKind::vertex);
    if (seq.polys.size() != sp.min_poly_degree())
        throw InternalInconsistency("Gram-Schmidt produced " + std::to_string(seq.polys.size())
                + " polynomials but the minimal polynomial has degree " + std::to_string(sp.min_poly_degree()));
    return seq;
}

PolySequence edge_predistance_polys(const InnerProductSpace & sp, int degree)
{
    if (sp.kind() != InnerProductSpace::Kind::edge)
        throw std::invalid_argument("edge-predistance polynomials need the edge scalar product");
    return gram_schmidt(sp, degree, SequenceKind::edge);
}

PolySequence polys_from_array(const IntersectionArray & arr)
{
    return recurrence(arr, SequenceKind::vertex);
}

PolySequence polys_from_array(const EdgeIntersectionArray & arr)
{
    return recurrence(arr, SequenceKind::edge);
}

CheckOutcome check_distance_regular_via_pd(const Graph & g, const DistanceData & dd, const PolySequence & seq,
        bool all_degrees)
{
    if (seq.top() != dd.diameter)
        return {false, "sequence has top degree " + std::to_string(seq.top()) + " but the diameter is "
                + std::to_string(dd.diameter)};
    const RatMatrix a = adjacency_matrix(g);
    const auto family = distance_matrix_family(g, dd);
    const int first = all_degrees ? 0 : dd.diameter;
    for (int i = dd.diameter; i >= first; --i)
        if (eval_poly_at_matrix(seq[static_cast<std::size_t>(i)], a) != family[static_cast<std::size_t>(i)])
            return {false, "p_" + std::to_string(i) + "(A) != A_" + std::to_string(i)};
    return {true, all_degrees ? "p_i(A) = A_i for i = 0.." + std::to_string(dd.diameter)
                              : "p_d(A) = A_d for d = " + std::to_string(dd.diameter)};
}

CheckOutcome check_edrg_via_incidence(const Graph & g, const DistanceData & dd, const PolySequence & seq)
{
    const int top = dd.edge_diameter;
    if (seq.top() != top)
        return {false, "sequence has top degree " + std::to_string(seq.top()) + " but the edge-diameter is "
                + std::to_string(top)};
    const auto delta = regular_degree(g);
    if (! delta)
        return {false, "graph is not regular"};

    const RatMatrix a = adjacency_matrix(g);
    const auto family = incidence_matrix_family(g, dd);
    for (int i = 0; i <= top; ++i)
        if (mat_mul(eval_poly_at_matrix(seq[static_cast<std::size_t>(i)], a), family[0]) != family[static_cast<std::size_t>(i)])
            return {false, "p~_" + std::to_string(i) + "(A) B_0 != B_" + std::to_string(i)};

    const Rational target = Rational(2) * seq[static_cast<std::size_t>(top)](Rational(*delta));
    const auto edges = g.edges();
    for (std::size_t e = 0; e < edges.size(); ++e) {
        long far = 0;
        for (Vertex w = 0; w < g.order(); ++w)
            far += dd.to_edge(w, edges[e]) == top;
        if (Rational(far) != target)
            return {false, "edge {" + std::to_string(edges[e].u) + "," + std::to_string(edges[e].v) + "} has "
                    + std::to_string(far) + " vertices at distance " + std::to_string(top) + ", expected "
                    + target.to_string()};
    }
    return {true, "p~_i(A) B_0 = B_i for i = 0.." + std::to_string(top) + "; |Γ_" + std::to_string(top)
            + "(e)| = " + target.to_string() + " for every edge"};
}

RatPoly hoffman_poly(const PolySequence & seq)
{
    return partial_sum(seq, seq.top());
}

bool check_hoffman(const Graph & g, const RatPoly & hoffman)
{
    const auto n = static_cast<std::size_t>(g.order());
    return eval_poly_at_matrix(hoffman, adjacency_matrix(g)) == RatMatrix::all_ones(n, n);
}

std::vector<RelationCheck> relate_vertex_edge_polys(const PolySequence & vertex_seq, const PolySequence & edge_seq,
        bool bipartite)
{
    std::vector<RelationCheck> out;
    const int d = vertex_seq.top();
    const int et = edge_seq.top();
    const auto edge_at = [&](int i) -> RatPoly {
        return i < 0 || i > et ? RatPoly{} : edge_seq[static_cast<std::size_t>(i)];
    };
    const auto record = [&](std::string eq, int i, bool ok, std::string what) {
        out.push_back({std::move(eq), i, ok, std::move(what)});
    };

    for (int i = 0; i <= d - 1; ++i) {
        if (i > et) {
            record("alt_sum", i, false, "edge sequence stops at degree " + std::to_string(et));
            record("consecutive_sum", i, false, "edge sequence stops at degree " + std::to_string(et));
            continue;
        }
        record("alt_sum", i, edge_at(i) == alternating_sum(vertex_seq, i), "p~_i = p_i - p_{i-1} + ... + (-1)^i p_0");
        record("consecutive_sum", i, vertex_seq[static_cast<std::size_t>(i)] == edge_at(i) + edge_at(i - 1), "p_i = p~_i + p~_{i-1}");
    }

    const RatPoly & pd = vertex_seq[static_cast<std::size_t>(d)];
    if (! bipartite) {
        if (d > et) {
            record("top_alt_sum", d, false, "edge sequence stops at degree " + std::to_string(et));
            record("top_nonbipartite", d, false, "edge sequence stops at degree " + std::to_string(et));
        }
        else {
            record("top_alt_sum", d, edge_at(d) == alternating_sum(vertex_seq, d) / Rational(2),
                    "p~_d = (p_d - p_{d-1} + ... + (-1)^d p_0)/2");
            record("top_nonbipartite", d, pd == Rational(2) * edge_at(d) + edge_at(d - 1), "p_d = 2 p~_d + p~_{d-1}");
        }
    }
    else {
        const RatPoly h = hoffman_poly(vertex_seq);
        RatPoly q1, q2;
        for (int j = 0; j <= d - 1; ++j)
            q1 += edge_at(j);
        for (int j = 0; j <= d - 2; ++j)
            q2 += edge_at(j);
        record("top_bipartite", d, d - 1 <= et && pd == h - q1 - q2, "p_d = H - q~_{d-1} - q~_{d-2}");
    }
    return out;
}

RatPoly reconstruct_next_poly(const RatPoly & edge_poly_i, const RatPoly & poly_i, const Rational & edge_a_i,
        const Rational & c_i, const Rational & edge_b_prev, int degree, int i)
{
    if (i < 1)
        throw std::invalid_argument("reconstruction of p_{i+1} starts at i = 1, got i = " + std::to_string(i));
    const Rational denom = edge_a_i + c_i;
    if (denom.is_zero())
        throw std::invalid_argument("a~_i + c_i = 0 in the reconstruction of p_" + std::to_string(i + 1));
    const RatPoly shifted = RatPoly{Rational(degree), Rational(1)};
    return (shifted * edge_poly_i - poly_i * edge_b_prev) / denom;
}

CheckOutcome check_lemma_edge_counts(const EdgeIntersectionArray & earr)
{
    for (int i = 1; i <= earr.diameter() - 1; ++i)
        if (earr.a_at(i) != earr.b_at(i - 1) - earr.b_at(i))
            return {false, "a~_" + std::to_string(i) + " = " + std::to_string(earr.a_at(i)) + " but b~_"
                    + std::to_string(i - 1) + " - b~_" + std::to_string(i) + " = "
                    + std::to_string(earr.b_at(i - 1) - earr.b_at(i))};
    return {true, "a~_i = b~_{i-1} - b~_i for i = 1.." + std::to_string(earr.diameter() - 1)};
}

} // namespace edrg

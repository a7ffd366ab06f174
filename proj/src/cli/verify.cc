#include <edrg/errors.hh>
#include <edrg/linalg.hh>
#include <edrg/partitions.hh>
#include <edrg/verify.hh>

#include <functional>

namespace edrg {

namespace {

std::string yes_no(bool b)
{
    return b ? "true" : "false";
}

class LedgerBuilder {
public:
    void pass(std::string id, std::string claim, std::string detail = {})
    {
        add(std::move(id), std::move(claim), LedgerStatus::pass, std::move(detail));
    }
    void fail(std::string id, std::string claim, std::string detail)
    {
        add(std::move(id), std::move(claim), LedgerStatus::fail, std::move(detail));
    }
    void skip(std::string id, std::string claim, std::string why)
    {
        add(std::move(id), std::move(claim), LedgerStatus::not_applicable, std::move(why));
    }
    void check(std::string id, std::string claim, bool ok, std::string detail)
    {
        add(std::move(id), std::move(claim), ok ? LedgerStatus::pass : LedgerStatus::fail, std::move(detail));
    }
    void check(std::string id, std::string claim, const CheckOutcome & out)
    {
        check(std::move(id), std::move(claim), out.holds, out.detail);
    }

    Ledger take() { return std::move(ledger_); }

private:
    void add(std::string id, std::string claim, LedgerStatus s, std::string detail)
    {
        ledger_.entries.push_back({std::move(id), std::move(claim), s, std::move(detail)});
    }

    Ledger ledger_;
};

const RatMatrix & at(const std::vector<RatMatrix> & family, int i)
{
    return family.at(static_cast<std::size_t>(i));
}

// Checks identities between the matrix families A_i, B_i for an edge-distance-regular graph.
void matrix_identities(LedgerBuilder & lb, const Analysis & a, const IntersectionArray & arr,
        const EdgeIntersectionArray & earr)
{
    const auto & g = a.graph;
    const auto & dd = a.dd;
    const auto afam = distance_matrix_family(g, dd);
    const auto bfam = incidence_matrix_family(g, dd);
    const int d = dd.diameter;
    const int de = dd.edge_diameter;
    const RatMatrix & b0 = bfam[0];
    const auto zero_like = [&](const RatMatrix & m) { return RatMatrix(m.rows(), m.cols()); };

    {
        const std::string claim = "A_i B_0 = B_i + B_{i-1} (i<d); A_d B_0 = 2B_d + B_{d-1} or B_{d-1} if bipartite";
        std::string bad;
        for (int i = 0; i <= d && bad.empty(); ++i) {
            RatMatrix want = zero_like(b0);
            const bool top = i == d;
            if (i <= de)
                want += (top && ! a.report.bipartite ? Rational(2) : Rational(1)) * at(bfam, i);
            if (i >= 1)
                want += at(bfam, i - 1);
            if (mat_mul(at(afam, i), b0) != want)
                bad = "fails at i = " + std::to_string(i);
        }
        lb.check("mat.AiB0", claim, bad.empty(), bad.empty() ? "i = 0.." + std::to_string(d) : bad);
    }
    {
        const std::string claim = "B_i B_0^T = b~_{i-1} A_i + (a~_i + c_i) A_{i+1} for i = 1..d-1";
        std::string bad;
        const RatMatrix b0t = b0.transpose();
        for (int i = 1; i <= d - 1 && bad.empty(); ++i) {
            if (i > de) {
                bad = "B_" + std::to_string(i) + " does not exist (edge-diameter " + std::to_string(de) + ")";
                break;
            }
            const RatMatrix want = Rational(earr.b_at(i - 1)) * at(afam, i)
                + Rational(earr.a_at(i) + arr.c_at(i)) * at(afam, i + 1);
            if (mat_mul(at(bfam, i), b0t) != want)
                bad = "fails at i = " + std::to_string(i);
        }
        lb.check("mat.BiB0T", claim, bad.empty(), bad.empty() ? "i = 1.." + std::to_string(d - 1) : bad);
    }
}

void fourier_checks(LedgerBuilder & lb, const Analysis & a, const IntersectionArray & arr, const LedgerLimits & limits)
{
    const std::string claim = "n_k p^k_ij = n_j p^j_ik for all i,j,k; δ p^1_ii = n_i a_i";
    if (a.graph.order() > limits.max_order_triples) {
        lb.skip("triples", claim, "order above " + std::to_string(limits.max_order_triples));
        return;
    }
    const int d = arr.diameter();
    const auto n = sphere_sizes(arr);
    // p[i][j][k]
    std::vector<long> p(static_cast<std::size_t>((d + 1) * (d + 1) * (d + 1)));
    const auto idx = [d](int i, int j, int k) { return static_cast<std::size_t>((i * (d + 1) + j) * (d + 1) + k); };
    for (int i = 0; i <= d; ++i)
        for (int j = 0; j <= d; ++j)
            for (int k = 0; k <= d; ++k) {
                const auto t = triple_intersection(a.graph, a.dd, i, j, k);
                if (! t.value) {
                    lb.fail("triples", claim, "p^" + std::to_string(k) + "_" + std::to_string(i) + std::to_string(j)
                            + " is not constant");
                    return;
                }
                p[idx(i, j, k)] = *t.value;
            }
    for (int i = 0; i <= d; ++i)
        for (int j = 0; j <= d; ++j)
            for (int k = 0; k <= d; ++k)
                if (n[static_cast<std::size_t>(k)] * p[idx(i, j, k)] != n[static_cast<std::size_t>(j)] * p[idx(i, k, j)]) {
                    lb.fail("triples", claim, "(i,j,k) = (" + std::to_string(i) + "," + std::to_string(j) + ","
                            + std::to_string(k) + ")");
                    return;
                }
    for (int i = 1; i <= d; ++i)
        if (arr.degree * p[idx(i, i, 1)] != n[static_cast<std::size_t>(i)] * arr.a_at(i)) {
            lb.fail("triples", claim, "δ p^1_ii != n_i a_i at i = " + std::to_string(i));
            return;
        }
    lb.pass("triples", claim, std::to_string((d + 1) * (d + 1) * (d + 1)) + " intersection numbers");
}

}

const char * ledger_status_name(LedgerStatus s) noexcept
{
    switch (s) {
    case LedgerStatus::pass: return "pass";
    case LedgerStatus::fail: return "FAIL";
    case LedgerStatus::not_applicable: return "n/a";
    }
    return "?";
}

bool Ledger::all_pass() const
{
    for (const auto & e : entries)
        if (e.status == LedgerStatus::fail)
            return false;
    return true;
}

const LedgerEntry * Ledger::find(const std::string & id) const
{
    for (const auto & e : entries)
        if (e.id == id)
            return &e;
    return nullptr;
}

Analysis analyse(const Graph & g, bool with_polys)
{
    Analysis a{g, compute_distances(g), {}, {}, {}};
    a.report = classify(a.graph, a.dd);
    if (with_polys && a.report.regular) {
        a.vertex_polys = predistance_polys(InnerProductSpace::vertex(a.graph), *a.report.regular);
        a.edge_polys = edge_predistance_polys(InnerProductSpace::edge(a.graph), *a.report.regular);
    }
    return a;
}

std::optional<EdgeIntersectionArray> predicted_edge_array(const IntersectionArray & arr, bool bipartite,
        bool generalized_odd)
{
    if (! bipartite && ! generalized_odd)
        return std::nullopt;
    const int d = arr.diameter();
    EdgeIntersectionArray e;
    e.degree = arr.degree;
    for (int i = 1; i <= d - 1; ++i) {
        e.b.push_back(arr.b_at(i));
        e.c.push_back(arr.c_at(i));
    }
    if (! bipartite) {
        e.b.push_back(arr.a_at(d));
        e.c.push_back(2 * arr.c_at(d));
    }
    return e;
}

ProofFactTally tally_proof_facts(const Graph & g, const DistanceData & dd, const std::optional<IntersectionArray> & arr)
{
    std::vector<bool> a_zero(static_cast<std::size_t>(dd.diameter) + 1, false);
    if (arr)
        for (int i = 0; i <= arr->diameter(); ++i)
            a_zero[static_cast<std::size_t>(i)] = arr->a_at(i) == 0;

    ProofFactTally t;
    for (const auto & e : g.edges())
        for (const auto & [u, v] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
            const EdgePartition part = edge_partition(g, u, v);
            for (Vertex w = 0; w < g.order(); ++w) {
                const ProofFacts f = proof_fact_oracles(g, dd, part, w, a_zero);
                for (const auto & eq : f.equations) {
                    ++t.equations;
                    if (! eq.balanced()) {
                        ++t.equation_failures;
                        if (t.first_failure.empty())
                            t.first_failure = eq.name + " at (u,v,w) = (" + std::to_string(u) + "," + std::to_string(v)
                                + "," + std::to_string(w) + "): " + std::to_string(eq.lhs) + " != "
                                + std::to_string(eq.rhs);
                    }
                }
                t.containment_checks += f.containment_checks;
                t.containment_failures += f.containment_failures;
                if (f.containment_failures && t.first_failure.empty())
                    t.first_failure = "containment at (u,v,w) = (" + std::to_string(u) + "," + std::to_string(v) + ","
                        + std::to_string(w) + ")";
            }
        }
    return t;
}

Ledger build_ledger(const Analysis & a, const LedgerLimits & limits)
{
    LedgerBuilder lb;
    const auto & r = a.report;
    const auto & g = a.graph;
    const auto & dd = a.dd;
    const bool drg = r.drg.value.has_value();
    const bool edrg = r.edrg.value.has_value();

    // Characterisation of edge-distance-regularity and the array conversion.
    {
        const bool rhs = drg && (r.bipartite || r.generalized_odd);
        lb.check("edrg_iff", "EDRG <=> DRG and (bipartite or generalized odd)", edrg == rhs,
                "EDRG " + yes_no(edrg) + ", DRG " + yes_no(drg) + ", bipartite " + yes_no(r.bipartite)
                        + ", generalized odd " + yes_no(r.generalized_odd));
        const std::string claim = "edge array from the vertex array (bipartite or generalized odd formula)";
        if (edrg && drg) {
            const auto want = predicted_edge_array(*r.drg.value, r.bipartite, r.generalized_odd);
            if (! want)
                lb.fail("edge_array_formula", claim, "no conversion formula applies");
            else
                lb.check("edge_array_formula", claim, *want == *r.edrg.value,
                        "predicted " + want->to_string() + ", observed " + r.edrg.value->to_string());
        }
        else
            lb.skip("edge_array_formula", claim, "not edge-distance-regular");
    }

    lb.check("edrg_homogeneous", "EDRG => homogeneous", ! edrg || r.homogeneous.value.has_value(),
            "EDRG " + yes_no(edrg) + ", homogeneous " + yes_no(r.homogeneous.value.has_value()));

    {
        const std::string claim = "EDRG => D = number of distinct eigenvalues - 1, edge-diameter d-1 if bipartite, d otherwise";
        if (edrg) {
            const int want = r.bipartite ? dd.diameter - 1 : dd.diameter;
            const auto eigen = min_poly_degree(adjacency_matrix(g));
            lb.check("edrg_diameters", claim, dd.edge_diameter == want && eigen == static_cast<std::size_t>(dd.diameter) + 1,
                    "D = " + std::to_string(dd.diameter) + ", " + std::to_string(eigen)
                            + " distinct eigenvalues, edge-diameter = " + std::to_string(dd.edge_diameter));
        }
        else
            lb.skip("edrg_diameters", claim, "not edge-distance-regular");
    }

    // Everything below concerns the polynomial sequences of a regular graph.
    if (! r.regular) {
        for (const char * id : {"top_poly_drg", "dist_polys", "edge_poly_incidence", "hoffman", "eigen_count", "twoway.vertex", "twoway.edge", "rel.alt_sum",
                 "rel.consecutive_sum", "rel.top_alt_sum", "rel.top_nonbipartite", "rel.top_bipartite", "next_poly", "edge_a_from_b", "mat.AiB0", "mat.BiB0T", "mat.B0B0T"})
            lb.skip(id, "polynomial identities", "graph is not regular");
    }
    else {
        if (! a.vertex_polys || ! a.edge_polys)
            throw std::invalid_argument("build_ledger needs the polynomial sequences of a regular graph");
        const auto & vp = *a.vertex_polys;
        const auto & ep = *a.edge_polys;
        const int delta = *r.regular;

        {
            const auto pd = check_distance_regular_via_pd(g, dd, vp, false);
            const bool spectral = static_cast<int>(vp.polys.size()) == dd.diameter + 1;
            const std::string claim = "with d+1 distinct eigenvalues: DRG <=> p_d(A) = A_d";
            if (spectral)
                lb.check("top_poly_drg", claim, pd.holds == drg, "DRG " + yes_no(drg) + "; " + pd.detail);
            else
                lb.check("top_poly_drg", claim, ! drg, std::to_string(vp.polys.size()) + " distinct eigenvalues, d = "
                        + std::to_string(dd.diameter) + ", DRG " + yes_no(drg));
        }
        if (drg)
            lb.check("dist_polys", "p_i(A) = A_i for every i", check_distance_regular_via_pd(g, dd, vp, true));
        else
            lb.skip("dist_polys", "p_i(A) = A_i for every i", "not distance-regular");
        {
            const auto inc = check_edrg_via_incidence(g, dd, ep);
            lb.check("edge_poly_incidence", "EDRG <=> p~_i(A) B_0 = B_i for all i and |Γ_D~(e)| = 2 p~_D~(δ)", inc.holds == edrg,
                    "EDRG " + yes_no(edrg) + "; " + inc.detail);
        }
        {
            const RatPoly h = hoffman_poly(vp);
            lb.check("hoffman", "H(A) = J for H = p_0 + ... + p_d", check_hoffman(g, h), "H = " + h.to_string());
        }
        lb.check("eigen_count", "degree of the minimal polynomial >= d + 1",
                static_cast<int>(vp.polys.size()) >= dd.diameter + 1,
                std::to_string(vp.polys.size()) + " distinct eigenvalues, d = " + std::to_string(dd.diameter));
        {
            const RatMatrix b0 = incidence_matrix_family(g, dd)[0];
            const RatMatrix want = adjacency_matrix(g) + Rational(delta) * RatMatrix::identity(b0.rows());
            lb.check("mat.B0B0T", "B_0 B_0^T = A + δI", mat_mul(b0, b0.transpose()) == want, "");
        }

        if (drg)
            lb.check("twoway.vertex", "Gram-Schmidt and recurrence give the same p_i",
                    polys_from_array(*r.drg.value).polys == vp.polys, "d = " + std::to_string(dd.diameter));
        else
            lb.skip("twoway.vertex", "Gram-Schmidt and recurrence give the same p_i", "not distance-regular");
        if (edrg)
            lb.check("twoway.edge", "Gram-Schmidt and recurrence give the same p~_i",
                    polys_from_array(*r.edrg.value).polys == ep.polys, "D~ = " + std::to_string(dd.edge_diameter));
        else
            lb.skip("twoway.edge", "Gram-Schmidt and recurrence give the same p~_i", "not edge-distance-regular");

        if (edrg && drg) {
            const auto & arr = *r.drg.value;
            const auto & earr = *r.edrg.value;
            const auto rel = relate_vertex_edge_polys(vp, ep, r.bipartite);
            for (const std::string eq : {"alt_sum", "consecutive_sum", "top_alt_sum", "top_nonbipartite", "top_bipartite"}) {
                const std::string id = "rel." + eq;
                std::string bad, first_detail;
                int count = 0;
                for (const auto & c : rel) {
                    if (c.equation != eq)
                        continue;
                    if (! count++)
                        first_detail = c.detail;
                    if (! c.holds && bad.empty())
                        bad = "fails at i = " + std::to_string(c.index) + ": " + c.detail;
                }
                if (! count)
                    lb.skip(id, "relation " + eq, r.bipartite ? "bipartite" : "not bipartite");
                else
                    lb.check(id, "relation " + eq + ": " + first_detail, bad.empty(),
                            bad.empty() ? std::to_string(count) + " index(es)" : bad);
            }

            const std::string claim = "p_{i+1} = ((x+δ) p~_i - b~_{i-1} p_i)/(a~_i + c_i) for i = 1..d-1";
            std::string bad;
            for (int i = 1; i <= dd.diameter - 1 && bad.empty(); ++i) {
                const auto next = reconstruct_next_poly(ep[static_cast<std::size_t>(i)], vp[static_cast<std::size_t>(i)],
                        Rational(earr.a_at(i)), Rational(arr.c_at(i)), Rational(earr.b_at(i - 1)), delta, i);
                if (next != vp[static_cast<std::size_t>(i + 1)])
                    bad = "i = " + std::to_string(i) + " gives " + next.to_string();
            }
            if (dd.diameter < 2)
                lb.skip("next_poly", claim, "d < 2");
            else
                lb.check("next_poly", claim, bad.empty(), bad.empty() ? "i = 1.." + std::to_string(dd.diameter - 1) : bad);

            lb.check("edge_a_from_b", "a~_i = b~_{i-1} - b~_i", check_lemma_edge_counts(earr));
            matrix_identities(lb, a, arr, earr);
        }
        else {
            for (const char * id : {"rel.alt_sum", "rel.consecutive_sum", "rel.top_alt_sum", "rel.top_nonbipartite", "rel.top_bipartite", "next_poly", "edge_a_from_b", "mat.AiB0", "mat.BiB0T"})
                lb.skip(id, "edge-distance-regular identities", "not edge-distance-regular");
        }
    }

    if (drg)
        fourier_checks(lb, a, *r.drg.value, limits);
    else
        lb.skip("triples", "n_k p^k_ij = n_j p^j_ik for all i,j,k; δ p^1_ii = n_i a_i", "not distance-regular");

    {
        const std::string claim = "pointwise counting identities desig1/3/3b/5 for every (edge, vertex)";
        if (g.order() > limits.max_order_proof_facts)
            lb.skip("proof_facts", claim, "order above " + std::to_string(limits.max_order_proof_facts));
        else {
            const auto t = tally_proof_facts(g, dd, r.drg.value);
            lb.check("proof_facts", claim, t.equation_failures == 0 && t.containment_failures == 0,
                    t.first_failure.empty() ? std::to_string(t.equations) + " equations, "
                                    + std::to_string(t.containment_checks) + " containments"
                                            : t.first_failure);
        }
    }
    return lb.take();
}

} // namespace edrg

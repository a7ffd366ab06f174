#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <edrg/classify.hh>
#include <edrg/families.hh>
#include <edrg/io.hh>

using namespace edrg;

namespace {

std::string drg_text(const Graph & g)
{
    const auto v = classify_drg(g, compute_distances(g));
    return v ? v.value->to_string() : "none";
}

std::string edrg_text(const Graph & g)
{
    const auto v = classify_edrg(g, compute_distances(g));
    return v ? v.value->to_string() : "none";
}

}

TEST_CASE("vertex intersection arrays")
{
    CHECK(drg_text(hypercube(3)) == "{3,2,1;1,2,3}");
    CHECK(drg_text(odd_graph(4)) == "{4,3,3;1,1,2}");
    CHECK(drg_text(petersen()) == "{3,2;1,1}");
    CHECK(drg_text(cycle(5)) == "{2,1;1,1}");
    CHECK(drg_text(cycle(6)) == "{2,1,1;1,1,2}");
    CHECK(drg_text(complete(2)) == "{1;1}");
    CHECK(drg_text(complete(5)) == "{4;1}");
    CHECK(drg_text(complete_bipartite(3, 3)) == "{3,2;1,3}");
    CHECK(drg_text(hamming(2, 3)) == "{4,2;1,2}");
    CHECK(drg_text(path(4)) == "none");
    CHECK(drg_text(complete_bipartite(1, 3)) == "none");
}

TEST_CASE("edge intersection arrays")
{
    CHECK(edrg_text(hypercube(3)) == "{2,1;1,2}");
    CHECK(edrg_text(odd_graph(4)) == "{3,3,2;1,1,4}");
    CHECK(edrg_text(cycle(5)) == "{1,1;1,2}");
    CHECK(edrg_text(petersen()) == "{2,2;1,2}");
    CHECK(edrg_text(complete(4)) == "{2;2}");
    CHECK(edrg_text(complete(2)) == "{;}");
    CHECK(edrg_text(complete_bipartite(3, 3)) == "{2;1}");
    CHECK(edrg_text(hamming(2, 3)) == "none");
    CHECK(edrg_text(path(4)) == "none");
}

TEST_CASE("a failed verdict carries a witness")
{
    const Graph p4 = path(4);
    const auto v = classify_drg(p4, compute_distances(p4));
    REQUIRE(! v);
    REQUIRE(v.witness);
    CHECK(v.witness->first.i == v.witness->second.i);
    CHECK(! (v.witness->first == v.witness->second));
    CHECK(v.witness->describe().find("stratum") != std::string::npos);
    CHECK(! v.reason.empty());
}

TEST_CASE("homogeneity")
{
    const Graph q3 = hypercube(3);
    const auto h = classify_homogeneous(q3, compute_distances(q3));
    REQUIRE(h);
    CHECK(h.value->labels.size() == 6);
    // Star: the two orientations of an edge see different quotients.
    const Graph star = complete_bipartite(1, 3);
    CHECK(! classify_homogeneous(star, compute_distances(star)));
    // Hamming(2,3) is distance-regular, hence homogeneous, but not edge-distance-regular.
    const Graph h23 = hamming(2, 3);
    CHECK(classify_homogeneous(h23, compute_distances(h23)));
}

TEST_CASE("generalized odd graphs")
{
    const auto go = [](const Graph & g) {
        const auto dd = compute_distances(g);
        return is_generalized_odd(g, dd, *classify_drg(g, dd).value);
    };
    CHECK(go(cycle(7)));
    CHECK(go(petersen()));
    CHECK(go(odd_graph(4)));
    CHECK(go(complete(4)));
    CHECK(! go(hypercube(3)));
    CHECK(! go(hamming(2, 3)));
    CHECK(! go(load_fixture("wells")));
}

TEST_CASE("intersection numbers p^k_ij")
{
    const Graph p = petersen();
    const auto dd = compute_distances(p);
    CHECK(triple_intersection(p, dd, 1, 1, 1).value == 0L);
    CHECK(triple_intersection(p, dd, 1, 1, 2).value == 1L);
    CHECK(triple_intersection(p, dd, 2, 2, 0).value == 6L);
    CHECK(triple_intersection(p, dd, 1, 1, 0).pairs == 10u);
    CHECK(! triple_intersection(p, dd, 3, 1, 1).value);

    const Graph p4 = path(4);
    const auto t = triple_intersection(p4, compute_distances(p4), 1, 1, 0);
    CHECK(! t.value);
    CHECK(t.per_pair.size() == 4u);

    CHECK(sphere_sizes(*classify_drg(p, dd).value) == std::vector<long>{1, 3, 6});
    CHECK(sphere_sizes(*classify_drg(hypercube(3), compute_distances(hypercube(3))).value)
            == std::vector<long>{1, 3, 3, 1});
}

TEST_CASE("report bundle")
{
    const auto r = classify(complete(2));
    CHECK(r.edrg_vacuous);
    CHECK(r.bipartite);
    const auto w = classify(load_fixture("wells"));
    CHECK(w.order == 32);
    CHECK(w.size == 80);
    CHECK(w.regular == 5);
    CHECK(! w.bipartite);
    CHECK(w.odd_girth == 5);
    CHECK(w.diameter == 4);
    CHECK(w.drg);
    CHECK(! w.edrg);
    CHECK(w.homogeneous);
    CHECK(! w.generalized_odd);
}

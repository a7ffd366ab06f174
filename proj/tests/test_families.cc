#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <edrg/classify.hh>
#include <edrg/families.hh>
#include <edrg/io.hh>

#include <cstdlib>
#include <filesystem>
#include <fstream>

using namespace edrg;

TEST_CASE("family sizes")
{
    const Graph q3 = hypercube(3);
    CHECK(q3.order() == 8);
    CHECK(q3.size() == 12);
    CHECK(regular_degree(q3) == 3);
    CHECK(is_bipartite(q3));

    const Graph o4 = kneser(7, 3);
    CHECK(o4 == odd_graph(4));
    CHECK(o4.order() == 35);
    CHECK(regular_degree(o4) == 4);
    CHECK(compute_distances(o4).diameter == 3);

    CHECK(petersen().order() == 10);
    CHECK(classify_drg(petersen(), compute_distances(petersen())).value->to_string() == "{3,2;1,1}");
    CHECK(hamming(3, 4).order() == 64);
    CHECK(regular_degree(hamming(3, 4)) == 9);
    CHECK(complete_bipartite(2, 3).size() == 6);
    CHECK(path(4).size() == 3);
    CHECK(cycle(9).size() == 9);
    CHECK(complete(6).size() == 15);
    CHECK(odd_graph(2) == complete(3));
}

TEST_CASE("numbering conventions")
{
    // Kneser: colex order of k-subsets, {0,1} {0,2} {1,2} {0,3} ...; vertex 0 = {0,1} is
    // disjoint from {2,3} = vertex 5.
    const Graph k52 = kneser(5, 2);
    CHECK(k52.adjacent(0, 5));
    CHECK(! k52.adjacent(0, 1));
    CHECK(k52.neighbours(0).size() == 3);
    // Hypercube: binary strings.
    CHECK(hypercube(4).adjacent(0b0101, 0b0111));
    CHECK(! hypercube(4).adjacent(0b0101, 0b0110));
    // Hamming(2,3): (a,b) -> 3a+b.
    CHECK(hamming(2, 3).adjacent(0, 2));
    CHECK(hamming(2, 3).adjacent(1, 7));
    CHECK(! hamming(2, 3).adjacent(0, 4));
    CHECK(complete_bipartite(2, 3).adjacent(1, 2));
    CHECK(! complete_bipartite(2, 3).adjacent(0, 1));
    CHECK(cycle(5).adjacent(0, 4));
}

TEST_CASE("family specs")
{
    CHECK(parse_family_spec("kneser:7,3") == FamilySpec{"kneser", {7, 3}});
    CHECK(parse_family_spec(" petersen ") == FamilySpec{"petersen", {}});
    CHECK(parse_family_spec("hypercube:3").to_string() == "hypercube:3");
    CHECK(generate(parse_family_spec("odd:3")) == petersen());
    CHECK(family_names().size() == 9u);
    CHECK_THROWS_AS(parse_family_spec("kneser:7,x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family_spec(":3"), std::invalid_argument);
    CHECK_THROWS_AS(generate({"moebius", {3}}), std::invalid_argument);
    CHECK_THROWS_AS(generate({"kneser", {7}}), std::invalid_argument);
    CHECK_THROWS_AS(generate({"petersen", {1}}), std::invalid_argument);
}

TEST_CASE("parameter ranges")
{
    CHECK_THROWS_AS(kneser(5, 3), std::invalid_argument);
    CHECK_THROWS_AS(kneser(4, 0), std::invalid_argument);
    CHECK_THROWS_AS(kneser(40, 20), std::invalid_argument);
    CHECK_THROWS_AS(cycle(2), std::invalid_argument);
    CHECK_THROWS_AS(hypercube(0), std::invalid_argument);
    CHECK_THROWS_AS(hamming(2, 1), std::invalid_argument);
    CHECK_THROWS_AS(hamming(20, 2), std::invalid_argument);
    CHECK_THROWS_AS(complete(0), std::invalid_argument);
    CHECK_THROWS_AS(complete_bipartite(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(odd_graph(1), std::invalid_argument);
    CHECK_THROWS_AS(path(0), std::invalid_argument);
}

TEST_CASE("family properties across parameters")
{
    for (int k = 1; k <= 5; ++k) {
        const Graph g = hypercube(k);
        const auto r = classify(g);
        CHECK(r.bipartite);
        CHECK(r.drg);
        CHECK(r.edrg);
    }
    for (int k = 2; k <= 4; ++k) {
        const auto r = classify(odd_graph(k));
        CHECK(r.generalized_odd);
        CHECK(r.edrg);
    }
    for (int n = 4; n <= 11; ++n) {
        const auto r = classify(cycle(n));
        CHECK(r.drg);
        CHECK(r.edrg);
        CHECK(r.generalized_odd == (n % 2 == 1));
        CHECK(r.bipartite == (n % 2 == 0));
    }
    CHECK(classify(hamming(3, 3)).drg);
}

TEST_CASE("sidecar parsing")
{
    const auto p = parse_fixture_props("# c\nn = 10\nm=15\n degree = 3\nintersection_array = {3,2;1,1}\n"
                                       "graph6_fnv1a64 = 0xff\n");
    CHECK(p.n == 10);
    CHECK(p.m == 15);
    CHECK(p.degree == 3);
    CHECK(p.array.to_string() == "{3,2;1,1}");
    CHECK(p.checksum == 0xffu);
    CHECK_THROWS(parse_fixture_props("n = 10\n"));
    CHECK_THROWS(parse_fixture_props("n 10\n"));
    CHECK_THROWS(parse_intersection_array("{3,2;1}"));
    CHECK_THROWS(parse_intersection_array("3,2;1,1"));
    CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
}

TEST_CASE("wells fixture")
{
    const Graph w = load_fixture("wells");
    CHECK(w.order() == 32);
    CHECK(regular_degree(w) == 5);
    const auto arr = classify_drg(w, compute_distances(w)).value;
    REQUIRE(arr);
    CHECK(arr->to_string() == "{5,4,1,1;1,1,4,5}");
    CHECK(arr->a_at(2) == 3);
    const auto r = classify(w);
    CHECK(r.homogeneous);
    CHECK(! r.edrg);
    CHECK_THROWS_AS(load_fixture("nonexistent"), FixtureError);
    CHECK_THROWS_AS(load_fixture("../data/wells"), std::invalid_argument);
}

TEST_CASE("tampered fixtures are rejected")
{
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "edrg_fixture_test";
    fs::create_directories(dir);
    const std::string g6 = read_file(fixture_dir() + "/wells.g6");
    const std::string props = read_file(fixture_dir() + "/wells.props");
    const auto write = [&dir](const std::string & name, const std::string & text) {
        std::ofstream(dir / name) << text;
    };

    const std::string saved = fixture_dir();
    setenv("EDRG_DATA_DIR", dir.c_str(), 1);

    // A flipped adjacency bit breaks the checksum.
    std::string flipped = g6;
    flipped[5] = flipped[5] == '?' ? '@' : '?';
    write("wells.g6", flipped);
    write("wells.props", props);
    CHECK_THROWS_AS(load_fixture("wells"), FixtureError);

    // A self-consistent replacement graph fails the invariants instead.
    const std::string pet = encode_graph6(petersen());
    write("wells.g6", pet + "\n");
    char sum[32];
    std::snprintf(sum, sizeof sum, "0x%016llx", static_cast<unsigned long long>(fnv1a64(pet)));
    std::string props2 = props;
    props2.replace(props2.find("0x"), 18, sum);
    write("wells.props", props2);
    CHECK_THROWS_AS(load_fixture("wells"), FixtureError);

    // Correct graph, wrong sidecar array.
    write("wells.g6", g6);
    std::string props3 = props;
    props3.replace(props3.find("{5,4,1,1;1,1,4,5}"), 17, "{5,4,1,1;1,1,4,4}");
    write("wells.props", props3);
    CHECK_THROWS_AS(load_fixture("wells"), FixtureError);

    write("wells.props", props);
    CHECK(load_fixture("wells").order() == 32);

    setenv("EDRG_DATA_DIR", saved.c_str(), 1);
    fs::remove_all(dir);
}

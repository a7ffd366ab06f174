#pragma once

#include <edrg/classify.hh>
#include <edrg/graph.hh>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace edrg {

/// A family name with its integer parameters, written "name:p1,p2,..." ("kneser:7,3",
/// "hypercube:3", "petersen").
struct FamilySpec {
    std::string name;
    std::vector<int> params;

    std::string to_string() const;
    friend bool operator==(const FamilySpec &, const FamilySpec &) = default;
};

/// Throws std::invalid_argument on syntax errors; parameter ranges are checked by generate().
FamilySpec parse_family_spec(std::string_view text);

/// Names accepted by generate().
std::vector<std::string> family_names();

/// Vertex numbering is fixed per family:
///   complete(n), cycle(n), path(n)      0..n-1 in the obvious order
///   complete_bipartite(a,b)             0..a-1 on one side, a..a+b-1 on the other
///   hypercube(k)                        the integer whose binary digits are the coordinates
///   hamming(d,q)                        tuples in lexicographic order (first coordinate most significant)
///   kneser(n,k)                         k-subsets of {0..n-1} in colex order
///   odd(k)                              kneser(2k-1, k-1)
///   petersen                            kneser(5,2)
/// Throws std::invalid_argument for unknown names or parameters out of range.
Graph generate(const FamilySpec & spec);

Graph complete(int n);
Graph complete_bipartite(int a, int b);
Graph cycle(int n);
Graph path(int n);
Graph hypercube(int k);
Graph hamming(int d, int q);
Graph kneser(int n, int k);
Graph odd_graph(int k);
Graph petersen();

/// Expected invariants stored next to a fixture as "key = value" lines.
struct FixtureProps {
    int n = 0;
    int m = 0;
    int degree = 0;
    IntersectionArray array;
    std::uint64_t checksum = 0; // FNV-1a 64 of the graph6 line
};

/// Raised when a fixture is missing or does not match its sidecar.
class FixtureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Directory holding <name>.g6 and <name>.props; EDRG_DATA_DIR in the environment
/// overrides the location compiled in.
std::string fixture_dir();

FixtureProps parse_fixture_props(std::string_view text);
IntersectionArray parse_intersection_array(std::string_view text);
std::uint64_t fnv1a64(std::string_view bytes);

/// Loads data/<name>.g6 and asserts checksum, order, size, degree and intersection
/// array against data/<name>.props.
Graph load_fixture(const std::string & name);

} // namespace edrg

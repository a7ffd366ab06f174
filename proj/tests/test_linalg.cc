#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <edrg/distances.hh>
#include <edrg/errors.hh>
#include <edrg/families.hh>
#include <edrg/linalg.hh>

#include <random>

using namespace edrg;

namespace {

RatMatrix random_matrix(std::mt19937_64 & rng, std::size_t r, std::size_t c, long lo, long hi, bool fractions)
{
    std::uniform_int_distribution<long> d(lo, hi);
    RatMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m(i, j) = fractions ? Rational(d(rng), 1 + std::abs(d(rng))) : Rational(d(rng));
    return m;
}

}

TEST_CASE("matrix basics")
{
    const RatMatrix i3 = RatMatrix::identity(3);
    CHECK(trace(i3) == Rational(3));
    CHECK(RatMatrix::all_ones(2, 3).transpose() == RatMatrix::all_ones(3, 2));
    CHECK_THROWS_AS(RatMatrix(2, 2, std::vector<Rational>(3)), DimensionMismatch);
    CHECK_THROWS_AS(trace(RatMatrix(2, 3)), DimensionMismatch);
    CHECK_THROWS_AS(mat_mul(RatMatrix(2, 3), RatMatrix(2, 3)), DimensionMismatch);
    CHECK_THROWS_AS(RatMatrix(2, 2) += RatMatrix(3, 3), DimensionMismatch);
    CHECK(! RatMatrix(1, 1, {Rational(1, 2)}).is_integral());
}

TEST_CASE("integer fast path agrees with the rational product")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t r = 1 + rng() % 13, k = 1 + rng() % 13, c = 1 + rng() % 13;
        const auto a = random_matrix(rng, r, k, -50, 50, false);
        const auto b = random_matrix(rng, k, c, -50, 50, false);
        CHECK(mat_mul(a, b) == mat_mul_generic(a, b));
    }
}

TEST_CASE("large and fractional entries take the exact route")
{
    std::mt19937_64 rng(11);
    const auto a = random_matrix(rng, 4, 4, -9, 9, true);
    const auto b = random_matrix(rng, 4, 4, -9, 9, true);
    CHECK(mat_mul(a, b) == mat_mul_generic(a, b));

    // Partial sums beyond 64 bits.
    RatMatrix big(2, 2);
    const Rational huge(Rational(mpz_class("4000000000000000000")));
    big(0, 0) = huge;
    big(0, 1) = huge;
    big(1, 0) = huge;
    big(1, 1) = huge;
    const auto sq = mat_mul(big, big);
    CHECK(sq(0, 0) == Rational(2) * huge * huge);
    CHECK(sq == mat_mul_generic(big, big));
}

TEST_CASE("polynomial at a matrix")
{
    const Graph q3 = hypercube(3);
    const RatMatrix a = adjacency_matrix(q3);
    CHECK(trace(a * a) == Rational(24));
    // (A^2 - 3I)/2 is the distance-2 matrix of Q3.
    const RatPoly p2({Rational(-3, 2), Rational(0), Rational(1, 2)});
    CHECK(eval_poly_at_matrix(p2, a) == distance_matrix_family(q3)[2]);
    CHECK(eval_poly_at_matrix(RatPoly(), a) == RatMatrix(8, 8));
    CHECK(eval_poly_at_matrix(RatPoly(Rational(2)), a) == Rational(2) * RatMatrix::identity(8));
}

TEST_CASE("fraction-free rank")
{
    using Row = std::vector<mpz_class>;
    CHECK(fraction_free_rank({}) == 0u);
    CHECK(fraction_free_rank({Row{0, 0}, Row{0, 0}}) == 0u);
    CHECK(fraction_free_rank({Row{1, 2, 3}, Row{2, 4, 6}, Row{1, 0, 1}}) == 2u);
    CHECK(fraction_free_rank({Row{0, 1}, Row{1, 0}}) == 2u);
    CHECK(fraction_free_rank({Row{2, 4}, Row{3, 6}, Row{0, 1}}) == 2u);
}

TEST_CASE("minimal polynomial degree counts distinct eigenvalues")
{
    CHECK(min_poly_degree(adjacency_matrix(complete(5))) == 2u);
    CHECK(min_poly_degree(adjacency_matrix(hypercube(3))) == 4u);
    CHECK(min_poly_degree(adjacency_matrix(petersen())) == 3u);
    CHECK(min_poly_degree(adjacency_matrix(cycle(7))) == 4u);
    CHECK(min_poly_degree(adjacency_matrix(path(4))) == 4u);
    CHECK(min_poly_degree(RatMatrix(3, 3)) == 1u);
    CHECK_THROWS_AS(min_poly_degree(RatMatrix(2, 3)), DimensionMismatch);
}

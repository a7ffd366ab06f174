#pragma once

#include <edrg/rat_matrix.hh>
#include <edrg/rat_poly.hh>

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace edrg {

/// Exact product. Integral operands whose partial sums provably fit in 64 bits go
/// through the int64 kernel; everything else is multiplied in GMP rationals.
/// Throws DimensionMismatch when a.cols() != b.rows().
RatMatrix mat_mul(const RatMatrix & a, const RatMatrix & b);

/// Always the GMP route; reference for mat_mul's fast path.
RatMatrix mat_mul_generic(const RatMatrix & a, const RatMatrix & b);

inline RatMatrix operator*(const RatMatrix & a, const RatMatrix & b) { return mat_mul(a, b); }

/// Sum of the diagonal. Throws DimensionMismatch for non-square input.
Rational trace(const RatMatrix & a);

/// p(a) by Horner's rule; the constant term multiplies the identity.
/// Coefficients are scaled to integers first so integral `a` stays on the integer path.
RatMatrix eval_poly_at_matrix(const RatPoly & p, const RatMatrix & a);

/// Rank of an integer row set by fraction-free (Bareiss) elimination.
std::size_t fraction_free_rank(std::vector<std::vector<mpz_class>> rows);

/// Smallest k such that I, a, ..., a^k are linearly dependent, i.e. the degree of the
/// minimal polynomial of a. Throws DimensionMismatch for non-square input.
std::size_t min_poly_degree(const RatMatrix & a);

} // namespace edrg

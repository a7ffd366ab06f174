#include <edrg/errors.hh>
#include <edrg/kernels.hh>
#include <edrg/linalg.hh>

#include <cstdint>
#include <limits>
#include <optional>

namespace edrg {

namespace {

std::string shape(const RatMatrix & m)
{
    return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

// Entries as int64 if the matrix is integral and every entry fits.
std::optional<std::vector<std::int64_t>> as_int64(const RatMatrix & m)
{
    std::vector<std::int64_t> out;
    out.reserve(m.entries().size());
    for (const auto & e : m.entries()) {
        if (! e.is_integer())
            return std::nullopt;
        const mpz_class & num = e.value().get_num();
        if (! num.fits_slong_p())
            return std::nullopt;
        out.push_back(num.get_si());
    }
    return out;
}

// Bound on every partial sum of a * b: max_i sum_k |a_ik| * max |b_kj|.
bool product_fits_int64(const std::vector<std::int64_t> & a, std::size_t rows, std::size_t inner,
        const std::vector<std::int64_t> & b)
{
    mpz_class max_b = 0;
    for (auto v : b) {
        mpz_class m = v;
        m = abs(m);
        if (m > max_b)
            max_b = m;
    }
    mpz_class max_row = 0;
    for (std::size_t i = 0; i < rows; ++i) {
        mpz_class s = 0;
        for (std::size_t k = 0; k < inner; ++k) {
            mpz_class m = a[i * inner + k];
            s += abs(m);
        }
        if (s > max_row)
            max_row = s;
    }
    return max_row * max_b <= mpz_class(std::numeric_limits<std::int64_t>::max());
}

}

RatMatrix mat_mul_generic(const RatMatrix & a, const RatMatrix & b)
{
    if (a.cols() != b.rows())
        throw DimensionMismatch("cannot multiply " + shape(a) + " by " + shape(b));
    RatMatrix c(a.rows(), b.cols());
    mpq_class tmp;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const mpq_class & aik = a(i, k).value();
            if (sgn(aik) == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                const mpq_class & bkj = b(k, j).value();
                if (sgn(bkj) == 0)
                    continue;
                tmp = aik * bkj;
                c(i, j) += Rational(tmp);
            }
        }
    return c;
}

RatMatrix mat_mul(const RatMatrix & a, const RatMatrix & b)
{
    if (a.cols() != b.rows())
        throw DimensionMismatch("cannot multiply " + shape(a) + " by " + shape(b));

    auto ia = as_int64(a);
    auto ib = ia ? as_int64(b) : std::nullopt;
    if (! ia || ! ib || ! product_fits_int64(*ia, a.rows(), a.cols(), *ib))
        return mat_mul_generic(a, b);

    std::vector<std::int64_t> out(a.rows() * b.cols());
    kernels::active().gemm_i64(ia->data(), ib->data(), out.data(), a.rows(), a.cols(), b.cols());
    std::vector<Rational> entries;
    entries.reserve(out.size());
    for (auto v : out)
        entries.emplace_back(v);
    return RatMatrix(a.rows(), b.cols(), std::move(entries));
}

Rational trace(const RatMatrix & a)
{
    if (! a.is_square())
        throw DimensionMismatch("trace of non-square " + shape(a) + " matrix");
    Rational t;
    for (std::size_t i = 0; i < a.rows(); ++i)
        t += a(i, i);
    return t;
}

RatMatrix eval_poly_at_matrix(const RatPoly & p, const RatMatrix & a)
{
    if (! a.is_square())
        throw DimensionMismatch("polynomial evaluated at non-square " + shape(a) + " matrix");
    const std::size_t n = a.rows();
    if (p.is_zero())
        return RatMatrix(n, n);

    mpz_class scale = 1;
    for (const auto & c : p.coefficients())
        mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.value().get_den_mpz_t());
    const Rational scale_q(scale);

    const auto coeffs = p.coefficients();
    const RatMatrix id = RatMatrix::identity(n);
    RatMatrix acc = id * (coeffs.back() * scale_q);
    for (std::size_t k = coeffs.size() - 1; k-- > 0;) {
        acc = mat_mul(acc, a);
        if (! coeffs[k].is_zero())
            acc += id * (coeffs[k] * scale_q);
    }
    if (scale != 1)
        acc *= Rational(mpq_class(1, scale));
    return acc;
}

std::size_t fraction_free_rank(std::vector<std::vector<mpz_class>> rows)
{
    if (rows.empty())
        return 0;
    const std::size_t cols = rows.front().size();
    for (const auto & r : rows)
        if (r.size() != cols)
            throw DimensionMismatch("ragged row set in rank computation");

    mpz_class prev_pivot = 1;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][c] == 0)
            ++pivot;
        if (pivot == rows.size())
            continue;
        std::swap(rows[pivot], rows[rank]);
        const mpz_class & p = rows[rank][c];
        for (std::size_t i = rank + 1; i < rows.size(); ++i) {
            const mpz_class f = rows[i][c];
            for (std::size_t j = c + 1; j < cols; ++j) {
                mpz_class v = rows[i][j] * p - f * rows[rank][j];
                // Bareiss: every intermediate is a minor of the input, so this division is exact.
                mpz_divexact(rows[i][j].get_mpz_t(), v.get_mpz_t(), prev_pivot.get_mpz_t());
            }
            rows[i][c] = 0;
        }
        prev_pivot = p;
        ++rank;
    }
    return rank;
}

std::size_t min_poly_degree(const RatMatrix & a)
{
    if (! a.is_square())
        throw DimensionMismatch("minimal polynomial of non-square " + shape(a) + " matrix");
    const std::size_t n = a.rows();
    if (n == 0)
        return 0;

    auto vectorise = [](const RatMatrix & m) {
        mpz_class scale = 1;
        for (const auto & e : m.entries())
            mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), e.value().get_den_mpz_t());
        std::vector<mpz_class> row;
        row.reserve(m.entries().size());
        for (const auto & e : m.entries())
            row.push_back(e.value().get_num() * (scale / e.value().get_den()));
        return row;
    };

    std::vector<std::vector<mpz_class>> stack;
    RatMatrix power = RatMatrix::identity(n);
    for (std::size_t k = 0; k <= n; ++k) {
        stack.push_back(vectorise(power));
        if (fraction_free_rank(stack) < stack.size())
            return k;
        power = mat_mul(power, a);
    }
    throw InternalInconsistency("no linear dependency among I..A^n (Cayley-Hamilton violated)");
}

} // namespace edrg

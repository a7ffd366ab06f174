#include <edrg/kernels.hh>

#include <bit>

namespace edrg::kernels::scalar {

std::size_t popcount_and(const std::uint64_t * a, const std::uint64_t * b, std::size_t words)
{
    std::size_t total = 0;
    for (std::size_t w = 0; w < words; ++w)
        total += static_cast<std::size_t>(std::popcount(a[w] & b[w]));
    return total;
}

void gemm_i64(const std::int64_t * a, const std::int64_t * b, std::int64_t * c,
        std::size_t rows, std::size_t inner, std::size_t cols)
{
    for (std::size_t i = 0; i < rows; ++i) {
        std::uint64_t * out = reinterpret_cast<std::uint64_t *>(c + i * cols);
        for (std::size_t j = 0; j < cols; ++j)
            out[j] = 0;
        for (std::size_t k = 0; k < inner; ++k) {
            const auto s = static_cast<std::uint64_t>(a[i * inner + k]);
            if (s == 0)
                continue;
            const std::int64_t * row = b + k * cols;
            for (std::size_t j = 0; j < cols; ++j)
                out[j] += s * static_cast<std::uint64_t>(row[j]);
        }
    }
}

} // namespace edrg::kernels::scalar

// Compiled with -mavx2; only reached after a runtime CPU check.

#include <edrg/kernels.hh>

#include <immintrin.h>

#include <bit>

namespace edrg::kernels::avx2 {

namespace {

// Nibble-table popcount of each byte, summed into four 64-bit lanes.
inline __m256i popcount_lanes(__m256i v)
{
    const __m256i table = _mm256_setr_epi8(
            0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
            0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low_mask = _mm256_set1_epi8(0x0f);
    const __m256i lo = _mm256_and_si256(v, low_mask);
    const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
    const __m256i bytes = _mm256_add_epi8(_mm256_shuffle_epi8(table, lo), _mm256_shuffle_epi8(table, hi));
    return _mm256_sad_epu8(bytes, _mm256_setzero_si256());
}

// Low 64 bits of lane-wise x * s (no native 64-bit mullo in AVX2).
inline __m256i mullo_epi64(__m256i x, __m256i s, __m256i s_hi)
{
    const __m256i lo_lo = _mm256_mul_epu32(x, s);
    const __m256i x_hi = _mm256_srli_epi64(x, 32);
    const __m256i cross = _mm256_add_epi64(_mm256_mul_epu32(x_hi, s), _mm256_mul_epu32(x, s_hi));
    return _mm256_add_epi64(lo_lo, _mm256_slli_epi64(cross, 32));
}

}

std::size_t popcount_and(const std::uint64_t * a, const std::uint64_t * b, std::size_t words)
{
    std::size_t w = 0;
    __m256i acc = _mm256_setzero_si256();
    for (; w + 4 <= words; w += 4) {
        const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(a + w));
        const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(b + w));
        acc = _mm256_add_epi64(acc, popcount_lanes(_mm256_and_si256(va, vb)));
    }
    alignas(32) std::uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i *>(lanes), acc);
    std::size_t total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    for (; w < words; ++w)
        total += static_cast<std::size_t>(std::popcount(a[w] & b[w]));
    return total;
}

void gemm_i64(const std::int64_t * a, const std::int64_t * b, std::int64_t * c,
        std::size_t rows, std::size_t inner, std::size_t cols)
{
    for (std::size_t i = 0; i < rows; ++i) {
        std::int64_t * out = c + i * cols;
        for (std::size_t j = 0; j < cols; ++j)
            out[j] = 0;
        for (std::size_t k = 0; k < inner; ++k) {
            const std::int64_t s = a[i * inner + k];
            if (s == 0)
                continue;
            const std::int64_t * row = b + k * cols;
            std::size_t j = 0;
            if (s == 1) {
                for (; j + 4 <= cols; j += 4) {
                    const __m256i r = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(row + j));
                    __m256i * dst = reinterpret_cast<__m256i *>(out + j);
                    _mm256_storeu_si256(dst, _mm256_add_epi64(_mm256_loadu_si256(dst), r));
                }
            }
            else {
                const __m256i vs = _mm256_set1_epi64x(s);
                const __m256i vs_hi = _mm256_srli_epi64(vs, 32);
                for (; j + 4 <= cols; j += 4) {
                    const __m256i r = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(row + j));
                    __m256i * dst = reinterpret_cast<__m256i *>(out + j);
                    _mm256_storeu_si256(dst, _mm256_add_epi64(_mm256_loadu_si256(dst), mullo_epi64(r, vs, vs_hi)));
                }
            }
            const auto us = static_cast<std::uint64_t>(s);
            for (; j < cols; ++j)
                out[j] = static_cast<std::int64_t>(static_cast<std::uint64_t>(out[j]) + us * static_cast<std::uint64_t>(row[j]));
        }
    }
}

} // namespace edrg::kernels::avx2

#pragma once

// Data-parallel inner loops with a scalar reference implementation and SIMD variants.
// The variant is chosen once per process from the CPU's capabilities; setting
// EDRG_ISA=scalar in the environment forces the reference path.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace edrg::kernels {

enum class Isa { scalar, avx2 };

struct KernelTable {
    Isa isa;

    /// Number of set bits in a[i] & b[i] over `words` words.
    std::size_t (*popcount_and)(const std::uint64_t * a, const std::uint64_t * b, std::size_t words);

    /// c = a * b for row-major int64 matrices (rows x inner) * (inner x cols).
    /// Wrap-around arithmetic: the caller guarantees no partial sum overflows.
    void (*gemm_i64)(const std::int64_t * a, const std::int64_t * b, std::int64_t * c,
            std::size_t rows, std::size_t inner, std::size_t cols);
};

std::string_view isa_name(Isa isa) noexcept;
bool isa_supported(Isa isa) noexcept;

/// Table for a specific ISA; throws std::runtime_error if the CPU lacks it.
const KernelTable & table_for(Isa isa);

/// The table selected for this process.
const KernelTable & active();

/// All ISAs usable on this machine, scalar first.
std::vector<Isa> available_isas();

inline std::size_t popcount_and(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b)
{
    return active().popcount_and(a.data(), b.data(), a.size() < b.size() ? a.size() : b.size());
}

namespace scalar {
std::size_t popcount_and(const std::uint64_t * a, const std::uint64_t * b, std::size_t words);
void gemm_i64(const std::int64_t * a, const std::int64_t * b, std::int64_t * c,
        std::size_t rows, std::size_t inner, std::size_t cols);
}

#if defined(__x86_64__) || defined(_M_X64)
#define EDRG_HAVE_AVX2_KERNELS 1
namespace avx2 {
std::size_t popcount_and(const std::uint64_t * a, const std::uint64_t * b, std::size_t words);
void gemm_i64(const std::int64_t * a, const std::int64_t * b, std::int64_t * c,
        std::size_t rows, std::size_t inner, std::size_t cols);
}
#endif

} // namespace edrg::kernels

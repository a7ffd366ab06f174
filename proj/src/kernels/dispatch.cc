#include <edrg/kernels.hh>

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace edrg::kernels {

namespace {

constexpr KernelTable scalar_table{Isa::scalar, &scalar::popcount_and, &scalar::gemm_i64};
#ifdef EDRG_HAVE_AVX2_KERNELS
constexpr KernelTable avx2_table{Isa::avx2, &avx2::popcount_and, &avx2::gemm_i64};
#endif

const KernelTable & select()
{
    if (const char * forced = std::getenv("EDRG_ISA")) {
        const std::string want(forced);
        if (want == "scalar")
            return scalar_table;
        if (want == "avx2")
            return table_for(Isa::avx2);
    }
    if (isa_supported(Isa::avx2))
        return table_for(Isa::avx2);
    return scalar_table;
}

}

std::string_view isa_name(Isa isa) noexcept
{
    switch (isa) {
        case Isa::scalar: return "scalar";
        case Isa::avx2:   return "avx2";
    }
    return "unknown";
}

bool isa_supported(Isa isa) noexcept
{
    switch (isa) {
        case Isa::scalar:
            return true;
        case Isa::avx2:
#ifdef EDRG_HAVE_AVX2_KERNELS
            return __builtin_cpu_supports("avx2");
#else
            return false;
#endif
    }
    return false;
}

const KernelTable & table_for(Isa isa)
{
    if (! isa_supported(isa))
        throw std::runtime_error("kernel ISA not supported on this CPU: " + std::string(isa_name(isa)));
#ifdef EDRG_HAVE_AVX2_KERNELS
    if (isa == Isa::avx2)
        return avx2_table;
#endif
    return scalar_table;
}

const KernelTable & active()
{
    static const KernelTable & chosen = select();
    return chosen;
}

std::vector<Isa> available_isas()
{
    std::vector<Isa> out{Isa::scalar};
    if (isa_supported(Isa::avx2))
        out.push_back(Isa::avx2);
    return out;
}

} // namespace edrg::kernels

#include "pmtower/gf2/kernels.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace pmtower::gf2 {

std::string_view isa_name(Isa isa) noexcept {
    switch (isa) {
        case Isa::scalar: return "scalar";
        case Isa::avx2: return "avx2";
        case Isa::neon: return "neon";
    }
    return "unknown";
}

namespace {

bool cpu_has(Isa isa) {
    switch (isa) {
        case Isa::scalar: return true;
        case Isa::avx2:
#if defined(PMTOWER_HAVE_AVX2_KERNELS) && (defined(__GNUC__) || defined(__clang__))
            return __builtin_cpu_supports("avx2");
#else
            return false;
#endif
        case Isa::neon:
#if defined(PMTOWER_HAVE_NEON_KERNELS)
            return true;  // NEON is baseline on aarch64
#else
            return false;
#endif
    }
    return false;
}

const KernelTable* table_for(Isa isa) {
    switch (isa) {
        case Isa::scalar: return &scalar_kernels();
#if defined(PMTOWER_HAVE_AVX2_KERNELS)
        case Isa::avx2: return &detail::avx2_kernels();
#endif
#if defined(PMTOWER_HAVE_NEON_KERNELS)
        case Isa::neon: return &detail::neon_kernels();
#endif
        default: return nullptr;
    }
}

const KernelTable& detect() {
    if (const char* env = std::getenv("PMTOWER_FORCE_SCALAR"); env && std::string(env) == "1") {
        return scalar_kernels();
    }
    for (Isa isa : {Isa::avx2, Isa::neon}) {
        if (cpu_has(isa)) {
            if (const KernelTable* t = table_for(isa)) return *t;
        }
    }
    return scalar_kernels();
}

}  // namespace

std::vector<Isa> available_isas() {
    std::vector<Isa> out{Isa::scalar};
    for (Isa isa : {Isa::avx2, Isa::neon}) {
        if (cpu_has(isa) && table_for(isa)) out.push_back(isa);
    }
    return out;
}

const KernelTable& kernels_for(Isa isa) {
    const KernelTable* t = cpu_has(isa) ? table_for(isa) : nullptr;
    if (!t) throw std::invalid_argument("kernel variant not available: " + std::string(isa_name(isa)));
    return *t;
}

const KernelTable& active_kernels() noexcept {
    static const KernelTable& table = detect();
    return table;
}

}  // namespace pmtower::gf2

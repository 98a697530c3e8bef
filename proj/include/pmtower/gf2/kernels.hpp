#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace pmtower::gf2 {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

enum class Isa { scalar, avx2, neon };

std::string_view isa_name(Isa isa) noexcept;

// Row kernels used by elimination. Every variant must agree bit-for-bit with
// the scalar reference.
struct KernelTable {
    Isa isa;
    // dst[i] ^= src[i] for i in [0, n)
    void (*xor_into)(Word* dst, const Word* src, std::size_t n);
    // true iff any of words[0, n) is nonzero
    bool (*any_set)(const Word* words, std::size_t n);
};

const KernelTable& scalar_kernels() noexcept;

// Variants compiled into this build and usable on this CPU, scalar first.
std::vector<Isa> available_isas();

// Table for a specific ISA; throws std::invalid_argument if unavailable.
const KernelTable& kernels_for(Isa isa);

// Best available table, detected once at first use. PMTOWER_FORCE_SCALAR=1 in
// the environment pins the scalar reference.
const KernelTable& active_kernels() noexcept;

namespace detail {
#if defined(PMTOWER_HAVE_AVX2_KERNELS)
const KernelTable& avx2_kernels() noexcept;
#endif
#if defined(PMTOWER_HAVE_NEON_KERNELS)
const KernelTable& neon_kernels() noexcept;
#endif
}  // namespace detail

}  // namespace pmtower::gf2

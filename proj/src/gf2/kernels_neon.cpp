#include <arm_neon.h>

#include "pmtower/gf2/kernels.hpp"

namespace pmtower::gf2::detail {
namespace {

void xor_into_neon(Word* dst, const Word* src, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const uint64x2_t d = vld1q_u64(dst + i);
        const uint64x2_t s = vld1q_u64(src + i);
        vst1q_u64(dst + i, veorq_u64(d, s));
    }
    for (; i < n; ++i) dst[i] ^= src[i];
}

bool any_set_neon(const Word* words, std::size_t n) {
    std::size_t i = 0;
    uint64x2_t acc = vdupq_n_u64(0);
    for (; i + 2 <= n; i += 2) acc = vorrq_u64(acc, vld1q_u64(words + i));
    Word tail = vgetq_lane_u64(acc, 0) | vgetq_lane_u64(acc, 1);
    for (; i < n; ++i) tail |= words[i];
    return tail != 0;
}

}  // namespace

const KernelTable& neon_kernels() noexcept {
    static constexpr KernelTable table{Isa::neon, &xor_into_neon, &any_set_neon};
    return table;
}

}  // namespace pmtower::gf2::detail

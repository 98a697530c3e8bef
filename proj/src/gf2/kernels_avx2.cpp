#include <immintrin.h>

#include "pmtower/gf2/kernels.hpp"

namespace pmtower::gf2::detail {
namespace {

// Four words per 256-bit lane, two lanes per iteration.
void xor_into_avx2(Word* dst, const Word* src, std::size_t n) {
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i d0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i d1 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i + 4));
        const __m256i s0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        const __m256i s1 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i + 4));
        d0 = _mm256_xor_si256(d0, s0);
        d1 = _mm256_xor_si256(d1, s1);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), d0);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i + 4), d1);
    }
    for (; i + 4 <= n; i += 4) {
        __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(d, s));
    }
    for (; i < n; ++i) dst[i] ^= src[i];
}

bool any_set_avx2(const Word* words, std::size_t n) {
    std::size_t i = 0;
    __m256i acc = _mm256_setzero_si256();
    for (; i + 4 <= n; i += 4) {
        acc = _mm256_or_si256(acc, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(words + i)));
    }
    Word tail = 0;
    for (; i < n; ++i) tail |= words[i];
    return !_mm256_testz_si256(acc, acc) || tail != 0;
}

}  // namespace

const KernelTable& avx2_kernels() noexcept {
    static constexpr KernelTable table{Isa::avx2, &xor_into_avx2, &any_set_avx2};
    return table;
}

}  // namespace pmtower::gf2::detail

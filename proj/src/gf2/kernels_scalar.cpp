#include "pmtower/gf2/kernels.hpp"

namespace pmtower::gf2 {
namespace {

void xor_into_scalar(Word* dst, const Word* src, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] ^= src[i];
}

bool any_set_scalar(const Word* words, std::size_t n) {
    Word acc = 0;
    for (std::size_t i = 0; i < n; ++i) acc |= words[i];
    return acc != 0;
}

}  // namespace

const KernelTable& scalar_kernels() noexcept {
    static constexpr KernelTable table{Isa::scalar, &xor_into_scalar, &any_set_scalar};
    return table;
}

}  // namespace pmtower::gf2

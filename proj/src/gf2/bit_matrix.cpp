#include "pmtower/gf2/bit_matrix.hpp"

#include <bit>
#include <cstring>
#include <stdexcept>
#include <utility>

namespace pmtower::gf2 {

namespace {

constexpr std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

constexpr Word bit_mask(std::size_t c) { return Word{1} << (c % kWordBits); }

}  // namespace

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_(words_for(cols)), data_(rows * words_for(cols), 0) {}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
}

BitMatrix BitMatrix::from_rows(std::initializer_list<const char*> rows) {
    std::size_t cols = rows.size() == 0 ? 0 : std::strlen(*rows.begin());
    BitMatrix m(rows.size(), cols);
    std::size_t r = 0;
    for (const char* text : rows) {
        if (std::strlen(text) != cols) throw std::invalid_argument("ragged bit rows");
        for (std::size_t c = 0; c < cols; ++c) {
            if (text[c] == '1') {
                m.set(r, c);
            } else if (text[c] != '0') {
                throw std::invalid_argument("bit rows may only contain '0' and '1'");
            }
        }
        ++r;
    }
    return m;
}

bool BitMatrix::get(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("BitMatrix::get");
    return (data_[r * stride_ + c / kWordBits] & bit_mask(c)) != 0;
}

void BitMatrix::set(std::size_t r, std::size_t c, bool value) {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("BitMatrix::set");
    Word& w = data_[r * stride_ + c / kWordBits];
    if (value) {
        w |= bit_mask(c);
    } else {
        w &= ~bit_mask(c);
    }
}

void BitMatrix::flip(std::size_t r, std::size_t c) {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("BitMatrix::flip");
    data_[r * stride_ + c / kWordBits] ^= bit_mask(c);
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) noexcept {
    if (a == b) return;
    std::swap_ranges(data_.begin() + static_cast<std::ptrdiff_t>(a * stride_),
                     data_.begin() + static_cast<std::ptrdiff_t>((a + 1) * stride_),
                     data_.begin() + static_cast<std::ptrdiff_t>(b * stride_));
}

void BitMatrix::add_row(std::size_t dst, std::size_t src) noexcept {
    active_kernels().xor_into(data_.data() + dst * stride_, data_.data() + src * stride_, stride_);
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        const Word* src = data_.data() + r * stride_;
        for (std::size_t w = 0; w < stride_; ++w) {
            Word bits = src[w];
            while (bits) {
                const auto b = static_cast<std::size_t>(std::countr_zero(bits));
                bits &= bits - 1;
                t.data_[(w * kWordBits + b) * t.stride_ + r / kWordBits] |= bit_mask(r);
            }
        }
    }
    return t;
}

std::size_t BitMatrix::count_ones() const noexcept {
    std::size_t n = 0;
    for (Word w : data_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

bool BitMatrix::padding_clear() const noexcept {
    if (cols_ % kWordBits == 0) return true;
    const Word pad = ~((Word{1} << (cols_ % kWordBits)) - 1);
    for (std::size_t r = 0; r < rows_; ++r) {
        if (data_[r * stride_ + stride_ - 1] & pad) return false;
    }
    return true;
}

BitMatrix multiply(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("multiply: inner dimensions differ");
    BitMatrix out(a.rows(), b.cols());
    const KernelTable& k = active_kernels();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        auto dst = out.row(i);
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a.get(i, j)) k.xor_into(dst.data(), b.row(j).data(), dst.size());
        }
    }
    return out;
}

namespace {

std::size_t eliminate(BitMatrix& m, const KernelTable& k) {
    const std::size_t rows = m.rows();
    const std::size_t stride = m.words_per_row();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < rows; ++c) {
        const std::size_t w = c / kWordBits;
        const Word mask = bit_mask(c);
        std::size_t pivot = rank;
        while (pivot < rows && (m.row(pivot)[w] & mask) == 0) ++pivot;
        if (pivot == rows) continue;
        m.swap_rows(pivot, rank);
        const Word* src = m.row(rank).data() + w;
        for (std::size_t r = rank + 1; r < rows; ++r) {
            Word* dst = m.row(r).data();
            if (dst[w] & mask) k.xor_into(dst + w, src, stride - w);
        }
        ++rank;
    }
    return rank;
}

}  // namespace

std::size_t rank(const BitMatrix& m, const KernelTable& kernels) {
    if (m.empty()) return 0;
    // Elimination cost scales with rows * words_per_row; reduce whichever
    // orientation is cheaper. Row rank equals column rank.
    const std::size_t direct = m.rows() * m.words_per_row();
    const std::size_t flipped = m.cols() * words_for(m.rows());
    BitMatrix work = flipped < direct ? m.transposed() : m;
    return eliminate(work, kernels);
}

std::size_t rank(const BitMatrix& m) { return rank(m, active_kernels()); }

std::size_t kernel_dim(const BitMatrix& m) { return m.cols() - rank(m); }

}  // namespace pmtower::gf2

#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "pmtower/gf2/kernels.hpp"

namespace pmtower::gf2 {

/// Dense matrix over GF(2), row-major, one bit per entry. Each row occupies
/// words_per_row() 64-bit words; bits past cols() are kept zero.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols);

    static BitMatrix identity(std::size_t n);
    // Rows given as strings of '0'/'1', leftmost character is column 0.
    static BitMatrix from_rows(std::initializer_list<const char*> rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t words_per_row() const noexcept { return stride_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    bool get(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, bool value = true);
    void flip(std::size_t r, std::size_t c);

    std::span<Word> row(std::size_t r) noexcept { return {data_.data() + r * stride_, stride_}; }
    std::span<const Word> row(std::size_t r) const noexcept {
        return {data_.data() + r * stride_, stride_};
    }

    void swap_rows(std::size_t a, std::size_t b) noexcept;
    // row(dst) += row(src)
    void add_row(std::size_t dst, std::size_t src) noexcept;

    BitMatrix transposed() const;
    std::size_t count_ones() const noexcept;

    // Checks the zero-padding invariant.
    bool padding_clear() const noexcept;

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t stride_ = 0;
    std::vector<Word> data_;
};

// Matrix product over GF(2).
BitMatrix multiply(const BitMatrix& a, const BitMatrix& b);

/// Row rank over GF(2). Works on a private copy; the argument is untouched.
std::size_t rank(const BitMatrix& m);
std::size_t rank(const BitMatrix& m, const KernelTable& kernels);

/// cols - rank: dimension of the null space of the map x -> m x.
std::size_t kernel_dim(const BitMatrix& m);

}  // namespace pmtower::gf2

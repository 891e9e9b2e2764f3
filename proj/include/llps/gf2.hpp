#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace llps {

// Dense bit-packed binary vector. Padding bits beyond len() are kept zero,
// so weight() and word-level comparisons are exact.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t len) : len_(len), words_((len + 63) / 64, 0) {}

    static BitVector from_bits(std::initializer_list<int> bits);
    static BitVector from_string(const std::string& s);  // e.g. "1011"
    static BitVector random(std::size_t len, std::mt19937_64& rng);

    std::size_t size() const { return len_; }
    bool empty() const { return len_ == 0; }

    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v) {
        const std::uint64_t mask = std::uint64_t(1) << (i & 63);
        if (v) words_[i >> 6] |= mask; else words_[i >> 6] &= ~mask;
    }
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

    void clear() { std::fill(words_.begin(), words_.end(), 0); }
    void set_all();

    std::size_t weight() const {
        std::size_t w = 0;
        for (std::uint64_t x : words_) w += std::popcount(x);
        return w;
    }

    BitVector& operator^=(const BitVector& o);
    friend BitVector operator^(BitVector a, const BitVector& b) { a ^= b; return a; }
    bool operator==(const BitVector&) const = default;

    // parity of <a, b> over GF(2), i.e. popcount(a AND b) mod 2
    bool and_parity(const BitVector& o) const;
    std::size_t hamming_distance(const BitVector& o) const;

    BitVector slice(std::size_t pos, std::size_t len) const;
    BitVector concat(const BitVector& tail) const;

    std::span<const std::uint64_t> words() const { return words_; }
    std::span<std::uint64_t> words() { return words_; }

    std::string to_string() const;

private:
    std::size_t len_ = 0;
    std::vector<std::uint64_t> words_;

    void mask_padding();
};

// Row-major dense binary matrix; each row is a BitVector of length cols().
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), row_(rows, BitVector(cols)) {}

    static BitMatrix identity(std::size_t n);
    static BitMatrix from_rows(std::initializer_list<std::initializer_list<int>> rows);
    static BitMatrix random(std::size_t rows, std::size_t cols, std::mt19937_64& rng);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const BitVector& row(std::size_t i) const { return row_[i]; }
    BitVector& row(std::size_t i) { return row_[i]; }

    bool get(std::size_t i, std::size_t j) const { return row_[i].get(j); }
    void set(std::size_t i, std::size_t j, bool v) { row_[i].set(j, v); }

    BitVector column(std::size_t j) const;
    BitMatrix columns(std::size_t first, std::size_t last) const;  // [first, last)
    BitMatrix transposed() const;

    bool operator==(const BitMatrix&) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<BitVector> row_;
};

// v * M^T: result bit i is the parity of AND(v, row i of M).
BitVector mul_vec_mt(const BitVector& v, const BitMatrix& m);

BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b);

// Gauss-Jordan inverse; nullopt if the matrix is singular.
std::optional<BitMatrix> invert(const BitMatrix& m);

std::size_t rank(const BitMatrix& m);

// Basis of {x : x M^T = 0}; size is cols - rank(m).
std::vector<BitVector> nullspace_basis(const BitMatrix& m);

// Column selection making the rightmost m x m block of a full-row-rank
// m x w matrix invertible. perm[j] is the source column placed at slot j;
// perm is the identity whenever the unpermuted right block already works.
struct RightBlock {
    std::vector<std::size_t> perm;
    BitMatrix inverse;  // inverse of the permuted right m x m block
    bool identity_perm() const;
};
std::optional<RightBlock> find_invertible_right_block(const BitMatrix& m);

}  // namespace llps

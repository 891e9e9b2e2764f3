#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "llps/gf2.hpp"

namespace llps {

// QC-LDPC model matrix: shift exponents at expansion factor z0 = 96,
// -1 marking an all-zero block.
struct BaseMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<int> shifts;  // row-major

    int at(std::size_t r, std::size_t c) const { return shifts[r * cols + c]; }
};

// IEEE 802.16e rate-1/2 model matrix (12 x 24, z0 = 96).
const BaseMatrix& wimax_rate12_base();

// Expand a model matrix by factor z: exponent e >= 0 becomes the z x z
// identity cyclically right-shifted by floor(e*z/96), -1 the zero block.
BitMatrix lift(const BaseMatrix& base, unsigned z);

// Parity-check matrix with its syndrome/parity-former split.
// H = [H_s | H_p], H_s spanning columns [0, k-ell) and H_p the rest.
struct LinearCodeLayout {
    BitMatrix H;
    BitMatrix Hs;                    // m x (k - ell)
    BitMatrix Hp;                    // m x (m + ell)
    std::size_t n = 0, k = 0, m = 0, ell = 0;
    std::vector<std::size_t> parity_perm;       // within the H_p span
    std::vector<std::size_t> shortened;         // systematic indices frozen to zero
    // sparse adjacency, built once for the BP decoder
    std::vector<std::vector<std::uint32_t>> check_cols;  // per row
    std::vector<std::vector<std::uint32_t>> var_rows;    // per column

    std::size_t split() const { return k - ell; }
    std::size_t num_shortened() const { return shortened.size(); }
    bool is_shortened(std::size_t j) const;
    double effective_rate() const;   // (k - s) / (n - s)
};

// Split H into H_s (first k-ell columns) and H_p (last m+ell columns),
// verifying that the parity former has full row rank.
LinearCodeLayout partition(const BitMatrix& h, std::size_t ell);

// Freeze the first s systematic positions to zero.
LinearCodeLayout shorten(LinearCodeLayout layout, std::size_t s);

// lift + partition for the built-in WiMAX family; z in {24, 28, ..., 96}.
LinearCodeLayout wimax_layout(unsigned z, std::size_t ell);

// Standard alist text format (n m header, max degrees, per-column and
// per-row degree lists, 1-indexed adjacency lists).
BitMatrix load_alist(const std::string& text);
BitMatrix load_alist_file(const std::string& path);
std::string to_alist(const BitMatrix& h);

}  // namespace llps

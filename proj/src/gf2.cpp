#include "llps/gf2.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace llps {

void BitVector::mask_padding() {
    if (len_ & 63) words_.back() &= (std::uint64_t(1) << (len_ & 63)) - 1;
}

BitVector BitVector::from_bits(std::initializer_list<int> bits) {
    BitVector v(bits.size());
    std::size_t i = 0;
    for (int b : bits) v.set(i++, b != 0);
    return v;
}

BitVector BitVector::from_string(const std::string& s) {
    BitVector v(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] != '0' && s[i] != '1') throw std::invalid_argument("BitVector::from_string: bad char");
        v.set(i, s[i] == '1');
    }
    return v;
}

BitVector BitVector::random(std::size_t len, std::mt19937_64& rng) {
    BitVector v(len);
    for (auto& w : v.words_) w = rng();
    v.mask_padding();
    return v;
}

void BitVector::set_all() {
    std::fill(words_.begin(), words_.end(), ~std::uint64_t(0));
    mask_padding();
}

BitVector& BitVector::operator^=(const BitVector& o) {
    if (o.len_ != len_) throw std::invalid_argument("BitVector xor: length mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
}

bool BitVector::and_parity(const BitVector& o) const {
    if (o.len_ != len_) throw std::invalid_argument("BitVector and_parity: length mismatch");
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) acc ^= words_[i] & o.words_[i];
    return std::popcount(acc) & 1u;
}

std::size_t BitVector::hamming_distance(const BitVector& o) const {
    if (o.len_ != len_) throw std::invalid_argument("BitVector hamming_distance: length mismatch");
    std::size_t w = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) w += std::popcount(words_[i] ^ o.words_[i]);
    return w;
}

BitVector BitVector::slice(std::size_t pos, std::size_t len) const {
    if (pos + len > len_) throw std::out_of_range("BitVector::slice");
    BitVector r(len);
    for (std::size_t i = 0; i < len; ++i) r.set(i, get(pos + i));
    return r;
}

BitVector BitVector::concat(const BitVector& tail) const {
    BitVector r(len_ + tail.len_);
    for (std::size_t i = 0; i < len_; ++i) r.set(i, get(i));
    for (std::size_t i = 0; i < tail.len_; ++i) r.set(len_ + i, tail.get(i));
    return r;
}

std::string BitVector::to_string() const {
    std::string s(len_, '0');
    for (std::size_t i = 0; i < len_; ++i) if (get(i)) s[i] = '1';
    return s;
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

BitMatrix BitMatrix::from_rows(std::initializer_list<std::initializer_list<int>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows.begin()->size() : 0;
    BitMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw std::invalid_argument("BitMatrix::from_rows: ragged rows");
        std::size_t j = 0;
        for (int b : row) m.set(i, j++, b != 0);
        ++i;
    }
    return m;
}

BitMatrix BitMatrix::random(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
    BitMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) m.row_[i] = BitVector::random(cols, rng);
    return m;
}

BitVector BitMatrix::column(std::size_t j) const {
    BitVector c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c.set(i, get(i, j));
    return c;
}

BitMatrix BitMatrix::columns(std::size_t first, std::size_t last) const {
    if (first > last || last > cols_) throw std::out_of_range("BitMatrix::columns");
    BitMatrix m(rows_, last - first);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = first; j < last; ++j)
            if (get(i, j)) m.set(i, j - first, true);
    return m;
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (get(i, j)) t.set(j, i, true);
    return t;
}

BitVector mul_vec_mt(const BitVector& v, const BitMatrix& m) {
    if (v.size() != m.cols()) throw std::invalid_argument("mul_vec_mt: dimension mismatch");
    BitVector r(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        if (v.and_parity(m.row(i))) r.set(i, true);
    return r;
}

BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul: dimension mismatch");
    BitMatrix r(a.rows(), b.cols());
    // accumulate rows of b selected by bits of each row of a
    for (std::size_t i = 0; i < a.rows(); ++i) {
        BitVector acc(b.cols());
        for (std::size_t k = 0; k < a.cols(); ++k)
            if (a.get(i, k)) acc ^= b.row(k);
        r.row(i) = std::move(acc);
    }
    return r;
}

std::optional<BitMatrix> invert(const BitMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("invert: matrix not square");
    const std::size_t n = m.rows();
    BitMatrix a = m;
    BitMatrix inv = BitMatrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && !a.get(pivot, col)) ++pivot;
        if (pivot == n) return std::nullopt;
        if (pivot != col) {
            std::swap(a.row(col), a.row(pivot));
            std::swap(inv.row(col), inv.row(pivot));
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i != col && a.get(i, col)) {
                a.row(i) ^= a.row(col);
                inv.row(i) ^= inv.row(col);
            }
        }
    }
    return inv;
}

std::size_t rank(const BitMatrix& m) {
    BitMatrix a = m;
    std::size_t r = 0;
    for (std::size_t col = 0; col < a.cols() && r < a.rows(); ++col) {
        std::size_t pivot = r;
        while (pivot < a.rows() && !a.get(pivot, col)) ++pivot;
        if (pivot == a.rows()) continue;
        if (pivot != r) std::swap(a.row(r), a.row(pivot));
        for (std::size_t i = r + 1; i < a.rows(); ++i)
            if (a.get(i, col)) a.row(i) ^= a.row(r);
        ++r;
    }
    return r;
}

std::vector<BitVector> nullspace_basis(const BitMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    BitMatrix a = m;
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t pivot = r;
        while (pivot < rows && !a.get(pivot, col)) ++pivot;
        if (pivot == rows) continue;
        if (pivot != r) std::swap(a.row(r), a.row(pivot));
        for (std::size_t i = 0; i < rows; ++i)
            if (i != r && a.get(i, col)) a.row(i) ^= a.row(r);
        pivot_col.push_back(col);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;

    std::vector<BitVector> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        BitVector v(cols);
        v.set(f, true);
        for (std::size_t p = 0; p < pivot_col.size(); ++p)
            if (a.get(p, f)) v.set(pivot_col[p], true);
        basis.push_back(std::move(v));
    }
    return basis;
}

bool RightBlock::identity_perm() const {
    for (std::size_t j = 0; j < perm.size(); ++j)
        if (perm[j] != j) return false;
    return true;
}

std::optional<RightBlock> find_invertible_right_block(const BitMatrix& m) {
    const std::size_t r = m.rows(), w = m.cols();
    if (w < r) return std::nullopt;

    // Greedy scan from the rightmost column leftward, keeping each column
    // that is independent of those already selected.
    std::vector<BitVector> reduced;           // selected columns, reduced
    std::vector<std::size_t> lead;            // leading row of each reduced column
    std::vector<std::size_t> selected;
    for (std::size_t jj = w; jj-- > 0 && selected.size() < r;) {
        BitVector col = m.column(jj);
        for (std::size_t t = 0; t < reduced.size(); ++t)
            if (col.get(lead[t])) col ^= reduced[t];
        std::size_t l = 0;
        while (l < r && !col.get(l)) ++l;
        if (l == r) continue;  // dependent
        reduced.push_back(std::move(col));
        lead.push_back(l);
        selected.push_back(jj);
    }
    if (selected.size() < r) return std::nullopt;
    std::sort(selected.begin(), selected.end());

    RightBlock out;
    out.perm.reserve(w);
    std::vector<bool> picked(w, false);
    for (std::size_t j : selected) picked[j] = true;
    for (std::size_t j = 0; j < w; ++j)
        if (!picked[j]) out.perm.push_back(j);
    for (std::size_t j : selected) out.perm.push_back(j);

    BitMatrix block(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            if (m.get(i, selected[j])) block.set(i, j, true);
    auto inv = invert(block);
    if (!inv) return std::nullopt;  // cannot happen: columns were chosen independent
    out.inverse = std::move(*inv);
    return out;
}

}  // namespace llps

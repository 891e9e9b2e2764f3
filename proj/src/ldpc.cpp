#include "llps/ldpc.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace llps {

namespace {

constexpr int kWimaxRate12[12 * 24] = {
    -1, 94, 73, -1, -1, -1, -1, -1, 55, 83, -1, -1,  7,  0, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1,
    -1, 27, -1, -1, -1, 22, 79,  9, -1, -1, -1, 12, -1,  0,  0, -1, -1, -1, -1, -1, -1, -1, -1, -1,
    -1, -1, -1, 24, 22, 81, -1, 33, -1, -1, -1,  0, -1, -1,  0,  0, -1, -1, -1, -1, -1, -1, -1, -1,
    61, -1, 47, -1, -1, -1, -1, -1, 65, 25, -1, -1, -1, -1, -1,  0,  0, -1, -1, -1, -1, -1, -1, -1,
    -1, -1, 39, -1, -1, -1, 84, -1, -1, 41, 72, -1, -1, -1, -1, -1,  0,  0, -1, -1, -1, -1, -1, -1,
    -1, -1, -1, -1, 46, 40, -1, 82, -1, -1, -1, 79,  0, -1, -1, -1, -1,  0,  0, -1, -1, -1, -1, -1,
    -1, -1, 95, 53, -1, -1, -1, -1, -1, 14, 18, -1, -1, -1, -1, -1, -1, -1,  0,  0, -1, -1, -1, -1,
    -1, 11, 73, -1, -1, -1,  2, -1, -1, 47, -1, -1, -1, -1, -1, -1, -1, -1, -1,  0,  0, -1, -1, -1,
    12, -1, -1, -1, 83, 24, -1, 43, -1, -1, -1, 51, -1, -1, -1, -1, -1, -1, -1, -1,  0,  0, -1, -1,
    -1, -1, -1, -1, -1, 94, -1, 59, -1, -1, 70, 72, -1, -1, -1, -1, -1, -1, -1, -1, -1,  0,  0, -1,
    -1, -1,  7, 65, -1, -1, -1, -1, 39, 49, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1,  0,  0,
    43, -1, -1, -1, -1, 66, -1, 41, -1, -1, -1, 26,  7, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1,  0,
};

}  // namespace

const BaseMatrix& wimax_rate12_base() {
    static const BaseMatrix base = [] {
        BaseMatrix b;
        b.rows = 12;
        b.cols = 24;
        b.shifts.assign(std::begin(kWimaxRate12), std::end(kWimaxRate12));
        return b;
    }();
    return base;
}

BitMatrix lift(const BaseMatrix& base, unsigned z) {
    if (z < 2 || z > 96) throw std::invalid_argument("lift: z out of range [2, 96]");
    BitMatrix h(base.rows * z, base.cols * z);
    for (std::size_t br = 0; br < base.rows; ++br) {
        for (std::size_t bc = 0; bc < base.cols; ++bc) {
            const int e = base.at(br, bc);
            if (e < 0) continue;
            const unsigned shift = static_cast<unsigned>(e) * z / 96;
            for (unsigned r = 0; r < z; ++r)
                h.set(br * z + r, bc * z + (r + shift) % z, true);
        }
    }
    return h;
}

bool LinearCodeLayout::is_shortened(std::size_t j) const {
    return std::binary_search(shortened.begin(), shortened.end(), j);
}

double LinearCodeLayout::effective_rate() const {
    const std::size_t s = shortened.size();
    return static_cast<double>(k - s) / static_cast<double>(n - s);
}

LinearCodeLayout partition(const BitMatrix& h, std::size_t ell) {
    const std::size_t m = h.rows(), n = h.cols();
    if (n < m) throw std::invalid_argument("partition: H has more rows than columns");
    const std::size_t k = n - m;
    if (ell > k) throw std::invalid_argument("partition: ell exceeds code dimension");

    LinearCodeLayout layout;
    layout.H = h;
    layout.n = n;
    layout.k = k;
    layout.m = m;
    layout.ell = ell;
    layout.Hs = h.columns(0, k - ell);
    layout.Hp = h.columns(k - ell, n);

    auto block = find_invertible_right_block(layout.Hp);
    if (!block) throw std::runtime_error("partition: parity former not surjective");
    layout.parity_perm = std::move(block->perm);

    layout.check_cols.resize(m);
    layout.var_rows.resize(n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (h.get(i, j)) {
                layout.check_cols[i].push_back(static_cast<std::uint32_t>(j));
                layout.var_rows[j].push_back(static_cast<std::uint32_t>(i));
            }
    return layout;
}

LinearCodeLayout shorten(LinearCodeLayout layout, std::size_t s) {
    if (s > layout.k - layout.ell)
        throw std::invalid_argument("shorten: s exceeds systematic length k - ell");
    layout.shortened.resize(s);
    for (std::size_t i = 0; i < s; ++i) layout.shortened[i] = i;
    return layout;
}

LinearCodeLayout wimax_layout(unsigned z, std::size_t ell) {
    if (z < 24 || z > 96 || z % 4 != 0)
        throw std::invalid_argument("wimax_layout: z must be in {24, 28, ..., 96}");
    return partition(lift(wimax_rate12_base(), z), ell);
}

namespace {

struct AlistReader {
    std::istringstream in;
    std::size_t line_no = 0;
    std::string line;

    explicit AlistReader(const std::string& text) : in(text) {}

    [[noreturn]] void fail(const std::string& what) const {
        throw std::runtime_error("alist line " + std::to_string(line_no) + ": " + what);
    }

    // next line split into integers; eof_ok allows missing trailing lines
    // (treated as empty, for degree-0 adjacency rows in reduced alists)
    std::vector<long> next_ints(bool eof_ok = false) {
        while (std::getline(in, line)) {
            ++line_no;
            std::istringstream ls(line);
            std::vector<long> vals;
            long v;
            while (ls >> v) vals.push_back(v);
            if (!ls.eof()) fail("non-integer token");
            return vals;  // may be empty: a degree-0 adjacency line
        }
        if (eof_ok) return {};
        ++line_no;
        fail("unexpected end of file");
    }
};

}  // namespace

BitMatrix load_alist(const std::string& text) {
    AlistReader rd(text);

    auto header = rd.next_ints();
    while (header.empty()) header = rd.next_ints();  // tolerate leading blanks
    if (header.size() != 2) rd.fail("expected 'n m' header");
    const long n = header[0], m = header[1];
    if (n < 0 || m < 0) rd.fail("negative dimension");

    auto maxdeg = rd.next_ints();
    if (maxdeg.size() != 2) rd.fail("expected max column/row degrees");

    auto col_deg = rd.next_ints();
    if (static_cast<long>(col_deg.size()) != n) rd.fail("column degree list length != n");
    auto row_deg = rd.next_ints();
    if (static_cast<long>(row_deg.size()) != m) rd.fail("row degree list length != m");

    long col_sum = 0, row_sum = 0;
    for (long d : col_deg) { if (d < 0) rd.fail("negative degree"); col_sum += d; }
    for (long d : row_deg) { if (d < 0) rd.fail("negative degree"); row_sum += d; }
    if (col_sum != row_sum) rd.fail("column and row degree sums disagree");

    BitMatrix h(static_cast<std::size_t>(m), static_cast<std::size_t>(n));

    for (long j = 0; j < n; ++j) {
        auto entries = rd.next_ints(col_deg[j] == 0);
        std::size_t cnt = 0;
        for (long e : entries) {
            if (e == 0) continue;  // padding
            if (e < 1 || e > m) rd.fail("row index out of range");
            if (h.get(e - 1, j)) rd.fail("duplicate entry");
            h.set(e - 1, j, true);
            ++cnt;
        }
        if (static_cast<long>(cnt) != col_deg[j]) rd.fail("column degree mismatch");
    }
    for (long i = 0; i < m; ++i) {
        auto entries = rd.next_ints(row_deg[i] == 0);
        std::size_t cnt = 0;
        for (long e : entries) {
            if (e == 0) continue;
            if (e < 1 || e > n) rd.fail("column index out of range");
            if (!h.get(i, e - 1)) rd.fail("row list inconsistent with column lists");
            ++cnt;
        }
        if (static_cast<long>(cnt) != row_deg[i]) rd.fail("row degree mismatch");
    }
    return h;
}

BitMatrix load_alist_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open alist file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return load_alist(ss.str());
}

std::string to_alist(const BitMatrix& h) {
    const std::size_t m = h.rows(), n = h.cols();
    std::vector<std::vector<std::size_t>> cols(n), rows(m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (h.get(i, j)) {
                cols[j].push_back(i + 1);
                rows[i].push_back(j + 1);
            }
    std::size_t maxc = 0, maxr = 0;
    for (const auto& c : cols) maxc = std::max(maxc, c.size());
    for (const auto& r : rows) maxr = std::max(maxr, r.size());

    std::ostringstream out;
    out << n << ' ' << m << '\n' << maxc << ' ' << maxr << '\n';
    for (std::size_t j = 0; j < n; ++j) out << cols[j].size() << (j + 1 < n ? ' ' : '\n');
    for (std::size_t i = 0; i < m; ++i) out << rows[i].size() << (i + 1 < m ? ' ' : '\n');
    auto emit = [&out](const std::vector<std::size_t>& v, std::size_t width) {
        for (std::size_t t = 0; t < width; ++t) out << (t < v.size() ? v[t] : 0) << (t + 1 < width ? ' ' : '\n');
    };
    for (std::size_t j = 0; j < n; ++j) emit(cols[j], maxc);
    for (std::size_t i = 0; i < m; ++i) emit(rows[i], maxr);
    return out.str();
}

}  // namespace llps

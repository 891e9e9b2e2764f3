#include "llps/bp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "llps/channel.hpp"

namespace llps {

namespace {

// largest tanh argument that stays strictly below 1 in double precision
constexpr double kTanhCap = 1.0 - 1e-15;

inline double atanh2(double p) {
    // 2 atanh(p) = log1p(p) - log1p(-p)
    p = std::clamp(p, -kTanhCap, kTanhCap);
    return std::clamp(std::log1p(p) - std::log1p(-p), -kLlrClamp, kLlrClamp);
}

}  // namespace

BpDecoder::BpDecoder(const LinearCodeLayout& layout) : layout_(&layout) {
    const std::size_t m = layout.m, n = layout.n;
    row_ptr_.assign(m + 1, 0);
    for (std::size_t i = 0; i < m; ++i)
        row_ptr_[i + 1] = row_ptr_[i] + static_cast<std::uint32_t>(layout.check_cols[i].size());
    edge_col_.reserve(row_ptr_[m]);
    var_edges_.assign(n, {});
    for (std::size_t i = 0; i < m; ++i)
        for (std::uint32_t j : layout.check_cols[i]) {
            var_edges_[j].push_back(static_cast<std::uint32_t>(edge_col_.size()));
            edge_col_.push_back(j);
        }
    v2c_.resize(edge_col_.size());
    c2v_.resize(edge_col_.size());
    tanh_buf_.resize(edge_col_.size());
    posterior_.resize(n);
}

bool BpDecoder::syndrome_ok(const BitVector& hard) const {
    for (const auto& cols : layout_->check_cols) {
        unsigned parity = 0;
        for (std::uint32_t j : cols) parity ^= hard.get(j);
        if (parity) return false;
    }
    return true;
}

BpDecoder::Result BpDecoder::decode(std::span<const double> channel_llrs, int max_iter) {
    const std::size_t m = layout_->m, n = layout_->n;
    if (channel_llrs.size() != n) throw std::invalid_argument("decode: LLR length mismatch");

    Result res;
    res.hard = BitVector(n);
    auto harden = [&] {
        for (std::size_t j = 0; j < n; ++j) res.hard.set(j, posterior_[j] < 0.0);
    };

    for (std::size_t j = 0; j < n; ++j) posterior_[j] = channel_llrs[j];
    harden();
    if (syndrome_ok(res.hard)) {
        res.converged = true;
        return res;
    }

    for (std::size_t e = 0; e < edge_col_.size(); ++e)
        v2c_[e] = std::clamp(channel_llrs[edge_col_[e]], -kLlrClamp, kLlrClamp);

    for (int it = 1; it <= max_iter; ++it) {
        // check update: tanh-rule with prefix/suffix products, no division
        for (std::size_t i = 0; i < m; ++i) {
            const std::uint32_t lo = row_ptr_[i], hi = row_ptr_[i + 1];
            for (std::uint32_t e = lo; e < hi; ++e)
                tanh_buf_[e] = std::clamp(std::tanh(0.5 * v2c_[e]), -kTanhCap, kTanhCap);
            double prefix = 1.0;
            for (std::uint32_t e = lo; e < hi; ++e) {
                c2v_[e] = prefix;
                prefix *= tanh_buf_[e];
            }
            double suffix = 1.0;
            for (std::uint32_t e = hi; e-- > lo;) {
                c2v_[e] = atanh2(c2v_[e] * suffix);
                suffix *= tanh_buf_[e];
            }
        }
        // variable update
        for (std::size_t j = 0; j < n; ++j) {
            double total = std::clamp(channel_llrs[j], -kLlrClamp, kLlrClamp);
            for (std::uint32_t e : var_edges_[j]) total += c2v_[e];
            posterior_[j] = total;
            for (std::uint32_t e : var_edges_[j])
                v2c_[e] = std::clamp(total - c2v_[e], -kLlrClamp, kLlrClamp);
        }
        harden();
        res.iterations = it;
        if (syndrome_ok(res.hard)) {
            res.converged = true;
            return res;
        }
    }
    return res;
}

}  // namespace llps

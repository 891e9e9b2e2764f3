#include "llps/codec.hpp"

#include <random>
#include <stdexcept>

namespace llps {

BitVector label(std::span<const std::int8_t> z) {
    BitVector a(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) {
        if (z[i] == 1) a.set(i, true);
        else if (z[i] != -1) throw std::invalid_argument("label: interferer symbols must be -1 or +1");
    }
    return a;
}

LlpsCodec::LlpsCodec(LinearCodeLayout layout, bool materialize)
    : layout_(std::move(layout)), parity_sdm_(SdmSpec::build(layout_.Hp, materialize)) {}

Codeword LlpsCodec::pas_encode(const BitVector& v) const {
    if (layout_.ell != 0) throw std::invalid_argument("pas_encode: layout must have ell == 0");
    if (v.size() != layout_.k) throw std::invalid_argument("pas_encode: v length mismatch");
    const BitVector s = mul_vec_mt(v, layout_.Hs);
    const BitVector p = parity_sdm_.particular_solution(s);
    return Codeword{v.concat(p), layout_.split()};
}

Codeword LlpsCodec::llps_encode(const BitVector& v, const CostFunction& cost) const {
    if (v.size() != layout_.split()) throw std::invalid_argument("llps_encode: v length mismatch");
    const BitVector s = mul_vec_mt(v, layout_.Hs);
    const BitVector p = parity_sdm_.match(s, cost);
    return Codeword{v.concat(p), layout_.split()};
}

DpcEncoder::DpcEncoder(LinearCodeLayout layout, std::size_t k_info, std::uint64_t hv_seed,
                       bool materialize)
    : layout_(std::move(layout)),
      inner_(SdmSpec::build(layout_.Hp, materialize)),
      k_info_(k_info),
      hv_seed_(hv_seed) {
    const std::size_t width = layout_.split();
    const std::size_t s = layout_.num_shortened();
    if (k_info == 0 || k_info + s > width)
        throw std::invalid_argument("DpcEncoder: need 0 < k_info <= k - ell - shortened");

    // H_v = [random | I], identity on the right
    std::mt19937_64 rng(hv_seed);
    hv_ = BitMatrix(k_info, width);
    const std::size_t left = width - k_info;
    for (std::size_t i = 0; i < k_info; ++i) {
        for (std::size_t j = 0; j < left; ++j)
            if (rng() & 1u) hv_.set(i, j, true);
        hv_.set(i, left + i, true);
    }

    for (std::size_t j = 0; j < width; ++j)
        if (!layout_.is_shortened(j)) active_.push_back(j);

    // frozen systematic positions carry a known zero, so they drop out of
    // both the constraint and the cost
    if (s == 0) {
        outer_ = SdmSpec::build(hv_, materialize);
    } else {
        BitMatrix hv_active(k_info, active_.size());
        for (std::size_t i = 0; i < k_info; ++i)
            for (std::size_t jj = 0; jj < active_.size(); ++jj)
                if (hv_.get(i, active_[jj])) hv_active.set(i, jj, true);
        outer_ = SdmSpec::build(hv_active, materialize);
    }
}

double DpcEncoder::outer_rate() const {
    return static_cast<double>(k_info_) / static_cast<double>(outer_.width());
}

double DpcEncoder::inner_rate() const {
    return static_cast<double>(layout_.m) / static_cast<double>(layout_.m + layout_.ell);
}

double DpcEncoder::overall_rate() const {
    return static_cast<double>(k_info_) / static_cast<double>(layout_.n);
}

Codeword DpcEncoder::encode(const BitVector& u, std::span<const std::int8_t> z) const {
    if (u.size() != k_info_) throw std::invalid_argument("dpc encode: u length mismatch");
    if (z.size() != layout_.n) throw std::invalid_argument("dpc encode: z length mismatch");
    const BitVector a = label(z);

    BitVector target_v(active_.size());
    for (std::size_t jj = 0; jj < active_.size(); ++jj)
        target_v.set(jj, a.get(active_[jj]));
    const BitVector v_active = outer_.match(u, CostFunction::pattern(std::move(target_v)));

    BitVector v(layout_.split());
    for (std::size_t jj = 0; jj < active_.size(); ++jj)
        v.set(active_[jj], v_active.get(jj));

    const BitVector s = mul_vec_mt(v, layout_.Hs);
    const BitVector target_p = a.slice(layout_.split(), layout_.m + layout_.ell);
    const BitVector p = inner_.match(s, CostFunction::pattern(target_p));
    return Codeword{v.concat(p), layout_.split()};
}

BitVector DpcEncoder::recover_info(const BitVector& v_hat) const {
    return mul_vec_mt(v_hat, hv_);
}

}  // namespace llps

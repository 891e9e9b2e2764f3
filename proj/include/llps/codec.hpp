#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "llps/gf2.hpp"
#include "llps/ldpc.hpp"
#include "llps/sdm.hpp"

namespace llps {

// Interference label: a(-1) = 0, a(+1) = 1.
BitVector label(std::span<const std::int8_t> z);

struct Codeword {
    BitVector bits;          // length n
    std::size_t split = 0;   // k - ell

    BitVector systematic() const { return bits.slice(0, split); }
    BitVector parity() const { return bits.slice(split, bits.size() - split); }
};

// Systematic and layered encoding on one layout. The parity SDM is built
// once at construction.
class LlpsCodec {
public:
    explicit LlpsCodec(LinearCodeLayout layout, bool materialize = false);

    const LinearCodeLayout& layout() const { return layout_; }
    const SdmSpec& parity_sdm() const { return parity_sdm_; }

    // classic two-step systematic encoding, requires ell == 0:
    // s = v Hs^T, p = s (Hp^T)^{-1}
    Codeword pas_encode(const BitVector& v) const;

    // layered encoding: parity part chosen from the coset by the cost
    Codeword llps_encode(const BitVector& v, const CostFunction& cost) const;

private:
    LinearCodeLayout layout_;
    SdmSpec parity_sdm_;
};

// Dirty-paper encoder: an outer SDM on H_v = [random | I] replaces the
// distribution matcher, the inner SDM shapes the parity part, and both
// target the label of the known interferer.
class DpcEncoder {
public:
    DpcEncoder(LinearCodeLayout layout, std::size_t k_info, std::uint64_t hv_seed,
               bool materialize = false);

    const LinearCodeLayout& layout() const { return layout_; }
    const BitMatrix& hv() const { return hv_; }
    std::size_t k_info() const { return k_info_; }
    std::uint64_t hv_seed() const { return hv_seed_; }
    double outer_rate() const;   // k_info / (k - ell)
    double inner_rate() const;   // m / (m + ell)
    double overall_rate() const; // k_info / n

    Codeword encode(const BitVector& u, std::span<const std::int8_t> z) const;

    // u = v_hat Hv^T, the outer SDM's inverse
    BitVector recover_info(const BitVector& v_hat) const;

private:
    LinearCodeLayout layout_;
    BitMatrix hv_;                        // k_info x (k - ell)
    SdmSpec outer_;                       // on hv_ with frozen columns dropped
    SdmSpec inner_;                       // on layout.Hp
    std::vector<std::size_t> active_;     // non-frozen systematic positions
    std::size_t k_info_ = 0;
    std::uint64_t hv_seed_ = 0;
};

}  // namespace llps

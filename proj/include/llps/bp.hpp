#pragma once

#include <span>
#include <vector>

#include "llps/gf2.hpp"
#include "llps/ldpc.hpp"

namespace llps {

// Flooding sum-product decoder on the layout's sparse adjacency.
// One instance per worker; the layout is shared read-only and must
// outlive the decoder.
class BpDecoder {
public:
    explicit BpDecoder(const LinearCodeLayout& layout);

    struct Result {
        BitVector hard;
        bool converged = false;
        int iterations = 0;
    };

    // channel_llrs: length n, positive favoring bit 0; callers saturate
    // shortened positions to +kLlrClamp themselves
    Result decode(std::span<const double> channel_llrs, int max_iter);

private:
    const LinearCodeLayout* layout_;
    std::vector<std::uint32_t> row_ptr_;    // CSR over check rows
    std::vector<std::uint32_t> edge_col_;
    std::vector<std::vector<std::uint32_t>> var_edges_;
    std::vector<double> v2c_, c2v_, tanh_buf_, posterior_;

    bool syndrome_ok(const BitVector& hard) const;
};

}  // namespace llps

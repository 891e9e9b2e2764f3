#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "llps/gf2.hpp"

namespace llps {

inline constexpr double kLlrClamp = 50.0;

// Y = alpha * x_b + beta * Z + W, W ~ N(0, sigma^2), x_0 = -1, x_1 = +1.
struct DpcChannelParams {
    double alpha = 1.0;
    double beta = 0.0;
    double sigma = 1.0;

    DpcChannelParams(double a, double b, double s);
    static DpcChannelParams from_db(double snr_db, double sir_db, double alpha = 1.0);

    double snr_db() const;
    double sir_db() const;
};

// P_{B|Z}(0|-1) = q with the symmetric completion P_{B|Z}(1|+1) = q,
// so the marginal P_B stays uniform.
struct ConditionalPbz {
    double q;
    explicit ConditionalPbz(double q_);
};

inline double bpsk_map(int bit) { return bit ? 1.0 : -1.0; }

// Deterministic per-frame generator: mt19937_64 plus an explicit
// Box-Muller transform, so streams do not depend on the C++ runtime's
// normal_distribution implementation.
class GaussianRng {
public:
    explicit GaussianRng(std::uint64_t seed) : eng_(seed) {}
    std::uint64_t bits() { return eng_(); }
    double uniform();      // (0, 1]
    double gaussian();     // N(0, 1)
    BitVector random_bits(std::size_t len);
    std::vector<std::int8_t> random_pm1(std::size_t len);

private:
    std::mt19937_64 eng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

// stable (master, stream, counter) -> seed derivation
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b, std::uint64_t c);

std::vector<double> transmit(const BitVector& b, std::span<const std::int8_t> z,
                             const DpcChannelParams& params, GaussianRng& rng);

// receiver treats the interferer as noise:
// p(y|b) = 1/2 [ pW(y - alpha x_b + beta) + pW(y - alpha x_b - beta) ]
double llr_int_as_noise(double y, const DpcChannelParams& params);

// DPC demapper with the transmitter's conditional distribution:
// p(y|b) P(b) = sum_z pW(y - alpha x_b - beta z) P_{B|Z}(b|z) / 2
double llr_dpc(double y, const DpcChannelParams& params, const ConditionalPbz& pbz);

}  // namespace llps

#pragma once

#include "llps/channel.hpp"

namespace llps {

double binary_entropy(double q);

// Shannon capacity of the real AWGN channel with Gaussian signaling.
double awgn_capacity(double snr_db);

// I(B;Y) with B uniform and independent of the uniform interferer,
// via numerical integration of H(Y) - H(Y|B).
double rate_int_as_noise(const DpcChannelParams& params);

// R_dpc = I(B;Y) - I(B;Z) with BZ ~ P_Z P_{B|Z}; I(B;Z) = 1 - h2(q).
// Reported clamped at zero.
double rate_dpc(const DpcChannelParams& params, double q);

struct QOpt {
    double q_opt;
    double rate;
};
// Golden-section maximization of rate_dpc over q in [1/2, 1).
QOpt optimize_q(const DpcChannelParams& params);

// Residuals of the two entropy identity chains, each side computed by an
// independent numerical route:
//   dpc_chain: [H(B|Z) - H(B|Y)] vs [I(B;Y) - I(B;Z)]
//   pas_chain: [H(B) - H(B|Y)] vs I(B;Y)
struct ChainResiduals {
    double dpc_chain;
    double pas_chain;
};
ChainResiduals entropy_chain_check(const DpcChannelParams& params, double q);

// SNR (dB) where the chosen rate curve crosses `target`, by bisection on
// [lo_db, hi_db]; optimize_per_snr selects rate_dpc with per-point q
// optimization, otherwise interference-as-noise.
double snr_where_rate(double target, double sir_db, bool dpc_optimized,
                      double lo_db, double hi_db);

// conditional-entropy integral H(B|Y), exposed for the identity tests
double conditional_entropy_b_given_y(const DpcChannelParams& params, double q);

}  // namespace llps

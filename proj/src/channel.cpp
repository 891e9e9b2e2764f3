#include "llps/channel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace llps {

DpcChannelParams::DpcChannelParams(double a, double b, double s) : alpha(a), beta(b), sigma(s) {
    if (!(alpha > 0.0) || !(sigma > 0.0) || beta < 0.0)
        throw std::invalid_argument("DpcChannelParams: need alpha > 0, sigma > 0, beta >= 0");
}

DpcChannelParams DpcChannelParams::from_db(double snr_db, double sir_db, double alpha) {
    const double sigma = alpha * std::pow(10.0, -snr_db / 20.0);
    const double beta = alpha * std::pow(10.0, sir_db / 20.0);
    return DpcChannelParams(alpha, beta, sigma);
}

double DpcChannelParams::snr_db() const { return 10.0 * std::log10(alpha * alpha / (sigma * sigma)); }
double DpcChannelParams::sir_db() const { return 10.0 * std::log10(beta * beta / (alpha * alpha)); }

ConditionalPbz::ConditionalPbz(double q_) : q(q_) {
    if (!(q > 0.0 && q < 1.0)) throw std::invalid_argument("ConditionalPbz: q must lie in (0, 1)");
}

double GaussianRng::uniform() {
    // 53-bit mantissa, shifted into (0, 1]
    return (static_cast<double>(eng_() >> 11) + 1.0) * 0x1.0p-53;
}

double GaussianRng::gaussian() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * M_PI * u2;
    spare_ = r * std::sin(t);
    have_spare_ = true;
    return r * std::cos(t);
}

BitVector GaussianRng::random_bits(std::size_t len) {
    BitVector v(len);
    auto w = v.words();
    for (auto& word : w) word = eng_();
    if (len & 63) w[w.size() - 1] &= (std::uint64_t(1) << (len & 63)) - 1;
    return v;
}

std::vector<std::int8_t> GaussianRng::random_pm1(std::size_t len) {
    std::vector<std::int8_t> z(len);
    std::uint64_t word = 0;
    for (std::size_t i = 0; i < len; ++i) {
        if ((i & 63) == 0) word = eng_();
        z[i] = (word >> (i & 63)) & 1 ? 1 : -1;
    }
    return z;
}

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    // splitmix64 finalizer chained over the three inputs
    auto mix = [](std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    };
    return mix(mix(mix(a) ^ b) ^ c);
}

std::vector<double> transmit(const BitVector& b, std::span<const std::int8_t> z,
                             const DpcChannelParams& params, GaussianRng& rng) {
    if (b.size() != z.size()) throw std::invalid_argument("transmit: b and z length mismatch");
    std::vector<double> y(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (z[i] != 1 && z[i] != -1) throw std::invalid_argument("transmit: interferer symbols must be -1 or +1");
        y[i] = params.alpha * bpsk_map(b.get(i)) + params.beta * z[i] + params.sigma * rng.gaussian();
    }
    return y;
}

namespace {

// log( w_minus * pW(y - (mu - beta)) + w_plus * pW(y - (mu + beta)) ) up to
// terms common to both hypotheses
inline double log_pair(double y, double mu, double beta, double inv2s2,
                       double lw_minus, double lw_plus) {
    const double d0 = y - (mu - beta);
    const double d1 = y - (mu + beta);
    const double e0 = -d0 * d0 * inv2s2 + lw_minus;
    const double e1 = -d1 * d1 * inv2s2 + lw_plus;
    const double hi = std::max(e0, e1);
    return hi + std::log1p(std::exp(std::min(e0, e1) - hi));
}

inline double mixture_llr(double y, const DpcChannelParams& p, double q) {
    const double inv2s2 = 1.0 / (2.0 * p.sigma * p.sigma);
    const double lq = std::log(q), l1q = std::log1p(-q);
    // b=0: component at -alpha-beta carries weight q (z=-1), -alpha+beta weight 1-q
    const double num = log_pair(y, -p.alpha, p.beta, inv2s2, lq, l1q);
    // b=1: component at alpha+beta carries weight q (z=+1), alpha-beta weight 1-q
    const double den = log_pair(y, p.alpha, p.beta, inv2s2, l1q, lq);
    return std::clamp(num - den, -kLlrClamp, kLlrClamp);
}

}  // namespace

double llr_int_as_noise(double y, const DpcChannelParams& params) {
    return mixture_llr(y, params, 0.5);
}

double llr_dpc(double y, const DpcChannelParams& params, const ConditionalPbz& pbz) {
    return mixture_llr(y, params, pbz.q);
}

}  // namespace llps

#include "llps/rates.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace llps {

namespace {

// joint density p(b, y) of the four-component Gaussian mixture
struct JointMix {
    double mu[2][2];   // [b][z index], z = -1 then +1
    double w[2][2];
    double sigma;

    JointMix(const DpcChannelParams& p, double q) : sigma(p.sigma) {
        mu[0][0] = -p.alpha - p.beta;
        mu[0][1] = -p.alpha + p.beta;
        mu[1][0] = p.alpha - p.beta;
        mu[1][1] = p.alpha + p.beta;
        w[0][0] = 0.5 * q;
        w[0][1] = 0.5 * (1.0 - q);
        w[1][0] = 0.5 * (1.0 - q);
        w[1][1] = 0.5 * q;
    }

    double gauss(double y, double mu_) const {
        const double d = (y - mu_) / sigma;
        return std::exp(-0.5 * d * d) / (sigma * std::sqrt(2.0 * M_PI));
    }
    double pby(int b, double y) const {
        return w[b][0] * gauss(y, mu[b][0]) + w[b][1] * gauss(y, mu[b][1]);
    }
    double py(double y) const { return pby(0, y) + pby(1, y); }
};

struct Grid {
    double lo, step;
    std::size_t nodes;
};

Grid integration_grid(const DpcChannelParams& p) {
    const double extent = p.alpha + p.beta + 12.0 * p.sigma;
    const double range = 2.0 * extent;
    // at least 32 nodes per sigma so narrow mixtures stay resolved
    std::size_t n = static_cast<std::size_t>(range / p.sigma * 32.0) + 1;
    n = std::clamp<std::size_t>(n, 4001, 2000001) | 1;
    return Grid{-extent, range / static_cast<double>(n - 1), n};
}

template <typename F>
double trapezoid(const Grid& g, F&& f) {
    double sum = 0.5 * (f(g.lo) + f(g.lo + g.step * static_cast<double>(g.nodes - 1)));
    for (std::size_t i = 1; i + 1 < g.nodes; ++i) sum += f(g.lo + g.step * static_cast<double>(i));
    return sum * g.step;
}

inline double nlog2(double p) { return p > 0.0 ? -p * std::log2(p) : 0.0; }

// differential entropy of Y in bits
double entropy_y(const JointMix& mix, const Grid& g) {
    return trapezoid(g, [&](double y) { return nlog2(mix.py(y)); });
}

// H(Y|B) = sum_b P(b) h(Y | B = b), P(b) = 1/2
double entropy_y_given_b(const JointMix& mix, const Grid& g) {
    return trapezoid(g, [&](double y) {
        double acc = 0.0;
        for (int b = 0; b < 2; ++b) {
            const double pyb = 2.0 * mix.pby(b, y);  // p(y|b) = p(b,y)/P(b)
            acc += 0.5 * nlog2(pyb);
        }
        return acc;
    });
}

// H(B|Y) = -int sum_b p(b,y) log2( p(b,y) / p(y) )
double entropy_b_given_y(const JointMix& mix, const Grid& g) {
    return trapezoid(g, [&](double y) {
        const double py = mix.py(y);
        if (py <= 0.0) return 0.0;
        double acc = 0.0;
        for (int b = 0; b < 2; ++b) {
            const double pby = mix.pby(b, y);
            if (pby > 0.0) acc -= pby * std::log2(pby / py);
        }
        return acc;
    });
}

// I(B;Y) integrated directly from the joint: sum_b int p(b,y) log2( p(b,y) / (P(b) p(y)) )
double mutual_information_direct(const JointMix& mix, const Grid& g) {
    return trapezoid(g, [&](double y) {
        const double py = mix.py(y);
        if (py <= 0.0) return 0.0;
        double acc = 0.0;
        for (int b = 0; b < 2; ++b) {
            const double pby = mix.pby(b, y);
            if (pby > 0.0) acc += pby * std::log2(pby / (0.5 * py));
        }
        return acc;
    });
}

}  // namespace

double binary_entropy(double q) {
    if (q <= 0.0 || q >= 1.0) return 0.0;
    return -q * std::log2(q) - (1.0 - q) * std::log2(1.0 - q);
}

double awgn_capacity(double snr_db) {
    return 0.5 * std::log2(1.0 + std::pow(10.0, snr_db / 10.0));
}

double rate_int_as_noise(const DpcChannelParams& params) {
    const JointMix mix(params, 0.5);
    const Grid g = integration_grid(params);
    const double r = entropy_y(mix, g) - entropy_y_given_b(mix, g);
    return std::max(r, 0.0);
}

double rate_dpc(const DpcChannelParams& params, double q) {
    if (!(q > 0.0 && q < 1.0)) throw std::invalid_argument("rate_dpc: q must lie in (0, 1)");
    const JointMix mix(params, q);
    const Grid g = integration_grid(params);
    // I(B;Y) - I(B;Z) = [1 - H(B|Y)] - [1 - h2(q)]
    const double r = binary_entropy(q) - entropy_b_given_y(mix, g);
    return std::max(r, 0.0);
}

QOpt optimize_q(const DpcChannelParams& params) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = 0.5, b = 0.9995;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = rate_dpc(params, x1);
    double f2 = rate_dpc(params, x2);
    while (b - a > 1e-4) {
        if (f1 < f2) {
            a = x1;
            x1 = x2; f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = rate_dpc(params, x2);
        } else {
            b = x2;
            x2 = x1; f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = rate_dpc(params, x1);
        }
    }
    double q = 0.5 * (a + b);
    double r = rate_dpc(params, q);
    // the optimum can sit on the q = 1/2 boundary (no interference)
    const double r_half = rate_dpc(params, 0.5);
    if (r_half >= r) return {0.5, r_half};
    return {q, r};
}

double conditional_entropy_b_given_y(const DpcChannelParams& params, double q) {
    const JointMix mix(params, q);
    return entropy_b_given_y(mix, integration_grid(params));
}

ChainResiduals entropy_chain_check(const DpcChannelParams& params, double q) {
    const JointMix mix(params, q);
    const Grid g = integration_grid(params);
    const double hby = entropy_b_given_y(mix, g);
    const double iby = mutual_information_direct(mix, g);
    const double hbz = binary_entropy(q);
    const double ibz = 1.0 - hbz;
    ChainResiduals res;
    res.dpc_chain = std::abs((hbz - hby) - (iby - ibz));
    res.pas_chain = std::abs((1.0 - hby) - iby);
    return res;
}

double snr_where_rate(double target, double sir_db, bool dpc_optimized,
                      double lo_db, double hi_db) {
    auto rate_at = [&](double snr) {
        const auto params = DpcChannelParams::from_db(snr, sir_db);
        return dpc_optimized ? optimize_q(params).rate : rate_int_as_noise(params);
    };
    double flo = rate_at(lo_db) - target;
    double fhi = rate_at(hi_db) - target;
    if (flo > 0.0 || fhi < 0.0)
        throw std::invalid_argument("snr_where_rate: target not bracketed by [lo, hi]");
    double lo = lo_db, hi = hi_db;
    while (hi - lo > 1e-4) {
        const double mid = 0.5 * (lo + hi);
        if (rate_at(mid) - target < 0.0) lo = mid; else hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace llps

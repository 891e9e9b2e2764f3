#include "llps/sdm.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace llps {

CostFunction CostFunction::cross_entropy(double p_zero) {
    if (!(p_zero > 0.0 && p_zero < 1.0))
        throw std::invalid_argument("cross_entropy: P_B(0) must lie in (0, 1)");
    CostFunction c;
    c.kind = Kind::cross_entropy;
    c.p0 = p_zero;
    return c;
}

CostFunction CostFunction::pattern(BitVector t) {
    CostFunction c;
    c.kind = Kind::pattern_match;
    c.target = std::move(t);
    return c;
}

double CostFunction::eval(const BitVector& p) const {
    switch (kind) {
        case Kind::hamming_weight:
            return static_cast<double>(p.weight());
        case Kind::cross_entropy: {
            const double len = static_cast<double>(p.size());
            const double w = static_cast<double>(p.weight());
            return ((len - w) * -std::log2(p0) + w * -std::log2(1.0 - p0)) / len;
        }
        case Kind::pattern_match:
            if (target.size() != p.size())
                throw std::invalid_argument("pattern_match: target length mismatch");
            return static_cast<double>(p.hamming_distance(target));
    }
    throw std::logic_error("unreachable");
}

SdmSpec SdmSpec::build(const BitMatrix& hp, bool materialize) {
    SdmSpec spec;
    spec.hp_ = hp;
    spec.m_ = hp.rows();
    if (hp.cols() < hp.rows()) throw std::invalid_argument("SdmSpec: Hp wider than tall required");
    spec.ell_ = hp.cols() - hp.rows();

    auto block = find_invertible_right_block(hp);
    if (!block) throw std::runtime_error("SdmSpec: Hp is rank deficient");
    spec.perm_ = std::move(block->perm);
    spec.right_block_inv_ = std::move(block->inverse);

    spec.basis_ = nullspace_basis(hp);
    if (spec.basis_.size() != spec.ell_)
        throw std::runtime_error("SdmSpec: nullspace dimension mismatch");

    if (materialize && spec.ell_ > 0) {
        if (spec.ell_ > 24) throw std::invalid_argument("SdmSpec: coset table too large to materialize");
        const std::uint64_t total = std::uint64_t(1) << spec.ell_;
        spec.table_.reserve(total);
        BitVector cur(spec.width());
        spec.table_.push_back(cur);
        for (std::uint64_t i = 1; i < total; ++i) {
            cur ^= spec.basis_[std::countr_zero(i)];
            spec.table_.push_back(cur);
        }
    }
    return spec;
}

BitVector SdmSpec::particular_solution(const BitVector& s) const {
    if (s.size() != m_) throw std::invalid_argument("particular_solution: syndrome length mismatch");
    // t = s (R^T)^{-1} = s * (R^{-1})^T
    const BitVector t = mul_vec_mt(s, right_block_inv_);
    BitVector p(width());
    for (std::size_t i = 0; i < m_; ++i)
        if (t.get(i)) p.set(perm_[ell_ + i], true);
    return p;
}

BitVector SdmSpec::match(const BitVector& s, const CostFunction& cost) const {
    BitVector rep = particular_solution(s);
    if (ell_ == 0) return rep;

    // Reduce every cost kind to minimizing the distance to a fixed target.
    BitVector target(width());
    switch (cost.kind) {
        case CostFunction::Kind::hamming_weight:
            break;
        case CostFunction::Kind::pattern_match:
            if (cost.target.size() != width())
                throw std::invalid_argument("match: pattern target length mismatch");
            target = cost.target;
            break;
        case CostFunction::Kind::cross_entropy:
            if (cost.p0 == 0.5) return rep;  // constant cost: any feasible vector
            if (cost.p0 < 0.5) target.set_all();
            break;
    }

    const std::uint64_t total = std::uint64_t(1) << ell_;
    std::uint64_t best_idx = 0;
    if (!table_.empty()) {
        const BitVector d = rep ^ target;
        std::size_t best_w = d.weight();
        for (std::uint64_t i = 1; i < total; ++i) {
            const std::size_t w = table_[i].hamming_distance(d);
            if (w < best_w) { best_w = w; best_idx = i; }
        }
    } else {
        BitVector cur = rep ^ target;
        std::size_t best_w = cur.weight();
        for (std::uint64_t i = 1; i < total; ++i) {
            cur ^= basis_[std::countr_zero(i)];
            const std::size_t w = cur.weight();
            if (w < best_w) { best_w = w; best_idx = i; }
        }
    }

    // rebuild the span element for the winning Gray index
    BitVector out = std::move(rep);
    if (!table_.empty()) {
        out ^= table_[best_idx];
    } else {
        std::uint64_t g = best_idx ^ (best_idx >> 1);
        while (g) {
            const int j = std::countr_zero(g);
            out ^= basis_[j];
            g &= g - 1;
        }
    }
    return out;
}

BitVector SdmSpec::recover_syndrome(const BitVector& p) const {
    if (p.size() != width()) throw std::invalid_argument("recover_syndrome: length mismatch");
    return mul_vec_mt(p, hp_);
}

}  // namespace llps

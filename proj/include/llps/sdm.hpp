#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "llps/gf2.hpp"

namespace llps {

// Cost over candidate parity vectors. Cross entropy over a binary alphabet
// is affine in the Hamming weight, so the matcher reduces it internally to
// weight minimization (or maximization when P_B(1) > P_B(0)).
struct CostFunction {
    enum class Kind { hamming_weight, cross_entropy, pattern_match };

    Kind kind = Kind::hamming_weight;
    double p0 = 0.5;      // cross_entropy: P_B(0)
    BitVector target;     // pattern_match

    static CostFunction hamming() { return {}; }
    static CostFunction cross_entropy(double p_zero);
    static CostFunction pattern(BitVector t);

    double eval(const BitVector& p) const;
};

// Syndrome distribution matcher over a full-row-rank m x (m+ell) matrix:
// given a length-m syndrome s, returns the minimum-cost p with p Hp^T = s.
// The solution set is the coset of the nullspace code C_p through any
// particular solution; the matcher enumerates the 2^ell coset members.
class SdmSpec {
public:
    // materialize stores all 2^ell coset-code members (Gray order) for
    // table scans; otherwise matching walks the span one flip at a time.
    static SdmSpec build(const BitMatrix& hp, bool materialize = false);

    std::size_t m() const { return m_; }
    std::size_t ell() const { return ell_; }
    std::size_t width() const { return m_ + ell_; }
    const BitMatrix& hp() const { return hp_; }
    const std::vector<std::size_t>& perm() const { return perm_; }
    const std::vector<BitVector>& coset_basis() const { return basis_; }
    bool materialized() const { return !table_.empty(); }
    const std::vector<BitVector>& coset_table() const { return table_; }

    // representative [0 | s (R^T)^{-1}] in the permuted order, returned in
    // natural column order
    BitVector particular_solution(const BitVector& s) const;

    BitVector match(const BitVector& s, const CostFunction& cost) const;

    // the matcher's inverse: s = p Hp^T
    BitVector recover_syndrome(const BitVector& p) const;

private:
    BitMatrix hp_;
    BitMatrix right_block_inv_;
    std::vector<std::size_t> perm_;
    std::vector<BitVector> basis_;
    std::vector<BitVector> table_;
    std::size_t m_ = 0, ell_ = 0;
};

}  // namespace llps

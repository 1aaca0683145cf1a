#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "ffr/field.hpp"
#include "ffr/interval.hpp"
#include "ffr/options.hpp"

namespace ffr {

/// T(lambda): number of k-tuples from the punctured interval whose reciprocal
/// sum minus `shift` equals lambda. Only nonzero counts are stored.
struct SumDistribution {
    FieldPtr field = nullptr;
    int k = 1;
    Interval source;
    u64 shift = 0;
    std::map<u64, u64> counts;

    u64 count(u64 lambda) const;
    u64 support() const noexcept { return counts.size(); }
    u128 total() const noexcept;
    u128 l2_norm_sq() const noexcept;
};

// Uses J* even if `iv` is not flagged punctured: reciprocals need x != 0.
// Built from half-size distributions and a convolution (meet in the middle).
// Refuses with BudgetExceeded when (#J*)^k exceeds the enumeration budget.
SumDistribution reciprocal_distribution(const Interval& iv, int k, u64 shift = 0, const RunOptions& opts = {});

struct CountReport {
    u64 q = 0;
    int n = 0;
    int m = 0;
    int k = 0;
    std::string gamma;
    std::string psi;
    u128 Nk = 0;
    u64 sumset = 0;
    u128 l2_norm_sq = 0;
    u128 cauchy_lhs = 0;  // (#J*)^{2k}
    u128 cauchy_rhs = 0;  // sumset * N_k
    double ratio = 0;     // log_q(N_k) / m
    double seconds = 0;

    bool cauchy_ok() const noexcept { return cauchy_lhs <= cauchy_rhs; }
};

CountReport count_Nk(const Interval& iv, int k, const RunOptions& opts = {});

/// Direct count of ordered 2k-tuples from J* with equal half reciprocal sums.
/// Refuses when (#J*)^{2k} exceeds the oracle budget.
u128 count_Nk_oracle(const Interval& iv, int k, const Budget& budget = {});

/// Distribution of c_1 x_1 + ... + c_r x_r over x_i in S (S deduplicated).
std::map<u64, u64> linear_sum_distribution(FieldPtr f, std::span<const u64> S, std::span<const u64> coeffs,
                                           const Budget& budget = {});

// T_r: solutions of c_1 x_1 + ... + c_r x_r = c with x_i in S. Coefficients nonzero.
u64 count_Tr(FieldPtr f, std::span<const u64> S, std::span<const u64> coeffs, u64 c, const Budget& budget = {});

// J_{2s}: solutions of x_1 + ... + x_s = x_{s+1} + ... + x_{2s}; J_0 = 1.
u128 count_J2s(FieldPtr f, std::span<const u64> S, int s, const Budget& budget = {});

}  // namespace ffr

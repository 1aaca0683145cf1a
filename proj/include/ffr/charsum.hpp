#pragma once

#include <complex>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "ffr/field.hpp"
#include "ffr/interval.hpp"
#include "ffr/options.hpp"

namespace ffr {

/// chi_beta(x) = zeta_p^Tr(beta x); trivial iff beta = 0.
struct AdditiveCharacter {
    FieldPtr field = nullptr;
    u64 beta = 0;

    bool trivial() const noexcept { return beta == 0; }
    // Root-of-unity index in [0, p).
    u64 operator()(u64 x) const noexcept { return field->trace(field->mul(beta, x)); }
};

inline u64 char_eval(const AdditiveCharacter& chi, u64 x) { return chi(x); }

/// sum_j counts[j] zeta_p^j, exact.
class CharAccumulator {
public:
    CharAccumulator() = default;
    explicit CharAccumulator(u64 p) : p_(p), counts_(p, 0) {}

    u64 p() const noexcept { return p_; }
    const std::vector<u64>& counts() const noexcept { return counts_; }
    void add(u64 j, u64 times = 1) noexcept { counts_[j] += times; }
    CharAccumulator& operator+=(const CharAccumulator& o);
    friend bool operator==(const CharAccumulator&, const CharAccumulator&) = default;

    u128 terms() const noexcept;
    // The value is zero exactly when all counts agree (the minimal relation of zeta_p).
    bool is_zero() const noexcept;
    // Integer value when c_1 = ... = c_{p-1}; then the sum is c_0 - c_1.
    std::optional<long long> integer_value() const noexcept;
    std::complex<long double> value() const;
    double magnitude() const;

    // {"p":...,"counts":[...]}
    std::string json() const;

private:
    u64 p_ = 0;
    std::vector<u64> counts_;
};

/// Per-element weights with |w| <= 1. Unlisted elements have weight 1.
/// Exact weights are roots of unity zeta_p^j; others are floating pairs.
class WeightTable {
public:
    void set_root(u64 x, u64 j) { roots_[x] = j; }
    void set_value(u64 x, std::complex<double> w);  // throws InvalidArgument if |w| > 1 + 1e-12
    bool exact() const noexcept { return values_.empty(); }
    u64 root(u64 x) const noexcept;
    std::complex<double> value(u64 x, u64 p) const;

    static WeightTable unit() { return {}; }
    // Seeded weights on every element of iv: roots of unity, or points of the unit disc.
    static WeightTable random_roots(const Interval& iv, u64 p, std::uint64_t seed);
    static WeightTable random_disc(const Interval& iv, std::uint64_t seed);

private:
    std::unordered_map<u64, u64> roots_;
    std::unordered_map<u64, std::complex<double>> values_;
};

struct SumReport {
    bool exact = true;
    CharAccumulator acc;            // filled when exact
    std::complex<double> value{};   // always filled
    double magnitude = 0;
    u128 trivial_bound = 0;         // number of terms
    double ratio = 0;               // magnitude / trivial_bound
    double seconds = 0;
};

/// Sum over x_i in J_i of prod w_i(x_i) chi((x_1...x_d)^{-1}). Intervals that
/// contain 0 must be punctured (ZeroInInterval). BudgetExceeded when the number
/// of terms exceeds the enumeration budget. The float path sums fixed chunks in
/// a fixed order, so the result does not depend on the thread count.
SumReport kloosterman_sum(const std::vector<Interval>& intervals, const std::vector<WeightTable>& weights,
                          const AdditiveCharacter& chi, const RunOptions& opts = {});

/// Sum over a_i in A_i of chi(a_1 ... a_d). Sets must avoid 0.
CharAccumulator multilinear_sum(const std::vector<std::vector<u64>>& sets, const AdditiveCharacter& chi,
                                const RunOptions& opts = {});

/// max over t != 0 of #(A cap t F_p) for F_{p^n}, n prime. Throws CompositeExtensionDegree.
u64 subfield_intersection_max(FieldPtr f, std::span<const u64> A);

struct KRange {
    long double lower = 0;  // omega n / (d m)
    long double upper = 0;  // sqrt(n / m) / 2
    bool feasible = false;
    u64 k_min = 0;  // smallest integer above lower
    u64 k_max = 0;  // largest integer below upper (0 if none)
};

/// The open interval (omega n/(d m), (1/2) sqrt(n/m)) with exact integer
/// feasibility: k > omega n/(d m) iff k d m > omega n, and k < sqrt(n/m)/2 iff
/// 4 k^2 m < n.
KRange admissible_k_range(u64 n, u64 m, u64 d, u64 omega = 156450);

}  // namespace ffr

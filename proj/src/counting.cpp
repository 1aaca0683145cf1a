#include "ffr/counting.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <optional>
#include <unordered_map>

#include "ffr/error.hpp"
#include "ffr/parallel.hpp"
#include "ffr/poly.hpp"

namespace ffr {

namespace {

using Hist = std::map<u64, u64>;

// base^e, or nullopt once it passes `limit`.
std::optional<u128> bounded_pow(u64 base, int e, u128 limit) {
    u128 r = 1;
    for (int i = 0; i < e; ++i) {
        r *= base;
        if (r > limit) return std::nullopt;
    }
    return r;
}

Interval punctured_of(const Interval& iv) { return Interval::make(iv.field, iv.gamma, iv.m, true); }

Hist convolve(FieldPtr f, const Hist& a, const Hist& b, int threads) {
    std::vector<std::pair<u64, u64>> av(a.begin(), a.end());
    const std::size_t chunks = std::min<std::size_t>(av.size(), static_cast<std::size_t>(std::max(threads, 1)) * 4);
    auto parts = parallel_indexed<std::unordered_map<u64, u64>>(chunks, threads, [&](std::size_t c) {
        std::unordered_map<u64, u64> local;
        const std::size_t lo = av.size() * c / chunks, hi = av.size() * (c + 1) / chunks;
        for (std::size_t i = lo; i < hi; ++i)
            for (auto& [y, cy] : b) local[f->add(av[i].first, y)] += av[i].second * cy;
        return local;
    });
    Hist out;
    for (auto& part : parts)
        for (auto& [x, c] : part) out[x] += c;
    return out;
}

Hist reciprocal_power(FieldPtr f, const Hist& one, int k, int threads) {
    if (k == 1) return one;
    const Hist hi = reciprocal_power(f, one, (k + 1) / 2, threads);
    if (k % 2 == 0) return convolve(f, hi, hi, threads);
    return convolve(f, hi, reciprocal_power(f, one, k / 2, threads), threads);
}

}  // namespace

u64 SumDistribution::count(u64 lambda) const {
    auto it = counts.find(lambda);
    return it == counts.end() ? 0 : it->second;
}

u128 SumDistribution::total() const noexcept {
    u128 t = 0;
    for (auto& [x, c] : counts) t += c;
    return t;
}

u128 SumDistribution::l2_norm_sq() const noexcept {
    u128 t = 0;
    for (auto& [x, c] : counts) t += static_cast<u128>(c) * c;
    return t;
}

SumDistribution reciprocal_distribution(const Interval& iv, int k, u64 shift, const RunOptions& opts) {
    if (k < 1) throw Error(Errc::InvalidArgument, "k must be >= 1");
    const Interval js = punctured_of(iv);
    if (!bounded_pow(js.cardinality(), k, opts.budget.enumeration))
        throw Error(Errc::BudgetExceeded, "(#J*)^k exceeds the enumeration budget");
    FieldPtr f = iv.field;
    const int threads = std::max(opts.threads, 1);
    auto parts = interval_partition(js, threads * 4);
    auto inverted = parallel_indexed<std::vector<u64>>(parts.size(), threads, [&](std::size_t i) {
        std::vector<u64> out;
        parts[i].for_each([&](u64 x) { out.push_back(f->inv(x)); });
        return out;
    });
    Hist one;
    for (auto& part : inverted)
        for (u64 y : part) one[y] += 1;
    Hist pow = reciprocal_power(f, one, k, threads);

    SumDistribution d;
    d.field = f;
    d.k = k;
    d.source = js;
    d.shift = shift;
    if (shift == 0) {
        d.counts = std::move(pow);
    } else {
        for (auto& [x, c] : pow) d.counts[f->sub(x, shift)] = c;
    }
    return d;
}

CountReport count_Nk(const Interval& iv, int k, const RunOptions& opts) {
    const auto t0 = std::chrono::steady_clock::now();
    const SumDistribution d = reciprocal_distribution(iv, k, 0, opts);
    CountReport r;
    r.q = iv.q();
    r.n = iv.n();
    r.m = iv.m;
    r.k = k;
    r.gamma = iv.field->format(iv.gamma);
    r.psi = iv.field->is_prime() ? std::string() : format_poly(iv.field->modulus());
    r.l2_norm_sq = d.l2_norm_sq();
    r.Nk = r.l2_norm_sq;
    r.sumset = d.support();
    r.cauchy_lhs = *bounded_pow(d.source.cardinality(), 2 * k, ~u128{0});
    r.cauchy_rhs = static_cast<u128>(r.sumset) * r.Nk;
    r.ratio = std::log(static_cast<double>(r.Nk)) / (std::log(static_cast<double>(r.q)) * r.m);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

u128 count_Nk_oracle(const Interval& iv, int k, const Budget& budget) {
    if (k < 1) throw Error(Errc::InvalidArgument, "k must be >= 1");
    const Interval js = punctured_of(iv);
    const u64 s = js.cardinality();
    if (!bounded_pow(s, 2 * k, budget.oracle)) throw Error(Errc::BudgetExceeded, "(#J*)^{2k} exceeds the oracle budget");
    if (s == 0) return 0;
    FieldPtr f = iv.field;
    std::vector<u64> inv;
    js.for_each([&](u64 x) { inv.push_back(f->inv(x)); });
    const int r = 2 * k;
    std::vector<std::size_t> idx(r, 0);
    u128 hits = 0;
    for (;;) {
        u64 lhs = 0, rhs = 0;
        for (int i = 0; i < k; ++i) lhs = f->add(lhs, inv[idx[i]]);
        for (int i = k; i < r; ++i) rhs = f->add(rhs, inv[idx[i]]);
        if (lhs == rhs) ++hits;
        int pos = 0;
        while (pos < r && ++idx[pos] == s) idx[pos++] = 0;
        if (pos == r) break;
    }
    return hits;
}

std::map<u64, u64> linear_sum_distribution(FieldPtr f, std::span<const u64> S, std::span<const u64> coeffs,
                                           const Budget& budget) {
    std::vector<u64> set(S.begin(), S.end());
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    for (u64 c : coeffs)
        if (c == 0) throw Error(Errc::InvalidArgument, "coefficients must be nonzero");
    if (!bounded_pow(set.size(), static_cast<int>(coeffs.size()), budget.enumeration))
        throw Error(Errc::BudgetExceeded, "#S^r exceeds the enumeration budget");
    Hist d{{0, 1}};
    for (u64 c : coeffs) {
        Hist next;
        for (auto& [x, cx] : d)
            for (u64 s : set) next[f->add(x, f->mul(c, s))] += cx;
        d = std::move(next);
    }
    return d;
}

u64 count_Tr(FieldPtr f, std::span<const u64> S, std::span<const u64> coeffs, u64 c, const Budget& budget) {
    if (!bounded_pow(S.size(), static_cast<int>(coeffs.size()), budget.enumeration))
        throw Error(Errc::BudgetExceeded, "#S^r exceeds the enumeration budget");
    const std::size_t half = coeffs.size() / 2;
    const Hist left = linear_sum_distribution(f, S, coeffs.subspan(0, half), budget);
    const Hist right = linear_sum_distribution(f, S, coeffs.subspan(half), budget);
    u64 total = 0;
    for (auto& [x, cx] : left) {
        auto it = right.find(f->sub(c, x));
        if (it != right.end()) total += cx * it->second;
    }
    return total;
}

u128 count_J2s(FieldPtr f, std::span<const u64> S, int s, const Budget& budget) {
    if (s < 0) throw Error(Errc::InvalidArgument, "s must be >= 0");
    if (!bounded_pow(S.size(), 2 * s, budget.enumeration))
        throw Error(Errc::BudgetExceeded, "#S^{2s} exceeds the enumeration budget");
    const std::vector<u64> ones(s, 1);
    u128 t = 0;
    for (auto& [x, c] : linear_sum_distribution(f, S, ones, budget)) t += static_cast<u128>(c) * c;
    return t;
}

}  // namespace ffr

#include "ffr/charsum.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>

#include "ffr/error.hpp"
#include "ffr/parallel.hpp"
#include "ffr/rng.hpp"

namespace ffr {

namespace {

constexpr std::size_t kChunks = 64;

std::optional<u128> bounded_product(const std::vector<u64>& sizes, u128 limit) {
    u128 r = 1;
    for (u64 s : sizes) {
        r *= s;
        if (r > limit) return std::nullopt;
    }
    return r;
}

std::complex<long double> root_of_unity(u64 j, u64 p) {
    const long double a = 2 * std::numbers::pi_v<long double> * static_cast<long double>(j) / static_cast<long double>(p);
    return {std::cos(a), std::sin(a)};
}

}  // namespace

CharAccumulator& CharAccumulator::operator+=(const CharAccumulator& o) {
    if (counts_.empty()) *this = CharAccumulator(o.p_);
    if (o.p_ != p_) throw Error(Errc::InvalidArgument, "accumulators over different p");
    for (u64 j = 0; j < p_; ++j) counts_[j] += o.counts_[j];
    return *this;
}

u128 CharAccumulator::terms() const noexcept {
    u128 t = 0;
    for (u64 c : counts_) t += c;
    return t;
}

bool CharAccumulator::is_zero() const noexcept {
    return std::adjacent_find(counts_.begin(), counts_.end(), std::not_equal_to<>()) == counts_.end();
}

std::optional<long long> CharAccumulator::integer_value() const noexcept {
    if (p_ < 2) return std::nullopt;
    for (u64 j = 2; j < p_; ++j)
        if (counts_[j] != counts_[1]) return std::nullopt;
    return static_cast<long long>(counts_[0]) - static_cast<long long>(counts_[1]);
}

std::complex<long double> CharAccumulator::value() const {
    if (auto v = integer_value()) return {static_cast<long double>(*v), 0};
    const u64 base = *std::min_element(counts_.begin(), counts_.end());
    std::complex<long double> s = 0;
    for (u64 j = 0; j < p_; ++j)
        if (counts_[j] != base) s += static_cast<long double>(counts_[j] - base) * root_of_unity(j, p_);
    return s;
}

double CharAccumulator::magnitude() const { return static_cast<double>(std::abs(value())); }

std::string CharAccumulator::json() const {
    std::string s = "{\"p\":" + std::to_string(p_) + ",\"counts\":[";
    for (u64 j = 0; j < p_; ++j) s += (j ? "," : "") + std::to_string(counts_[j]);
    return s + "]}";
}

void WeightTable::set_value(u64 x, std::complex<double> w) {
    if (std::abs(w) > 1 + 1e-12) throw Error(Errc::InvalidArgument, "weight magnitude exceeds 1");
    values_[x] = w;
}

u64 WeightTable::root(u64 x) const noexcept {
    auto it = roots_.find(x);
    return it == roots_.end() ? 0 : it->second;
}

std::complex<double> WeightTable::value(u64 x, u64 p) const {
    if (auto it = values_.find(x); it != values_.end()) return it->second;
    auto z = root_of_unity(root(x), p);
    return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

WeightTable WeightTable::random_roots(const Interval& iv, u64 p, std::uint64_t seed) {
    WeightTable w;
    SplitMix64 rng(seed);
    iv.for_each([&](u64 x) { w.set_root(x, rng.below(p)); });
    return w;
}

WeightTable WeightTable::random_disc(const Interval& iv, std::uint64_t seed) {
    WeightTable w;
    SplitMix64 rng(seed);
    iv.for_each([&](u64 x) {
        const double r = std::sqrt(rng.unit()), a = 2 * std::numbers::pi * rng.unit();
        w.set_value(x, std::polar(r, a));
    });
    return w;
}

SumReport kloosterman_sum(const std::vector<Interval>& intervals, const std::vector<WeightTable>& weights,
                          const AdditiveCharacter& chi, const RunOptions& opts) {
    const auto t0 = std::chrono::steady_clock::now();
    if (intervals.empty()) throw Error(Errc::InvalidArgument, "need at least one interval");
    if (!weights.empty() && weights.size() != intervals.size())
        throw Error(Errc::InvalidArgument, "one weight table per interval");
    FieldPtr f = chi.field;
    const u64 p = f->characteristic();
    const std::size_t d = intervals.size();
    std::vector<u64> sizes;
    for (auto& iv : intervals) {
        if (iv.field != f) throw Error(Errc::InvalidArgument, "interval and character over different fields");
        if (!iv.excludes_zero()) throw Error(Errc::ZeroInInterval, "interval " + iv.str() + " contains 0 and is not punctured");
        sizes.push_back(iv.cardinality());
    }
    auto terms = bounded_product(sizes, opts.budget.enumeration);
    if (!terms) throw Error(Errc::BudgetExceeded, "number of terms exceeds the enumeration budget");
    bool exact = true;
    for (auto& w : weights) exact &= w.exact();

    // Per coordinate: inverses, exact root offsets, float weights.
    std::vector<std::vector<u64>> inv(d), root(d);
    std::vector<std::vector<std::complex<double>>> wv(d);
    for (std::size_t i = 0; i < d; ++i)
        intervals[i].for_each([&](u64 x) {
            inv[i].push_back(f->inv(x));
            root[i].push_back(weights.empty() ? 0 : weights[i].root(x));
            if (!exact) wv[i].push_back(weights[i].value(x, p));
        });

    struct Part {
        CharAccumulator acc;
        std::complex<long double> sum = 0;
    };
    const std::size_t n0 = inv[0].size();
    const std::size_t chunks = std::min(n0, kChunks);
    auto parts = parallel_indexed<Part>(chunks, opts.threads, [&](std::size_t c) {
        Part part{CharAccumulator(p), 0};
        std::vector<std::size_t> idx(d, 0);
        for (std::size_t i0 = n0 * c / chunks; i0 < n0 * (c + 1) / chunks; ++i0) {
            idx.assign(d, 0);
            idx[0] = i0;
            for (;;) {
                u64 prod = 1, rsum = 0;
                std::complex<long double> w = 1;
                for (std::size_t i = 0; i < d; ++i) {
                    prod = f->mul(prod, inv[i][idx[i]]);
                    rsum += root[i][idx[i]];
                    if (!exact) w *= std::complex<long double>(wv[i][idx[i]]);
                }
                const u64 j = chi(prod);
                if (exact)
                    part.acc.add((j + rsum) % p);
                else
                    part.sum += w * root_of_unity(j, p);
                std::size_t pos = 1;
                while (pos < d && ++idx[pos] == inv[pos].size()) idx[pos++] = 0;
                if (pos >= d) break;
            }
        }
        return part;
    });

    SumReport r;
    r.exact = exact;
    r.trivial_bound = *terms;
    if (exact) {
        r.acc = CharAccumulator(p);
        for (auto& part : parts) r.acc += part.acc;
        const auto v = r.acc.value();
        r.value = {static_cast<double>(v.real()), static_cast<double>(v.imag())};
        r.magnitude = r.acc.magnitude();
    } else {
        std::complex<long double> s = 0;
        for (auto& part : parts) s += part.sum;
        r.value = {static_cast<double>(s.real()), static_cast<double>(s.imag())};
        r.magnitude = static_cast<double>(std::abs(s));
    }
    r.ratio = r.trivial_bound ? r.magnitude / static_cast<double>(r.trivial_bound) : 0;
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

CharAccumulator multilinear_sum(const std::vector<std::vector<u64>>& sets, const AdditiveCharacter& chi,
                                const RunOptions& opts) {
    if (sets.empty()) throw Error(Errc::InvalidArgument, "need at least one set");
    FieldPtr f = chi.field;
    const u64 p = f->characteristic();
    std::vector<u64> sizes;
    for (auto& s : sets) {
        if (std::find(s.begin(), s.end(), u64{0}) != s.end()) throw Error(Errc::InvalidArgument, "sets must avoid 0");
        sizes.push_back(s.size());
    }
    if (!bounded_product(sizes, opts.budget.enumeration))
        throw Error(Errc::BudgetExceeded, "number of terms exceeds the enumeration budget");
    CharAccumulator total(p);
    for (u64 s : sizes)
        if (s == 0) return total;
    const std::size_t d = sets.size(), n0 = sets[0].size(), chunks = std::min(n0, kChunks);
    auto parts = parallel_indexed<CharAccumulator>(chunks, opts.threads, [&](std::size_t c) {
        CharAccumulator acc(p);
        std::vector<std::size_t> idx(d, 0);
        for (std::size_t i0 = n0 * c / chunks; i0 < n0 * (c + 1) / chunks; ++i0) {
            idx.assign(d, 0);
            idx[0] = i0;
            for (;;) {
                u64 prod = 1;
                for (std::size_t i = 0; i < d; ++i) prod = f->mul(prod, sets[i][idx[i]]);
                acc.add(chi(prod));
                std::size_t pos = 1;
                while (pos < d && ++idx[pos] == sets[pos].size()) idx[pos++] = 0;
                if (pos >= d) break;
            }
        }
        return acc;
    });
    for (auto& a : parts) total += a;
    return total;
}

u64 subfield_intersection_max(FieldPtr f, std::span<const u64> A) {
    const int n = f->absolute_degree();
    if (n < 2 || !is_prime(static_cast<u64>(n)))
        throw Error(Errc::CompositeExtensionDegree, "absolute degree " + std::to_string(n) + " is not prime");
    std::vector<u64> set(A.begin(), A.end());
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    FieldPtr fp = f->prime_field();
    std::unordered_map<u64, u64> buckets;
    bool has_zero = false;
    u64 best = 0;
    for (u64 a : set) {
        if (a == 0) {
            has_zero = true;
            continue;
        }
        // Scale so the lowest nonzero F_p coordinate is 1; a and c a (c in F_p^*) collide.
        const auto flat = f->flat(a);
        u64 lead = 0;
        for (u64 c : flat)
            if (c) {
                lead = c;
                break;
            }
        best = std::max(best, ++buckets[f->scale_prime(fp->inv(lead), a)]);
    }
    return best + (has_zero ? 1 : 0);
}

KRange admissible_k_range(u64 n, u64 m, u64 d, u64 omega) {
    if (n < 1 || m < 1 || d < 1 || omega < 1) throw Error(Errc::InvalidArgument, "n, m, d, omega must be >= 1");
    KRange r;
    const u128 num = static_cast<u128>(omega) * n, den = static_cast<u128>(d) * m;
    r.lower = static_cast<long double>(num) / static_cast<long double>(den);
    r.upper = std::sqrt(static_cast<long double>(n) / static_cast<long double>(m)) / 2;
    r.k_min = static_cast<u64>(std::min<u128>(num / den + 1, ~u64{0}));
    // k_max = floor(sqrt((n - 1) / (4 m))): 4 k^2 m <= n - 1 iff k^2 <= (n - 1) / (4 m).
    const u64 bound = (n - 1) / (4 * static_cast<u128>(m)) > ~u64{0} ? ~u64{0} : static_cast<u64>((n - 1) / (4 * static_cast<u128>(m)));
    u64 k = static_cast<u64>(std::sqrt(static_cast<long double>(bound)));
    while (static_cast<u128>(k) * k > bound) --k;
    while (static_cast<u128>(k + 1) * (k + 1) <= bound) ++k;
    r.k_max = k;
    r.feasible = r.k_min <= r.k_max;
    return r;
}

}  // namespace ffr

#include "ffr/funcfield.hpp"

#include <algorithm>

#include "ffr/error.hpp"

namespace ffr {

namespace {

std::optional<u128> bounded_pow(u64 base, int e, u128 limit) {
    u128 r = 1;
    for (int i = 0; i < e; ++i) {
        r *= base;
        if (r > limit) return std::nullopt;
    }
    return r;
}

void require_irreducible(const AlgebraicShift& s, const Budget& budget) {
    if (s.mu.is_zero()) throw Error(Errc::DivisionByZero, "mu must be nonzero");
    if (!irreducible_over_rational_functions(s.g, budget))
        throw Error(Errc::ReducibleMinimalPolynomial, "g = " + s.g.str() + " is reducible over F_q(T)");
}

// beta = Z / mu in the extension.
RatPoly beta_of(const AlgebraicExtension& ext, const AlgebraicShift& s) {
    return ext.mul(ext.z(), ext.from(RatFunc(Poly::one(s.field()), s.mu)));
}

}  // namespace

AlgebraicShift AlgebraicShift::rational(const Poly& xi0, const Poly& mu) {
    return {BivarPoly(mu.field(), {-xi0, Poly::one(mu.field())}), mu};
}

bool irreducible_over_rational_functions(const BivarPoly& g, const Budget& budget) {
    if (!g.is_monic()) throw Error(Errc::NotMonic, "g must be monic in Z");
    const int d = g.degZ();
    if (d < 1) throw Error(Errc::ConstantInZ, "g must have positive degree in Z");
    if (d == 1) return true;
    FieldPtr f = g.field();
    const u64 q = f->cardinality();
    for (int e = 1; e <= d / 2; ++e) {
        // bound[j] = max T-degree of the coefficient of Z^(e-j), j = 1..e.
        std::vector<int> bound(e + 1, -1);
        u128 candidates = 1;
        for (int j = 1; j <= e; ++j) {
            int b = -1;
            for (int i = 0; i < d; ++i) {
                const int gd = g.coeff(i).degree();
                if (gd < 0) continue;
                b = std::max(b, j * gd / (d - i));
            }
            bound[j] = b;
            if (b < 0) continue;  // only the zero coefficient is possible
            auto c = bounded_pow(q, b + 1, budget.enumeration);
            if (!c || candidates * *c > budget.enumeration)
                throw Error(Errc::BudgetExceeded, "factor search for " + g.str() + " exceeds the enumeration budget");
            candidates *= *c;
        }
        // Odometer over coefficient vectors of the candidate factor.
        std::vector<u64> idx(e + 1, 0), lim(e + 1, 1);
        for (int j = 1; j <= e; ++j) lim[j] = bound[j] < 0 ? 1 : static_cast<u64>(*bounded_pow(q, bound[j] + 1, ~u128{0}));
        for (;;) {
            std::vector<Poly> h(e + 1, Poly(f));
            h[e] = Poly::one(f);
            for (int j = 1; j <= e; ++j) h[e - j] = Poly::from_index(f, idx[j], std::max(bound[j] + 1, 0));
            const BivarPoly hb(f, h);
            // Exact division of g by the monic candidate in F_q[T][Z].
            std::vector<Poly> r = g.coeffs();
            for (int k = d; k >= e; --k) {
                const Poly c = r[k];
                if (c.is_zero()) continue;
                for (int i = 0; i <= e; ++i) r[k - e + i] -= c * hb.coeff(i);
            }
            bool divides = true;
            for (int i = 0; i < e; ++i) divides &= r[i].is_zero();
            if (divides) return false;
            int pos = 1;
            while (pos <= e && ++idx[pos] == lim[pos]) idx[pos++] = 0;
            if (pos > e) break;
        }
    }
    return true;
}

AlgebraicExtension::AlgebraicExtension(const BivarPoly& g) : f_(g.field()) {
    if (!g.is_monic()) throw Error(Errc::NotMonic, "g must be monic in Z");
    if (g.degZ() < 1) throw Error(Errc::ConstantInZ, "g must have positive degree in Z");
    for (auto& c : g.coeffs()) g_.push_back(RatFunc(c));
}

RatPoly AlgebraicExtension::reduce(const RatPoly& a) const {
    if (ratpoly::degree(a) < degree()) {
        RatPoly r = a;
        ratpoly::trim(r);
        return r;
    }
    return ratpoly::divmod(a, g_).second;
}

std::optional<RatPoly> AlgebraicExtension::try_inv(const RatPoly& a) const {
    RatPoly r = reduce(a);
    if (r.empty()) return std::nullopt;
    auto x = ratpoly::xgcd(r, g_, f_);
    if (ratpoly::degree(x.g) != 0) return std::nullopt;
    return reduce(x.s);
}

RatPoly AlgebraicExtension::inv(const RatPoly& a) const {
    if (reduce(a).empty()) throw Error(Errc::DivisionByZero, "inverse of zero");
    auto r = try_inv(a);
    if (!r) throw Error(Errc::ReducibleMinimalPolynomial, "element is a zero divisor; g is reducible");
    return *r;
}

std::vector<Poly> polys_below(FieldPtr f, int m, const Budget& budget) {
    if (m < 1) throw Error(Errc::DimensionOutOfRange, "m must be >= 1");
    auto n = bounded_pow(f->cardinality(), m, budget.enumeration);
    if (!n) throw Error(Errc::BudgetExceeded, "q^m exceeds the enumeration budget");
    std::vector<Poly> out;
    for (u64 i = 0; i < static_cast<u64>(*n); ++i) out.push_back(Poly::from_index(f, i, m));
    return out;
}

std::vector<std::optional<RatPoly>> shifted_reciprocals(const AlgebraicShift& shift, int m, const Budget& budget) {
    require_irreducible(shift, budget);
    AlgebraicExtension ext(shift.g);
    const RatPoly beta = beta_of(ext, shift);
    std::vector<std::optional<RatPoly>> out;
    for (auto& x : polys_below(shift.field(), m, budget)) out.push_back(ext.try_inv(ext.add(ext.from(RatFunc(x)), beta)));
    return out;
}

u128 count_Nk_function_field(const AlgebraicShift& shift, int m, int k, const RunOptions& opts) {
    if (k < 1) throw Error(Errc::InvalidArgument, "k must be >= 1");
    auto qm = bounded_pow(shift.field()->cardinality(), m, opts.budget.enumeration);
    if (!qm || !bounded_pow(static_cast<u64>(*qm), k, opts.budget.enumeration))
        throw Error(Errc::BudgetExceeded, "(q^m)^k exceeds the enumeration budget");
    AlgebraicExtension ext(shift.g);
    const auto recips = shifted_reciprocals(shift, m, opts.budget);
    std::map<RatPoly, u64> one;
    for (auto& r : recips)
        if (r) one[*r] += 1;
    std::map<RatPoly, u64> dist{{RatPoly{}, 1}};
    for (int i = 0; i < k; ++i) {
        std::map<RatPoly, u64> next;
        for (auto& [x, cx] : dist)
            for (auto& [y, cy] : one) next[ext.add(x, y)] += cx * cy;
        dist = std::move(next);
    }
    u128 total = 0;
    for (auto& [x, c] : dist) total += static_cast<u128>(c) * c;
    return total;
}

namespace {

template <class Fn>
void for_each_solution(const AlgebraicShift& shift, int m, int k, const Budget& budget, Fn&& fn) {
    if (k < 1) throw Error(Errc::InvalidArgument, "k must be >= 1");
    auto qm = bounded_pow(shift.field()->cardinality(), m, budget.oracle);
    if (!qm || !bounded_pow(static_cast<u64>(*qm), 2 * k, budget.oracle))
        throw Error(Errc::BudgetExceeded, "q^{2km} exceeds the oracle budget");
    AlgebraicExtension ext(shift.g);
    const auto recips = shifted_reciprocals(shift, m, budget);
    const u64 s = recips.size();
    const int r = 2 * k;
    std::vector<u64> idx(r, 0);
    for (;;) {
        bool valid = true;
        for (int i = 0; i < r && valid; ++i) valid = recips[idx[i]].has_value();
        if (valid) {
            RatPoly lhs, rhs;
            for (int i = 0; i < k; ++i) lhs = ext.add(lhs, *recips[idx[i]]);
            for (int i = k; i < r; ++i) rhs = ext.add(rhs, *recips[idx[i]]);
            if (lhs == rhs) fn(idx);
        }
        // Last coordinate fastest, so solutions come out in lexicographic order.
        int pos = r - 1;
        while (pos >= 0 && ++idx[pos] == s) idx[pos--] = 0;
        if (pos < 0) break;
    }
}

}  // namespace

u128 count_Nk_function_field_oracle(const AlgebraicShift& shift, int m, int k, const Budget& budget) {
    u128 n = 0;
    for_each_solution(shift, m, k, budget, [&](const std::vector<u64>&) { ++n; });
    return n;
}

std::vector<std::vector<u64>> function_field_solutions(const AlgebraicShift& shift, int m, int k,
                                                       const Budget& budget) {
    std::vector<std::vector<u64>> out;
    for_each_solution(shift, m, k, budget, [&](const std::vector<u64>& t) { out.push_back(t); });
    return out;
}

}  // namespace ffr

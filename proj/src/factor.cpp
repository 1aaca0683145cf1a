#include "ffr/factor.hpp"

#include <algorithm>

#include "ffr/error.hpp"
#include "ffr/rng.hpp"

namespace ffr {

namespace {

Poly x_poly(FieldPtr f) { return Poly::monomial(f, 1); }

Poly random_below(FieldPtr f, int deg, SplitMix64& rng) {
    std::vector<u64> c(deg);
    for (auto& x : c) x = rng.below(f->cardinality());
    return Poly(f, std::move(c));
}

// a^((q^d - 1)/2) mod m for odd q, via the norm-like product of Frobenius images.
Poly half_power(const Poly& a, int d, const Poly& m) {
    const u64 q = a.field()->cardinality();
    Poly prod = Poly::one(a.field());
    Poly frob = a % m;
    for (int i = 0; i < d; ++i) {
        prod = mulmod(prod, frob, m);
        if (i + 1 < d) frob = powmod(frob, q, m);
    }
    return powmod(prod, (q - 1) / 2, m);
}

// a + a^2 + ... + a^(2^(k-1)) mod m
Poly binary_trace(const Poly& a, int k, const Poly& m) {
    Poly t = a % m, s = t;
    for (int j = 1; j < k; ++j) {
        t = mulmod(t, t, m);
        s += t;
    }
    return s;
}

}  // namespace

bool poly_irreducible_test(const Poly& f) {
    const int n = f.degree();
    if (n < 1) return false;
    if (n == 1) return true;
    const Poly g = f.monic();
    const u64 q = f.field()->cardinality();
    const Poly x = x_poly(f.field());
    // frob[i] = T^(q^i) mod g
    std::vector<Poly> frob(n + 1, Poly(f.field()));
    frob[0] = x % g;
    for (int i = 1; i <= n; ++i) frob[i] = powmod(frob[i - 1], q, g);
    if (!(frob[n] == x % g)) return false;
    for (u64 l : prime_divisors(static_cast<u64>(n))) {
        const Poly h = frob[n / l] - x;
        if (!gcd(h, g).is_one()) return false;
    }
    return true;
}

std::vector<Factor> square_free_decomposition(const Poly& f) {
    std::vector<Factor> out;
    if (f.degree() <= 0) return out;
    const int p = static_cast<int>(f.field()->characteristic());
    const Poly d = f.derivative();
    if (d.is_zero()) {
        for (auto& [g, j] : square_free_decomposition(pth_root(f))) out.push_back({g, j * p});
        return out;
    }
    Poly c = gcd(f, d);
    Poly w = f / c;
    int i = 1;
    while (!w.is_one()) {
        Poly y = gcd(w, c);
        Poly z = w / y;
        if (!z.is_one()) out.push_back({z.monic(), i});
        ++i;
        w = std::move(y);
        c = c / w;
    }
    if (!c.is_one() && c.degree() > 0) {
        for (auto& [g, j] : square_free_decomposition(pth_root(c.monic()))) out.push_back({g, j * p});
    }
    return out;
}

std::vector<std::pair<Poly, int>> distinct_degree_factorization(const Poly& f) {
    std::vector<std::pair<Poly, int>> out;
    Poly rest = f.monic();
    const u64 q = f.field()->cardinality();
    const Poly x = x_poly(f.field());
    Poly h = rest.degree() > 0 ? x % rest : x;
    for (int i = 1; rest.degree() >= 2 * i; ++i) {
        h = powmod(h, q, rest);
        Poly g = gcd(h - x, rest);
        if (!g.is_one()) {
            out.emplace_back(g, i);
            rest = rest / g;
            h = h % rest;
        }
    }
    if (rest.degree() > 0) out.emplace_back(rest, rest.degree());
    return out;
}

std::vector<Poly> equal_degree_factorization(const Poly& f, int d, std::uint64_t seed) {
    const Poly g = f.monic();
    if (g.degree() == d) return {g};
    FieldPtr fld = g.field();
    const int r = g.degree() / d;
    const bool even = fld->characteristic() == 2;
    const int trace_len = fld->absolute_degree() * d;  // q = 2^e, trace down to F_2
    SplitMix64 rng(seed);
    std::vector<Poly> parts{g};
    while (static_cast<int>(parts.size()) < r) {
        const Poly a = random_below(fld, g.degree(), rng);
        if (a.degree() < 1) continue;
        Poly b = even ? binary_trace(a, trace_len, g) : half_power(a, d, g) - Poly::one(fld);
        std::vector<Poly> next;
        for (auto& u : parts) {
            if (u.degree() == d) {
                next.push_back(u);
                continue;
            }
            Poly h = gcd(b % u, u);
            if (h.degree() > 0 && h.degree() < u.degree()) {
                next.push_back(h);
                next.push_back(u / h);
            } else {
                next.push_back(u);
            }
        }
        parts = std::move(next);
    }
    for (auto& u : parts) u = u.monic();
    std::sort(parts.begin(), parts.end());
    return parts;
}

std::vector<Factor> poly_factor(const Poly& f, std::uint64_t seed) {
    if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "cannot factor the zero polynomial");
    std::vector<Factor> out;
    std::uint64_t call = 0;
    for (auto& [sq, mult] : square_free_decomposition(f.monic())) {
        for (auto& [block, d] : distinct_degree_factorization(sq)) {
            for (auto& irr : equal_degree_factorization(block, d, SplitMix64::derive(seed, call++)))
                out.push_back({irr, mult});
        }
    }
    std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) {
        if (a.poly == b.poly) return a.multiplicity < b.multiplicity;
        return a.poly < b.poly;
    });
    std::vector<Factor> merged;
    for (auto& fac : out) {
        if (!merged.empty() && merged.back().poly == fac.poly)
            merged.back().multiplicity += fac.multiplicity;
        else
            merged.push_back(fac);
    }
    return merged;
}

std::uint64_t divisor_count(const Poly& f) {
    if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "divisor count of zero");
    std::uint64_t n = 1;
    for (auto& fac : poly_factor(f)) n *= static_cast<std::uint64_t>(fac.multiplicity + 1);
    return n;
}

Poly auto_irreducible(FieldPtr f, int n, std::uint64_t seed) {
    if (n < 2) throw Error(Errc::InvalidArgument, "auto_irreducible needs degree >= 2");
    SplitMix64 rng(seed);
    for (;;) {
        std::vector<u64> c(n + 1);
        for (int i = 0; i < n; ++i) c[i] = rng.below(f->cardinality());
        c[n] = 1;
        Poly cand(f, std::move(c));
        if (poly_irreducible_test(cand)) return cand;
    }
}

}  // namespace ffr

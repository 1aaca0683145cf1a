#include "ffr/prooflab.hpp"

#include <algorithm>

#include "ffr/error.hpp"

namespace ffr {

namespace {

FieldPtr field_of(const std::vector<Poly>& tuple) {
    if (tuple.empty() || tuple.size() % 2) throw Error(Errc::InvalidArgument, "tuple must have 2k >= 2 entries");
    for (auto& x : tuple)
        if (x.field()) return x.field();
    throw Error(Errc::InvalidArgument, "tuple has no field");
}

Poly pow_poly(const Poly& a, int e) { return pow(a, static_cast<unsigned>(e)); }

}  // namespace

BivarPoly build_Px(const std::vector<Poly>& tuple) {
    FieldPtr f = field_of(tuple);
    const std::size_t r = tuple.size(), k = r / 2;
    std::vector<BivarPoly> lin;
    for (auto& x : tuple) lin.push_back(BivarPoly::linear(x.field() ? x : Poly(f)));
    // prefix[i] = prod_{j<i}, suffix[i] = prod_{j>=i}
    std::vector<BivarPoly> prefix(r + 1), suffix(r + 1);
    prefix[0] = BivarPoly(f, {Poly::one(f)});
    suffix[r] = prefix[0];
    for (std::size_t i = 0; i < r; ++i) prefix[i + 1] = prefix[i] * lin[i];
    for (std::size_t i = r; i-- > 0;) suffix[i] = lin[i] * suffix[i + 1];
    BivarPoly P(f);
    for (std::size_t s = 0; s < r; ++s) {
        const BivarPoly term = prefix[s] * suffix[s + 1];
        P = s < k ? P + term : P - term;
    }
    return P;
}

bool px_root_check(const std::vector<Poly>& tuple, const Poly& gamma, const Poly& psi) {
    const BivarPoly P = build_Px(tuple);
    const Poly g = gamma % psi;
    Poly acc(psi.field());
    for (int i = P.degZ(); i >= 0; --i) acc = (acc * g + P.coeff(i)) % psi;
    return acc.is_zero();
}

Poly resultant_Z(const BivarPoly& f, const BivarPoly& g) {
    if (f.is_zero() || g.is_zero()) throw Error(Errc::ZeroPolynomial, "resultant of the zero polynomial");
    if (f.degZ() < 1 || g.degZ() < 1) throw Error(Errc::ConstantInZ, "resultant needs degZ >= 1 on both sides");
    FieldPtr fld = f.field();
    const int df = f.degZ(), dg = g.degZ(), n = df + dg;
    std::vector<std::vector<Poly>> M(n, std::vector<Poly>(n, Poly(fld)));
    for (int i = 0; i < dg; ++i)
        for (int j = 0; j <= df; ++j) M[i][i + j] = f.coeff(df - j);
    for (int i = 0; i < df; ++i)
        for (int j = 0; j <= dg; ++j) M[dg + i][i + j] = g.coeff(dg - j);
    // Bareiss: after step k every entry below is divisible by the previous pivot.
    bool negate = false;
    Poly prev = Poly::one(fld);
    for (int k = 0; k < n - 1; ++k) {
        if (M[k][k].is_zero()) {
            int r = k + 1;
            while (r < n && M[r][k].is_zero()) ++r;
            if (r == n) return Poly(fld);
            std::swap(M[k], M[r]);
            negate = !negate;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) / prev;
            M[i][k] = Poly(fld);
        }
        prev = M[k][k];
    }
    return negate ? -M[n - 1][n - 1] : M[n - 1][n - 1];
}

DegreeCertificate lemma21_degree_check(const BivarPoly& f, const BivarPoly& g, int M, int k) {
    if (M < 1 || k < 2) throw Error(Errc::HypothesisViolated, "need M >= 1 and k >= 2");
    for (const BivarPoly* h : {&f, &g}) {
        if (h->degZ() < 1 || h->degZ() > k - 1)
            throw Error(Errc::HypothesisViolated, "degZ must lie in [1, k-1]: " + h->str());
        for (int i = 0; i <= h->degZ(); ++i)
            if (h->coeff(i).degree() >= (k - i) * M)
                throw Error(Errc::HypothesisViolated, "coefficient of Z^" + std::to_string(i) + " too large in " + h->str());
    }
    DegreeCertificate c;
    c.bound = (static_cast<long long>(k) * k - 1) * M;
    c.actual = resultant_Z(f, g).degree();
    c.ok = c.actual <= c.bound;
    return c;
}

bool resultant_solution_check(const std::vector<Poly>& tx, const std::vector<Poly>& ty) {
    const BivarPoly P = build_Px(tx), Q = build_Px(ty);
    if (P.is_zero() || Q.is_zero()) return true;
    if (P.degZ() == 0) return pow_poly(P.coeff(0), Q.degZ()).is_zero();
    if (Q.degZ() == 0) return pow_poly(Q.coeff(0), P.degZ()).is_zero();
    return resultant_Z(P, Q).is_zero();
}

Poly norm_of_shift(const AlgebraicShift& shift, const Poly& x) {
    const Poly v = shift.g.eval(-(shift.mu * x));
    return shift.d() % 2 ? -v : v;
}

bool norm_divisibility_check(const AlgebraicShift& shift, const std::vector<Poly>& tuple, int i) {
    field_of(tuple);
    const int r = static_cast<int>(tuple.size()), k = r / 2, d = shift.d();
    if (i < 0 || i >= r) throw Error(Errc::InvalidArgument, "index out of range");
    for (int a = 0; a < r; ++a)
        for (int b = a + 1; b < r; ++b)
            if (tuple[a] == tuple[b]) throw Error(Errc::RepeatedCoordinates, "tuple coordinates must be distinct");
    if (!irreducible_over_rational_functions(shift.g))
        throw Error(Errc::ReducibleMinimalPolynomial, "g = " + shift.g.str() + " is reducible over F_q(T)");
    AlgebraicExtension ext(shift.g);
    FieldPtr f = shift.field();
    const RatPoly beta = ext.mul(ext.z(), ext.from(RatFunc(Poly::one(f), shift.mu)));
    RatPoly lhs, rhs;
    for (int a = 0; a < r; ++a) {
        auto inv = ext.try_inv(ext.add(ext.from(RatFunc(tuple[a])), beta));
        if (!inv) throw Error(Errc::NotASolution, "zero denominator at coordinate " + std::to_string(a));
        if (a < k)
            lhs = ext.add(lhs, *inv);
        else
            rhs = ext.add(rhs, *inv);
    }
    if (!(lhs == rhs)) throw Error(Errc::NotASolution, "tuple does not solve the reciprocal equation");
    Poly target = pow_poly(shift.mu, (2 * k - 1) * d);
    for (int j = 0; j < r; ++j)
        if (j != i) target = target * pow_poly(tuple[j] - tuple[i], d);
    return divides(norm_of_shift(shift, tuple[i]), target);
}

}  // namespace ffr

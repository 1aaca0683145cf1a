#include <doctest.h>

#include "ffr/error.hpp"
#include "ffr/funcfield.hpp"
#include "ffr/rng.hpp"

using namespace ffr;

namespace {

Poly rand_poly(FieldPtr f, int max_deg, SplitMix64& rng) {
    std::vector<u64> c(max_deg + 1);
    for (auto& x : c) x = rng.below(f->cardinality());
    return Poly(f, c);
}

Poly T(FieldPtr f) { return Poly::monomial(f, 1); }

Errc error_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an ffr::Error");
    return Errc::InvalidArgument;
}

// Root search with a generous degree cap, independent of the bounded search.
bool has_polynomial_root(const BivarPoly& g, int cap) {
    FieldPtr f = g.field();
    u64 total = 1;
    for (int i = 0; i <= cap; ++i) total *= f->cardinality();
    for (u64 idx = 0; idx < total; ++idx)
        if (g.eval(Poly::from_index(f, idx, cap + 1)).is_zero()) return true;
    return false;
}

}  // namespace

TEST_CASE("RatFunc normal form") {
    auto F2 = Field::prime(2);
    RatFunc r(T(F2) * T(F2) + T(F2), T(F2));
    CHECK(r.is_polynomial());
    CHECK(r.num() == T(F2) + Poly::one(F2));
    auto F3 = Field::prime(3);
    RatFunc s(Poly(F3, {1}), Poly(F3, {0, 2}));  // 1 / (2T) = 2 / T
    CHECK(s.den() == T(F3));
    CHECK(s.num() == Poly(F3, {2}));
    CHECK(error_of([&] { RatFunc(Poly::one(F3), Poly(F3)); }) == Errc::DivisionByZero);
    CHECK(error_of([&] { RatFunc::zero(F3).inv(); }) == Errc::DivisionByZero);
}

TEST_CASE("RatFunc field axioms") {
    SplitMix64 rng(1);
    for (FieldPtr F : {Field::prime(2), Field::prime(3), Field::prime(5)}) {
        for (int i = 0; i < 200; ++i) {
            auto mk = [&] {
                Poly d = rand_poly(F, 3, rng);
                if (d.is_zero()) d = Poly::one(F);
                return RatFunc(rand_poly(F, 3, rng), d);
            };
            RatFunc a = mk(), b = mk(), c = mk();
            CHECK((a + b) * c == a * c + b * c);
            CHECK(a - a == RatFunc::zero(F));
            if (!a.is_zero()) CHECK(a * a.inv() == RatFunc::one(F));
            CHECK(gcd(a.num(), a.den()).is_one());
            CHECK(a.den().is_monic());
        }
    }
}

TEST_CASE("ratpoly xgcd identity") {
    SplitMix64 rng(2);
    auto F = Field::prime(3);
    for (int i = 0; i < 50; ++i) {
        RatPoly a, b;
        for (int j = 0; j < 3; ++j) a.push_back(RatFunc(rand_poly(F, 2, rng)));
        for (int j = 0; j < 4; ++j) b.push_back(RatFunc(rand_poly(F, 2, rng)));
        ratpoly::trim(a);
        ratpoly::trim(b);
        if (a.empty() || b.empty()) continue;
        auto x = ratpoly::xgcd(a, b, F);
        CHECK(ratpoly::add(ratpoly::mul(x.s, a), ratpoly::mul(x.t, b)) == x.g);
        CHECK(ratpoly::divmod(a, x.g).second.empty());
        CHECK(ratpoly::divmod(b, x.g).second.empty());
    }
}

TEST_CASE("irreducibility over F_q(T)") {
    auto F2 = Field::prime(2);
    auto F3 = Field::prime(3);
    CHECK(irreducible_over_rational_functions(BivarPoly::parse(F2, "0,1|0|1")));      // Z^2 + T
    CHECK_FALSE(irreducible_over_rational_functions(BivarPoly::parse(F2, "0,0,1|0|1")));  // Z^2 + T^2
    CHECK(irreducible_over_rational_functions(BivarPoly::parse(F2, "1|1|1")));        // Z^2 + Z + 1
    CHECK_FALSE(irreducible_over_rational_functions(BivarPoly::parse(F3, "2,1,2|0|1")));  // Z^2 - (T+1)^2
    CHECK(error_of([&] { irreducible_over_rational_functions(BivarPoly::parse(F2, "1|0|0,1")); }) == Errc::NotMonic);
}

TEST_CASE("irreducibility agrees with root search for d <= 3") {
    SplitMix64 rng(3);
    int reducible = 0;
    for (FieldPtr F : {Field::prime(2), Field::prime(3)}) {
        for (int i = 0; i < 120; ++i) {
            const int d = 2 + static_cast<int>(rng.below(2));
            std::vector<Poly> c;
            for (int j = 0; j < d; ++j) c.push_back(rand_poly(F, static_cast<int>(rng.below(3)), rng));
            if (i % 3 == 0) {  // plant a root r: g = (Z - r) h
                Poly r = rand_poly(F, 1, rng);
                BivarPoly h(F, {rand_poly(F, 1, rng), d == 3 ? rand_poly(F, 1, rng) : Poly::one(F), Poly::one(F)});
                if (d == 2) h = BivarPoly(F, {rand_poly(F, 1, rng), Poly::one(F)});
                BivarPoly g = BivarPoly(F, {-r, Poly::one(F)}) * h;
                c = std::vector<Poly>(g.coeffs().begin(), g.coeffs().end() - 1);
            }
            c.push_back(Poly::one(F));
            BivarPoly g(F, c);
            const bool irr = irreducible_over_rational_functions(g);
            CHECK(irr == !has_polynomial_root(g, 4));
            reducible += !irr;
        }
    }
    CHECK(reducible > 20);
}

TEST_CASE("inverse of Z + a matches synthetic division") {
    SplitMix64 rng(4);
    for (FieldPtr F : {Field::prime(2), Field::prime(3)}) {
        for (int i = 0; i < 40; ++i) {
            BivarPoly g(F, {rand_poly(F, 2, rng) + T(F), rand_poly(F, 1, rng), rand_poly(F, 1, rng), Poly::one(F)});
            AlgebraicExtension ext(g);
            const Poly a = rand_poly(F, 2, rng);
            // g(Z) = (Z + a) h(Z) + g(-a)
            const Poly ga = g.eval(-a);
            if (ga.is_zero()) continue;
            std::vector<Poly> h(3, Poly(F));
            Poly carry = Poly::one(F);
            h[2] = carry;
            for (int j = 2; j >= 1; --j) {
                carry = g.coeff(j) - a * carry;
                h[j - 1] = carry;
            }
            RatPoly expect;
            for (auto& hj : h) expect.push_back(RatFunc(-hj, ga));
            ratpoly::trim(expect);
            CHECK(ext.inv({RatFunc(a), RatFunc::one(F)}) == expect);
        }
    }
}

TEST_CASE("count_Nk_function_field examples") {
    auto F2 = Field::prime(2);
    CHECK(count_Nk_function_field(AlgebraicShift::rational(Poly(F2), Poly::one(F2)), 1, 1) == 1);
    CHECK(count_Nk_function_field(AlgebraicShift::rational(T(F2), Poly::one(F2)), 1, 1) == 2);
    AlgebraicShift sqrtT{BivarPoly::parse(F2, "0,1|0|1"), Poly::one(F2)};
    CHECK(count_Nk_function_field(sqrtT, 1, 1) == 2);
    CHECK(count_Nk_function_field_oracle(sqrtT, 1, 1) == 2);
    AlgebraicShift bad{BivarPoly::parse(F2, "0,0,1|0|1"), Poly::one(F2)};
    CHECK(error_of([&] { count_Nk_function_field(bad, 1, 1); }) == Errc::ReducibleMinimalPolynomial);
}

TEST_CASE("function-field count matches the oracle") {
    SplitMix64 rng(5);
    for (FieldPtr F : {Field::prime(2), Field::prime(3)}) {
        int done = 0;
        while (done < 12) {
            const int d = 1 + static_cast<int>(rng.below(3));
            std::vector<Poly> c;
            for (int j = 0; j < d; ++j) c.push_back(rand_poly(F, 2, rng));
            c.push_back(Poly::one(F));
            Poly mu = rand_poly(F, 1, rng);
            if (mu.is_zero()) continue;
            AlgebraicShift s{BivarPoly(F, c), mu};
            if (!irreducible_over_rational_functions(s.g)) continue;
            for (int m = 1; m <= 2; ++m)
                for (int k = 1; k <= 2; ++k) {
                    if (F->cardinality() == 3 && m == 2 && k == 2 && d == 3) continue;
                    CHECK(count_Nk_function_field(s, m, k) == count_Nk_function_field_oracle(s, m, k));
                }
            ++done;
        }
    }
}

#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "ffr/error.hpp"
#include "ffr/factor.hpp"
#include "ffr/field.hpp"
#include "ffr/poly.hpp"
#include "ffr/rng.hpp"

using namespace ffr;

namespace {

Poly P(FieldPtr f, std::vector<u64> c) { return Poly(f, std::move(c)); }

FieldPtr f4() { return Field::extend(Field::prime(2), P(Field::prime(2), {1, 1, 1})); }

template <class Fn>
Errc error_of(Fn&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an ffr::Error");
    return Errc::InvalidArgument;
}

// All monic polynomials of exact degree d over f.
std::vector<Poly> monic_of_degree(FieldPtr f, int d) {
    std::vector<Poly> out;
    const u64 q = f->cardinality();
    u64 total = 1;
    for (int i = 0; i < d; ++i) total *= q;
    for (u64 idx = 0; idx < total; ++idx) {
        Poly low = Poly::from_index(f, idx, d);
        out.push_back(low + Poly::monomial(f, d));
    }
    return out;
}

std::uint64_t brute_divisor_count(const Poly& f) {
    std::uint64_t n = 0;
    for (int d = 0; d <= f.degree(); ++d)
        for (auto& g : monic_of_degree(f.field(), d))
            if (divides(g, f)) ++n;
    return n;
}

// Schoolbook product modulo psi done on raw coefficient vectors.
u64 naive_mul(FieldPtr ext, u64 a, u64 b) {
    Poly pa(ext->base(), ext->digits(a)), pb(ext->base(), ext->digits(b));
    Poly r = (pa * pb) % ext->modulus();
    std::vector<u64> d(ext->degree(), 0);
    for (int i = 0; i <= r.degree(); ++i) d[i] = r.coeff(i);
    return ext->from_digits(d);
}

// First monic cubic over f with no root; a rootless cubic is irreducible.
Poly rootless_cubic(FieldPtr f) {
    for (auto& g : monic_of_degree(f, 3)) {
        bool root = false;
        for (u64 x = 0; x < f->cardinality() && !root; ++x) root = g.eval(x) == 0;
        if (!root) return g;
    }
    throw std::logic_error("no rootless cubic");
}

}  // namespace

TEST_CASE("field_make_prime") {
    CHECK(Field::prime(2)->cardinality() == 2);
    CHECK(Field::prime(7)->characteristic() == 7);
    CHECK(Field::prime(7) == Field::prime(7));
    CHECK(error_of([] { Field::prime(6); }) == Errc::NotPrime);
    CHECK(error_of([] { Field::prime(1); }) == Errc::NotPrime);
}

TEST_CASE("field_extend") {
    auto F2 = Field::prime(2);
    auto F4 = f4();
    CHECK(F4->cardinality() == 4);
    CHECK(F4->degree() == 2);
    CHECK(F4->characteristic() == 2);
    CHECK(error_of([&] { Field::extend(F2, P(F2, {0, 0, 1})); }) == Errc::NotIrreducible);

    // -1 is a non-residue mod 3, so T^2 + 1 is irreducible over F_3.
    auto F3 = Field::prime(3);
    bool has_root = false;
    for (u64 x = 0; x < 3; ++x) has_root |= (x * x + 1) % 3 == 0;
    CHECK_FALSE(has_root);
    auto F9 = Field::extend(F3, P(F3, {1, 0, 1}));
    CHECK(F9->cardinality() == 9);

    CHECK(error_of([&] { Field::extend(F3, P(F3, {1, 0, 2})); }) == Errc::NotMonic);
    auto F16 = Field::extend(F4, P(F4, {2, 1, 1}));  // T^2 + T + u over F_4
    CHECK(F16->cardinality() == 16);
    CHECK(F16->depth() == 2);
    CHECK(error_of([&] { Field::extend(F16, P(F16, {F16->generator(), 1, 1})); }) == Errc::TowerTooDeep);
}

TEST_CASE("invert") {
    auto F4 = f4();
    const u64 t = F4->generator();  // code 2 = T
    CHECK(F4->inv(t) == 3);         // T + 1
    CHECK(F4->mul(t, 3) == 1);
    CHECK(F4->inv(1) == 1);
    CHECK(error_of([&] { F4->inv(0); }) == Errc::DivisionByZero);
    CHECK(error_of([] { Field::prime(5)->inv(0); }) == Errc::DivisionByZero);
}

TEST_CASE("trace_to_prime") {
    auto F4 = f4();
    CHECK(F4->trace(F4->generator()) == 1);
    CHECK(F4->trace(0) == 0);
    auto F3 = Field::prime(3);
    for (auto [p, psi] : std::vector<std::pair<u64, std::vector<u64>>>{
             {2, {1, 0, 1, 0, 0, 1}}, {3, {1, 2, 0, 0, 0, 1}}, {5, {2, 0, 1}}, {3, {2, 0, 1, 0, 0, 0, 0, 1}}}) {
        auto Fp = Field::prime(p);
        auto F = Field::extend(Fp, P(Fp, psi));
        CHECK(F->trace(1) == static_cast<u64>(F->degree()) % p);
        for (u64 x = 0; x < std::min<u64>(F->cardinality(), 500); ++x)
            CHECK(F->trace(x) == F->trace_by_frobenius(x));
    }
    (void)F3;
}

TEST_CASE("trace is F_p-linear") {
    SplitMix64 rng(11);
    auto F4 = f4();
    std::vector<FieldPtr> fields{
        Field::extend(Field::prime(3), parse_poly(Field::prime(3), "1,2,0,0,0,1")),
        Field::extend(F4, P(F4, {2, 1, 1})),
        Field::extend(Field::prime(7), parse_poly(Field::prime(7), "3,1,1")),
    };
    for (FieldPtr F : fields) {
        const u64 p = F->characteristic();
        for (int i = 0; i < 200; ++i) {
            u64 a = rng.below(p), x = rng.below(F->cardinality()), y = rng.below(F->cardinality());
            u64 lhs = F->trace(F->add(F->mul(a, x), y));
            u64 rhs = (a * F->trace(x) + F->trace(y)) % p;
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("field axioms on small fields") {
    auto F2 = Field::prime(2);
    auto F3 = Field::prime(3);
    auto F4 = f4();
    std::vector<FieldPtr> fields{
        Field::extend(F2, P(F2, {1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1})),  // T^10 + T^3 + 1, size 1024
        Field::extend(F3, P(F3, {2, 1, 0, 0, 0, 0, 1})),              // size 729
        Field::extend(F4, P(F4, {2, 1, 1})),                          // tower, size 16
        Field::extend(F4, auto_irreducible(F4, 5, 3)),                // tower, size 1024
        Field::extend(F4, rootless_cubic(F4)),                        // tower, size 64
        Field::extend(Field::prime(31), parse_poly(Field::prime(31), "1,0,1")),  // 31 = 3 mod 4
        Field::extend(F2, P(F2, {1, 0, 1, 1, 1, 0, 0, 0, 1})),        // size 256
    };
    SplitMix64 rng(5);
    for (FieldPtr F : fields) {
        CAPTURE(F->describe());
        REQUIRE(F->cardinality() <= 1024);
        for (int i = 0; i < 300; ++i) {
            u64 a = rng.below(F->cardinality()), b = rng.below(F->cardinality()), c = rng.below(F->cardinality());
            CHECK(F->mul(F->mul(a, b), c) == F->mul(a, F->mul(b, c)));
            CHECK(F->mul(a, b) == F->mul(b, a));
            CHECK(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
            CHECK(F->mul(a, b) == naive_mul(F, a, b));
            CHECK(F->sub(F->add(a, b), b) == a);
        }
        if (F->cardinality() <= 256)
            for (u64 x = 1; x < F->cardinality(); ++x) CHECK(F->mul(x, F->inv(x)) == 1);
    }
}

TEST_CASE("poly_irreducible_test") {
    auto F2 = Field::prime(2);
    CHECK(poly_irreducible_test(P(F2, {1, 1, 1})));
    CHECK_FALSE(poly_irreducible_test(P(F2, {1, 0, 1})));
    // T^3 + T + 1 has no roots in F_2 and degree 3.
    CHECK(P(F2, {1, 1, 0, 1}).eval(0) != 0);
    CHECK(P(F2, {1, 1, 0, 1}).eval(1) != 0);
    CHECK(poly_irreducible_test(P(F2, {1, 1, 0, 1})));
    // (T^2+T+1)^2 = T^4+T^2+1 has no roots but is reducible.
    CHECK_FALSE(poly_irreducible_test(P(F2, {1, 0, 1, 0, 1})));
    CHECK_FALSE(poly_irreducible_test(P(F2, {1, 0, 1, 1, 0, 0, 1})));
    CHECK(poly_irreducible_test(P(F2, {1, 1, 0, 0, 0, 0, 1})));
}

TEST_CASE("irreducible test matches brute-force factor search") {
    for (u64 p : {2ULL, 3ULL}) {
        auto F = Field::prime(p);
        for (int d = 1; d <= 5; ++d) {
            for (auto& f : monic_of_degree(F, d)) {
                bool reducible = false;
                for (int e = 1; e <= d / 2 && !reducible; ++e)
                    for (auto& g : monic_of_degree(F, e))
                        if (divides(g, f)) {
                            reducible = true;
                            break;
                        }
                CHECK(poly_irreducible_test(f) == !reducible);
            }
        }
    }
}

TEST_CASE("poly_factor examples") {
    auto F2 = Field::prime(2);
    Poly T = P(F2, {0, 1}), T1 = P(F2, {1, 1});
    auto f1 = poly_factor(T * T * T1);
    REQUIRE(f1.size() == 2);
    CHECK(f1[0] == Factor{T, 2});
    CHECK(f1[1] == Factor{T1, 1});

    Poly psi = P(F2, {1, 0, 1, 0, 0, 1});
    auto f2 = poly_factor(psi);
    REQUIRE(f2.size() == 1);
    CHECK(f2[0] == Factor{psi, 1});

    // T^4 + T^2 = (T(T+1))^2 in characteristic 2.
    CHECK(pow(T * T1, 2) == P(F2, {0, 0, 1, 0, 1}));
    auto f3 = poly_factor(P(F2, {0, 0, 1, 0, 1}));
    REQUIRE(f3.size() == 2);
    CHECK(f3[0] == Factor{T, 2});
    CHECK(f3[1] == Factor{T1, 2});

    CHECK(error_of([&] { poly_factor(Poly(F2)); }) == Errc::ZeroPolynomial);
}

TEST_CASE("poly_factor recomposes random polynomials") {
    auto F4 = f4();
    SplitMix64 rng(2024);
    for (FieldPtr F : {Field::prime(2), Field::prime(3), Field::prime(5), F4}) {
        const int trials = F == F4 ? 200 : 1000;
        for (int i = 0; i < trials; ++i) {
            int deg = static_cast<int>(rng.below(13));
            std::vector<u64> c(deg + 1);
            for (auto& x : c) x = rng.below(F->cardinality());
            c[deg] = 1 + rng.below(F->cardinality() - 1);
            Poly f(F, c);
            auto facs = poly_factor(f, rng.next());
            Poly prod = Poly::constant(F, f.lead());
            for (auto& fac : facs) {
                CHECK(fac.poly.is_monic());
                CHECK(poly_irreducible_test(fac.poly));
                prod = prod * pow(fac.poly, static_cast<unsigned>(fac.multiplicity));
            }
            CHECK(prod == f);
            CHECK(std::is_sorted(facs.begin(), facs.end(),
                                 [](const Factor& a, const Factor& b) { return a.poly < b.poly; }));
        }
    }
}

TEST_CASE("poly_factor is seed-stable") {
    auto F3 = Field::prime(3);
    Poly f = parse_poly(F3, "1,2,0,1,1,2,0,1,1,1,2,1");
    auto a = poly_factor(f, 7), b = poly_factor(f, 7), c = poly_factor(f, 8);
    CHECK(a == b);
    CHECK(a == c);  // canonical ordering makes the result seed-independent
}

TEST_CASE("divisor_count") {
    auto F2 = Field::prime(2);
    Poly T = P(F2, {0, 1}), T1 = P(F2, {1, 1});
    CHECK(brute_divisor_count(T * T * T1) == 6);
    CHECK(divisor_count(T * T * T1) == 6);
    CHECK(divisor_count(Poly::one(F2)) == 1);
    CHECK(divisor_count(P(F2, {1, 1, 0, 0, 0, 0, 0, 1})) == 2);
    CHECK(error_of([&] { divisor_count(Poly(F2)); }) == Errc::ZeroPolynomial);
}

TEST_CASE("divisor_count equals brute force up to degree 6") {
    for (u64 p : {2ULL, 3ULL}) {
        auto F = Field::prime(p);
        for (int d = 0; d <= 6; ++d) {
            for (auto& f : monic_of_degree(F, d)) CHECK(divisor_count(f) == brute_divisor_count(f));
        }
    }
}

TEST_CASE("maximal divisor count is nondecreasing in degree") {
    auto F2 = Field::prime(2);
    std::uint64_t prev = 0;
    for (int s = 1; s <= 10; ++s) {
        std::uint64_t best = 0;
        for (auto& f : monic_of_degree(F2, s)) best = std::max(best, divisor_count(f));
        MESSAGE("deg " << s << " max divisors " << best);
        CHECK(best >= prev);
        prev = best;
    }
}

TEST_CASE("text format") {
    auto F4 = f4();
    CHECK(F4->format(F4->generator()) == "0,1");
    CHECK(F4->parse("a") == F4->generator());
    CHECK(F4->parse("1") == 1);
    CHECK(F4->parse("a^2") == 3);
    auto F64 = Field::extend(F4, rootless_cubic(F4));
    CHECK(F64->format(F64->generator()) == "0,0;1,0;0,0");
    CHECK(F64->parse("0,0;1,0") == F64->generator());
    CHECK(format_poly(P(Field::prime(2), {1, 1, 1})) == "1,1,1");
    CHECK(format_poly(P(F4, {2, 1, 1})) == "0,1;1,0;1,0");
    CHECK(parse_poly(F4, "0,1;1,0;1,0") == P(F4, {2, 1, 1}));
    SplitMix64 rng(9);
    for (FieldPtr F : {F4, F64, Field::prime(7)})
        for (int i = 0; i < 100; ++i) {
            u64 x = rng.below(F->cardinality());
            CHECK(F->parse(F->format(x)) == x);
        }
}

TEST_CASE("auto_irreducible") {
    auto F2 = Field::prime(2);
    CHECK(auto_irreducible(F2, 2, 123) == P(F2, {1, 1, 1}));
    Poly a = auto_irreducible(F2, 5, 1), b = auto_irreducible(F2, 5, 1);
    CHECK(a == b);
    CHECK(poly_irreducible_test(a));
    CHECK(a.str() == "1,1,0,1,1,1");
    // Trial division by every polynomial of degree 1 and 2.
    for (u64 idx = 2; idx < 8; ++idx) CHECK_FALSE(divides(Poly::from_index(F2, idx, 3), a));
    CHECK(error_of([&] { auto_irreducible(F2, 1, 1); }) == Errc::InvalidArgument);
}

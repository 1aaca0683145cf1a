#include <doctest.h>

#include <cmath>
#include <complex>

#include "ffr/charsum.hpp"
#include "ffr/error.hpp"
#include "ffr/factor.hpp"
#include "ffr/rng.hpp"

using namespace ffr;

namespace {

FieldPtr make(u64 p, const char* psi) { return Field::extend(Field::prime(p), parse_poly(Field::prime(p), psi)); }

FieldPtr ext(u64 p, int n) {
    if (n == 1) return Field::prime(p);
    return Field::extend(Field::prime(p), auto_irreducible(Field::prime(p), n, 99));
}

Errc error_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an ffr::Error");
    return Errc::InvalidArgument;
}

std::vector<FieldPtr> small_fields() {
    auto F4 = make(2, "1,1,1");
    return {Field::prime(5), Field::prime(7), F4, ext(2, 3), ext(3, 2), ext(2, 4), ext(5, 2), ext(3, 3), ext(7, 2),
            ext(3, 4), Field::extend(F4, auto_irreducible(F4, 2, 5))};
}

}  // namespace

TEST_CASE("char_eval examples") {
    auto F4 = make(2, "1,1,1");
    AdditiveCharacter triv{F4, 0}, chi{F4, 1};
    for (u64 x = 0; x < 4; ++x) CHECK(char_eval(triv, x) == 0);
    CHECK(char_eval(chi, F4->generator()) == 1);
    CHECK(char_eval(chi, 0) == 0);
}

TEST_CASE("characters are homomorphisms") {
    for (FieldPtr F : small_fields()) {
        REQUIRE(F->cardinality() <= 81);
        const u64 p = F->characteristic();
        for (u64 beta : {u64{1}, F->cardinality() - 1, F->cardinality() / 2}) {
            AdditiveCharacter chi{F, beta};
            for (u64 x = 0; x < F->cardinality(); ++x)
                for (u64 y = 0; y < F->cardinality(); ++y) CHECK(chi(F->add(x, y)) == (chi(x) + chi(y)) % p);
        }
    }
}

TEST_CASE("orthogonality of nontrivial characters") {
    for (u64 p : {2ULL, 3ULL, 5ULL})
        for (int n : {2, 3, 5}) {
            auto F = ext(p, n);
            if (F->cardinality() > 243) continue;
            for (u64 beta = 1; beta < F->cardinality(); ++beta) {
                CharAccumulator acc(p);
                AdditiveCharacter chi{F, beta};
                for (u64 x = 0; x < F->cardinality(); ++x) acc.add(chi(x));
                CHECK(acc.is_zero());
            }
        }
}

TEST_CASE("multilinear_sum examples") {
    auto F = make(3, "1,2,0,0,0,1");
    AdditiveCharacter chi{F, F->generator()};
    std::vector<u64> nonzero;
    for (u64 x = 1; x < F->cardinality(); ++x) nonzero.push_back(x);
    CHECK(multilinear_sum({nonzero}, chi).integer_value() == -1);
    AdditiveCharacter triv{F, 0};
    auto t = multilinear_sum({{1, 2}, {3, 4, 5}}, triv);
    CHECK(t.counts()[0] == 6);
    CHECK(t.terms() == 6);
    auto one = multilinear_sum({{1}, {1}}, chi);
    CHECK(one.counts()[chi(1)] == 1);
    CHECK(one.terms() == 1);
    CHECK(error_of([&] { multilinear_sum({{0, 1}}, chi); }) == Errc::InvalidArgument);
}

TEST_CASE("kloosterman_sum examples") {
    for (auto [p, n] : std::vector<std::pair<u64, int>>{{2, 5}, {3, 3}, {5, 2}, {2, 7}, {7, 2}}) {
        auto F = ext(p, n);
        auto full = Interval::make(F, 0, n, true);
        for (u64 beta : {u64{1}, F->generator(), F->cardinality() - 1}) {
            auto r = kloosterman_sum({full}, {}, AdditiveCharacter{F, beta});
            CHECK(r.acc.integer_value() == -1);
        }
        auto triv = kloosterman_sum({full}, {}, AdditiveCharacter{F, 0});
        CHECK(triv.acc.integer_value() == static_cast<long long>(full.cardinality()));
    }
}

TEST_CASE("pinned d=2 instance over F_32") {
    auto F = make(2, "1,0,1,0,0,1");
    const u64 g = F->parse("a^3");
    auto iv = Interval::make(F, g, 1, true);
    auto r = kloosterman_sum({iv, iv}, {}, AdditiveCharacter{F, 1});
    // Oracle: the four products (g + a)(g + b), a, b in F_2, through trace_by_frobenius.
    std::vector<u64> expect(2, 0);
    for (u64 a = 0; a < 2; ++a)
        for (u64 b = 0; b < 2; ++b) expect[F->trace_by_frobenius(F->inv(F->mul(F->add(g, a), F->add(g, b))))]++;
    CHECK(r.acc.counts() == expect);
    CHECK(r.acc.counts() == std::vector<u64>{4, 0});
    CHECK(r.acc.json() == "{\"p\":2,\"counts\":[4,0]}");
}

TEST_CASE("triangle inequality and reindexing identity") {
    SplitMix64 rng(12);
    for (int i = 0; i < 40; ++i) {
        auto F = i % 2 ? make(2, "1,0,1,0,0,1") : make(3, "1,2,0,0,0,1");
        const int d = 2 + static_cast<int>(rng.below(2));
        std::vector<Interval> ivs;
        std::vector<WeightTable> ws;
        for (int j = 0; j < d; ++j) {
            ivs.push_back(Interval::make(F, rng.below(F->cardinality()), 1 + static_cast<int>(rng.below(2)), true));
            ws.push_back(i % 4 < 2 ? WeightTable::random_roots(ivs.back(), F->characteristic(), rng.next())
                                   : WeightTable::random_disc(ivs.back(), rng.next()));
        }
        AdditiveCharacter chi{F, 1 + rng.below(F->cardinality() - 1)};
        auto r = kloosterman_sum(ivs, ws, chi);
        CHECK(r.magnitude <= static_cast<double>(r.trivial_bound) * (1 + 1e-9));
        std::vector<std::vector<u64>> sets;
        for (auto& iv : ivs) {
            std::vector<u64> s;
            iv.for_each([&](u64 x) { s.push_back(F->inv(x)); });
            sets.push_back(s);
        }
        CHECK(multilinear_sum(sets, chi) == kloosterman_sum(ivs, {}, chi).acc);
    }
}

TEST_CASE("float path is thread-count independent") {
    auto F = make(2, "1,1,0,0,0,0,0,1");
    auto iv = Interval::make(F, F->parse("a^5"), 4, true);
    std::vector<WeightTable> ws{WeightTable::random_disc(iv, 1), WeightTable::random_disc(iv, 2)};
    RunOptions one, four;
    four.threads = 4;
    auto a = kloosterman_sum({iv, iv}, ws, AdditiveCharacter{F, 3}, one);
    auto b = kloosterman_sum({iv, iv}, ws, AdditiveCharacter{F, 3}, four);
    CHECK(a.value == b.value);
}

TEST_CASE("kloosterman errors") {
    auto F = make(2, "1,0,1,0,0,1");
    AdditiveCharacter chi{F, 1};
    CHECK(error_of([&] { kloosterman_sum({Interval::make(F, 0, 2, false)}, {}, chi); }) == Errc::ZeroInInterval);
    // Not punctured but 0 is outside gamma + V_m: accepted.
    CHECK(kloosterman_sum({Interval::make(F, F->parse("a^3"), 1, false)}, {}, chi).trivial_bound == 2);
    RunOptions o;
    o.budget.enumeration = 10;
    auto iv = Interval::make(F, 0, 3, true);
    CHECK(error_of([&] { kloosterman_sum({iv, iv}, {}, chi, o); }) == Errc::BudgetExceeded);
    WeightTable w;
    CHECK(error_of([&] { w.set_value(1, {1.0, 1.0}); }) == Errc::InvalidArgument);
}

TEST_CASE("accumulator magnitude") {
    CharAccumulator a(5);
    const u64 big = 1ULL << 38;
    for (u64 j = 0; j < 5; ++j) a.add(j, big);
    a.add(2);
    CHECK(a.magnitude() == doctest::Approx(1.0).epsilon(1e-12));
    CharAccumulator b(3);
    b.add(0, 5);
    b.add(1, 2);
    // 5 + 2 zeta_3 = 4 + i sqrt(3)
    CHECK(b.magnitude() == doctest::Approx(std::sqrt(19.0)).epsilon(1e-12));
}

TEST_CASE("subfield_intersection_max") {
    auto F = make(3, "1,2,0,0,0,1");
    CHECK(subfield_intersection_max(F, std::vector<u64>{0, 1, 2}) == 3);
    CHECK(subfield_intersection_max(F, std::vector<u64>{F->parse("a^4")}) == 1);
    const u64 a = F->generator();
    CHECK(subfield_intersection_max(F, std::vector<u64>{a, F->add(a, a), F->mul(a, a)}) == 2);
    CHECK(error_of([&] { subfield_intersection_max(ext(2, 4), std::vector<u64>{1}); }) == Errc::CompositeExtensionDegree);

    // Oracle: max over every t of #(A cap t F_p).
    SplitMix64 rng(13);
    for (FieldPtr G : {F, ext(2, 5), ext(5, 3), ext(7, 2)}) {
        const u64 p = G->characteristic();
        for (int i = 0; i < 20; ++i) {
            std::vector<u64> A;
            for (int j = 0; j < 12; ++j) A.push_back(rng.below(G->cardinality()));
            u64 best = 0;
            for (u64 t = 1; t < G->cardinality(); ++t) {
                u64 hits = 0;
                for (u64 c = 0; c < p; ++c) hits += std::find(A.begin(), A.end(), G->mul(t, c)) != A.end();
                best = std::max(best, hits);
            }
            CHECK(subfield_intersection_max(G, A) == best);
        }
    }
}

TEST_CASE("admissible_k_range") {
    auto a = admissible_k_range(4, 1, 1000000000);
    CHECK(a.upper == doctest::Approx(1.0));
    CHECK_FALSE(a.feasible);
    auto b = admissible_k_range(49, 1, 3833025);
    CHECK(b.lower == doctest::Approx(2.0));
    CHECK(b.upper == doctest::Approx(3.5));
    CHECK(b.feasible);
    CHECK(b.k_min == 3);
    CHECK(b.k_max == 3);
    auto c = admissible_k_range(10, 10, 1);
    CHECK(c.upper <= 0.5);
    CHECK_FALSE(c.feasible);
    // Exact brute force on small parameters.
    for (u64 n = 1; n <= 60; ++n)
        for (u64 m = 1; m <= 4; ++m)
            for (u64 d = 1; d <= 3; ++d) {
                const u64 omega = 3;
                auto r = admissible_k_range(n, m, d, omega);
                bool any = false;
                for (u64 k = 1; k <= 10; ++k) any |= (k * d * m > omega * n) && (4 * k * k * m < n);
                CHECK(r.feasible == any);
            }
}

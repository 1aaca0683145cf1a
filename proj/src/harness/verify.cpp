#include <algorithm>
#include <functional>
#include <tuple>

#include "commands.hpp"
#include "ffr/charsum.hpp"
#include "ffr/counting.hpp"
#include "ffr/error.hpp"
#include "ffr/factor.hpp"
#include "ffr/funcfield.hpp"
#include "ffr/interval.hpp"
#include "ffr/prooflab.hpp"
#include "ffr/text.hpp"

namespace ffr::harness {

namespace {

struct Tally {
    u64 cases = 0;
    u64 passed = 0;
    void check(bool ok) {
        ++cases;
        passed += ok;
    }
    Record cert(const std::string& op, const std::string& params, std::uint64_t seed) const {
        return certificate(op, params, cases, passed, cases > 0 && passed == cases, seed);
    }
};

FieldPtr ext(u64 p, int n) {
    FieldPtr P = Field::prime(p);
    return n == 1 ? P : Field::extend(P, auto_irreducible(P, n, 17));
}

Poly rand_poly(FieldPtr f, int max_deg, SplitMix64& rng) {
    std::vector<u64> c(max_deg + 1);
    for (auto& x : c) x = rng.below(f->cardinality());
    return Poly(f, std::move(c));
}

std::vector<Record> suite_algebra(const Context& ctx) {
    std::vector<Record> out;
    SplitMix64 rng(instance_seed(ctx.seed, "verify algebra"));
    FieldPtr F4 = ext(2, 2);
    std::vector<FieldPtr> fields = {Field::prime(7), F4, ext(2, 3), ext(3, 2), ext(2, 4), ext(5, 2), ext(3, 3),
                                    Field::extend(F4, auto_irreducible(F4, 3, 17)), ext(2, 8)};
    Tally axioms, inverses, trace;
    for (FieldPtr F : fields) {
        const u64 q = F->cardinality();
        for (int i = 0; i < 200; ++i) {
            const u64 a = rng.below(q), b = rng.below(q), c = rng.below(q);
            axioms.check(F->mul(F->mul(a, b), c) == F->mul(a, F->mul(b, c)) && F->mul(a, b) == F->mul(b, a) &&
                         F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
            const u64 s = F->from_int(static_cast<std::int64_t>(rng.below(F->characteristic())));
            trace.check(F->trace(F->add(F->mul(s, a), b)) ==
                        F->prime_field()->add(F->prime_field()->mul(s, F->trace(a)), F->trace(b)));
            trace.check(F->trace(a) == F->trace_by_frobenius(a));
        }
        if (q <= 256)
            for (u64 x = 1; x < q; ++x) inverses.check(F->mul(x, F->inv(x)) == 1);
    }
    out.push_back(axioms.cert("field-axioms", "9 fields x 200 random triples", ctx.seed));
    out.push_back(inverses.cert("inverse-exhaustive", "fields of size <= 256", ctx.seed));
    out.push_back(trace.cert("trace-linearity", "9 fields x 200 random pairs", ctx.seed));

    Tally recompose;
    for (int i = 0; i < 1000; ++i) {
        FieldPtr P = Field::prime(std::vector<u64>{2, 3, 5}[i % 3]);
        Poly f = rand_poly(P, 1 + static_cast<int>(rng.below(12)), rng);
        if (f.is_zero()) continue;
        Poly prod = Poly::constant(P, f.lead());
        for (auto& fac : poly_factor(f, ctx.seed)) {
            prod = prod * pow(fac.poly, fac.multiplicity);
            if (!poly_irreducible_test(fac.poly) || !fac.poly.is_monic()) prod = Poly(P);
        }
        recompose.check(prod == f);
    }
    out.push_back(recompose.cert("factor-recompose", "1000 random f, deg <= 12, p in {2,3,5}", ctx.seed));

    Tally brute;
    for (u64 p : {2, 3}) {
        FieldPtr P = Field::prime(p);
        for (int s = 0; s <= 4; ++s) {
            const u64 count = *checked_pow(p, s);
            for (u64 idx = 0; idx < count; ++idx) {
                Poly f = Poly::from_index(P, idx, s) + Poly::monomial(P, s);
                u64 divisors = 0;
                for (int e = 0; e <= s; ++e) {
                    const u64 ce = *checked_pow(p, e);
                    for (u64 j = 0; j < ce; ++j)
                        divisors += divides(Poly::from_index(P, j, e) + Poly::monomial(P, e), f);
                }
                brute.check(divisors == divisor_count(f));
            }
        }
    }
    out.push_back(brute.cert("divisor-count-brute", "monic f, deg <= 4, p in {2,3}", ctx.seed));

    Tally monotone;
    u64 prev = 0;
    FieldPtr F2 = Field::prime(2);
    for (int s = 1; s <= 8; ++s) {
        u64 best = 0;
        for (u64 idx = 0; idx < (u64{1} << s); ++idx)
            best = std::max(best, divisor_count(Poly::from_index(F2, idx, s) + Poly::monomial(F2, s)));
        monotone.check(best >= prev);
        prev = best;
    }
    out.push_back(monotone.cert("divisor-max-monotone", "F_2, s = 1..8", ctx.seed));
    return out;
}

std::vector<Record> suite_intervals(const Context& ctx) {
    Tally t;
    for (auto [p, n] : std::vector<std::pair<u64, int>>{{2, 2}, {2, 5}, {3, 3}, {5, 2}}) {
        FieldPtr F = ext(p, n);
        for (u64 gamma : {u64{0}, F->generator(), F->cardinality() - 1})
            for (int m = 1; m <= n; ++m)
                for (bool punct : {false, true}) {
                    auto iv = Interval::make(F, gamma, m, punct);
                    auto all = iv.elements();
                    std::vector<u64> joined;
                    for (auto& part : interval_partition(iv, 3))
                        for (u64 x : part.elements()) joined.push_back(x);
                    std::vector<u64> sorted = all;
                    std::sort(sorted.begin(), sorted.end());
                    bool ok = all.size() == iv.cardinality() && joined == all &&
                              std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
                    for (u64 x : all) ok = ok && iv.contains(x) && !(punct && x == 0);
                    t.check(ok);
                }
    }
    return {t.cert("interval-enumeration", "cardinality, partition, membership", ctx.seed)};
}

std::vector<Record> suite_counting(const Context& ctx) {
    std::vector<Record> out;
    FieldPtr F = Field::extend(Field::prime(2), parse_poly(Field::prime(2), "1,0,1,0,0,1"));
    Tally nk, cauchy;
    for (int m = 1; m <= 2; ++m)
        for (int k = 1; k <= 2; ++k)
            for (u64 gamma : {u64{0}, F->generator(), F->pow(F->generator(), 4)}) {
                auto iv = Interval::make(F, gamma, m, true);
                auto rep = count_Nk(iv, k, ctx.opts);
                nk.check(rep.Nk == count_Nk_oracle(iv, k, ctx.opts.budget));
                cauchy.check(rep.cauchy_ok());
            }
    out.push_back(nk.cert("nk-oracle", F->describe() + " m=1..2 k=1..2", ctx.seed));
    out.push_back(cauchy.cert("cauchy-chain", F->describe() + " m=1..2 k=1..2", ctx.seed));
    Tally lemma;
    for (int t = 0; t < 100; ++t) {
        const auto s = instance_seed(ctx.seed, "counting-lemma instance=" + std::to_string(t));
        lemma.check(counting_lemma_certificate(random_lemma_instance(s), s, ctx.opts.budget)["ok"].get<bool>());
    }
    out.push_back(lemma.cert("counting-lemma", "100 random instances", ctx.seed));
    return out;
}

std::vector<Record> suite_charsums(const Context& ctx) {
    std::vector<Record> out;
    Tally hom, orth, kl, bound;
    for (FieldPtr F : {ext(3, 2), ext(2, 4), ext(3, 3), ext(3, 4)}) {
        for (u64 beta : {u64{1}, F->generator()}) {
            AdditiveCharacter chi{F, beta};
            const u64 p = F->characteristic();
            bool ok = true;
            for (u64 x = 0; x < F->cardinality(); ++x)
                for (u64 y = 0; y < F->cardinality(); ++y) ok = ok && chi(F->add(x, y)) == (chi(x) + chi(y)) % p;
            hom.check(ok);
        }
    }
    for (u64 p : {2, 3, 5})
        for (int n : {2, 3}) {
            FieldPtr F = ext(p, n);
            for (u64 beta : {u64{1}, F->generator()}) {
                AdditiveCharacter chi{F, beta};
                CharAccumulator acc(p);
                for (u64 x = 0; x < F->cardinality(); ++x) acc.add(chi(x));
                orth.check(acc.is_zero());
                auto full = Interval::make(F, 0, n, true);
                kl.check(kloosterman_sum({full}, {}, chi, ctx.opts).acc.integer_value() == -1);
            }
        }
    FieldPtr F = Field::extend(Field::prime(2), parse_poly(Field::prime(2), "1,0,1,0,0,1"));
    SplitMix64 rng(instance_seed(ctx.seed, "verify charsums"));
    for (int t = 0; t < 20; ++t) {
        std::vector<Interval> ivs;
        std::vector<WeightTable> ws;
        const int d = 2 + static_cast<int>(rng.below(2));
        for (int i = 0; i < d; ++i) {
            ivs.push_back(Interval::make(F, rng.below(F->cardinality()), 1 + static_cast<int>(rng.below(2)), true));
            ws.push_back(t % 2 ? WeightTable::random_disc(ivs.back(), rng.next())
                               : WeightTable::random_roots(ivs.back(), 2, rng.next()));
        }
        auto rep = kloosterman_sum(ivs, ws, AdditiveCharacter{F, 1 + rng.below(F->cardinality() - 1)}, ctx.opts);
        bound.check(rep.magnitude <= static_cast<double>(rep.trivial_bound) * (1 + 1e-9));
    }
    out.push_back(hom.cert("character-homomorphism", "fields of size 9..81, exhaustive", ctx.seed));
    out.push_back(orth.cert("character-orthogonality", "p in {2,3,5}, n in {2,3}", ctx.seed));
    out.push_back(kl.cert("kloosterman-full-range", "d = 1, full punctured field", ctx.seed));
    out.push_back(bound.cert("trivial-bound", F->describe() + " 20 random weighted sums", ctx.seed));
    return out;
}

std::vector<Record> suite_prooflab(const Context& ctx) {
    std::vector<Record> out;
    SplitMix64 rng(instance_seed(ctx.seed, "verify prooflab"));
    Tally l21;
    for (int i = 0; i < 200; ++i) {
        FieldPtr B = Field::prime(rng.below(2) ? 2 : 3);
        const int k = 2 + static_cast<int>(rng.below(2)), M = 1 + static_cast<int>(rng.below(3));
        auto f = random_lemma21_poly(B, k, M, rng), g = random_lemma21_poly(B, k, M, rng);
        l21.check(lemma21_degree_check(f, g, M, k).ok);
    }
    out.push_back(l21.cert("lemma21", "200 random pairs, q in {2,3}, k in {2,3}, M <= 3", ctx.seed));

    Tally root;
    FieldPtr F2 = Field::prime(2);
    FieldPtr F8 = Field::extend(F2, parse_poly(F2, "1,1,0,1"));
    const Poly psi = F8->modulus();
    for (u64 gamma = 0; gamma < 8; ++gamma)
        for (int m = 1; m <= 2; ++m) {
            const u64 s = u64{1} << m;
            for (u64 code = 0; code < s * s * s * s; ++code) {
                std::vector<u64> idx = {code % s, code / s % s, code / s / s % s, code / s / s / s};
                std::vector<Poly> t;
                u64 lhs = 0, rhs = 0;
                bool ok = true;
                for (int i = 0; i < 4 && ok; ++i) {
                    const u64 x = F8->add(gamma, idx[i]);
                    ok = x != 0;
                    if (ok) (i < 2 ? lhs : rhs) = F8->add(i < 2 ? lhs : rhs, F8->inv(x));
                    t.push_back(Poly::from_index(F2, idx[i], m));
                }
                if (ok) root.check(px_root_check(t, Poly::from_index(F2, gamma, 3), psi) == (lhs == rhs));
            }
        }
    out.push_back(root.cert("px-root-equation", F8->describe() + " k=2, all gamma, m in {1,2}", ctx.seed));

    Tally vanish;
    FieldPtr F5 = Field::prime(5);
    FieldPtr F = Field::extend(F5, parse_poly(F5, "2,3,1,0,0,0,0,0,0,0,0,0,0,1"));
    auto iv = Interval::make(F, 0, 1, true);
    auto elems = iv.elements();
    std::vector<std::vector<Poly>> sols;
    for (u64 a : elems)
        for (u64 b : elems)
            for (u64 c : elems)
                for (u64 d : elems) {
                    if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
                    if (F->add(F->inv(a), F->inv(b)) != F->add(F->inv(c), F->inv(d))) continue;
                    std::vector<Poly> t;
                    for (u64 x : {a, b, c, d}) t.push_back(Poly::from_index(F5, x, 1));
                    if (build_Px(t).degZ() >= 1) sols.push_back(t);
                }
    for (auto& x : sols)
        for (auto& y : sols) vanish.check(resultant_solution_check(x, y));
    out.push_back(vanish.cert("resultant-vanishing", F->describe() + " gamma=0 m=1 k=2", ctx.seed));

    Tally norm;
    u64 shifts = 0;
    FieldPtr F3 = Field::prime(3);
    for (auto [B, m, xi_max] : std::vector<std::tuple<FieldPtr, int, int>>{{F2, 2, 2}, {F2, 3, 2}, {F3, 2, 1}}) {
        const u64 q = B->cardinality();
        const u64 xi_count = *checked_pow(q, xi_max + 1);
        const auto base = polys_below(B, m);
        for (u64 xi = 0; xi < xi_count; ++xi)
            for (u64 mu : {u64{1}, q}) {
                auto sh = AlgebraicShift::rational(Poly::from_index(B, xi, xi_max + 1), Poly::from_index(B, mu, 2));
                ++shifts;
                for (auto& idx : function_field_solutions(sh, m, 2)) {
                    std::vector<u64> sorted = idx;
                    std::sort(sorted.begin(), sorted.end());
                    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
                    std::vector<Poly> t;
                    for (u64 j : idx) t.push_back(base[j]);
                    bool ok = true;
                    for (int i = 0; i < 4; ++i) ok = ok && norm_divisibility_check(sh, t, i);
                    norm.check(ok);
                }
            }
    }
    out.push_back(norm.cert("norm-divisibility", "k=2, (q,m) in {(2,2),(2,3),(3,2)}, " + std::to_string(shifts) + " shifts, mu in {1,T}", ctx.seed));
    return out;
}

std::vector<Record> suite_harness(const Context& ctx) {
    Params ps;
    ps.load_tokens({"p=2", "psi=1,1,0,0,0,0,1", "m=1..2", "k=1..2", "gamma=0|a"});
    auto run_with = [&](int threads) {
        Context c{ps, ctx.seed, ctx.opts, false, false, ""};
        c.opts.threads = threads;
        return to_jsonl(cmd_count_nk(c).table);
    };
    const std::string a = run_with(1), b = run_with(4), c = run_with(1);
    Tally t;
    t.check(a == c);
    t.check(a == b);
    return {t.cert("determinism", "count-nk sweep, threads 1 and 4, repeated", ctx.seed)};
}

}  // namespace

CommandResult cmd_verify(Context& ctx) {
    static const std::vector<std::pair<std::string, std::function<std::vector<Record>(const Context&)>>> suites = {
        {"algebra", suite_algebra},   {"intervals", suite_intervals}, {"counting", suite_counting},
        {"charsums", suite_charsums}, {"prooflab", suite_prooflab},   {"harness", suite_harness}};
    std::vector<std::string> wanted;
    for (auto part : text::split(ctx.suite, ',')) wanted.emplace_back(text::trim(part));
    const bool all = std::find(wanted.begin(), wanted.end(), "all") != wanted.end();
    for (auto& w : wanted) {
        if (w == "all") continue;
        if (std::none_of(suites.begin(), suites.end(), [&](auto& s) { return s.first == w; }))
            throw Error(Errc::ConfigParse, "unknown suite '" + w + "'");
    }
    CommandResult res;
    res.table.columns = kCertificateColumns;
    res.table.columns.insert(res.table.columns.begin(), "suite");
    for (auto& [name, fn] : suites) {
        if (!all && std::find(wanted.begin(), wanted.end(), name) == wanted.end()) continue;
        for (auto& r : fn(ctx)) {
            Record full;
            full["key"] = "verify " + name + " " + r["key"].get<std::string>();
            full["suite"] = name;
            for (auto& [k, v] : r.items())
                if (k != "key") full[k] = v;
            if (!full["ok"].get<bool>()) res.failed = true;
            res.table.rows.push_back(std::move(full));
        }
    }
    return res;
}

}  // namespace ffr::harness

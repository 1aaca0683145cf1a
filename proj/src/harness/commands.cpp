#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "ffr/charsum.hpp"
#include "ffr/counting.hpp"
#include "ffr/error.hpp"
#include "ffr/factor.hpp"
#include "ffr/interval.hpp"
#include "ffr/parallel.hpp"
#include "ffr/prooflab.hpp"
#include "ffr/text.hpp"

namespace ffr::harness {

const std::vector<std::string> kCertificateColumns = {"op", "params", "bound", "actual", "ok", "seed"};

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::uint64_t instance_seed(std::uint64_t seed, const std::string& key) { return SplitMix64::derive(seed, fnv1a(key)); }

void finish_record(Record& r, double seconds, const Context& ctx) {
    if (ctx.timing) r["seconds"] = round6(seconds);
    if (ctx.oracle) {
        r["provenance"] = "oracle";
        r["seed"] = ctx.seed;
    }
}

void finish_columns(Table& t, const Context& ctx) {
    if (!ctx.timing) std::erase(t.columns, std::string("seconds"));
}

Record certificate(const std::string& op, const std::string& params, Record bound, Record actual, bool ok,
                   std::uint64_t seed) {
    Record r;
    r["key"] = op + " " + params;
    r["op"] = op;
    r["params"] = params;
    r["bound"] = std::move(bound);
    r["actual"] = std::move(actual);
    r["ok"] = ok;
    r["seed"] = seed;
    return r;
}

namespace {

int threads_of(const Context& ctx) { return resolve_threads(ctx.opts.threads); }

// Threads go to the sweep when there are several instances, else to the instance.
RunOptions inner_options(const Context& ctx, std::size_t instances) {
    RunOptions o = ctx.opts;
    o.threads = instances > 1 ? 1 : threads_of(ctx);
    return o;
}

u128 pow128(u128 b, int e) {
    u128 r = 1;
    while (e-- > 0) r *= b;
    return r;
}

std::string psi_text(FieldPtr F) { return format_poly(F->modulus()); }

Record deg_json(long long d) { return d == kNegInfDegree ? Record(nullptr) : Record(d); }

Poly lift(FieldPtr F, u64 code) { return Poly(F->base(), F->digits(code)); }

std::vector<u64> parse_elements(FieldPtr F, const std::vector<std::string>& items) {
    std::vector<u64> out;
    for (auto& s : items) out.push_back(F->parse(s));
    return out;
}

// Reciprocal k-fold sum set by iterated set addition.
u64 sumset_oracle(const Interval& iv, int k, const Budget& budget) {
    auto elems = iv.elements(budget);
    if (pow128(elems.size(), k) > budget.oracle)
        throw Error(Errc::BudgetExceeded, "sumset oracle over " + iv.str() + " needs (#J*)^k steps");
    std::set<u64> inv;
    for (u64 x : elems) inv.insert(iv.field->inv(x));
    std::set<u64> acc{0};
    for (int i = 0; i < k; ++i) {
        std::set<u64> next;
        for (u64 a : acc)
            for (u64 b : inv) next.insert(iv.field->add(a, b));
        acc = std::move(next);
    }
    return acc.size();
}

struct NkInstance {
    int m, k;
    u64 gamma;
    std::string key;
};

std::vector<NkInstance> nk_instances(const Context& ctx, FieldPtr F, const std::string& op) {
    std::vector<NkInstance> out;
    const auto gammas = ctx.ps.list("gamma", "0");
    for (long long m : ctx.ps.int_list("m", "1"))
        for (long long k : ctx.ps.int_list("k", "1"))
            for (auto& g : gammas) {
                if (k < 1) throw Error(Errc::ConfigParse, "k must be positive");
                const u64 gamma = F->parse(g);
                Interval::make(F, gamma, static_cast<int>(m), true);
                out.push_back({static_cast<int>(m), static_cast<int>(k), gamma,
                               op + " " + F->describe() + " m=" + std::to_string(m) + " k=" + std::to_string(k) +
                                   " gamma=" + F->format(gamma)});
            }
    return out;
}

Record nk_head(FieldPtr F, const NkInstance& in) {
    Record r;
    r["key"] = in.key;
    r["q"] = F->base()->cardinality();
    r["n"] = F->degree();
    r["m"] = in.m;
    r["k"] = in.k;
    r["gamma"] = F->format(in.gamma);
    r["psi"] = psi_text(F);
    return r;
}

}  // namespace

CommandResult cmd_count_nk(Context& ctx) {
    FieldPtr F = extension_field(ctx.ps, ctx.seed);
    const bool cross_check = ctx.ps.flag("oracle", false);
    const auto inst = nk_instances(ctx, F, "count-nk");
    const RunOptions inner = inner_options(ctx, inst.size());
    CommandResult res;
    res.table.columns = {"q", "n", "m", "k", "gamma", "psi", "Nk", "sumset", "cauchy_lhs", "cauchy_rhs", "cauchy_ok",
                         "ratio"};
    if (cross_check) res.table.columns.push_back("oracle_ok");
    res.table.columns.push_back("seconds");
    res.table.rows = parallel_indexed<Record>(inst.size(), threads_of(ctx), [&](std::size_t i) {
        const auto& in = inst[i];
        const auto iv = Interval::make(F, in.gamma, in.m, true);
        Stopwatch sw;
        u128 Nk;
        u64 sumset;
        std::optional<bool> oracle_ok;
        if (ctx.oracle) {
            Nk = count_Nk_oracle(iv, in.k, ctx.opts.budget);
            sumset = sumset_oracle(iv, in.k, ctx.opts.budget);
        } else {
            auto rep = count_Nk(iv, in.k, inner);
            Nk = rep.Nk;
            sumset = rep.sumset;
            if (cross_check) oracle_ok = Nk == count_Nk_oracle(iv, in.k, ctx.opts.budget);
        }
        const u128 lhs = pow128(iv.cardinality(), 2 * in.k), rhs = static_cast<u128>(sumset) * Nk;
        Record r = nk_head(F, in);
        r["Nk"] = json_u128(Nk);
        r["sumset"] = sumset;
        r["cauchy_lhs"] = json_u128(lhs);
        r["cauchy_rhs"] = json_u128(rhs);
        r["cauchy_ok"] = lhs <= rhs;
        const long double lg = std::log(static_cast<long double>(Nk)) /
                               (std::log(static_cast<long double>(F->base()->cardinality())) * in.m);
        r["ratio"] = round6(static_cast<double>(lg));
        if (oracle_ok) r["oracle_ok"] = *oracle_ok;
        finish_record(r, sw.seconds(), ctx);
        return r;
    });
    for (auto& r : res.table.rows)
        if (!r["cauchy_ok"].get<bool>() || (r.contains("oracle_ok") && !r["oracle_ok"].get<bool>())) res.failed = true;
    finish_columns(res.table, ctx);
    return res;
}

CommandResult cmd_sumset(Context& ctx) {
    FieldPtr F = extension_field(ctx.ps, ctx.seed);
    const auto inst = nk_instances(ctx, F, "sumset");
    const RunOptions inner = inner_options(ctx, inst.size());
    CommandResult res;
    res.table.columns = {"q", "n", "m", "k", "gamma", "psi", "card", "sumset", "seconds"};
    res.table.rows = parallel_indexed<Record>(inst.size(), threads_of(ctx), [&](std::size_t i) {
        const auto& in = inst[i];
        const auto iv = Interval::make(F, in.gamma, in.m, true);
        Stopwatch sw;
        const u64 s = ctx.oracle ? sumset_oracle(iv, in.k, ctx.opts.budget)
                                 : reciprocal_distribution(iv, in.k, 0, inner).support();
        Record r = nk_head(F, in);
        r["card"] = iv.cardinality();
        r["sumset"] = s;
        finish_record(r, sw.seconds(), ctx);
        return r;
    });
    finish_columns(res.table, ctx);
    return res;
}

namespace {

// Direct nested enumeration with trace by Frobenius powers; exact weights only.
CharAccumulator kloosterman_oracle(const std::vector<Interval>& ivs, const std::vector<WeightTable>& ws,
                                   const AdditiveCharacter& chi, const Budget& budget) {
    FieldPtr F = chi.field;
    const u64 p = F->characteristic();
    u128 terms = 1;
    std::vector<std::vector<u64>> elems;
    for (auto& iv : ivs) {
        elems.push_back(iv.elements(budget));
        terms *= elems.back().size();
    }
    if (terms > budget.oracle) throw Error(Errc::BudgetExceeded, "Kloosterman oracle term count");
    for (auto& w : ws)
        if (!w.exact()) throw Error(Errc::InvalidArgument, "the oracle needs root-of-unity weights");
    CharAccumulator acc(p);
    const std::size_t d = ivs.size();
    std::vector<std::size_t> pos(d, 0);
    if (terms == 0) return acc;
    for (;;) {
        u64 prod = 1, j = 0;
        for (std::size_t i = 0; i < d; ++i) {
            const u64 x = elems[i][pos[i]];
            if (x == 0) throw Error(Errc::ZeroInInterval, ivs[i].str());
            prod = F->mul(prod, x);
            if (i < ws.size()) j += ws[i].root(x);
        }
        j += F->trace_by_frobenius(F->mul(chi.beta, F->inv(prod)));
        acc.add(j % p);
        std::size_t i = 0;
        while (i < d && ++pos[i] == elems[i].size()) pos[i++] = 0;
        if (i == d) break;
    }
    return acc;
}

std::vector<std::string> split_slash(const std::string& s) {
    std::vector<std::string> out;
    for (auto part : text::split(s, '/')) out.emplace_back(text::trim(part));
    return out;
}

template <class T>
std::vector<T> per_interval(const std::vector<T>& v, std::size_t d, const char* what) {
    if (v.size() == 1) return std::vector<T>(d, v[0]);
    if (v.size() != d) throw Error(Errc::ConfigParse, std::string(what) + " needs 1 or d entries");
    return v;
}

struct KlInstance {
    std::vector<Interval> ivs;
    std::string key;
    std::uint64_t seed;
};

Record acc_json(const CharAccumulator& acc) { return Record::parse(acc.json()); }

}  // namespace

CommandResult cmd_kloosterman(Context& ctx) {
    FieldPtr F = extension_field(ctx.ps, ctx.seed);
    const auto ds = ctx.ps.int_list("d", "2");
    const auto ms = ctx.ps.list("m", "1");
    const auto gammas = ctx.ps.list("gamma", "0");
    const u64 instances = ctx.ps.u64("instances", 0);
    const bool punctured = ctx.ps.flag("punctured", true);
    const std::string weights = ctx.ps.str("weights", "unit");
    if (weights != "unit" && weights != "roots" && weights != "disc")
        throw Error(Errc::ConfigParse, "weights must be unit, roots or disc");
    const AdditiveCharacter chi{F, F->parse(ctx.ps.str("beta", "1"))};
    const std::string head = "kloosterman " + F->describe() + " beta=" + F->format(chi.beta) + " weights=" + weights;

    std::vector<KlInstance> inst;
    for (long long d : ds) {
        if (d < 1) throw Error(Errc::ConfigParse, "d must be positive");
        for (auto& mspec : ms) {
            std::vector<int> mlist;
            for (auto& s : split_slash(mspec)) mlist.push_back(static_cast<int>(text::parse_u64(s)));
            mlist = per_interval(mlist, d, "m");
            auto make = [&](const std::vector<u64>& gs, const std::string& key) {
                KlInstance in;
                for (long long i = 0; i < d; ++i) in.ivs.push_back(Interval::make(F, gs[i], mlist[i], punctured));
                in.key = key;
                in.seed = instance_seed(ctx.seed, key);
                inst.push_back(std::move(in));
            };
            auto key_of = [&](const std::vector<u64>& gs) {
                return head + " d=" + std::to_string(d) + " m=" + mspec + " gamma=" +
                       text::join(gs, "/", [&](u64 g) { return F->format(g); });
            };
            if (instances == 0) {
                for (auto& gspec : gammas) {
                    auto gs = per_interval(parse_elements(F, split_slash(gspec)), d, "gamma");
                    make(gs, key_of(gs));
                }
            } else {
                for (u64 t = 0; t < instances; ++t) {
                    SplitMix64 rng(instance_seed(ctx.seed, head + " d=" + std::to_string(d) + " m=" + mspec +
                                                               " instance=" + std::to_string(t)));
                    std::vector<u64> gs;
                    for (long long i = 0; i < d; ++i) gs.push_back(rng.below(F->cardinality()));
                    make(gs, key_of(gs));
                }
            }
        }
    }

    const RunOptions inner = inner_options(ctx, inst.size());
    CommandResult res;
    res.table.columns = {"p",     "n",     "d", "m_list", "gamma_list", "beta", "weights", "|S|", "trivial_bound",
                         "ratio", "exact", "seconds"};
    res.table.rows = parallel_indexed<Record>(inst.size(), threads_of(ctx), [&](std::size_t i) {
        const auto& in = inst[i];
        std::vector<WeightTable> ws;
        for (std::size_t j = 0; j < in.ivs.size(); ++j) {
            const auto s = SplitMix64::derive(in.seed, j);
            if (weights == "roots") ws.push_back(WeightTable::random_roots(in.ivs[j], F->characteristic(), s));
            if (weights == "disc") ws.push_back(WeightTable::random_disc(in.ivs[j], s));
        }
        Stopwatch sw;
        SumReport rep;
        if (ctx.oracle) {
            rep.acc = kloosterman_oracle(in.ivs, ws, chi, ctx.opts.budget);
            rep.exact = true;
            rep.magnitude = rep.acc.magnitude();
            rep.trivial_bound = rep.acc.terms();
            rep.ratio = rep.trivial_bound ? rep.magnitude / static_cast<double>(rep.trivial_bound) : 0.0;
        } else {
            rep = kloosterman_sum(in.ivs, ws, chi, inner);
        }
        Record r;
        r["key"] = in.key;
        r["p"] = F->characteristic();
        r["n"] = F->degree();
        r["d"] = in.ivs.size();
        r["m_list"] = text::join(in.ivs, "/", [](const Interval& iv) { return std::to_string(iv.m); });
        r["gamma_list"] = text::join(in.ivs, "/", [&](const Interval& iv) { return F->format(iv.gamma); });
        r["beta"] = F->format(chi.beta);
        r["weights"] = weights;
        r["|S|"] = rep.magnitude;
        r["trivial_bound"] = json_u128(rep.trivial_bound);
        r["ratio"] = round6(rep.ratio);
        r["exact"] = rep.exact;
        r["bound_ok"] = rep.magnitude <= static_cast<double>(rep.trivial_bound) * (1 + 1e-9);
        if (rep.exact) r["acc"] = acc_json(rep.acc);
        finish_record(r, sw.seconds(), ctx);
        return r;
    });
    for (auto& r : res.table.rows)
        if (!r["bound_ok"].get<bool>()) res.failed = true;
    finish_columns(res.table, ctx);
    return res;
}

CommandResult cmd_multilinear(Context& ctx) {
    FieldPtr F = extension_field(ctx.ps, ctx.seed);
    const AdditiveCharacter chi{F, F->parse(ctx.ps.str("beta", "1"))};
    std::vector<std::vector<std::vector<u64>>> instances;
    std::vector<std::string> keys;
    const std::string head = "multilinear " + F->describe() + " beta=" + F->format(chi.beta);
    auto set_text = [&](const std::vector<u64>& A) {
        return text::join(A, "|", [&](u64 x) { return F->format(x); });
    };
    if (ctx.ps.has("A1")) {
        std::vector<std::vector<u64>> sets;
        for (int i = 1; ctx.ps.has("A" + std::to_string(i)); ++i)
            sets.push_back(parse_elements(F, ctx.ps.list("A" + std::to_string(i))));
        instances.push_back(sets);
        keys.push_back(head + " sets=" + text::join(sets, " ; ", set_text));
    } else {
        const u64 count = ctx.ps.u64("instances", 1);
        const auto ds = ctx.ps.int_list("d", "2");
        const u64 size = ctx.ps.u64("size", 4);
        if (size == 0 || size >= F->cardinality()) throw Error(Errc::ConfigParse, "size must be in [1, q^n - 1]");
        for (long long d : ds)
            for (u64 t = 0; t < count; ++t) {
                SplitMix64 rng(instance_seed(ctx.seed, head + " d=" + std::to_string(d) + " size=" +
                                                           std::to_string(size) + " instance=" + std::to_string(t)));
                std::vector<std::vector<u64>> sets;
                for (long long i = 0; i < d; ++i) {
                    std::set<u64> A;
                    while (A.size() < size) A.insert(1 + rng.below(F->cardinality() - 1));
                    sets.emplace_back(A.begin(), A.end());
                }
                instances.push_back(sets);
                keys.push_back(head + " sets=" + text::join(sets, " ; ", set_text));
            }
    }
    const bool prime_n = is_prime(static_cast<u64>(F->absolute_degree()));
    const RunOptions inner = inner_options(ctx, instances.size());
    CommandResult res;
    res.table.columns = {"p", "n", "d", "sizes", "beta", "|S|", "trivial_bound", "ratio", "subfield_max", "seconds"};
    res.table.rows = parallel_indexed<Record>(instances.size(), threads_of(ctx), [&](std::size_t i) {
        const auto& sets = instances[i];
        Stopwatch sw;
        const CharAccumulator acc = multilinear_sum(sets, chi, inner);
        Record r;
        r["key"] = keys[i];
        r["p"] = F->characteristic();
        r["n"] = F->absolute_degree();
        r["d"] = sets.size();
        r["sizes"] = text::join(sets, "/", [](const std::vector<u64>& A) { return std::to_string(A.size()); });
        r["beta"] = F->format(chi.beta);
        r["|S|"] = acc.magnitude();
        r["trivial_bound"] = json_u128(acc.terms());
        r["ratio"] = round6(acc.terms() ? acc.magnitude() / static_cast<double>(acc.terms()) : 0.0);
        if (prime_n)
            r["subfield_max"] = text::join(
                sets, "/", [&](const std::vector<u64>& A) { return std::to_string(subfield_intersection_max(F, A)); });
        r["acc"] = acc_json(acc);
        finish_record(r, sw.seconds(), ctx);
        return r;
    });
    finish_columns(res.table, ctx);
    return res;
}

BivarPoly random_lemma21_poly(FieldPtr f, int k, int M, SplitMix64& rng) {
    auto rand_poly = [&](int max_deg) {
        std::vector<u64> c(max_deg + 1);
        for (auto& x : c) x = rng.below(f->cardinality());
        return Poly(f, std::move(c));
    };
    const int dz = 1 + static_cast<int>(rng.below(k - 1));
    std::vector<Poly> c;
    for (int i = 0; i <= dz; ++i) c.push_back(rand_poly((k - i) * M - 1));
    while (c.back().is_zero()) c.back() = rand_poly((k - dz) * M - 1);
    return BivarPoly(f, std::move(c));
}

namespace {

std::vector<Poly> random_tuple(FieldPtr f, int k, int m, SplitMix64& rng) {
    std::vector<Poly> t;
    for (int i = 0; i < 2 * k; ++i) t.push_back(Poly::from_index(f, rng.below(*checked_pow(f->cardinality(), m)), m));
    return t;
}

// Distinct-coordinate solutions over V_m, as index tuples, for the interval gamma + V_m.
std::vector<std::vector<u64>> distinct_solutions(const Interval& iv, int k, const Budget& budget) {
    FieldPtr F = iv.field;
    const u64 s = iv.span();
    if (pow128(s, 2 * k) > budget.oracle) throw Error(Errc::BudgetExceeded, "solution search over " + iv.str());
    std::vector<std::vector<u64>> out;
    std::vector<u64> idx(2 * k, 0);
    for (;;) {
        std::vector<u64> sorted = idx;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end()) {
            u64 lhs = 0, rhs = 0;
            bool ok = true;
            for (int i = 0; i < 2 * k && ok; ++i) {
                const u64 x = iv.at(idx[i]);
                ok = x != 0;
                if (ok) (i < k ? lhs : rhs) = F->add(i < k ? lhs : rhs, F->inv(x));
            }
            if (ok && lhs == rhs) out.push_back(idx);
        }
        int pos = 0;
        while (pos < 2 * k && ++idx[pos] == s) idx[pos++] = 0;
        if (pos == 2 * k) break;
    }
    return out;
}

}  // namespace

CommandResult cmd_resultant_check(Context& ctx) {
    CommandResult res;
    res.table.columns = kCertificateColumns;
    if (ctx.ps.has("f")) {
        FieldPtr B = base_field(ctx.ps);
        const auto f = BivarPoly::parse(B, ctx.ps.str("f"));
        const auto g = BivarPoly::parse(B, ctx.ps.str("g"));
        const std::string params = B->describe() + " f=" + f.str() + " g=" + g.str();
        if (ctx.ps.has("k") || ctx.ps.has("M")) {
            const int k = static_cast<int>(ctx.ps.u64("k")), M = static_cast<int>(ctx.ps.u64("M"));
            const auto cert = lemma21_degree_check(f, g, M, k);
            res.table.rows.push_back(certificate("lemma21", params + " k=" + std::to_string(k) + " M=" + std::to_string(M),
                                                 cert.bound, deg_json(cert.actual), cert.ok, ctx.seed));
        } else {
            const Poly r = resultant_Z(f, g);
            Record c = certificate("resultant", params, nullptr, deg_json(r.degree()), true, ctx.seed);
            c["resultant"] = r.str();
            res.table.rows.push_back(c);
        }
    } else if (ctx.ps.has("random")) {
        FieldPtr B = base_field(ctx.ps);
        const u64 count = ctx.ps.u64("random");
        const auto ks = ctx.ps.int_list("k", "2");
        const auto Ms = ctx.ps.int_list("M", "1");
        for (long long k : ks)
            for (long long M : Ms) {
                if (k < 2 || M < 1) throw Error(Errc::ConfigParse, "need k >= 2 and M >= 1");
                const std::string params = B->describe() + " k=" + std::to_string(k) + " M=" + std::to_string(M) +
                                           " pairs=" + std::to_string(count);
                SplitMix64 rng(instance_seed(ctx.seed, "lemma21 " + params));
                u64 passed = 0;
                long long worst = kNegInfDegree;
                for (u64 t = 0; t < count; ++t) {
                    auto f = random_lemma21_poly(B, int(k), int(M), rng), g = random_lemma21_poly(B, int(k), int(M), rng);
                    auto cert = lemma21_degree_check(f, g, int(M), int(k));
                    passed += cert.ok;
                    worst = std::max<long long>(worst, cert.actual);
                }
                Record c = certificate("lemma21", params, (k * k - 1) * M, deg_json(worst), passed == count, ctx.seed);
                c["passed"] = passed;
                res.table.rows.push_back(c);
                SplitMix64 trng(instance_seed(ctx.seed, "px-bound " + params));
                const int m = static_cast<int>(M);
                u64 tested = 0, ok = 0;
                long long worst_px = kNegInfDegree;
                for (u64 t = 0; t < count; ++t) {
                    auto P = build_Px(random_tuple(B, int(k), m, trng)), Q = build_Px(random_tuple(B, int(k), m, trng));
                    if (P.degZ() < 1 || Q.degZ() < 1) continue;
                    const int deg = resultant_Z(P, Q).degree();
                    ++tested;
                    ok += deg <= 4 * k * (k - 1) * m;
                    worst_px = std::max<long long>(worst_px, deg);
                }
                Record px = certificate("px-resultant-degree",
                                        B->describe() + " k=" + std::to_string(k) + " m=" + std::to_string(m) +
                                            " pairs=" + std::to_string(count),
                                        4 * k * (k - 1) * m, deg_json(worst_px), ok == tested, ctx.seed);
                px["tested"] = tested;
                res.table.rows.push_back(px);
            }
    } else {
        FieldPtr F = extension_field(ctx.ps, ctx.seed);
        const int m = static_cast<int>(ctx.ps.u64("m", 1)), k = static_cast<int>(ctx.ps.u64("k", 2));
        const u64 gamma = F->parse(ctx.ps.str("gamma", "0"));
        const auto iv = Interval::make(F, gamma, m, true);
        FieldPtr B = F->base();
        const std::string params = F->describe() + " m=" + std::to_string(m) + " k=" + std::to_string(k) +
                                   " gamma=" + F->format(gamma);
        const auto sols = distinct_solutions(iv, k, ctx.opts.budget);
        std::vector<std::vector<Poly>> tuples;
        for (auto& s : sols) {
            std::vector<Poly> t;
            for (u64 idx : s) t.push_back(Poly::from_index(B, idx, m));
            if (build_Px(t).degZ() >= 1) tuples.push_back(std::move(t));
        }
        const u64 pairs = tuples.size() * tuples.size();
        if (pairs > ctx.opts.budget.oracle) throw Error(Errc::BudgetExceeded, "resultant pairs for " + params);
        auto zero = parallel_indexed<u64>(tuples.size(), threads_of(ctx), [&](std::size_t i) {
            u64 z = 0;
            for (auto& y : tuples) z += resultant_solution_check(tuples[i], y);
            return z;
        });
        u64 zeros = 0;
        for (u64 z : zero) zeros += z;
        const Poly gpoly = lift(F, gamma), psi = F->modulus();
        u64 roots = 0;
        for (auto& t : tuples) roots += px_root_check(t, gpoly, psi);
        Record c = certificate("resultant-vanishing", params, pairs, zeros, zeros == pairs && roots == tuples.size(),
                               ctx.seed);
        c["solutions"] = sols.size();
        c["nonconstant"] = tuples.size();
        c["root_checks"] = roots;
        res.table.rows.push_back(c);
    }
    for (auto& r : res.table.rows)
        if (!r["ok"].get<bool>()) res.failed = true;
    return res;
}

namespace {

std::string factor_text(const std::vector<Factor>& fs) {
    return text::join(fs, " ", [](const Factor& f) {
        return "(" + f.poly.str() + ")" + (f.multiplicity > 1 ? "^" + std::to_string(f.multiplicity) : "");
    });
}

}  // namespace

CommandResult cmd_divisor_count(Context& ctx) {
    FieldPtr B = base_field(ctx.ps);
    CommandResult res;
    res.table.columns = {"kind", "degree", "f", "factors", "divisors", "monic_count", "seconds"};
    if (ctx.ps.has("f")) {
        for (auto& s : ctx.ps.list("f")) {
            Stopwatch sw;
            const Poly f = parse_poly(B, s);
            const auto fs = poly_factor(f, ctx.seed);
            Record r;
            r["key"] = "divisor-count " + B->describe() + " f=" + f.str();
            r["kind"] = "poly";
            r["degree"] = f.degree();
            r["f"] = f.str();
            r["factors"] = factor_text(fs);
            r["divisors"] = divisor_count(f);
            finish_record(r, sw.seconds(), ctx);
            res.table.rows.push_back(r);
        }
    } else {
        const auto degrees = ctx.ps.int_list("degree");
        res.table.rows = parallel_indexed<Record>(degrees.size(), threads_of(ctx), [&](std::size_t i) {
            const int s = static_cast<int>(degrees[i]);
            if (s < 0) throw Error(Errc::ConfigParse, "degree must be nonnegative");
            const auto count = checked_pow(B->cardinality(), s);
            if (!count || *count > ctx.opts.budget.enumeration)
                throw Error(Errc::BudgetExceeded, "monic polynomials of degree " + std::to_string(s));
            Stopwatch sw;
            u64 best = 0;
            Poly arg(B);
            for (u64 idx = 0; idx < *count; ++idx) {
                Poly f = Poly::from_index(B, idx, s) + Poly::monomial(B, s);
                const u64 dc = divisor_count(f);
                if (dc > best) {
                    best = dc;
                    arg = f;
                }
            }
            Record r;
            r["key"] = "divisor-count " + B->describe() + " degree=" + std::to_string(s);
            r["kind"] = "max";
            r["degree"] = s;
            r["f"] = arg.str();
            r["factors"] = factor_text(poly_factor(arg, ctx.seed));
            r["divisors"] = best;
            r["monic_count"] = *count;
            finish_record(r, sw.seconds(), ctx);
            return r;
        });
    }
    finish_columns(res.table, ctx);
    return res;
}

LemmaInstance random_lemma_instance(std::uint64_t seed) {
    static const std::vector<std::pair<u64, int>> shapes = {{2, 1}, {3, 1}, {5, 1}, {7, 1}, {11, 1}, {13, 1},
                                                            {2, 2}, {2, 3}, {3, 2}, {2, 4}, {5, 2}, {3, 3},
                                                            {2, 5}, {7, 2}, {2, 6}};
    SplitMix64 rng(seed);
    const auto [p, n] = shapes[rng.below(shapes.size())];
    LemmaInstance in;
    FieldPtr P = Field::prime(p);
    in.field = n == 1 ? P : Field::extend(P, auto_irreducible(P, n, 17));
    const u64 card = in.field->cardinality();
    const u64 size = 1 + rng.below(std::min<u64>(8, card));
    std::set<u64> S;
    while (S.size() < size) S.insert(rng.below(card));
    in.S.assign(S.begin(), S.end());
    const int r = 2 + static_cast<int>(rng.below(4));
    for (int i = 0; i < r; ++i) in.coeffs.push_back(1 + rng.below(card - 1));
    in.target = rng.below(card);
    return in;
}

Record counting_lemma_certificate(const LemmaInstance& in, std::uint64_t seed, const Budget& budget) {
    FieldPtr F = in.field;
    auto fmt = [&](u64 x) { return F->format(x); };
    const std::string params = F->describe() + " S=" + text::join(in.S, "|", fmt) +
                               " c=" + text::join(in.coeffs, "|", fmt) + " target=" + F->format(in.target);
    const int r = static_cast<int>(in.coeffs.size());
    const u128 Tr = count_Tr(F, in.S, in.coeffs, in.target, budget);
    Record c;
    if (r % 2 == 0) {
        const u128 J = count_J2s(F, in.S, r / 2, budget);
        c = certificate("counting-lemma", params, json_u128(J), json_u128(Tr), Tr <= J, seed);
    } else {
        const u128 lo = count_J2s(F, in.S, r / 2, budget), hi = count_J2s(F, in.S, r / 2 + 1, budget);
        c = certificate("counting-lemma", params, json_u128(lo * hi), json_u128(Tr * Tr), Tr * Tr <= lo * hi, seed);
    }
    c["r"] = r;
    c["T_r"] = json_u128(Tr);
    return c;
}

CommandResult cmd_counting_lemma(Context& ctx) {
    CommandResult res;
    res.table.columns = kCertificateColumns;
    std::vector<LemmaInstance> inst;
    std::vector<std::uint64_t> seeds;
    if (ctx.ps.has("S")) {
        LemmaInstance in;
        in.field = ctx.ps.has("psi") || ctx.ps.has("n") ? extension_field(ctx.ps, ctx.seed) : base_field(ctx.ps);
        in.S = parse_elements(in.field, ctx.ps.list("S"));
        std::sort(in.S.begin(), in.S.end());
        in.S.erase(std::unique(in.S.begin(), in.S.end()), in.S.end());
        in.coeffs = parse_elements(in.field, ctx.ps.list("c"));
        in.target = in.field->parse(ctx.ps.str("target", "0"));
        if (in.coeffs.empty()) throw Error(Errc::ConfigParse, "c needs at least one coefficient");
        inst.push_back(in);
        seeds.push_back(ctx.seed);
    } else {
        const u64 count = ctx.ps.u64("instances", 100);
        for (u64 t = 0; t < count; ++t) {
            seeds.push_back(instance_seed(ctx.seed, "counting-lemma instance=" + std::to_string(t)));
            inst.push_back(random_lemma_instance(seeds.back()));
        }
    }
    res.table.rows = parallel_indexed<Record>(inst.size(), threads_of(ctx), [&](std::size_t i) {
        return counting_lemma_certificate(inst[i], seeds[i], ctx.opts.budget);
    });
    for (auto& r : res.table.rows)
        if (!r["ok"].get<bool>()) res.failed = true;
    return res;
}

CommandResult cmd_admissible_k(Context& ctx) {
    const u64 omega = ctx.ps.u64("omega", 156450);
    CommandResult res;
    res.table.columns = {"n", "m", "d", "omega", "lower", "upper", "feasible", "k_min", "k_max"};
    for (long long n : ctx.ps.int_list("n"))
        for (long long m : ctx.ps.int_list("m"))
            for (long long d : ctx.ps.int_list("d")) {
                if (n < 1 || m < 1 || d < 1) throw Error(Errc::ConfigParse, "n, m, d must be positive");
                const auto kr = admissible_k_range(n, m, d, omega);
                Record r;
                r["key"] = "admissible-k n=" + std::to_string(n) + " m=" + std::to_string(m) + " d=" +
                           std::to_string(d) + " omega=" + std::to_string(omega);
                r["n"] = n;
                r["m"] = m;
                r["d"] = d;
                r["omega"] = omega;
                r["lower"] = round6(static_cast<double>(kr.lower));
                r["upper"] = round6(static_cast<double>(kr.upper));
                r["feasible"] = kr.feasible;
                r["k_min"] = kr.k_min;
                r["k_max"] = kr.k_max;
                res.table.rows.push_back(r);
            }
    return res;
}

}  // namespace ffr::harness

#include "ffr/field.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <charconv>
#include <map>
#include <memory>
#include <mutex>

#include "ffr/error.hpp"
#include "ffr/factor.hpp"
#include "ffr/poly.hpp"
#include "ffr/text.hpp"

namespace ffr {

namespace {

struct Registry {
    std::mutex mu;
    std::map<u64, std::unique_ptr<Field>> primes;
    std::map<std::pair<FieldPtr, std::vector<u64>>, std::unique_ptr<Field>> quotients;
};

Registry& registry() {
    static Registry* r = new Registry;  // intentionally immortal
    return *r;
}

// Arithmetic on codes of the immediate base field, with an inline prime path.
struct BaseOps {
    FieldPtr f;
    bool prime;
    u64 p;

    explicit BaseOps(FieldPtr base) : f(base), prime(base->is_prime()), p(base->characteristic()) {}

    u64 add(u64 x, u64 y) const {
        if (prime) {
            u64 s = x + y;
            return s >= p ? s - p : s;
        }
        return f->add(x, y);
    }
    u64 sub(u64 x, u64 y) const {
        if (prime) return x >= y ? x - y : x + p - y;
        return f->sub(x, y);
    }
    u64 mul(u64 x, u64 y) const {
        if (prime) return p < (1ULL << 32) ? x * y % p : mulmod64(x, y, p);
        return f->mul(x, y);
    }
    u64 inv(u64 x) const { return f->inv(x); }
};

int vdeg(const std::vector<u64>& v) {
    int d = static_cast<int>(v.size()) - 1;
    while (d >= 0 && v[d] == 0) --d;
    return d;
}

void vtrim(std::vector<u64>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

}  // namespace

FieldPtr Field::prime(u64 p) {
    if (p < 2 || !ffr::is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
    if (p >= (1ULL << 62)) throw Error(Errc::CardinalityOverflow, "prime too large");
    auto& reg = registry();
    std::lock_guard lock(reg.mu);
    auto& slot = reg.primes[p];
    if (!slot) {
        auto f = std::unique_ptr<Field>(new Field());
        f->kind_ = Kind::Prime;
        f->p_ = p;
        f->card_ = p;
        f->n_ = 1;
        f->abs_deg_ = 1;
        f->depth_ = 0;
        f->basis_trace_ = {1};
        slot = std::move(f);
    }
    return slot.get();
}

FieldPtr Field::extend(FieldPtr base, const Poly& modulus) {
    if (base == nullptr || modulus.field() != base)
        throw Error(Errc::InvalidArgument, "modulus must have coefficients in the base field");
    if (base->depth_ + 1 > kMaxDepth) throw Error(Errc::TowerTooDeep, "tower depth would exceed 2");
    if (modulus.degree() < 2) throw Error(Errc::InvalidArgument, "modulus must have degree >= 2");
    if (!modulus.is_monic()) throw Error(Errc::NotMonic, format_poly(modulus));
    const int n = modulus.degree();
    auto card = checked_pow(base->card_, static_cast<unsigned>(n));
    if (!card) throw Error(Errc::CardinalityOverflow, "field cardinality does not fit in 63 bits");

    std::vector<u64> key(modulus.coeffs().begin(), modulus.coeffs().end());
    auto& reg = registry();
    {
        std::lock_guard lock(reg.mu);
        auto it = reg.quotients.find({base, key});
        if (it != reg.quotients.end()) return it->second.get();
    }
    if (!poly_irreducible_test(modulus)) throw Error(Errc::NotIrreducible, format_poly(modulus));

    auto f = std::unique_ptr<Field>(new Field());
    f->kind_ = Kind::Quotient;
    f->p_ = base->p_;
    f->card_ = *card;
    f->n_ = n;
    f->abs_deg_ = base->abs_deg_ * n;
    f->depth_ = base->depth_ + 1;
    f->base_ = base;
    f->modulus_ = key;
    if (base->is_prime() && base->p_ == 2) {
        f->gf2_ = true;
        for (int i = 0; i <= n; ++i)
            if (key[i]) f->gf2_mod_ |= 1ULL << i;
    }
    f->init_trace();

    std::lock_guard lock(reg.mu);
    auto& slot = reg.quotients[{base, key}];
    if (!slot) slot = std::move(f);
    return slot.get();
}

FieldPtr Field::prime_field() const noexcept {
    FieldPtr f = this;
    while (f->base_) f = f->base_;
    return f;
}

Poly Field::modulus() const { return Poly(base_, modulus_); }

void Field::init_trace() {
    basis_trace_.assign(abs_deg_, 0);
    u64 place = 1;
    for (int f = 0; f < abs_deg_; ++f) {
        u64 t = trace_by_frobenius(place);
        assert(t < p_);
        basis_trace_[f] = t;
        if (gf2_ && t) gf2_trace_mask_ |= place;
        if (f + 1 < abs_deg_) place *= p_;
    }
}

u64 Field::add(u64 a, u64 b) const noexcept {
    if (gf2_ || p_ == 2) return a ^ b;
    if (kind_ == Kind::Prime) {
        u64 s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    u64 r = 0, place = 1;
    for (int i = 0; i < abs_deg_ && (a || b); ++i) {
        u64 s = a % p_ + b % p_;
        if (s >= p_) s -= p_;
        r += s * place;
        a /= p_;
        b /= p_;
        place *= p_;
    }
    return r;
}

u64 Field::neg(u64 a) const noexcept {
    if (p_ == 2) return a;
    if (kind_ == Kind::Prime) return a == 0 ? 0 : p_ - a;
    u64 r = 0, place = 1;
    for (int i = 0; i < abs_deg_ && a; ++i) {
        u64 d = a % p_;
        r += (d == 0 ? 0 : p_ - d) * place;
        a /= p_;
        place *= p_;
    }
    return r;
}

u64 Field::sub(u64 a, u64 b) const noexcept {
    if (kind_ == Kind::Prime) return a >= b ? a - b : a + (p_ - b);
    return add(a, neg(b));
}

u64 Field::mul(u64 a, u64 b) const noexcept {
    if (kind_ == Kind::Prime) return p_ < (1ULL << 32) ? a * b % p_ : mulmod64(a, b, p_);
    if (a == 0 || b == 0) return 0;
    if (a == 1) return b;
    if (b == 1) return a;
    if (gf2_) return mul_gf2(a, b);
    return mul_generic(a, b);
}

u64 Field::mul_gf2(u64 a, u64 b) const noexcept {
    u128 r = 0;
    while (b) {
        r ^= static_cast<u128>(a) << __builtin_ctzll(b);
        b &= b - 1;
    }
    for (int k = 2 * n_ - 2; k >= n_; --k)
        if ((r >> k) & 1) r ^= static_cast<u128>(gf2_mod_) << (k - n_);
    return static_cast<u64>(r);
}

u64 Field::mul_generic(u64 a, u64 b) const noexcept {
    BaseOps ops(base_);
    std::array<u64, 64> da{}, db{};
    std::array<u64, 128> prod{};
    digits(a, std::span<u64>(da.data(), n_));
    digits(b, std::span<u64>(db.data(), n_));
    for (int i = 0; i < n_; ++i) {
        if (da[i] == 0) continue;
        for (int j = 0; j < n_; ++j)
            if (db[j]) prod[i + j] = ops.add(prod[i + j], ops.mul(da[i], db[j]));
    }
    for (int k = 2 * n_ - 2; k >= n_; --k) {
        const u64 c = prod[k];
        if (c == 0) continue;
        for (int i = 0; i < n_; ++i)
            if (modulus_[i]) prod[k - n_ + i] = ops.sub(prod[k - n_ + i], ops.mul(c, modulus_[i]));
        prod[k] = 0;
    }
    return from_digits(std::span<const u64>(prod.data(), n_));
}

u64 Field::inv(u64 a) const {
    if (a == 0) throw Error(Errc::DivisionByZero, "inverse of zero");
    if (kind_ == Kind::Prime) {
        // p prime: a^(p-2)
        return powmod64(a, p_ - 2, p_);
    }
    if (gf2_) return inv_gf2(a);
    return inv_generic(a);
}

u64 Field::inv_gf2(u64 a) const {
    u64 u = a, v = gf2_mod_, g1 = 1, g2 = 0;
    while (u != 1) {
        int j = (63 - __builtin_clzll(u)) - (63 - __builtin_clzll(v));
        if (j < 0) {
            std::swap(u, v);
            std::swap(g1, g2);
            j = -j;
        }
        u ^= v << j;
        g1 ^= g2 << j;
    }
    return g1;
}

u64 Field::inv_generic(u64 a) const {
    BaseOps ops(base_);
    std::vector<u64> r0(modulus_), r1 = digits(a), s0, s1{1};
    vtrim(r1);
    while (vdeg(r1) > 0) {
        // r0 = q*r1 + r
        const int dr1 = vdeg(r1);
        const u64 lead_inv = ops.inv(r1[dr1]);
        std::vector<u64> q(std::max(0, vdeg(r0) - dr1 + 1), 0);
        for (int k = vdeg(r0); k >= dr1; k = vdeg(r0)) {
            const u64 c = ops.mul(r0[k], lead_inv);
            q[k - dr1] = c;
            for (int i = 0; i <= dr1; ++i) r0[k - dr1 + i] = ops.sub(r0[k - dr1 + i], ops.mul(c, r1[i]));
            if (k == 0) break;
        }
        vtrim(r0);
        // s = s0 - q*s1
        std::vector<u64> s(std::max(s0.size(), q.size() + s1.size()), 0);
        for (std::size_t i = 0; i < s0.size(); ++i) s[i] = s0[i];
        for (std::size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (std::size_t j = 0; j < s1.size(); ++j) s[i + j] = ops.sub(s[i + j], ops.mul(q[i], s1[j]));
        }
        vtrim(s);
        std::swap(r0, r1);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    const u64 c = ops.inv(r1[0]);
    std::vector<u64> out(n_, 0);
    for (std::size_t i = 0; i < s1.size() && i < out.size(); ++i) out[i] = ops.mul(s1[i], c);
    return from_digits(out);
}

u64 Field::pow(u64 a, u64 e) const noexcept {
    u64 r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        e >>= 1;
        if (e) a = mul(a, a);
    }
    return r;
}

u64 Field::pow_big(u64 a, u128 e) const noexcept {
    u64 r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        e >>= 1;
        if (e) a = mul(a, a);
    }
    return r;
}

u64 Field::from_int(std::int64_t v) const noexcept {
    const auto p = static_cast<std::int64_t>(p_);
    std::int64_t r = v % p;
    if (r < 0) r += p;
    return static_cast<u64>(r);
}

u64 Field::scale_prime(u64 c, u64 a) const noexcept { return mul(c % p_, a); }

u64 Field::pth_root(u64 a) const noexcept { return pow(a, card_ / p_); }

u64 Field::trace(u64 a) const noexcept {
    if (kind_ == Kind::Prime) return a;
    if (gf2_) return static_cast<u64>(__builtin_popcountll(a & gf2_trace_mask_) & 1);
    u64 s = 0;
    for (int f = 0; f < abs_deg_ && a; ++f) {
        s = (s + (a % p_) * basis_trace_[f]) % p_;
        a /= p_;
    }
    return s;
}

u64 Field::trace_by_frobenius(u64 a) const noexcept {
    u64 s = 0, x = a;
    for (int j = 0; j < abs_deg_; ++j) {
        s = add(s, x);
        x = frobenius(x);
    }
    return s;
}

void Field::digits(u64 code, std::span<u64> out) const noexcept {
    if (kind_ == Kind::Prime) {
        out[0] = code;
        return;
    }
    const u64 q = base_->card_;
    for (int i = 0; i < n_; ++i) {
        out[i] = code % q;
        code /= q;
    }
}

std::vector<u64> Field::digits(u64 code) const {
    std::vector<u64> out(n_);
    digits(code, out);
    return out;
}

u64 Field::from_digits(std::span<const u64> coeffs) const noexcept {
    if (kind_ == Kind::Prime) return coeffs.empty() ? 0 : coeffs[0];
    const u64 q = base_->card_;
    u64 r = 0;
    for (int i = static_cast<int>(std::min<std::size_t>(coeffs.size(), n_)) - 1; i >= 0; --i) r = r * q + coeffs[i];
    return r;
}

std::vector<u64> Field::flat(u64 code) const {
    std::vector<u64> out(abs_deg_);
    for (int f = 0; f < abs_deg_; ++f) {
        out[f] = code % p_;
        code /= p_;
    }
    return out;
}

Element Field::element(u64 code) const { return {this, code}; }
Element Field::operator()(std::int64_t v) const { return {this, from_int(v)}; }
Element Field::gen() const { return {this, generator()}; }

std::string Field::format(u64 code) const {
    if (kind_ == Kind::Prime) return std::to_string(code);
    const char sep = base_->is_prime() ? ',' : ';';
    std::string s;
    std::array<u64, 64> d{};
    digits(code, std::span<u64>(d.data(), n_));
    for (int i = 0; i < n_; ++i) {
        if (i) s.push_back(sep);
        s += base_->format(d[i]);
    }
    return s;
}

u64 Field::parse(std::string_view text) const {
    text = text::trim(text);
    if (text.empty()) throw Error(Errc::ConfigParse, "empty element literal");
    if (text[0] == 'a') {
        if (kind_ == Kind::Prime) throw Error(Errc::ConfigParse, "'a' needs an extension field");
        if (text.size() == 1) return generator();
        if (text.size() < 3 || text[1] != '^') throw Error(Errc::ConfigParse, std::string(text));
        return pow(generator(), text::parse_u64(text.substr(2)));
    }
    if (kind_ == Kind::Prime) return from_int(text::parse_i64(text));
    const char sep = base_->is_prime() ? ',' : ';';
    auto parts = text::split(text, sep);
    if (static_cast<int>(parts.size()) > n_)
        throw Error(Errc::ConfigParse, "too many coordinates in '" + std::string(text) + "'");
    std::vector<u64> d(n_, 0);
    for (std::size_t i = 0; i < parts.size(); ++i) d[i] = base_->parse(parts[i]);
    return from_digits(d);
}

std::string Field::describe() const {
    if (kind_ == Kind::Prime) return "F_" + std::to_string(p_);
    return base_->describe() + "[T]/(" + format_poly(modulus()) + ")";
}

}  // namespace ffr

#include "ffr/poly.hpp"

#include <algorithm>

#include "ffr/error.hpp"
#include "ffr/text.hpp"

namespace ffr {

Poly::Poly(FieldPtr f, std::vector<u64> coeffs) : f_(f), c_(std::move(coeffs)) {
    for (u64 c : c_)
        if (c >= f_->cardinality()) throw Error(Errc::InvalidArgument, "coefficient out of range");
    trim();
}

Poly Poly::monomial(FieldPtr f, int deg, u64 code) {
    std::vector<u64> c(deg + 1, 0);
    c[deg] = code;
    return Poly(f, std::move(c));
}

Poly Poly::from_index(FieldPtr f, u64 idx, int m) {
    std::vector<u64> c(m, 0);
    const u64 q = f->cardinality();
    for (int i = 0; i < m; ++i) {
        c[i] = idx % q;
        idx /= q;
    }
    return Poly(f, std::move(c));
}

u64 Poly::to_index() const noexcept {
    const u64 q = f_->cardinality();
    u64 r = 0;
    for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i) r = r * q + c_[i];
    return r;
}

void Poly::trim() noexcept {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::monic() const {
    if (c_.empty() || c_.back() == 1) return *this;
    return scaled(f_->inv(c_.back()));
}

Poly Poly::scaled(u64 code) const {
    Poly r(f_);
    if (code == 0) return r;
    r.c_.resize(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = f_->mul(c_[i], code);
    r.trim();
    return r;
}

Poly Poly::derivative() const {
    Poly r(f_);
    if (c_.size() <= 1) return r;
    r.c_.resize(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = f_->mul(c_[i], f_->from_int(static_cast<std::int64_t>(i % f_->characteristic())));
    r.trim();
    return r;
}

u64 Poly::eval(u64 x) const noexcept {
    u64 r = 0;
    for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i) r = f_->add(f_->mul(r, x), c_[i]);
    return r;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = f_->neg(c);
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (!f_) f_ = o.f_;
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = f_->add(c_[i], o.c_[i]);
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (!f_) f_ = o.f_;
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = f_->sub(c_[i], o.c_[i]);
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    FieldPtr f = a.f_ ? a.f_ : b.f_;
    Poly r(f);
    if (a.c_.empty() || b.c_.empty()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            if (b.c_[j]) r.c_[i + j] = f->add(r.c_[i + j], f->mul(a.c_[i], b.c_[j]));
    }
    r.trim();
    return r;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw Error(Errc::DivisionByZero, "polynomial division by zero");
    FieldPtr f = b.field();
    const int db = b.degree();
    if (a.degree() < db) return {Poly(f), a};
    std::vector<u64> r(a.coeffs().begin(), a.coeffs().end());
    std::vector<u64> q(a.degree() - db + 1, 0);
    const u64 lead_inv = f->inv(b.lead());
    auto bc = b.coeffs();
    for (int k = a.degree(); k >= db; --k) {
        const u64 c = f->mul(r[k], lead_inv);
        if (c == 0) continue;
        q[k - db] = c;
        for (int i = 0; i <= db; ++i) r[k - db + i] = f->sub(r[k - db + i], f->mul(c, bc[i]));
    }
    r.resize(db);
    return {Poly(f, std::move(q)), Poly(f, std::move(r))};
}

Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

bool operator<(const Poly& a, const Poly& b) noexcept {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i)
        if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
    return false;
}

bool divides(const Poly& b, const Poly& a) { return (a % b).is_zero(); }

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

XgcdResult xgcd(const Poly& a, const Poly& b) {
    FieldPtr f = a.field() ? a.field() : b.field();
    Poly r0 = a, r1 = b, s0 = Poly::one(f), s1(f), t0(f), t1 = Poly::one(f);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        Poly s = s0 - q * s1;
        Poly t = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
        t0 = std::move(t1);
        t1 = std::move(t);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    const u64 li = f->inv(r0.lead());
    return {r0.scaled(li), s0.scaled(li), t0.scaled(li)};
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& m) { return (a * b) % m; }

Poly powmod(const Poly& a, u128 e, const Poly& m) {
    Poly r = Poly::one(m.field()) % m;
    Poly base = a % m;
    while (e) {
        if (e & 1) r = mulmod(r, base, m);
        e >>= 1;
        if (e) base = mulmod(base, base, m);
    }
    return r;
}

Poly pow(const Poly& a, unsigned e) {
    Poly r = Poly::one(a.field());
    Poly base = a;
    while (e) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

Poly pth_root(const Poly& a) {
    FieldPtr f = a.field();
    const u64 p = f->characteristic();
    if (a.is_zero()) return a;
    std::vector<u64> c(a.degree() / p + 1, 0);
    for (int i = 0; i <= a.degree(); ++i) {
        if (a.coeff(i) == 0) continue;
        if (i % p != 0) throw Error(Errc::InvalidArgument, "not a p-th power");
        c[i / p] = f->pth_root(a.coeff(i));
    }
    return Poly(f, std::move(c));
}

std::string format_poly(const Poly& f) {
    if (f.is_zero()) return "0";
    const char* sep = f.field()->is_prime() ? "," : ";";
    return text::join(f.coeffs(), sep, [&](u64 c) { return f.field()->format(c); });
}

std::string Poly::str() const { return format_poly(*this); }

Poly parse_poly(FieldPtr f, std::string_view s) {
    const char sep = f->is_prime() ? ',' : ';';
    std::vector<u64> c;
    for (auto part : text::split(s, sep)) c.push_back(f->parse(part));
    return Poly(f, std::move(c));
}

}  // namespace ffr

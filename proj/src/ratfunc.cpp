#include "ffr/ratfunc.hpp"

#include "ffr/error.hpp"

namespace ffr {

RatFunc::RatFunc(Poly num) : num_(std::move(num)), den_(Poly::one(num_.field())) {}

RatFunc::RatFunc(Poly num, Poly den) {
    if (den.is_zero()) throw Error(Errc::DivisionByZero, "rational function with zero denominator");
    FieldPtr f = den.field();
    if (num.is_zero()) {
        num_ = Poly(f);
        den_ = Poly::one(f);
        return;
    }
    const Poly g = gcd(num, den);
    if (!g.is_one()) {
        num = num / g;
        den = den / g;
    }
    const u64 li = f->inv(den.lead());
    num_ = num.scaled(li);
    den_ = den.scaled(li);
}

RatFunc RatFunc::inv() const {
    if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero rational function");
    return RatFunc(den_, num_);
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc(a.field());
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

std::string RatFunc::str() const {
    if (is_polynomial()) return format_poly(num_);
    return format_poly(num_) + "/" + format_poly(den_);
}

namespace ratpoly {

int degree(const RatPoly& a) noexcept { return a.empty() ? kNegInfDegree : static_cast<int>(a.size()) - 1; }

void trim(RatPoly& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

RatPoly add(const RatPoly& a, const RatPoly& b) {
    RatPoly r = a.size() >= b.size() ? a : b;
    const RatPoly& s = a.size() >= b.size() ? b : a;
    for (std::size_t i = 0; i < s.size(); ++i) r[i] = r[i] + s[i];
    trim(r);
    return r;
}

RatPoly sub(const RatPoly& a, const RatPoly& b) {
    RatPoly nb;
    for (auto& c : b) nb.push_back(-c);
    return add(a, nb);
}

RatPoly mul(const RatPoly& a, const RatPoly& b) {
    if (a.empty() || b.empty()) return {};
    FieldPtr f = a[0].field();
    RatPoly r(a.size() + b.size() - 1, RatFunc::zero(f));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
    }
    trim(r);
    return r;
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
    if (b.empty()) throw Error(Errc::DivisionByZero, "division by the zero polynomial");
    FieldPtr f = b[0].field();
    const int db = degree(b);
    if (degree(a) < db) return {{}, a};
    RatPoly r = a, q(a.size() - b.size() + 1, RatFunc::zero(f));
    const RatFunc li = b.back().inv();
    for (int k = degree(a); k >= db; --k) {
        if (r[k].is_zero()) continue;
        const RatFunc c = r[k] * li;
        q[k - db] = c;
        for (int i = 0; i <= db; ++i) r[k - db + i] = r[k - db + i] - c * b[i];
    }
    r.resize(db);
    trim(r);
    trim(q);
    return {q, r};
}

namespace {

RatPoly scaled(const RatPoly& a, const RatFunc& c) {
    RatPoly r;
    for (auto& x : a) r.push_back(x * c);
    trim(r);
    return r;
}

}  // namespace

RatPoly gcd(const RatPoly& a, const RatPoly& b) {
    RatPoly x = a, y = b;
    while (!y.empty()) {
        RatPoly r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    if (x.empty()) return x;
    return scaled(x, x.back().inv());
}

Xgcd xgcd(const RatPoly& a, const RatPoly& b, FieldPtr f) {
    RatPoly r0 = a, r1 = b, s0{RatFunc::one(f)}, s1, t0, t1{RatFunc::one(f)};
    while (!r1.empty()) {
        auto [q, r] = divmod(r0, r1);
        RatPoly s = sub(s0, mul(q, s1));
        RatPoly t = sub(t0, mul(q, t1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
        t0 = std::move(t1);
        t1 = std::move(t);
    }
    if (r0.empty()) return {r0, s0, t0};
    const RatFunc li = r0.back().inv();
    return {scaled(r0, li), scaled(s0, li), scaled(t0, li)};
}

}  // namespace ratpoly

}  // namespace ffr

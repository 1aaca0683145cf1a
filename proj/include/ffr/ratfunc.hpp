#pragma once

#include <string>
#include <vector>

#include "ffr/poly.hpp"

namespace ffr {

/// Element of F_q(T) kept reduced: gcd(num, den) = 1 and den monic.
/// Zero is 0/1.
class RatFunc {
public:
    RatFunc() = default;
    explicit RatFunc(FieldPtr f) : num_(f), den_(Poly::one(f)) {}
    RatFunc(Poly num);  // NOLINT: a polynomial is a rational function
    RatFunc(Poly num, Poly den);  // throws DivisionByZero

    static RatFunc zero(FieldPtr f) { return RatFunc(f); }
    static RatFunc one(FieldPtr f) { return RatFunc(Poly::one(f)); }

    FieldPtr field() const noexcept { return den_.field(); }
    const Poly& num() const noexcept { return num_; }
    const Poly& den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_one() const noexcept { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const noexcept { return den_.degree() == 0; }

    RatFunc inv() const;  // throws DivisionByZero
    RatFunc operator-() const { return RatFunc(-num_, den_, true); }
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inv(); }

    friend bool operator==(const RatFunc& a, const RatFunc& b) noexcept {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator<(const RatFunc& a, const RatFunc& b) noexcept {
        if (!(a.den_ == b.den_)) return a.den_ < b.den_;
        return a.num_ < b.num_;
    }

    // "num" when polynomial, otherwise "num/den", each in the polynomial text form.
    std::string str() const;

private:
    RatFunc(Poly num, Poly den, bool) : num_(std::move(num)), den_(std::move(den)) {}
    Poly num_, den_;
};

/// Polynomials in Z over F_q(T), coefficients low to high, no trailing zeros.
using RatPoly = std::vector<RatFunc>;

namespace ratpoly {

int degree(const RatPoly& a) noexcept;
void trim(RatPoly& a);
RatPoly add(const RatPoly& a, const RatPoly& b);
RatPoly sub(const RatPoly& a, const RatPoly& b);
RatPoly mul(const RatPoly& a, const RatPoly& b);
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);
// Monic gcd over F_q(T).
RatPoly gcd(const RatPoly& a, const RatPoly& b);
// s*a + t*b = g with g monic.
struct Xgcd {
    RatPoly g, s, t;
};
Xgcd xgcd(const RatPoly& a, const RatPoly& b, FieldPtr f);

}  // namespace ratpoly

}  // namespace ffr

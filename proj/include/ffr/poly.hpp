#pragma once

#include <climits>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ffr/field.hpp"

namespace ffr {

// Degree of the zero polynomial.
inline constexpr int kNegInfDegree = INT_MIN;

/// Dense univariate polynomial over a field, coefficients low to high.
/// Always canonical: no trailing zero coefficients.
class Poly {
public:
    Poly() = default;
    explicit Poly(FieldPtr f) : f_(f) {}
    Poly(FieldPtr f, std::vector<u64> coeffs);

    static Poly constant(FieldPtr f, u64 code) { return Poly(f, {code}); }
    static Poly one(FieldPtr f) { return constant(f, 1); }
    static Poly monomial(FieldPtr f, int deg, u64 code = 1);
    // T + c
    static Poly linear(FieldPtr f, u64 c) { return Poly(f, {c, 1}); }
    // Polynomial whose coefficients are the base digits of idx (degree < m).
    static Poly from_index(FieldPtr f, u64 idx, int m);

    FieldPtr field() const noexcept { return f_; }
    int degree() const noexcept { return c_.empty() ? kNegInfDegree : static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }
    u64 coeff(int i) const noexcept { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : 0; }
    u64 lead() const noexcept { return c_.empty() ? 0 : c_.back(); }
    std::span<const u64> coeffs() const noexcept { return c_; }

    Poly monic() const;
    Poly derivative() const;
    Poly scaled(u64 code) const;
    u64 eval(u64 x) const noexcept;
    // Index of this polynomial among those of degree < m (inverse of from_index).
    u64 to_index() const noexcept;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator/(const Poly& a, const Poly& b);
    friend Poly operator%(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b) noexcept { return a.f_ == b.f_ && a.c_ == b.c_; }

    // Canonical order: by degree, then coefficients from the top.
    friend bool operator<(const Poly& a, const Poly& b) noexcept;

    std::string str() const;

private:
    void trim() noexcept;

    FieldPtr f_ = nullptr;
    std::vector<u64> c_;
};

// Quotient and remainder; b must be nonzero (DivisionByZero).
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
// True iff b divides a exactly (b nonzero).
bool divides(const Poly& b, const Poly& a);
// Monic gcd (zero iff both are zero).
Poly gcd(const Poly& a, const Poly& b);

struct XgcdResult {
    Poly g, s, t;  // g = s*a + t*b, g monic
};
XgcdResult xgcd(const Poly& a, const Poly& b);

Poly mulmod(const Poly& a, const Poly& b, const Poly& m);
Poly powmod(const Poly& a, u128 e, const Poly& m);
Poly pow(const Poly& a, unsigned e);
// Substitute x -> x^(1/p) coefficientwise and T^(pk) -> T^k; requires all
// exponents divisible by p.
Poly pth_root(const Poly& a);

// Text format: coefficients low to high, separated by ',' over a prime field
// and by ';' over a quotient field (each coefficient in that field's format).
std::string format_poly(const Poly& f);
Poly parse_poly(FieldPtr f, std::string_view text);

}  // namespace ffr

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ffr/poly.hpp"

namespace ffr {

/// Polynomial in Z with coefficients in F_q[T]: sum_i c[i](T) Z^i.
/// No trailing zero coefficients; the zero polynomial has degZ = kNegInfDegree.
class BivarPoly {
public:
    BivarPoly() = default;
    explicit BivarPoly(FieldPtr f) : f_(f) {}
    BivarPoly(FieldPtr f, std::vector<Poly> coeffs);

    // Z + c
    static BivarPoly linear(const Poly& c);

    FieldPtr field() const noexcept { return f_; }
    int degZ() const noexcept { return c_.empty() ? kNegInfDegree : static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_monic() const noexcept { return !c_.empty() && c_.back().is_one(); }
    const Poly& lead() const { return c_.back(); }
    Poly coeff(int i) const;
    const std::vector<Poly>& coeffs() const noexcept { return c_; }
    // Max T-degree over all coefficients.
    int degT() const noexcept;

    // Substitute Z = z.
    Poly eval(const Poly& z) const;

    BivarPoly operator-() const;
    friend BivarPoly operator+(const BivarPoly& a, const BivarPoly& b);
    friend BivarPoly operator-(const BivarPoly& a, const BivarPoly& b) { return a + (-b); }
    friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);
    friend bool operator==(const BivarPoly& a, const BivarPoly& b) noexcept { return a.c_ == b.c_; }

    // Z-coefficients low to high separated by '|', each in the polynomial text form.
    std::string str() const;
    static BivarPoly parse(FieldPtr f, std::string_view s);

private:
    void trim();
    FieldPtr f_ = nullptr;
    std::vector<Poly> c_;
};

}  // namespace ffr

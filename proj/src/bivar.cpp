#include "ffr/bivar.hpp"

#include <algorithm>

#include "ffr/text.hpp"

namespace ffr {

BivarPoly::BivarPoly(FieldPtr f, std::vector<Poly> coeffs) : f_(f), c_(std::move(coeffs)) {
    for (auto& c : c_)
        if (!c.field()) c = Poly(f_);
    trim();
}

BivarPoly BivarPoly::linear(const Poly& c) { return BivarPoly(c.field(), {c, Poly::one(c.field())}); }

void BivarPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly BivarPoly::coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : Poly(f_); }

int BivarPoly::degT() const noexcept {
    int d = kNegInfDegree;
    for (auto& c : c_) d = std::max(d, c.degree());
    return d;
}

Poly BivarPoly::eval(const Poly& z) const {
    Poly r(f_);
    for (int i = degZ(); i >= 0; --i) r = r * z + c_[i];
    return r;
}

BivarPoly BivarPoly::operator-() const {
    BivarPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

BivarPoly operator+(const BivarPoly& a, const BivarPoly& b) {
    FieldPtr f = a.f_ ? a.f_ : b.f_;
    std::vector<Poly> c(std::max(a.c_.size(), b.c_.size()), Poly(f));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return BivarPoly(f, std::move(c));
}

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
    FieldPtr f = a.f_ ? a.f_ : b.f_;
    if (a.is_zero() || b.is_zero()) return BivarPoly(f);
    std::vector<Poly> c(a.c_.size() + b.c_.size() - 1, Poly(f));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return BivarPoly(f, std::move(c));
}

std::string BivarPoly::str() const {
    if (c_.empty()) return "0";
    return text::join(c_, "|", [](const Poly& p) { return format_poly(p); });
}

BivarPoly BivarPoly::parse(FieldPtr f, std::string_view s) {
    std::vector<Poly> c;
    for (auto part : text::split(s, '|')) c.push_back(parse_poly(f, text::trim(part)));
    return BivarPoly(f, std::move(c));
}

}  // namespace ffr

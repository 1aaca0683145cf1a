#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ffr/numtheory.hpp"

namespace ffr {

class Poly;
class Field;
class Element;

// Fields are interned and live for the whole process, so a raw pointer is a
// valid handle everywhere and descriptor equality is pointer equality.
using FieldPtr = const Field*;

/// A prime field F_p, or a quotient base[T]/(modulus) of tower depth at most 2.
///
/// Elements are encoded as integers in [0, cardinality): the base-p digits of
/// the code are the F_p coordinates of the element in the power basis of each
/// level, lowest level fastest. For a quotient over B the code is
/// sum_i c_i * |B|^i where c_i are the codes of the base coefficients, so the
/// element with coordinates (a_0, ..., a_{m-1}) over the base has code
/// a_0 + a_1 |B| + ... and the class of T has code |B|.
class Field {
public:
    enum class Kind { Prime, Quotient };

    static constexpr int kMaxDepth = 2;

    static FieldPtr prime(u64 p);
    static FieldPtr extend(FieldPtr base, const Poly& modulus);

    Kind kind() const noexcept { return kind_; }
    bool is_prime() const noexcept { return kind_ == Kind::Prime; }
    u64 characteristic() const noexcept { return p_; }
    u64 cardinality() const noexcept { return card_; }
    // Degree over the immediate base (1 for prime fields).
    int degree() const noexcept { return n_; }
    int absolute_degree() const noexcept { return abs_deg_; }
    int depth() const noexcept { return depth_; }
    FieldPtr base() const noexcept { return base_; }
    FieldPtr prime_field() const noexcept;
    std::span<const u64> modulus_codes() const noexcept { return modulus_; }
    Poly modulus() const;

    // Code-level arithmetic. All inputs must be canonical codes of this field.
    u64 add(u64 a, u64 b) const noexcept;
    u64 sub(u64 a, u64 b) const noexcept;
    u64 neg(u64 a) const noexcept;
    u64 mul(u64 a, u64 b) const noexcept;
    u64 inv(u64 a) const;  // throws DivisionByZero
    u64 div(u64 a, u64 b) const { return mul(a, inv(b)); }
    u64 pow(u64 a, u64 e) const noexcept;
    u64 pow_big(u64 a, u128 e) const noexcept;
    // Image of an integer under Z -> F_p -> this field.
    u64 from_int(std::int64_t v) const noexcept;
    // Class of T (requires a quotient field).
    u64 generator() const noexcept { return base_ ? base_->card_ : 0; }

    // F_p-scalar multiple, c in [0, p).
    u64 scale_prime(u64 c, u64 a) const noexcept;
    u64 frobenius(u64 a) const noexcept { return pow(a, p_); }
    // Inverse Frobenius x -> x^(1/p) = x^(|F|/p).
    u64 pth_root(u64 a) const noexcept;

    // Absolute trace to F_p via the precomputed linear functional; result in [0, p).
    u64 trace(u64 a) const noexcept;
    // Absolute trace as sum_j a^(p^j); independent of the cached functional.
    u64 trace_by_frobenius(u64 a) const noexcept;

    // Coefficients over the immediate base, length degree().
    void digits(u64 code, std::span<u64> out) const noexcept;
    std::vector<u64> digits(u64 code) const;
    u64 from_digits(std::span<const u64> coeffs) const noexcept;
    // F_p coordinates (base-p digits of the code), length absolute_degree().
    std::vector<u64> flat(u64 code) const;

    Element element(u64 code) const;
    Element operator()(std::int64_t v) const;
    Element gen() const;

    // Canonical text: prime -> residue; quotient -> base coefficients joined by
    // ',' (over a prime base) or ';' (over a quotient base).
    std::string format(u64 code) const;
    // Accepts the canonical form (trailing coordinates may be omitted),
    // "a", "a^k" for powers of the class of T, and plain integers.
    u64 parse(std::string_view text) const;

    // Short human label such as "F_2", "F_2[T]/(1,1,1)".
    std::string describe() const;

    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

private:
    Field() = default;
    void init_trace();
    u64 mul_generic(u64 a, u64 b) const noexcept;
    u64 inv_generic(u64 a) const;
    u64 mul_gf2(u64 a, u64 b) const noexcept;
    u64 inv_gf2(u64 a) const;

    Kind kind_ = Kind::Prime;
    u64 p_ = 0;
    u64 card_ = 0;
    int n_ = 1;
    int abs_deg_ = 1;
    int depth_ = 0;
    FieldPtr base_ = nullptr;
    std::vector<u64> modulus_;  // monic, length n_ + 1, base codes
    bool gf2_ = false;          // depth 1 over F_2: codes are bit polynomials
    u64 gf2_mod_ = 0;
    std::vector<u64> basis_trace_;  // trace of p^f for each flat coordinate f
    u64 gf2_trace_mask_ = 0;
};

/// A field value bound to its descriptor. Cheap to copy.
class Element {
public:
    Element() = default;
    Element(FieldPtr f, u64 code) : f_(f), code_(code) {}

    FieldPtr field() const noexcept { return f_; }
    u64 code() const noexcept { return code_; }
    bool is_zero() const noexcept { return code_ == 0; }
    bool is_one() const noexcept { return code_ == 1; }

    Element inv() const { return {f_, f_->inv(code_)}; }
    Element pow(u64 e) const { return {f_, f_->pow(code_, e)}; }
    Element trace() const { return {f_, f_->trace(code_)}; }
    std::string str() const { return f_->format(code_); }

    friend Element operator+(Element a, Element b) { return {a.f_, a.f_->add(a.code_, b.code_)}; }
    friend Element operator-(Element a, Element b) { return {a.f_, a.f_->sub(a.code_, b.code_)}; }
    friend Element operator*(Element a, Element b) { return {a.f_, a.f_->mul(a.code_, b.code_)}; }
    friend Element operator/(Element a, Element b) { return {a.f_, a.f_->div(a.code_, b.code_)}; }
    Element operator-() const { return {f_, f_->neg(code_)}; }
    Element& operator+=(Element o) { return *this = *this + o; }
    Element& operator*=(Element o) { return *this = *this * o; }

    friend bool operator==(Element a, Element b) noexcept { return a.f_ == b.f_ && a.code_ == b.code_; }

private:
    FieldPtr f_ = nullptr;
    u64 code_ = 0;
};

// Trace to F_p of any element.
inline Element trace_to_prime(Element x) { return {x.field(), x.field()->trace(x.code())}; }
inline Element invert(Element x) { return x.inv(); }

}  // namespace ffr

template <>
struct std::hash<ffr::Element> {
    std::size_t operator()(const ffr::Element& e) const noexcept { return std::hash<std::uint64_t>{}(e.code()); }
};

#pragma once

#include <map>
#include <optional>
#include <vector>

#include "ffr/bivar.hpp"
#include "ffr/options.hpp"
#include "ffr/ratfunc.hpp"

namespace ffr {

/// beta = xi / mu where xi is a root of g, monic in Z with coefficients in
/// F_q[T] (so xi is integral over F_q[T]); d = degZ g.
struct AlgebraicShift {
    BivarPoly g;
    Poly mu;

    int d() const noexcept { return g.degZ(); }
    FieldPtr field() const noexcept { return mu.field(); }
    // d = 1 shift beta = xi0 / mu, i.e. g = Z - xi0.
    static AlgebraicShift rational(const Poly& xi0, const Poly& mu);
};

/// Irreducibility of a monic g in F_q[T][Z] over F_q(T). By Gauss's lemma it
/// suffices to look for monic factors in F_q[T][Z]; every root has T-degree at
/// most D = max_i deg g_i / (d - i), so the coefficient of Z^(e-j) in a factor
/// of degree e has degree at most floor(j D). Candidates are enumerated within
/// the enumeration budget (BudgetExceeded otherwise).
bool irreducible_over_rational_functions(const BivarPoly& g, const Budget& budget = {});

/// F_q(T)[Z] / g. Elements are reduced coefficient vectors of length < d.
class AlgebraicExtension {
public:
    // Throws NotMonic / ConstantInZ; irreducibility is not checked here.
    explicit AlgebraicExtension(const BivarPoly& g);

    FieldPtr field() const noexcept { return f_; }
    int degree() const noexcept { return static_cast<int>(g_.size()) - 1; }

    RatPoly reduce(const RatPoly& a) const;
    RatPoly z() const { return reduce({RatFunc::zero(f_), RatFunc::one(f_)}); }
    RatPoly from(const RatFunc& c) const { return reduce({c}); }
    RatPoly add(const RatPoly& a, const RatPoly& b) const { return ratpoly::add(a, b); }
    RatPoly sub(const RatPoly& a, const RatPoly& b) const { return ratpoly::sub(a, b); }
    RatPoly mul(const RatPoly& a, const RatPoly& b) const { return reduce(ratpoly::mul(a, b)); }
    // DivisionByZero for 0; ReducibleMinimalPolynomial if a is a zero divisor.
    RatPoly inv(const RatPoly& a) const;
    // nullopt for 0 and zero divisors.
    std::optional<RatPoly> try_inv(const RatPoly& a) const;

private:
    FieldPtr f_;
    RatPoly g_;
};

// The q^m polynomials of degree < m over f, in index order.
std::vector<Poly> polys_below(FieldPtr f, int m, const Budget& budget = {});

/// 1/(x + beta) for each x in P_m, nullopt where x + beta = 0.
std::vector<std::optional<RatPoly>> shifted_reciprocals(const AlgebraicShift& shift, int m,
                                                        const Budget& budget = {});

/// N_k(beta, m): ordered 2k-tuples from P_m with equal half sums of
/// 1/(x_i + beta); an x with x + beta = 0 is excluded from every tuple.
/// Throws ReducibleMinimalPolynomial for reducible g, BudgetExceeded when
/// (q^m)^k exceeds the enumeration budget.
u128 count_Nk_function_field(const AlgebraicShift& shift, int m, int k, const RunOptions& opts = {});

/// Same count by direct enumeration of 2k-tuples (oracle budget).
u128 count_Nk_function_field_oracle(const AlgebraicShift& shift, int m, int k, const Budget& budget = {});

/// All solution tuples, as indices into polys_below(f, m), in lexicographic order.
std::vector<std::vector<u64>> function_field_solutions(const AlgebraicShift& shift, int m, int k,
                                                       const Budget& budget = {});

}  // namespace ffr

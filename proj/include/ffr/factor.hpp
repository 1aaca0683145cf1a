#pragma once

#include <cstdint>
#include <vector>

#include "ffr/poly.hpp"

namespace ffr {

struct Factor {
    Poly poly;  // monic irreducible
    int multiplicity;

    friend bool operator==(const Factor&, const Factor&) = default;
};

/// Rabin's test: f of degree n is irreducible iff T^(q^n) = T mod f and
/// gcd(T^(q^(n/l)) - T, f) = 1 for each prime l | n. Constants are not
/// irreducible; degree-1 polynomials are.
bool poly_irreducible_test(const Poly& f);

// Square-free decomposition of a monic polynomial: pairs (g_i, i) with g_i
// square-free, pairwise coprime, f = prod g_i^i. Handles f' = 0 via p-th roots.
std::vector<Factor> square_free_decomposition(const Poly& f);

// Distinct-degree split of a monic square-free polynomial: (product of all
// irreducible factors of degree d, d).
std::vector<std::pair<Poly, int>> distinct_degree_factorization(const Poly& f);

// Equal-degree split (Cantor-Zassenhaus) of a monic square-free product of
// irreducibles of degree d.
std::vector<Poly> equal_degree_factorization(const Poly& f, int d, std::uint64_t seed);

/// Full factorization into monic irreducibles with multiplicities, sorted in
/// canonical polynomial order. Throws ZeroPolynomial.
std::vector<Factor> poly_factor(const Poly& f, std::uint64_t seed = 0);

/// Number of monic divisors, prod (e_i + 1). Throws ZeroPolynomial.
std::uint64_t divisor_count(const Poly& f);

/// Seeded rejection sampling of a monic irreducible of degree n over f.
/// Throws InvalidArgument for n < 2.
Poly auto_irreducible(FieldPtr f, int n, std::uint64_t seed);

}  // namespace ffr

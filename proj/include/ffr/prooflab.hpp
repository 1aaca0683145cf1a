#pragma once

#include <string>
#include <vector>

#include "ffr/bivar.hpp"
#include "ffr/funcfield.hpp"

namespace ffr {

/// P_x(Z) = sum_{s<=k} prod_{j!=s}(x_j + Z) - sum_{s>k} prod_{j!=s}(x_j + Z)
/// for a tuple of 2k polynomials.
BivarPoly build_Px(const std::vector<Poly>& tuple);

// P_x(gamma) == 0 mod psi.
bool px_root_check(const std::vector<Poly>& tuple, const Poly& gamma, const Poly& psi);

/// Determinant of the Sylvester matrix (f-rows first) by fraction-free
/// elimination over F_q[T]. Throws ZeroPolynomial, ConstantInZ.
Poly resultant_Z(const BivarPoly& f, const BivarPoly& g);

struct DegreeCertificate {
    long long bound = 0;
    int actual = kNegInfDegree;  // kNegInfDegree when the resultant is zero
    bool ok = false;
};

/// deg_T Res(f, g) against (k^2 - 1) M. Hypothesis: 1 <= degZ f, degZ g <= k-1
/// and deg_T of the Z^i coefficient < (k - i) M, constant terms included.
/// Throws HypothesisViolated.
DegreeCertificate lemma21_degree_check(const BivarPoly& f, const BivarPoly& g, int M, int k);

/// Whether Res(P_x, P_y) is the zero polynomial. A P that is constant in Z is
/// handled directly: Res(c, h) = c^degZ(h), and a zero P gives zero.
bool resultant_solution_check(const std::vector<Poly>& tx, const std::vector<Poly>& ty);

/// Nm(mu x + xi) = (-1)^d g(-mu x).
Poly norm_of_shift(const AlgebraicShift& shift, const Poly& x);

/// Whether Nm(mu x_i + xi) divides mu^{(2k-1)d} prod_{j!=i}(x_j - x_i)^d.
/// Throws RepeatedCoordinates, NotASolution (tuple does not solve the
/// equation for beta = xi/mu, or hits a zero denominator).
bool norm_divisibility_check(const AlgebraicShift& shift, const std::vector<Poly>& tuple, int i);

}  // namespace ffr

#pragma once

#include <vector>

#include "cube_spectra/exact.hpp"
#include "cube_spectra/polynomial.hpp"

namespace cube {

inline constexpr int kMaxChebyshevDegree = 64;

/// Integer coefficients of T_d via T_{d+1} = 2z T_d - T_{d-1}.
std::vector<BigInt> chebyshev_coefficients_exact(int d);

RealPolynomial chebyshev_poly(int d);

/// T_d(z) through the three-term recurrence (stable on [-1, 1]).
double chebyshev_value(int d, double z);

/// C(d, l), the coefficient of z^l in T_d, from the closed form
/// (-1)^((d-l)/2) 2^l d/(d+l) binom((d+l)/2, l); zero on parity mismatch; C(0,0) = 1.
BigInt cheb_coefficient_exact(int d, int l);
double cheb_coefficient(int d, int l);

/// Ceiling on ||f_l||_inf for bounded degree-d f: |C(d,l)| if d = l mod 2,
/// otherwise |C(d-1,l)|.
double theorem1_bound(int d, int l);

/// d^l / l!.
double naive_bound(int d, int l);

/// Ceiling on ||f^_l||_1 for bounded degree-d f: n^((l-1)/2) d^l e^binom(l+1,2).
double theorem2_bound(int n, int d, int l);

}  // namespace cube

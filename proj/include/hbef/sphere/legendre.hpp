#pragma once

#include "hbef/types.hpp"

namespace hbef {

// Legendre polynomial P_l(x) by the three-term recurrence
// l P_l = (2l-1) x P_{l-1} - (l-1) P_{l-2}, P_0 = 1, P_1 = x.
double legendre_p(int l, double x);

// All of P_0..P_L at once (same recurrence).
Vector legendre_p_all(int l_max, double x);

// Derivative P_l'(x) from (1-x^2) P_l' = l (P_{l-1} - x P_l); |x| < 1 required.
double legendre_p_derivative(int l, double x);

// Associated Legendre P_l^m(x) with the Condon-Shortley phase,
// P_l^m = (-1)^m (1-x^2)^{|m|/2} d^{|m|}/dx^{|m|} P_l(x),
// evaluated by the m-diagonal seed plus upward-in-l recurrence.
// Negative m is accepted and evaluates as P_l^{|m|}.
double assoc_legendre(int l, int m, double x);

// Spherical-harmonic-normalized associated Legendre,
//   Nbar_l^m(x) = sqrt((2l+1)/(4 pi) * (l-m)!/(l+m)!) * P_l^m(x),  m >= 0,
// by the fully normalized recurrence (no intermediate overflow).
double normalized_assoc_legendre(int l, int m, double x);

// Column k of the result holds Nbar_l^m for all (l, m), 0 <= m <= l <= l_max,
// packed as index = l*(l+1)/2 + m, evaluated at x[k].
Matrix normalized_assoc_legendre_table(int l_max, const Vector& x);

inline Index packed_lm_index(int l, int m) { return static_cast<Index>(l) * (l + 1) / 2 + m; }

}  // namespace hbef

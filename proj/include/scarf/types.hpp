#pragma once

#include <complex>

namespace scarf {

using Complex = std::complex<double>;

// Units: hbar^2 = 2*mu = 1, so E = k^2 throughout.

// Below this |k| the sinh(pi k) denominator of the reflection factor and the
// Gamma(-ik) denominators make the amplitudes unreliable; treated as a caller
// error, not a numerical failure.
inline constexpr double k_min = 1e-8;

// Arguments closer than this to a Gamma pole are flagged, not rejected.
inline constexpr double pole_threshold = 1e-6;

// Absolute tolerance for Hamiltonian classification; inputs are O(1)-O(10)
// exact arithmetic combinations.
inline constexpr double tol_class = 1e-12;

}  // namespace scarf

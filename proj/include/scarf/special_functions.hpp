#pragma once

#include <optional>

#include "scarf/types.hpp"

namespace scarf {

/// Gamma value plus pole-proximity report. nearest_pole is the non-positive
/// integer -p the argument sits closest to, set only when the distance is
/// below pole_threshold; the value itself is still returned so callers can
/// decide whether a flagged evaluation means "spectral singularity detected".
struct GammaResult {
    Complex value;
    std::optional<int> nearest_pole;
    double pole_distance = 0.0;

    bool near_pole() const { return nearest_pole.has_value(); }
};

/// Gamma(z) by Lanczos approximation (g = 7, 9 coefficients), reflection
/// formula for Re(z) < 1/2. Relative error <= 1e-12 for |z| <= 30 away from
/// poles. Throws ExactPoleError when z is exactly a non-positive integer.
GammaResult complex_gamma(Complex z);

/// log Gamma(z) on the standard branch: continuous on the plane cut along the
/// negative real axis, real on the positive real axis. exp(result) = Gamma(z)
/// to relative 1e-12.
Complex log_complex_gamma(Complex z);

/// The bracketed factor of the reflection amplitude,
///   cos(pi A) sinh(pi B)/cosh(pi k) + i sin(pi A) cosh(pi B)/sinh(pi k),
/// evaluated via exponential scaling so large |Im A|, |Im B| or |k| cannot
/// overflow intermediates. Accepts signed k; throws BelowKMinError when
/// 0 < |k| < k_min.
Complex safe_trig_ratio(Complex A, Complex B, double k);

/// Distance from z to the nearest non-positive integer, and that integer.
std::pair<int, double> nearest_nonpositive_integer(Complex z);

}  // namespace scarf

#pragma once

#include <optional>

#include "scarf/scarf_model.hpp"
#include "scarf/types.hpp"

namespace scarf {

/// Transmission amplitude with pole-proximity report. pole_factor is the
/// index (0..3) of the numerator Gamma argument that sits within
/// pole_threshold of a non-positive integer, if any; such evaluations are
/// returned, not clamped.
struct Transmission {
    Complex value;
    std::optional<int> pole_factor;
    double pole_distance = 0.0;

    bool singular() const { return pole_factor.has_value(); }
};

struct Reflections {
    Complex left;
    Complex right;
};

/// Amplitudes at a signed real wavenumber. t is incidence-independent; the
/// reflections differ. k < 0 is the time-reversed channel.
struct ScatteringAmplitudes {
    double k = 0.0;
    Complex t;
    Complex r_left;
    Complex r_right;
    std::optional<int> singular_factor;

    bool singular() const { return singular_factor.has_value(); }
};

/// |t|^2 and |r|^2 at E in both channels, with k = +sqrt(E) forward and
/// -sqrt(E) time-reversed.
struct ObservableSet {
    double T_fwd = 0.0;
    double T_rev = 0.0;
    double R_left_fwd = 0.0;
    double R_right_fwd = 0.0;
    double R_left_rev = 0.0;
    double R_right_rev = 0.0;
    bool singular = false;
};

/// t(k) = Gamma(-A-ik) Gamma(1+A-ik) Gamma(1/2-iB-ik) Gamma(1/2+iB-ik)
///      / (Gamma(-ik) Gamma(1-ik) Gamma^2(1/2-ik)),
/// computed as a single exponential of summed log-Gammas so individually
/// overflowing factors cannot poison an O(1) ratio.
/// Throws KTooSmallError for |k| < k_min, ExactSingularityError when a
/// numerator argument lands exactly on a pole.
Transmission transmission_amplitude(const ScarfParameters& p, double k);

/// Same closed form continued to complex k (used for pole confirmation on the
/// real and positive-imaginary axes). No proximity flagging.
Complex transmission_at(const ScarfParameters& p, Complex k);

/// r_left = t * bracket(A, B, k); r_right = t * bracket(A, -B, k).
Reflections reflection_amplitudes(const ScarfParameters& p, double k);

ScatteringAmplitudes amplitudes(const ScarfParameters& p, double k);

ObservableSet observables(const ScarfParameters& p, double E);

}  // namespace scarf

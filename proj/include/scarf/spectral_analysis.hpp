#pragma once

#include <vector>

#include "scarf/scarf_model.hpp"
#include "scarf/types.hpp"

namespace scarf {

/// Which transmitivity curve the singularity shows up in. A forward record
/// has k_star > 0 (forward scans evaluate t at +sqrt(E)); `both` is the
/// PT-collapsed case where one E* diverges in the forward and time-reversed
/// curves simultaneously.
enum class Channel { forward, time_reversed, both };

enum class SsSource { alpha_gamma_factor, beta_gamma_factor };

struct SpectralSingularityRecord {
    double k_star = 0.0;
    double E_star = 0.0;  // k_star^2
    Channel channel = Channel::forward;
    SsSource source = SsSource::alpha_gamma_factor;
};

enum class Branch { plus, minus };

struct BoundStateRecord {
    Branch branch = Branch::plus;
    int index = 0;          // M or N
    double energy = 0.0;    // -kappa^2
    double kappa = 0.0;
};

struct PoleCheck {
    bool is_pole = false;
    double growth_exponent = 0.0;
};

struct SpectrumEnumeration {
    std::vector<SpectralSingularityRecord> singularities;
    std::vector<BoundStateRecord> bound_states;
};

/// Real-alpha,beta sector: singularities at k* = alpha (from Gamma[-m+(alpha-k)i])
/// and k* = beta (from Gamma[-n+(beta-k)i]), channel by sign of k*. When
/// alpha + beta = 0 and m = n (the PT-symmetric case) the two collapse into a
/// single record reported in both channels. Sorted by E*.
std::vector<SpectralSingularityRecord> find_spectral_singularities(int m, int n, double alpha,
                                                                   double beta);

/// Bound-state sector alpha = i gamma, beta = i delta (gamma, delta > 0):
/// plus branch kappa = gamma + m - M for 0 <= M < m + gamma, minus branch
/// kappa = delta + n - N for 0 <= N < n + delta. Sorted by energy ascending.
/// No spectral singularity exists in this sector.
std::vector<BoundStateRecord> bound_states(int m, int n, double gamma, double delta);

/// Combined enumeration; each of alpha, beta is either real (contributes a
/// singularity) or purely imaginary with positive imaginary part (contributes
/// a bound-state branch), so the mixed sector is covered too.
SpectrumEnumeration enumerate_spectrum(int m, int n, Complex alpha, Complex beta);

/// Ratio test for a simple pole of t at k_candidate (real axis or positive
/// imaginary axis): |t| is sampled at distances {1e-2, 1e-3, 1e-4} along the
/// axis; successive ratios within 20% of 10 confirm the pole, and
/// growth_exponent is the fitted slope of log|t| against -log(eps).
PoleCheck confirm_pole(const ScarfParameters& p, Complex k_candidate);

}  // namespace scarf

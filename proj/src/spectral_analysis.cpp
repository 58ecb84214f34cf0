#include "scarf/spectral_analysis.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "scarf/analytic_scattering.hpp"
#include "scarf/errors.hpp"

namespace scarf {

namespace {

void append_branch(std::vector<BoundStateRecord>& out, Branch branch, int shift, double strength) {
    // kappa = strength + shift - index while it stays positive (index < shift + strength).
    for (int idx = 0; double(idx) < strength + shift; ++idx) {
        const double kappa = strength + shift - idx;
        out.push_back({branch, idx, -kappa * kappa, kappa});
    }
}

}  // namespace

SpectrumEnumeration enumerate_spectrum(int m, int n, Complex alpha, Complex beta) {
    if (m < 0 || n < 0) throw DomainError("enumerate_spectrum: m and n must be non-negative");
    SpectrumEnumeration out;

    const bool alpha_real = alpha.imag() == 0.0;
    const bool beta_real = beta.imag() == 0.0;
    const bool alpha_imag = !alpha_real && alpha.real() == 0.0;
    const bool beta_imag = !beta_real && beta.real() == 0.0;
    if (!alpha_real && !alpha_imag)
        throw DomainError("enumerate_spectrum: alpha must be real or purely imaginary");
    if (!beta_real && !beta_imag)
        throw DomainError("enumerate_spectrum: beta must be real or purely imaginary");
    if (alpha_imag && alpha.imag() < 0.0)
        throw DomainError("enumerate_spectrum: purely imaginary alpha needs Im(alpha) > 0");
    if (beta_imag && beta.imag() < 0.0)
        throw DomainError("enumerate_spectrum: purely imaginary beta needs Im(beta) > 0");

    // PT-collapsed case: one E* shows up in both channels.
    if (alpha_real && beta_real && alpha.real() != 0.0 && m == n &&
        classify(coefficients(from_parametrization(m, n, alpha, beta))) ==
            HamiltonianClass::PT_symmetric) {
        const double a = alpha.real();
        out.singularities.push_back(
            {std::abs(a), a * a, Channel::both, SsSource::alpha_gamma_factor});
        return out;
    }

    if (alpha_real && alpha.real() != 0.0) {
        const double a = alpha.real();
        out.singularities.push_back({a, a * a, a > 0.0 ? Channel::forward : Channel::time_reversed,
                                     SsSource::alpha_gamma_factor});
    } else if (alpha_imag) {
        append_branch(out.bound_states, Branch::plus, m, alpha.imag());
    }

    if (beta_real && beta.real() != 0.0) {
        const double b = beta.real();
        out.singularities.push_back({b, b * b, b > 0.0 ? Channel::forward : Channel::time_reversed,
                                     SsSource::beta_gamma_factor});
    } else if (beta_imag) {
        append_branch(out.bound_states, Branch::minus, n, beta.imag());
    }

    std::sort(out.singularities.begin(), out.singularities.end(),
              [](const auto& x, const auto& y) { return x.E_star < y.E_star; });
    std::sort(out.bound_states.begin(), out.bound_states.end(),
              [](const auto& x, const auto& y) { return x.energy < y.energy; });
    return out;
}

std::vector<SpectralSingularityRecord> find_spectral_singularities(int m, int n, double alpha,
                                                                   double beta) {
    return enumerate_spectrum(m, n, alpha, beta).singularities;
}

std::vector<BoundStateRecord> bound_states(int m, int n, double gamma, double delta) {
    if (!(gamma > 0.0) || !(delta > 0.0))
        throw DomainError("bound_states: gamma and delta must be positive");
    const auto spectrum =
        enumerate_spectrum(m, n, Complex(0.0, gamma), Complex(0.0, delta));
    if (!spectrum.singularities.empty())
        throw DomainError("bound_states: the imaginary sector cannot carry singularities");
    return spectrum.bound_states;
}

PoleCheck confirm_pole(const ScarfParameters& p, Complex k_candidate) {
    Complex dir;
    if (k_candidate.imag() == 0.0 && k_candidate.real() != 0.0) {
        dir = k_candidate.real() > 0.0 ? 1.0 : -1.0;  // step away from k = 0
    } else if (k_candidate.real() == 0.0 && k_candidate.imag() > 0.0) {
        dir = Complex(0.0, 1.0);
    } else {
        throw DomainError(
            "confirm_pole: k must be real nonzero or on the positive imaginary axis");
    }

    constexpr std::array<double, 3> eps = {1e-2, 1e-3, 1e-4};
    std::array<double, 3> log_t{};
    for (std::size_t j = 0; j < eps.size(); ++j)
        log_t[j] = std::log(std::abs(transmission_at(p, k_candidate + dir * eps[j])));

    const double r1 = std::exp(log_t[1] - log_t[0]);
    const double r2 = std::exp(log_t[2] - log_t[1]);
    PoleCheck out;
    out.is_pole = r1 > 8.0 && r1 < 12.0 && r2 > 8.0 && r2 < 12.0;

    // least-squares slope of log|t| against -log(eps)
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t j = 0; j < eps.size(); ++j) {
        const double x = -std::log(eps[j]);
        sx += x;
        sy += log_t[j];
        sxx += x * x;
        sxy += x * log_t[j];
    }
    const double denom = 3.0 * sxx - sx * sx;
    out.growth_exponent = (3.0 * sxy - sx * sy) / denom;
    return out;
}

}  // namespace scarf

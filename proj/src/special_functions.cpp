#include "scarf/special_functions.hpp"

#include <cmath>

#include "scarf/errors.hpp"

namespace scarf {

namespace {

// Lanczos g = 7, 9 coefficients. Measured against an arbitrary-precision
// reference: relative error < 2e-13 over |z| <= 30 away from poles.
constexpr double lanczos_g = 7.0;
constexpr double lanczos_c[9] = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7,
};

constexpr double log_sqrt_2pi = 0.91893853320467274178;
constexpr double sqrt_2pi = 2.5066282746310005024;

Complex lanczos_sum(Complex zm) {
    Complex s = lanczos_c[0];
    for (int i = 1; i < 9; ++i) s += lanczos_c[i] / (zm + double(i));
    return s;
}

// Gamma(z) for Re(z) >= 1/2.
Complex gamma_core(Complex z) {
    const Complex zm = z - 1.0;
    const Complex t = zm + (lanczos_g + 0.5);
    return sqrt_2pi * std::exp((zm + 0.5) * std::log(t) - t) * lanczos_sum(zm);
}

// log Gamma(z) for Re(z) >= 1/2, principal logs (continuous there).
Complex log_gamma_core(Complex z) {
    const Complex zm = z - 1.0;
    const Complex t = zm + (lanczos_g + 0.5);
    return log_sqrt_2pi + (zm + 0.5) * std::log(t) - t + std::log(lanczos_sum(zm));
}

// log(sin(w)) for Im(w) >= 0 with the winding carried by the linear term, so
// the branch matches the standard log-Gamma continuation:
//   log sin w = -i w + i pi/2 - ln 2 + log(1 - e^{2iw}),
// where |e^{2iw}| <= 1 keeps the trailing log from winding.
Complex log_sin(Complex w) {
    const Complex i(0.0, 1.0);
    return -i * w + Complex(-std::log(2.0), M_PI / 2.0) + std::log(1.0 - std::exp(2.0 * i * w));
}

bool is_exact_nonpositive_integer(Complex z) {
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

Complex gamma_value(Complex z) {
    // Conjugating first makes Gamma(conj z) == conj(Gamma z) hold exactly.
    if (z.imag() < 0.0) return std::conj(gamma_value(std::conj(z)));
    if (z.real() >= 0.5) return gamma_core(z);
    return M_PI / (std::sin(M_PI * z) * gamma_core(1.0 - z));
}

// cos(w) and sin(w) scaled down by e^{|Im w|}; both exponentials have
// non-positive real exponents, so nothing overflows.
Complex scaled_cos(Complex w) {
    const Complex i(0.0, 1.0);
    const double m = std::abs(w.imag());
    return 0.5 * (std::exp(i * w - m) + std::exp(-i * w - m));
}

Complex scaled_sin(Complex w) {
    const Complex i(0.0, 1.0);
    const double m = std::abs(w.imag());
    return (std::exp(i * w - m) - std::exp(-i * w - m)) / (2.0 * i);
}

}  // namespace

std::pair<int, double> nearest_nonpositive_integer(Complex z) {
    double p = std::round(z.real());
    if (p > 0.0) p = 0.0;
    return {int(p), std::abs(z - p)};
}

GammaResult complex_gamma(Complex z) {
    if (is_exact_nonpositive_integer(z))
        throw ExactPoleError("complex_gamma: argument is exactly the pole " +
                             std::to_string(int(z.real())));
    GammaResult result;
    const auto [pole, dist] = nearest_nonpositive_integer(z);
    if (dist < pole_threshold) {
        result.nearest_pole = pole;
        result.pole_distance = dist;
    }
    result.value = gamma_value(z);
    return result;
}

Complex log_complex_gamma(Complex z) {
    if (is_exact_nonpositive_integer(z))
        throw ExactPoleError("log_complex_gamma: argument is exactly the pole " +
                             std::to_string(int(z.real())));
    if (z.imag() < 0.0) return std::conj(log_complex_gamma(std::conj(z)));
    if (z.real() >= 0.5) return log_gamma_core(z);
    return std::log(M_PI) - log_sin(M_PI * z) - log_gamma_core(1.0 - z);
}

Complex safe_trig_ratio(Complex A, Complex B, double k) {
    if (std::abs(k) < k_min)
        throw BelowKMinError("safe_trig_ratio: |k| = " + std::to_string(std::abs(k)) +
                             " below k_min; the sinh(pi k) denominator diverges");
    const double ak = std::abs(k);
    const double sign_k = k > 0.0 ? 1.0 : -1.0;
    // cosh/sinh(pi k) scaled down by e^{pi |k|}.
    const double em = std::exp(-2.0 * M_PI * ak);
    const double cosh_s = 0.5 * (1.0 + em);
    const double sinh_s = sign_k * 0.5 * (1.0 - em);
    // sinh/cosh(pi B) share the scaling of sin/cos via sinh(w) = -i sin(iw).
    const Complex i(0.0, 1.0);
    const Complex sinh_B = -i * scaled_sin(i * M_PI * B);  // / e^{pi |Re B|}
    const Complex cosh_B = scaled_cos(i * M_PI * B);
    const Complex cos_A = scaled_cos(M_PI * A);  // / e^{pi |Im A|}
    const Complex sin_A = scaled_sin(M_PI * A);
    // Every term carries the same removed factor e^{pi(|Im A| + |Re B| - |k|)}.
    const Complex scaled = cos_A * sinh_B / cosh_s + i * sin_A * cosh_B / sinh_s;
    const double exponent = M_PI * (std::abs(A.imag()) + std::abs(B.real()) - ak);
    return scaled * std::exp(exponent);
}

}  // namespace scarf

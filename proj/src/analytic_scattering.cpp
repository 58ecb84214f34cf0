#include "scarf/analytic_scattering.hpp"

#include <array>
#include <cmath>
#include <string>

#include "scarf/errors.hpp"
#include "scarf/special_functions.hpp"

namespace scarf {

namespace {

std::array<Complex, 4> numerator_args(const ScarfParameters& p, Complex k) {
    const Complex ik = Complex(0.0, 1.0) * k;
    return {-p.A - ik, 1.0 + p.A - ik, 0.5 - Complex(0.0, 1.0) * p.B - ik,
            0.5 + Complex(0.0, 1.0) * p.B - ik};
}

std::array<Complex, 4> denominator_args(Complex k) {
    const Complex ik = Complex(0.0, 1.0) * k;
    return {-ik, 1.0 - ik, 0.5 - ik, 0.5 - ik};
}

Complex log_ratio(const std::array<Complex, 4>& num, const std::array<Complex, 4>& den) {
    Complex ln = 0.0, ld = 0.0;
    for (const auto& a : num) ln += log_complex_gamma(a);
    for (const auto& b : den) ld += log_complex_gamma(b);
    return ln - ld;
}

}  // namespace

Transmission transmission_amplitude(const ScarfParameters& p, double k) {
    if (std::abs(k) < k_min)
        throw KTooSmallError("transmission_amplitude: |k| = " + std::to_string(std::abs(k)) +
                             " below k_min");
    const auto num = numerator_args(p, k);
    Transmission out;
    for (int j = 0; j < 4; ++j) {
        const auto [pole, dist] = nearest_nonpositive_integer(num[j]);
        if (dist == 0.0)
            throw ExactSingularityError("transmission_amplitude: numerator Gamma factor " +
                                        std::to_string(j) + " hit the pole " +
                                        std::to_string(pole) + " exactly at k = " +
                                        std::to_string(k));
        if (dist < pole_threshold && (!out.pole_factor || dist < out.pole_distance)) {
            out.pole_factor = j;
            out.pole_distance = dist;
        }
    }
    out.value = std::exp(log_ratio(num, denominator_args(k)));
    return out;
}

Complex transmission_at(const ScarfParameters& p, Complex k) {
    return std::exp(log_ratio(numerator_args(p, k), denominator_args(k)));
}

Reflections reflection_amplitudes(const ScarfParameters& p, double k) {
    const Complex t = transmission_amplitude(p, k).value;
    return {t * safe_trig_ratio(p.A, p.B, k), t * safe_trig_ratio(p.A, -p.B, k)};
}

ScatteringAmplitudes amplitudes(const ScarfParameters& p, double k) {
    const Transmission t = transmission_amplitude(p, k);
    ScatteringAmplitudes out;
    out.k = k;
    out.t = t.value;
    out.r_left = t.value * safe_trig_ratio(p.A, p.B, k);
    out.r_right = t.value * safe_trig_ratio(p.A, -p.B, k);
    out.singular_factor = t.pole_factor;
    return out;
}

ObservableSet observables(const ScarfParameters& p, double E) {
    if (E < k_min * k_min)
        throw KTooSmallError("observables: E = " + std::to_string(E) + " below k_min^2");
    const double k = std::sqrt(E);
    const auto fwd = amplitudes(p, k);
    const auto rev = amplitudes(p, -k);
    ObservableSet out;
    out.T_fwd = std::norm(fwd.t);
    out.T_rev = std::norm(rev.t);
    out.R_left_fwd = std::norm(fwd.r_left);
    out.R_right_fwd = std::norm(fwd.r_right);
    out.R_left_rev = std::norm(rev.r_left);
    out.R_right_rev = std::norm(rev.r_right);
    out.singular = fwd.singular() || rev.singular();
    return out;
}

}  // namespace scarf

// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Everything here is pinned; nothing is calibrated at runtime.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdarg>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "scarf/analytic_scattering.hpp"
#include "scarf/errors.hpp"
#include "scarf/invariance_suite.hpp"
#include "scarf/numeric_oracle.hpp"
#include "scarf/scan.hpp"
#include "scarf/special_functions.hpp"
#include "scarf/spectral_analysis.hpp"
#include "test_util.hpp"

using scarf::amplitudes;
using scarf::Complex;
using scarf::from_parametrization;
using scarf::HamiltonianClass;
using scarf::Property;
using scarf::ScanSpec;
using scarf::ScarfParameters;
using scarf::Verdict;
using testutil::normalized_diff;
using testutil::rel_err;

namespace {

int failures = 0;

void criterion(int number, const char* label, bool pass, const std::string& detail) {
    std::printf("[%s] criterion %2d: %s (%s)\n", pass ? "PASS" : "FAIL", number, label,
                detail.c_str());
    if (!pass) ++failures;
}

std::string fmt(const char* format, ...) {
    char buffer[256];
    va_list args;
    va_start(args, format);
    std::vsnprintf(buffer, sizeof buffer, format, args);
    va_end(args);
    return buffer;
}

const double s2 = std::sqrt(2.0);
const double s5 = std::sqrt(5.0);

// ---- criteria 1-2: two singularities in one channel -------------------------

struct ChannelProbe {
    double min_peak;   // smallest T at the four probe energies k* +- 1e-3
    double max_other;  // largest T of the other channel over the 1000-point scan
};

ChannelProbe probe_two_peak_instance(double alpha, double beta, bool peaks_forward) {
    const auto p = from_parametrization(0, 0, alpha, beta);
    ChannelProbe result{1e300, 0.0};
    for (double k_star : {s2, s5}) {
        for (double offset : {1e-3, -1e-3}) {
            const double E = (k_star + offset) * (k_star + offset);
            const auto obs = scarf::scan_observables(p, E);
            result.min_peak = std::min(result.min_peak, peaks_forward ? obs.T_fwd : obs.T_rev);
        }
    }
    for (const auto& row : scarf::scan(p, {0.25, 7.0, 1000, ScanSpec::Spacing::linear}))
        result.max_other = std::max(result.max_other, peaks_forward ? row.obs.T_rev
                                                                    : row.obs.T_fwd);
    return result;
}

// ---- criterion 3 helpers ----------------------------------------------------

struct WindowScan {
    double peak;
    double peak_E;
    double other_max;
};

WindowScan window_scan(const ScarfParameters& p, double E_star, bool reversed) {
    WindowScan out{0.0, 0.0, 0.0};
    const auto rows = scarf::scan(p, {E_star - 0.5, E_star + 0.5, 1000, ScanSpec::Spacing::linear});
    for (const auto& row : rows) {
        const double main = reversed ? row.obs.T_rev : row.obs.T_fwd;
        const double other = reversed ? row.obs.T_fwd : row.obs.T_rev;
        if (main > out.peak) {
            out.peak = main;
            out.peak_E = row.E;
        }
        out.other_max = std::max(out.other_max, other);
    }
    return out;
}

// ---- criterion 7 ensemble ---------------------------------------------------

Complex random_in_disk(std::mt19937_64& gen, double radius) {
    std::uniform_real_distribution<double> coord(-radius, radius);
    while (true) {
        const Complex z(coord(gen), coord(gen));
        if (std::abs(z) <= radius) return z;
    }
}

// "no SS within 0.05 of the tested k": every numerator Gamma argument stays
// at least 0.05 away from the non-positive integers
bool clear_of_singularities(const ScarfParameters& p, double k) {
    const Complex ik(0.0, k);
    const Complex args[4] = {-p.A - ik, 1.0 + p.A - ik, 0.5 - Complex(0.0, 1.0) * p.B - ik,
                             0.5 + Complex(0.0, 1.0) * p.B - ik};
    for (const Complex& a : args)
        if (scarf::nearest_nonpositive_integer(a).second < 0.05) return false;
    return true;
}

}  // namespace

int main() {
    const auto t0 = std::chrono::steady_clock::now();

    // 1. two forward singularities
    {
        const auto probe = probe_two_peak_instance(s2, s5, /*peaks_forward=*/true);
        criterion(1, "two forward peaks at E=2,5; reversed channel quiet",
                  probe.min_peak > 1e4 && probe.max_other < 1e3,
                  fmt("min peak T_fwd = %.4g, max T_rev on scan = %.4g", probe.min_peak,
                      probe.max_other));
    }

    // 2. sign flip moves both peaks into the time-reversed channel
    {
        const auto probe = probe_two_peak_instance(-s2, -s5, /*peaks_forward=*/false);
        criterion(2, "sign flip: both peaks in the reversed channel",
                  probe.min_peak > 1e4 && probe.max_other < 1e3,
                  fmt("min peak T_rev = %.4g, max T_fwd on scan = %.4g", probe.min_peak,
                      probe.max_other));
    }

    // 3. mixed signs: exactly one near-pole per channel
    {
        const auto p = from_parametrization(0, 0, -s2, s5);
        const auto rev2 = window_scan(p, 2.0, /*reversed=*/true);
        const auto fwd5 = window_scan(p, 5.0, /*reversed=*/false);
        const double E5p = (s5 + 1e-3) * (s5 + 1e-3), E5m = (s5 - 1e-3) * (s5 - 1e-3);
        const double fwd_point = std::min(scarf::scan_observables(p, E5p).T_fwd,
                                          scarf::scan_observables(p, E5m).T_fwd);
        // with residues up to ~1.8, T > 1e3 reaches out to |E - E*| ~ 0.25
        bool localized = true;
        for (const auto& row : scarf::scan(p, {0.25, 7.0, 1000, ScanSpec::Spacing::linear})) {
            if (row.obs.T_rev > 1e3) localized &= std::abs(row.E - 2.0) < 0.3;
            if (row.obs.T_fwd > 1e3) localized &= std::abs(row.E - 5.0) < 0.3;
        }
        const bool pass = rev2.peak > 1e4 && std::abs(rev2.peak_E - 2.0) < 1e-3 &&
                          rev2.other_max < 1e3 && fwd5.peak > 1e4 &&
                          std::abs(fwd5.peak_E - 5.0) < 1e-3 && fwd5.other_max < 1e3 &&
                          fwd_point > 1e4 && localized;
        criterion(3, "mixed signs: one divergence per channel",
                  pass,
                  fmt("T_rev window peak %.4g at E=%.6g, T_fwd window peak %.4g at E=%.6g",
                      rev2.peak, rev2.peak_E, fwd5.peak, fwd5.peak_E));
    }

    // 4. PT case: the two transmitivities coincide, one divergence at E = 2
    {
        const auto p = from_parametrization(0, 0, s2, -s2);
        double worst = 0.0;
        int divergences = 0;
        bool localized = true;
        for (const auto& row : scarf::scan(p, {0.25, 7.0, 1000, ScanSpec::Spacing::linear})) {
            if (row.obs.singular || row.obs.T_fwd > 1e4) {
                ++divergences;
                localized &= std::abs(row.E - 2.0) < 0.05;
                continue;
            }
            worst = std::max(worst,
                             std::abs(row.obs.T_fwd - row.obs.T_rev) / (1.0 + row.obs.T_fwd));
        }
        criterion(4, "PT case: channels coincide, single divergence at E=2",
                  worst < 1e-8 && divergences >= 1 && localized,
                  fmt("max |T_fwd-T_rev|/(1+T_fwd) = %.3g, divergent rows = %d", worst,
                      divergences));
    }

    // 5. the (in)variance verdict matrix on the canonical instances
    {
        struct Row {
            ScarfParameters p;
            std::vector<std::pair<Property, Verdict>> expected;
        };
        const std::vector<Row> rows = {
            {ScarfParameters::direct(-2.0, 1.0),
             {{Property::R_lr_equal, Verdict::holds},
              {Property::T_lr_equal, Verdict::holds},
              {Property::R_k_even, Verdict::holds},
              {Property::T_k_even, Verdict::holds}}},
            {ScarfParameters::direct(Complex(1.0, 1.0), 0.0),
             {{Property::R_lr_equal, Verdict::holds},
              {Property::T_lr_equal, Verdict::holds},
              {Property::R_k_even, Verdict::fails},
              {Property::T_k_even, Verdict::fails}}},
            {from_parametrization(0, 0, s2, s5),
             {{Property::R_lr_equal, Verdict::fails},
              {Property::T_lr_equal, Verdict::holds},
              {Property::R_k_even, Verdict::fails},
              {Property::T_k_even, Verdict::fails}}},
            {from_parametrization(0, 0, s2, -s2),
             {{Property::R_lr_equal, Verdict::fails},
              {Property::T_lr_equal, Verdict::holds},
              {Property::R_pt_cross, Verdict::holds},
              {Property::T_k_even_pt, Verdict::holds}}},
        };
        bool pass = true;
        double worst_hold = 0.0, best_fail = 1e300;
        std::string note;
        for (const auto& row : rows) {
            try {
                const auto report = scarf::run_report(row.p, scarf::default_k_grid());
                for (const auto& [property, expected] : row.expected) {
                    const double violation = report.max_violation.at(property);
                    if (report.verdicts.at(property) != expected) pass = false;
                    if (expected == Verdict::holds) {
                        pass &= violation < 1e-8;
                        worst_hold = std::max(worst_hold, violation);
                    } else {
                        pass &= violation > 1e-3;
                        best_fail = std::min(best_fail, violation);
                    }
                }
            } catch (const scarf::Error& e) {
                pass = false;
                note = e.what();
            }
        }
        criterion(5, "verdict matrix matches all four rows", pass,
                  note.empty() ? fmt("max holds-violation %.2g, min fails-violation %.2g",
                                     worst_hold, best_fail)
                               : note);
    }

    // 6. bound states and their poles
    {
        const auto records = scarf::bound_states(0, 0, 2.5, 0.5);
        bool pass = records.size() == 4 && records[0].energy == -6.25 &&
                    records[1].energy == -2.25 && records[2].energy == -0.25 &&
                    records[3].energy == -0.25;
        const auto p = from_parametrization(0, 0, Complex(0.0, 2.5), Complex(0.0, 0.5));
        std::string detail = pass ? "energies exact" : "energy list wrong";
        // kappa = 2.5 and 1.5 are simple poles; both branches share kappa = 0.5,
        // so t has a second-order pole there and the growth doubles
        for (double kappa : {2.5, 1.5}) {
            const auto check = scarf::confirm_pole(p, Complex(0.0, kappa));
            pass &= check.is_pole && check.growth_exponent > 0.9 && check.growth_exponent < 1.1;
        }
        const auto degenerate = scarf::confirm_pole(p, Complex(0.0, 0.5));
        pass &= degenerate.growth_exponent > 1.8 && degenerate.growth_exponent < 2.2;
        criterion(6, "bound-state energies exact, poles confirmed", pass,
                  fmt("%s; degenerate kappa=0.5 exponent %.3f", detail.c_str(),
                      degenerate.growth_exponent));
    }

    // 7. oracle equivalence on random instances + convergence order
    {
        std::mt19937_64 gen(0xC0FFEE);
        std::uniform_real_distribution<double> kd(0.3, 3.0);
        double worst_any = 0.0, worst_coarse = 0.0, worst_fine = 0.0;
        int instances = 0, rejected_conditioning = 0;
        while (instances < 20) {
            const auto p = ScarfParameters::direct(random_in_disk(gen, 4.0),
                                                   random_in_disk(gen, 4.0));
            std::vector<double> ks;
            while (ks.size() < 5) {
                const double k = kd(gen);
                if (clear_of_singularities(p, k)) ks.push_back(k);
            }
            try {
                const auto coarse = scarf::sample_scarf(p, -scarf::default_box_half_width,
                                                        scarf::default_box_half_width,
                                                        scarf::default_slab_count);
                const auto fine = scarf::sample_scarf(p, -scarf::default_box_half_width,
                                                      scarf::default_box_half_width,
                                                      2 * scarf::default_slab_count);
                for (double k : ks) {
                    const auto exact = amplitudes(p, k);
                    const auto oc = scarf::solve(coarse, k);
                    const auto of = scarf::solve(fine, k);
                    // every amplitude, both extraction routes, meets the bound
                    worst_any = std::max({worst_any, rel_err(oc.t_left, exact.t),
                                          rel_err(oc.t_right, exact.t),
                                          rel_err(oc.r_left, exact.r_left),
                                          rel_err(oc.r_right, exact.r_right)});
                    // the h^2 ratio is measured on the direct-route amplitudes;
                    // t_left's determinant route carries a conditioning floor
                    // (~eps * cond) that is not discretization error
                    worst_coarse = std::max({worst_coarse, rel_err(oc.t_right, exact.t),
                                             rel_err(oc.r_left, exact.r_left),
                                             rel_err(oc.r_right, exact.r_right)});
                    worst_fine = std::max({worst_fine, rel_err(of.t_right, exact.t),
                                           rel_err(of.r_left, exact.r_left),
                                           rel_err(of.r_right, exact.r_right)});
                }
                ++instances;
            } catch (const scarf::IllConditionedError&) {
                ++rejected_conditioning;  // outside the oracle's stated domain
            }
        }
        const double ratio = worst_coarse / worst_fine;
        criterion(7, "oracle matches the closed forms, h^2 convergence",
                  worst_any < 5e-3 && ratio > 3.0 && ratio < 5.0,
                  fmt("max rel dev %.3g (h^2 part %.3g -> %.3g, ratio %.2f), %d draws "
                      "ill-conditioned",
                      worst_any, worst_coarse, worst_fine, ratio, rejected_conditioning));
    }

    // 8. side-independence theorems on random sampled potentials
    {
        std::mt19937_64 gen(0xBEEF);
        double worst_T = 0.0, worst_R = 0.0;
        for (int trial = 0; trial < 100; ++trial) {
            const auto v = testutil::random_potential(gen);
            const auto r = scarf::solve(v, 0.3 + 0.027 * trial);
            worst_T = std::max(worst_T,
                               normalized_diff(std::norm(r.t_left), std::norm(r.t_right)));
        }
        for (int trial = 0; trial < 100; ++trial) {
            const auto v = testutil::random_potential(gen, false, /*even=*/true);
            const auto r = scarf::solve(v, 0.3 + 0.027 * trial);
            worst_R = std::max(worst_R,
                               normalized_diff(std::norm(r.r_left), std::norm(r.r_right)));
        }
        criterion(8, "T side-independent; R side-independent for even potentials",
                  worst_T < 1e-6 && worst_R < 1e-6,
                  fmt("max T_l vs T_r %.2g, max R_l vs R_r (even) %.2g", worst_T, worst_R));
    }

    // 9. Gamma core identities and tabulated values
    {
        std::mt19937_64 gen(0xFEED);
        std::uniform_real_distribution<double> coord(-10.0, 10.0);
        double worst = 0.0;
        int samples = 0;
        while (samples < 1000) {
            const Complex z(coord(gen), coord(gen));
            bool near_pole = false;
            for (int p = 0; p <= 11; ++p)
                near_pole |= std::abs(z + double(p)) < 1e-3 ||
                             std::abs(1.0 - z + double(p)) < 1e-3;
            if (near_pole) continue;
            ++samples;
            const Complex g = scarf::complex_gamma(z).value;
            const Complex reflec = g * scarf::complex_gamma(1.0 - z).value *
                                   std::sin(M_PI * z) / M_PI;
            worst = std::max(worst, std::abs(reflec - 1.0));
            worst = std::max(worst, rel_err(scarf::complex_gamma(z + 1.0).value, z * g));
        }
        const bool tabulated =
            rel_err(scarf::complex_gamma(Complex(5.0, 0.0)).value, 24.0) < 1e-10 &&
            rel_err(scarf::complex_gamma(Complex(0.5, 0.0)).value, std::sqrt(M_PI)) < 1e-10 &&
            std::abs(scarf::complex_gamma(Complex(1.0, 1.0)).value -
                     Complex(0.4980156681, -0.1549498283)) < 1e-10;
        criterion(9, "gamma reflection/recurrence at 1e-10; tabulated values",
                  worst < 1e-10 && tabulated, fmt("max identity violation %.2g", worst));
    }

    // 10. unitarity
    {
        std::mt19937_64 gen(0xFACE);
        double worst_oracle = 0.0;
        for (int trial = 0; trial < 50; ++trial) {
            const auto v = testutil::random_potential(gen, /*real_only=*/true);
            const auto r = scarf::solve(v, 0.3 + 0.052 * trial);
            worst_oracle = std::max(worst_oracle,
                                    std::abs(std::norm(r.t_left) + std::norm(r.r_left) - 1.0));
        }
        std::uniform_real_distribution<double> real_ab(-3.0, 3.0);
        double worst_analytic = 0.0;
        for (int trial = 0; trial < 20; ++trial) {
            const auto p = ScarfParameters::direct(real_ab(gen), real_ab(gen));
            for (double k : {0.7, 1.3, 2.9}) {
                const auto amp = amplitudes(p, k);
                worst_analytic = std::max(worst_analytic,
                                          std::abs(std::norm(amp.t) + std::norm(amp.r_left) - 1.0));
            }
        }
        criterion(10, "flux conservation for real potentials",
                  worst_oracle < 1e-8 && worst_analytic < 1e-10,
                  fmt("oracle %.2g, analytic %.2g", worst_oracle, worst_analytic));
    }

    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%d/10 criteria passed in %.1f s\n", 10 - failures, seconds);
    return failures == 0 ? 0 : 1;
}

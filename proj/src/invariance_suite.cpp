#include "scarf/invariance_suite.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <sstream>
#include <string>

#include "scarf/analytic_scattering.hpp"
#include "scarf/errors.hpp"

namespace scarf {

namespace {

constexpr Property all_properties[] = {Property::R_lr_equal, Property::T_lr_equal,
                                       Property::R_k_even,   Property::T_k_even,
                                       Property::R_pt_cross, Property::T_k_even_pt};

// The six observables needed at one grid point. T_l and T_r come from
// independent routes so their equality is a real measurement.
struct PointObservables {
    double T_l, T_r, R_l, R_r;
    double T_rev, R_l_rev, R_r_rev;
};

PointObservables eval_analytic(const ScarfParameters& p, double k) {
    const auto fwd = amplitudes(p, k);
    const auto t_right = transmission_amplitude(ScarfParameters::direct(p.A, -p.B), k);
    const auto rev = amplitudes(p, -k);
    if (fwd.singular() || t_right.singular() || rev.singular())
        throw SingularGridPointError("invariance grid point k = " + std::to_string(k) +
                                     " is within pole_threshold of a singularity");
    return {std::norm(fwd.t),      std::norm(t_right.value), std::norm(fwd.r_left),
            std::norm(fwd.r_right), std::norm(rev.t),        std::norm(rev.r_left),
            std::norm(rev.r_right)};
}

PointObservables eval_oracle(const SampledPotential& v, double k) {
    const auto fwd = solve(v, k);
    const auto rev = solve_reversed(v, k);
    return {std::norm(fwd.t_left),  std::norm(fwd.t_right), std::norm(fwd.r_left),
            std::norm(fwd.r_right), std::norm(rev.t_left),  std::norm(rev.r_left),
            std::norm(rev.r_right)};
}

double normalized_diff(double a, double b) {
    return std::abs(a - b) / (1.0 + std::max(a, b));
}

std::map<Property, double> point_violations(const PointObservables& o) {
    return {
        {Property::R_lr_equal, normalized_diff(o.R_l, o.R_r)},
        {Property::T_lr_equal, normalized_diff(o.T_l, o.T_r)},
        {Property::R_k_even,
         std::max(normalized_diff(o.R_l_rev, o.R_l), normalized_diff(o.R_r_rev, o.R_r))},
        {Property::T_k_even, normalized_diff(o.T_rev, o.T_l)},
        {Property::R_pt_cross,
         std::max(normalized_diff(o.R_l_rev, o.R_r), normalized_diff(o.R_r_rev, o.R_l))},
        {Property::T_k_even_pt, normalized_diff(o.T_rev, o.T_l)},
    };
}

bool applies(HamiltonianClass cls, Property p) {
    const bool pt = cls == HamiltonianClass::PT_symmetric;
    switch (p) {
        case Property::R_lr_equal:
        case Property::T_lr_equal: return true;
        case Property::R_k_even:
        case Property::T_k_even: return !pt;
        case Property::R_pt_cross:
        case Property::T_k_even_pt: return pt;
    }
    return false;
}

InvarianceReport build_report(HamiltonianClass cls, const std::vector<double>& grid,
                              double hold_tol,
                              const std::function<PointObservables(double)>& eval) {
    if (grid.empty()) throw DomainError("run_report: empty k grid");
    for (double k : grid)
        if (!(k >= k_min)) throw DomainError("run_report: grid k below k_min");

    std::vector<std::map<Property, double>> per_point(grid.size());
    std::exception_ptr first_error = nullptr;
#pragma omp parallel for schedule(static)
    for (long i = 0; i < long(grid.size()); ++i) {
        try {
            per_point[i] = point_violations(eval(grid[i]));
        } catch (...) {
#pragma omp critical
            if (!first_error) first_error = std::current_exception();
        }
    }
    if (first_error) std::rethrow_exception(first_error);

    InvarianceReport report;
    report.class_tested = cls;
    report.grid = grid;
    report.hold_tol = hold_tol;
    for (Property p : all_properties) {
        double worst = 0.0;
        for (const auto& v : per_point) worst = std::max(worst, v.at(p));
        report.max_violation[p] = worst;
        if (!applies(cls, p)) {
            report.verdicts[p] = Verdict::not_applicable;
        } else if (worst < hold_tol) {
            report.verdicts[p] = Verdict::holds;
        } else if (worst > fail_margin) {
            report.verdicts[p] = Verdict::fails;
        } else {
            throw InconclusiveError(std::string("invariance property ") + to_string(p) +
                                    " landed in the dead zone: violation = " +
                                    std::to_string(worst));
        }
    }
    return report;
}

}  // namespace

std::vector<double> default_k_grid() {
    constexpr int points = 50;
    constexpr double lo = 0.2, hi = 3.0;
    std::vector<double> grid(points);
    const double ratio = std::log(hi / lo) / double(points - 1);
    for (int i = 0; i < points; ++i) grid[i] = lo * std::exp(ratio * double(i));
    return grid;
}

InvarianceReport run_report(const ScarfParameters& p, const std::vector<double>& grid) {
    return build_report(classify(coefficients(p)), grid, hold_tol_analytic,
                        [&](double k) { return eval_analytic(p, k); });
}

InvarianceReport run_report(const SampledPotential& v, const std::vector<double>& grid) {
    return build_report(classify_sampled(v), grid, hold_tol_oracle,
                        [&](double k) { return eval_oracle(v, k); });
}

HamiltonianClass classify_sampled(const SampledPotential& v) {
    const auto& vals = v.values();
    const std::size_t n = vals.size();
    double max_abs = 0.0;
    for (const auto& z : vals) max_abs = std::max(max_abs, std::abs(z));
    const double tol = 1e-9 * max_abs + 1e-12;

    double max_imag = 0.0, even_defect = 0.0, pt_defect = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const Complex mirrored = vals[n - 1 - i];
        max_imag = std::max(max_imag, std::abs(vals[i].imag()));
        even_defect = std::max(even_defect, std::abs(vals[i] - mirrored));
        pt_defect = std::max(pt_defect, std::abs(vals[i] - std::conj(mirrored)));
    }
    if (max_imag <= tol) return HamiltonianClass::Hermitian;
    if (even_defect <= tol) return HamiltonianClass::P_symmetric_non_Hermitian;
    if (pt_defect <= tol) return HamiltonianClass::PT_symmetric;
    return HamiltonianClass::general_non_Hermitian;
}

const char* to_string(Property p) {
    switch (p) {
        case Property::R_lr_equal: return "R_lr_equal";
        case Property::T_lr_equal: return "T_lr_equal";
        case Property::R_k_even: return "R_k_even";
        case Property::T_k_even: return "T_k_even";
        case Property::R_pt_cross: return "R_pt_cross";
        case Property::T_k_even_pt: return "T_k_even_pt";
    }
    return "?";
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::fails: return "fails";
        case Verdict::not_applicable: return "not_applicable";
    }
    return "?";
}

std::string render_table(const InvarianceReport& report) {
    std::ostringstream out;
    out << "class: " << to_string(report.class_tested) << "   (" << report.grid.size()
        << " grid points, k in [" << report.grid.front() << ", " << report.grid.back()
        << "])\n";
    out << "property       max_violation  verdict\n";
    char buf[96];
    for (const auto& [prop, violation] : report.max_violation) {
        std::snprintf(buf, sizeof buf, "%-13s  %-13.3e  %s\n", to_string(prop), violation,
                      to_string(report.verdicts.at(prop)));
        out << buf;
    }
    return out.str();
}

}  // namespace scarf

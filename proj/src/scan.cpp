#include "scarf/scan.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "scarf/errors.hpp"

namespace scarf {

void ScanSpec::validate() const {
    if (!(e_min < e_max)) throw DomainError("scan: need e_min < e_max");
    if (steps < 2) throw DomainError("scan: need steps >= 2");
    if (!(e_min >= k_min * k_min))
        throw DomainError("scan: e_min = " + std::to_string(e_min) + " below k_min^2");
}

std::vector<double> ScanSpec::energies() const {
    validate();
    std::vector<double> out(steps);
    if (spacing == Spacing::linear) {
        const double step = (e_max - e_min) / double(steps - 1);
        for (int i = 0; i < steps; ++i) out[i] = e_min + step * double(i);
    } else {
        const double ratio = std::log(e_max / e_min) / double(steps - 1);
        for (int i = 0; i < steps; ++i) out[i] = e_min * std::exp(ratio * double(i));
    }
    return out;
}

ObservableSet scan_observables(const ScarfParameters& p, double E) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    const double k = std::sqrt(E);
    ObservableSet out;
    try {
        const auto fwd = amplitudes(p, k);
        out.T_fwd = std::norm(fwd.t);
        out.R_left_fwd = std::norm(fwd.r_left);
        out.R_right_fwd = std::norm(fwd.r_right);
        out.singular |= fwd.singular();
    } catch (const ExactSingularityError&) {
        out.T_fwd = out.R_left_fwd = out.R_right_fwd = inf;
        out.singular = true;
    }
    try {
        const auto rev = amplitudes(p, -k);
        out.T_rev = std::norm(rev.t);
        out.R_left_rev = std::norm(rev.r_left);
        out.R_right_rev = std::norm(rev.r_right);
        out.singular |= rev.singular();
    } catch (const ExactSingularityError&) {
        out.T_rev = out.R_left_rev = out.R_right_rev = inf;
        out.singular = true;
    }
    return out;
}

std::vector<ScanRow> scan(const ScarfParameters& p, const ScanSpec& spec, Execution exec) {
    const std::vector<double> grid = spec.energies();
    std::vector<ScanRow> rows(grid.size());
    if (exec == Execution::parallel) {
#pragma omp parallel for schedule(static)
        for (long i = 0; i < long(grid.size()); ++i)
            rows[i] = {grid[i], scan_observables(p, grid[i])};
    } else {
        for (std::size_t i = 0; i < grid.size(); ++i)
            rows[i] = {grid[i], scan_observables(p, grid[i])};
    }
    return rows;
}

}  // namespace scarf

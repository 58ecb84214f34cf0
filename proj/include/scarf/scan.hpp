#pragma once

#include <vector>

#include "scarf/analytic_scattering.hpp"
#include "scarf/scarf_model.hpp"

namespace scarf {

struct ScanSpec {
    enum class Spacing { linear, log };

    double e_min = 0.0;
    double e_max = 0.0;
    int steps = 0;
    Spacing spacing = Spacing::linear;

    /// Throws DomainError unless e_min < e_max, steps >= 2, e_min >= k_min^2.
    void validate() const;
    std::vector<double> energies() const;
};

struct ScanRow {
    double E = 0.0;
    ObservableSet obs;
};

enum class Execution { serial, parallel };

/// One row of observables per grid energy. A channel that lands exactly on a
/// spectral singularity is emitted as +inf with the singular flag set rather
/// than aborting the scan. Rows are independent, so the OpenMP variant is
/// bit-identical to the serial reference.
std::vector<ScanRow> scan(const ScarfParameters& p, const ScanSpec& spec,
                          Execution exec = Execution::parallel);

/// Observables at one energy with exact pole hits mapped to +inf.
ObservableSet scan_observables(const ScarfParameters& p, double E);

}  // namespace scarf

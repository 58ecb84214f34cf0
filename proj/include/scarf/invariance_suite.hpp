#pragma once

#include <map>
#include <vector>

#include "scarf/numeric_oracle.hpp"
#include "scarf/scarf_model.hpp"

namespace scarf {

enum class Property { R_lr_equal, T_lr_equal, R_k_even, T_k_even, R_pt_cross, T_k_even_pt };

enum class Verdict { holds, fails, not_applicable };

// hold/fail separation: equalities measured on canonical instances sit at
// rounding level, violated ones at O(1); the three-decade dead zone in
// between raises InconclusiveError instead of guessing.
inline constexpr double hold_tol_analytic = 1e-8;
inline constexpr double hold_tol_oracle = 1e-5;
inline constexpr double fail_margin = 1e-3;

struct InvarianceReport {
    HamiltonianClass class_tested = HamiltonianClass::Hermitian;
    std::vector<double> grid;
    std::map<Property, double> max_violation;  // every property measured
    std::map<Property, Verdict> verdicts;      // not_applicable outside the class's row
    double hold_tol = 0.0;
};

/// 50 logarithmically spaced k in [0.2, 3.0].
std::vector<double> default_k_grid();

/// All six observables per grid point; per-property violations are the max
/// over the grid of |difference| / (1 + magnitude). Verdicts follow the
/// class's row of the (in)variance table; properties the row does not
/// constrain are reported not_applicable (their violations are still
/// recorded). Callers should keep the grid clear of known singularities
/// (|k - k*| > 0.05); a grid point within pole_threshold of one raises
/// SingularGridPointError.
InvarianceReport run_report(const ScarfParameters& p, const std::vector<double>& grid);

/// Oracle-backed variant for arbitrary sampled potentials; the class is
/// detected from the samples (evenness / conjugation symmetry of the grid).
InvarianceReport run_report(const SampledPotential& v, const std::vector<double>& grid);

HamiltonianClass classify_sampled(const SampledPotential& v);

const char* to_string(Property p);
const char* to_string(Verdict v);

/// Aligned text table mirroring the (in)variance summary.
std::string render_table(const InvarianceReport& report);

}  // namespace scarf

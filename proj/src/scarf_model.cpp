#include "scarf/scarf_model.hpp"

#include <cmath>

#include "scarf/errors.hpp"

namespace scarf {

ScarfParameters from_parametrization(int m, int n, Complex alpha, Complex beta) {
    if (m < 0 || n < 0)
        throw DomainError("from_parametrization: m and n must be non-negative integers");
    const Complex i(0.0, 1.0);
    ScarfParameters p;
    p.A = -double(m + 1) + i * alpha;
    p.B = beta + i * (double(n) + 0.5);
    p.origin = ScarfParameters::Parametrization{m, n, alpha, beta};
    return p;
}

PotentialCoefficients coefficients(const ScarfParameters& p) {
    return {p.B * p.B - p.A * p.A - p.A, p.B * (2.0 * p.A + 1.0)};
}

Complex evaluate_potential(const PotentialCoefficients& c, double x) {
    const double sech = 1.0 / std::cosh(x);
    return c.V1 * sech * sech + c.V2 * sech * std::tanh(x);
}

HamiltonianClass classify(const PotentialCoefficients& c) {
    const bool im_v1_zero = std::abs(c.V1.imag()) <= tol_class;
    const bool im_v2_zero = std::abs(c.V2.imag()) <= tol_class;
    const bool re_v2_zero = std::abs(c.V2.real()) <= tol_class;
    if (im_v1_zero && im_v2_zero) return HamiltonianClass::Hermitian;
    if (re_v2_zero && im_v2_zero) return HamiltonianClass::P_symmetric_non_Hermitian;
    if (im_v1_zero && re_v2_zero) return HamiltonianClass::PT_symmetric;
    return HamiltonianClass::general_non_Hermitian;
}

const char* to_string(HamiltonianClass k) {
    switch (k) {
        case HamiltonianClass::Hermitian: return "Hermitian";
        case HamiltonianClass::P_symmetric_non_Hermitian: return "P_symmetric_non_Hermitian";
        case HamiltonianClass::PT_symmetric: return "PT_symmetric";
        case HamiltonianClass::general_non_Hermitian: return "general_non_Hermitian";
    }
    return "?";
}

}  // namespace scarf

#pragma once

#include <optional>

#include "scarf/types.hpp"

namespace scarf {

/// The potential V(x) = V1 sech^2(x) + V2 sech(x) tanh(x).
struct PotentialCoefficients {
    Complex V1;
    Complex V2;
};

enum class HamiltonianClass {
    Hermitian,
    P_symmetric_non_Hermitian,
    PT_symmetric,
    general_non_Hermitian,
};

/// Scarf II in the (A, B) form V = (B^2 - A^2 - A) sech^2 x + B(2A+1) sech x tanh x.
/// Instances built from the four-parameter form keep (m, n, alpha, beta)
/// around, since all spectral results are stated in those parameters;
/// A = -(m+1) + i alpha and B = beta + i(n+1/2) hold exactly. alpha and beta
/// are stored complex so the bound-state sector (alpha = i gamma, beta =
/// i delta) uses the same type.
struct ScarfParameters {
    struct Parametrization {
        int m = 0;
        int n = 0;
        Complex alpha;
        Complex beta;
    };

    Complex A;
    Complex B;
    std::optional<Parametrization> origin;

    static ScarfParameters direct(Complex A, Complex B) { return {A, B, std::nullopt}; }
};

/// Construct from (m, n, alpha, beta); m, n must be non-negative.
ScarfParameters from_parametrization(int m, int n, Complex alpha, Complex beta);

PotentialCoefficients coefficients(const ScarfParameters& p);

Complex evaluate_potential(const PotentialCoefficients& c, double x);

/// Classification with tolerance tol_class on the tested components:
/// Hermitian:    Im V1 = Im V2 = 0
/// P-symmetric:  V2 = 0, Im V1 != 0   (potential even in x)
/// PT-symmetric: Im V1 = 0, Re V2 = 0, not Hermitian  (V(-x) = conj V(x))
HamiltonianClass classify(const PotentialCoefficients& c);

const char* to_string(HamiltonianClass k);

}  // namespace scarf

#pragma once

#include "eitqnd/nsys4.hpp"

// Averaging over the inhomogeneous line. The mutual detuning Delta varies
// across the ensemble with Gaussian distribution P(Delta); the two-photon
// detuning delta never does. Closed forms are expressed through
// J(d) = exp(-d^2) erfi(d) = (2/sqrt(pi)) dawson(d), which never overflows.

namespace eitqnd {

/// Series coherence rho_cb to second order with Delta replaced by the line
/// mean Delta_0 (the second-order term is linear in Delta, so the Gaussian
/// average substitutes the mean exactly; the first-order term is Delta-free).
Complex ensemble_rho_cb_second_order(const LambdaParams& p, const InhomLine& line);

struct EnsembleCoherence {
    Complex value;
    /// Closed form assumes the line is well clear of resonance; false when
    /// |Delta_0| < 3 gamma, where the 1/Delta average enters its
    /// principal-value regime.
    bool closed_form_valid;
};

/// varrho_ab = -sqrt(pi/(2 gamma^2)) W1 W2^2 W3^2 / S^2 * J(d),
/// d = Delta_0 / sqrt(2 gamma^2). Uses p.omega3 and the line; p.delta3 is
/// superseded by the ensemble average.
EnsembleCoherence ensemble_coherence_ab(const NParams& p, const InhomLine& line);

/// varrho_cd = -sqrt(pi/(2 gamma^2)) W1^2 W3 / S * J(d).
EnsembleCoherence ensemble_coherence_cd(const NParams& p, const InhomLine& line);

/// Gauss-Hermite average of the light-shift coherence
/// rho_ab(Delta) = -W1 W2^2 W3^2 / (S^2 Delta); the quadrature companion of
/// ensemble_coherence_ab. Refuses (domain_error) when |Delta_0| < 3 gamma:
/// the 1/Delta integrand is then in its principal-value regime and the
/// closed form must be used instead.
Complex ensemble_coherence_ab_quadrature(const NParams& p, const InhomLine& line);

/// J(d) = exp(-d^2) erfi(d), the detuning figure of merit.
double j_curve(double d);

/// argmax of J via golden-section search, tolerance 1e-6 (~0.9241).
double optimal_detuning();

struct DetuningComparison {
    double d;
    double j_at_d;
    double j_at_optimum;
    double ratio_to_optimum;        // J(d) / J(d*)
    double ratio_to_homogeneous;    // J(d) / (1/(sqrt(pi) d)): inhomogeneous vs a
                                    // homogeneous sample detuned by the same Delta_0
};

/// Documented comparison report (not a hard assertion) for the cost of
/// detuning off the inhomogeneous line, e.g. d = 5. The homogeneous baseline
/// is ambiguous; we report the same-detuning candidate and note that the
/// on-resonance homogeneous case has no finite 1/Delta counterpart.
DetuningComparison detuning_comparison(double d);

}  // namespace eitqnd

#pragma once

#include "eitqnd/lambda3.hpp"

// Four-state N system: the Lambda system with a fourth level |d> driven
// off-resonantly on |c>-|d> by the signal field (Omega3, Delta3). Level
// ordering |a>, |b>, |c>, |d>; |d> decays wholly to |c> at rate Gamma.
//
// The perturbative formulas below fix the Lambda operating point at
// Delta = 0, delta = 0.

namespace eitqnd {

struct NParams {
    LambdaParams lambda;
    double omega3;          // signal Rabi frequency, units of Gamma
    double delta3;          // signal detuning, units of Gamma
    double epsilon = 0.01;  // excited-population threshold for the validity flag

    void validate() const {
        lambda.validate();
        if (omega3 < 0.0) throw std::invalid_argument("NParams: omega3 must be >= 0");
    }

    /// True when (Omega3/Delta3)^2 <= epsilon. A flag, not an error: sweeps
    /// may deliberately probe the breakdown of the perturbative regime.
    bool perturbative_valid() const {
        const double r = omega3 / delta3;
        return r * r <= epsilon;
    }
};

ComplexMatrix hamiltonian4(const NParams& p);
Superoperator generator4(const NParams& p);

/// Effective two-photon detuning induced by the off-resonant signal:
/// delta = -Omega3^2 / Delta3. Throws on Delta3 = 0 (resonant drive is out
/// of scope).
double light_shift(double omega3, double delta3);

struct PerturbativeCoherences {
    Complex rho_ab;
    Complex rho_cd;
    Complex rho_cb;
};

/// Leading-order coherences of the driven N system at Delta = delta = 0:
///   rho_ab = -2 W1 W2^2 W3^2 / [(2 D3 + i G) S^2]
///   rho_cd = -2 W1^2 W3     / [(2 D3 + i G) S]
///   rho_cb = +2 W1^2 W2 W3^2 / [(2 D3 - i G) S^2]
/// with S = W1^2 + W2^2.
PerturbativeCoherences coherences_perturbative(const NParams& p);

struct PerturbativePopulations {
    double rho_bb;
    double rho_dd;
};

/// Excited-state populations to leading order in Omega3:
///   rho_dd =     W1^2 / S      * W3^2 / (D3^2 + (G/2)^2)
///   rho_bb = 2 W1^2 W2^2 / S^2 * W3^2 / (D3^2 + (G/2)^2)
/// The rho_bb prefactor is twice the z/(z+1)^2 form sometimes quoted for it;
/// the factor 2 is fixed by the exact steady state of generator4 (the
/// numeric third-order coefficient converges to it as Omega3 -> 0).
PerturbativePopulations populations_perturbative(const NParams& p);

}  // namespace eitqnd

#pragma once

#include "eitqnd/material.hpp"
#include "eitqnd/numkernel.hpp"

// Three-state Lambda system: exact steady states, perturbative series about
// the two-photon resonance, probe dispersion, pulse absorption/bandwidth and
// the EIT group velocity.
//
// Level ordering |a>, |b>, |c>. Rotating frame with Hamiltonian diagonal
// (0, Delta, delta); the field-2 detuning Delta + delta is implicit in this
// frame. |b> decays to |a> and |c> at Gamma/2 each; ground-state dephasing is
// zero.

namespace eitqnd {

struct LambdaParams {
    double omega1;                  // pump Rabi frequency, units of Gamma
    double omega2;                  // probe Rabi frequency, units of Gamma
    double delta_mutual = 0.0;      // Delta
    double delta_two_photon = 0.0;  // delta
    double gamma_sp = 1.0;          // Gamma, == 1 in internal units

    void validate() const {
        if (omega1 < 0.0 || omega2 < 0.0) {
            throw std::invalid_argument("LambdaParams: omega1, omega2 must be >= 0");
        }
        if (!(gamma_sp > 0.0)) {
            throw std::invalid_argument("LambdaParams: gamma_sp must be > 0");
        }
    }
};

ComplexMatrix hamiltonian3(const LambdaParams& p);
Superoperator generator3(const LambdaParams& p);

/// Series expansion of rho_cb in powers of delta about the transparency
/// point. Order 1: -Omega1^2 Omega2 delta / S^2 with S = Omega1^2 + Omega2^2.
/// Order 2 adds the Delta-dependent real term and the i Gamma delta^2 / (2 S)
/// absorption term (the 1/2 is pinned by the exact steady state).
Complex rho_cb_series(const LambdaParams& p, int order);

/// d Re(rho_cb)/d delta at delta = 0: -Omega1^2 Omega2 / S^2.
/// Delta-independent; maximal over Omega2 at Omega1 = sqrt(3) Omega2, where
/// it equals -3 sqrt(3) / (16 Omega1).
double dispersion_rcb(double omega1, double omega2);

/// Residual absorption A = Omega1^2 Omega2 Gamma f^2 / S^3 of a transform
/// limited pulse of spectral width f centered on the EIT window.
double pulse_absorption(double omega1, double omega2, double gamma_sp, double bandwidth);

/// Inverse of pulse_absorption: the bandwidth achieving a target absorption.
double bandwidth_for_absorption(double omega1, double omega2, double gamma_sp,
                                double target_absorption);

/// EIT group velocity of a probe mode carrying n1 photons, in the
/// large-reduction limit (the bulk-index term eta is negligible there and is
/// intentionally unused):
///   v_g = (c eps0 eps_R hbar / (pi omega N mu^2)) (W1^2 n1 + W2^2)^2 / W2^2,
/// with W1 the single-photon pump Rabi frequency. SI units throughout.
double group_velocity(const MaterialParams& m, double omega2, double single_photon_omega1,
                      double n1);

}  // namespace eitqnd

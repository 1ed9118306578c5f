#pragma once

#include "eitqnd/lambda3.hpp"
#include "eitqnd/material.hpp"
#include "eitqnd/numkernel.hpp"

#include <vector>

// QND measurement pipeline: material presets, single-photon Rabi frequency,
// cross-Kerr phase shifts and their limits, probe evolution over the Fock
// expansion, Husimi Q-functions and photon-number distinguishability.

namespace eitqnd {

/// NV-diamond single-mode waveguide design point: 200nm x 200nm x 200um,
/// N = 4e20 m^-3, mu = 1e-30 C m, lambda = 637 nm, eps_R = 10, Gamma = 83 MHz,
/// gamma = 10 GHz, f = 740 kHz, Omega2 = Gamma/10, kappa = 1/50, J = 1/6.
/// mean_detuning is set so that J(Delta_0/sqrt(2 gamma^2)) equals the J
/// scaling (d ~ 3.56).
MaterialParams nv_preset();

/// Single-photon Rabi frequency (lambda / 4 pi) sqrt(3 Gamma f N l), s^-1.
double single_photon_rabi(const MaterialParams& m);

enum class KerrMode {
    lossless,  // real J-form closed expression (default)
    lossy      // complex (2 Delta_3 + i Gamma) denominator at Delta_3 = Delta_0,
               // introducing amplitude damping
};

/// Cross-Kerr phase shift on the probed |a>-|b> transition, s^-1:
///   K_ab = -sqrt(pi/(2 gamma^2)) W1~^2 W2^2 W3~^2 n1 n3 / (W1~^2 n1 + W2^2)^2 * J
/// with W1~ = kappa * Omega2. Negative: a phase retard.
Complex phase_shift_kab(const MaterialParams& m, double n1, double n3,
                        KerrMode mode = KerrMode::lossless);

/// Phase shift on the |c>-|d> transition:
///   K_cd = -sqrt(pi/(2 gamma^2)) W1~^2 W3~^2 n1 n3 / (W1~^2 n1 + W2^2) * J.
/// K_ab / K_cd = 1 / (kappa^2 n1 + 1) identically.
Complex phase_shift_kcd(const MaterialParams& m, double n1, double n3,
                        KerrMode mode = KerrMode::lossless);

struct TScalings {
    double t_ab;  // kappa^2 n1 / (kappa^2 n1 + 1)^2, max 1/4 at kappa^2 n1 = 1
    double t_cd;  // kappa^2 n1 / (kappa^2 n1 + 1), -> 1 as kappa^2 n1 -> inf
};
TScalings t_scalings(double kappa, double n1);

enum class TimeModel {
    fixed,     // t_n = l / v_g(floor(|alpha|^2)) for every Fock component
    per_fock   // t_n = l / v_g(n): group velocity dispersion shortens the
               // interaction for high-n components (default)
};

/// Probe state after the cross-Kerr interaction, in the Fock basis.
struct ProbeState {
    Complex alpha;                    // initial coherent amplitude
    Eigen::VectorXcd amplitudes;      // c_n, n = 0..n_max
    int n_max;

    double norm_squared() const { return amplitudes.squaredNorm(); }
};

class TruncationError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// c_n = exp(-|alpha|^2/2) alpha^n / sqrt(n!) * exp(i K_ab(n, n3) t_n).
/// n_max = ceil(|alpha|^2 + 8 |alpha| + 20); throws TruncationError if the
/// truncation tail exceeds 1e-12 of the total weight.
ProbeState evolve_probe(const MaterialParams& m, Complex alpha, double n3,
                        TimeModel time_model = TimeModel::per_fock,
                        KerrMode mode = KerrMode::lossless);

/// Husimi Q over a centered square window [-extent, extent]^2 sampled at
/// `resolution` points per axis. Q(beta) = |<beta|state>|^2 in [0, 1];
/// (1/pi) * Riemann sum ~= norm of the state.
struct QGrid {
    double extent;
    int resolution;
    Eigen::MatrixXd values;  // values(i, j) = Q(re_i + i im_j), row-major over re

    double total_mass() const;  // (1/pi) * Riemann sum
};
QGrid q_function(const ProbeState& state, double extent, int resolution, int jobs = 1);

struct Distinguishability {
    std::vector<double> n3_values;
    Eigen::MatrixXd overlaps;          // |<alpha'_i | alpha'_j>|^2
    std::vector<double> peak_phases;   // arg <a> per output state, radians
};

/// Pairwise output-state overlaps for a list of signal photon numbers.
Distinguishability distinguishability(const MaterialParams& m, Complex alpha,
                                      const std::vector<double>& n3_list,
                                      TimeModel time_model = TimeModel::per_fock,
                                      KerrMode mode = KerrMode::lossless);

/// |<psi_a|psi_b>|^2 in the Fock basis.
double state_overlap(const ProbeState& a, const ProbeState& b);

}  // namespace eitqnd

#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

// Waveguide/material constants in SI units. Everything elsewhere in the
// library works in units of the spontaneous rate Gamma; SI enters only here.

namespace eitqnd {

namespace constants {
inline constexpr double c = 2.99792458e8;          // m/s
inline constexpr double hbar = 1.054571817e-34;    // J s
inline constexpr double eps0 = 8.8541878128e-12;   // F/m
}  // namespace constants

struct MaterialParams {
    double wavelength;      // lambda, m
    double gamma_sp;        // Gamma, s^-1
    double gamma_inh;       // gamma, s^-1
    double density;         // N, m^-3
    double length;          // l, m
    double dipole;          // mu_ab, C m
    double eps_r;           // relative permittivity
    double bulk_index;      // eta; carried for completeness, unused in the
                            // large-reduction group velocity limit
    double bandwidth;       // f, s^-1
    double kappa;           // Omega~_1 / Omega_2, in (0, 1]
    double omega2;          // Omega_2, s^-1
    double j_scaling;       // J(d) figure of merit applied to ensemble phase shifts
    double mean_detuning;   // Delta_0, s^-1

    void validate() const {
        auto pos = [](double v, const char* name) {
            if (!(v > 0.0)) throw std::invalid_argument(std::string("MaterialParams: ") + name + " must be > 0");
        };
        pos(wavelength, "wavelength");
        pos(gamma_sp, "gamma_sp");
        pos(gamma_inh, "gamma_inh");
        pos(density, "density");
        pos(length, "length");
        pos(dipole, "dipole");
        pos(eps_r, "eps_r");
        pos(bulk_index, "bulk_index");
        pos(bandwidth, "bandwidth");
        pos(omega2, "omega2");
        pos(j_scaling, "j_scaling");
        pos(mean_detuning, "mean_detuning");
        if (!(kappa > 0.0 && kappa <= 1.0)) {
            throw std::invalid_argument("MaterialParams: kappa must be in (0, 1]");
        }
    }

    /// Single-photon pump Rabi frequency Omega~_1 = kappa * Omega_2.
    double single_photon_omega1() const { return kappa * omega2; }

    /// Carrier angular frequency omega = 2 pi c / lambda.
    double carrier_omega() const { return 2.0 * M_PI * constants::c / wavelength; }
};

}  // namespace eitqnd

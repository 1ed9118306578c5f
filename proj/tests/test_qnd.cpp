#include "eitqnd/qnd.hpp"

#include "eitqnd/ensemble.hpp"

#include <doctest.h>

using namespace eitqnd;

namespace {

// reference coherent state in the same truncation scheme
ProbeState coherent(Complex alpha) {
    MaterialParams m = nv_preset();
    return evolve_probe(m, alpha, 0.0);
}

}  // namespace

TEST_CASE("nv preset is self-consistent") {
    const MaterialParams m = nv_preset();
    CHECK_NOTHROW(m.validate());
    CHECK(m.single_photon_omega1() == doctest::Approx(m.kappa * m.omega2).epsilon(1e-15));
    // stored mean detuning reproduces the J scaling
    const double d = m.mean_detuning / (std::sqrt(2.0) * m.gamma_inh);
    CHECK(d == doctest::Approx(3.5410516096031698).epsilon(1e-9));
    CHECK(j_curve(d) == doctest::Approx(m.j_scaling).epsilon(1e-12));
}

TEST_CASE("single-photon Rabi frequency lands near 195 MHz") {
    CHECK(single_photon_rabi(nv_preset()) / 1e6 == doctest::Approx(194.6).epsilon(5e-3));
}

TEST_CASE("Kerr ratio and weak limit") {
    const MaterialParams m = nv_preset();
    for (double n1 : {0.5, 1.0, 100.0, 2500.0}) {
        const Complex kab = phase_shift_kab(m, n1, 1.0);
        const Complex kcd = phase_shift_kcd(m, n1, 1.0);
        const double x = m.kappa * m.kappa * n1;
        CHECK(std::abs(kab / kcd - Complex(1.0 / (x + 1.0), 0.0)) < 1e-12);
    }
    // weak limit: K_ab -> K_weak = -pref W1~^2 W3~^2 n1 n3 / W2^2 as k^2 n1 -> 0
    const double n1 = 1e-4 / (m.kappa * m.kappa);
    const Complex kab = phase_shift_kab(m, n1, 1.0);
    const double w1 = m.single_photon_omega1(), w3 = single_photon_rabi(m);
    const double pref = std::sqrt(M_PI / (2.0 * m.gamma_inh * m.gamma_inh)) * m.j_scaling;
    const double kweak = -pref * w1 * w1 * w3 * w3 * n1 / (m.omega2 * m.omega2);
    CHECK(std::abs((kab.real() - kweak) / kweak) < 1e-2);
}

TEST_CASE("lossy mode damps and rotates the line factor") {
    const MaterialParams m = nv_preset();
    const Complex lossless = phase_shift_kab(m, 1.0, 1.0, KerrMode::lossless);
    const Complex lossy = phase_shift_kab(m, 1.0, 1.0, KerrMode::lossy);
    CHECK(lossless.imag() == 0.0);
    CHECK(lossy.imag() != 0.0);
    CHECK(std::abs(lossy) <= std::abs(lossless) * (1.0 + 1e-12));
}

TEST_CASE("T scalings peak at kappa^2 n1 = 1") {
    const auto at_peak = t_scalings(0.02, 1.0 / (0.02 * 0.02));
    CHECK(at_peak.t_ab == 0.25);
    CHECK(t_scalings(0.02, 0.9 / (0.02 * 0.02)).t_ab < 0.25);
    CHECK(t_scalings(0.02, 1.1 / (0.02 * 0.02)).t_ab < 0.25);
    CHECK(t_scalings(0.02, 1e6).t_cd > t_scalings(0.02, 1e3).t_cd);
}

TEST_CASE("probe evolution: identity at n3 = 0, norm preservation, truncation") {
    const MaterialParams m = nv_preset();
    const ProbeState st = evolve_probe(m, Complex(5.0, 0.0), 0.0);
    CHECK(st.norm_squared() == doctest::Approx(1.0).epsilon(1e-12));
    // n3 = 0: amplitudes are the bare coherent coefficients (real, positive)
    for (int n = 0; n <= st.n_max; ++n) CHECK(st.amplitudes(n).imag() == 0.0);
    const ProbeState kicked = evolve_probe(m, Complex(5.0, 0.0), 1.0);
    CHECK(kicked.norm_squared() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(state_overlap(st, kicked) < 1.0);
    CHECK(state_overlap(st, st) == doctest::Approx(1.0).epsilon(1e-12));
    // large alpha stays within the truncation budget
    const ProbeState big = evolve_probe(m, Complex(25.0, 0.0), 2.0);
    CHECK(std::norm(big.amplitudes(big.n_max)) < 1e-12);
}

TEST_CASE("vacuum probe is the Fock vacuum") {
    const ProbeState vac = coherent(Complex(0.0, 0.0));
    CHECK(std::abs(vac.amplitudes(0) - Complex(1.0, 0.0)) < 1e-15);
    for (int n = 1; n <= vac.n_max; ++n) CHECK(std::abs(vac.amplitudes(n)) == 0.0);
}

TEST_CASE("time models differ once the Kerr phase is on") {
    const MaterialParams m = nv_preset();
    const ProbeState per_fock = evolve_probe(m, Complex(5.0, 0.0), 1.0, TimeModel::per_fock);
    const ProbeState fixed = evolve_probe(m, Complex(5.0, 0.0), 1.0, TimeModel::fixed);
    CHECK(state_overlap(per_fock, fixed) < 1.0 - 1e-12);
}

TEST_CASE("overlap of rotated coherent states matches the analytic formula") {
    const double alpha = 2.0, theta = 0.5;
    ProbeState a = coherent(Complex(alpha, 0.0));
    ProbeState b = coherent(alpha * std::exp(Complex(0.0, theta)));
    const double expect = std::exp(-2.0 * alpha * alpha * (1.0 - std::cos(theta)));
    CHECK(state_overlap(a, b) == doctest::Approx(expect).epsilon(1e-9));
}

TEST_CASE("Q function: peak at alpha, unit mass, vacuum value") {
    const ProbeState st = coherent(Complex(2.0, 0.0));
    const QGrid grid = q_function(st, 6.0, 241, 2);
    CHECK(grid.values.minCoeff() >= 0.0);
    CHECK(grid.total_mass() == doctest::Approx(1.0).epsilon(5e-3));
    Eigen::Index pi = 0, pj = 0;
    grid.values.maxCoeff(&pi, &pj);
    const double h = 2.0 * grid.extent / (grid.resolution - 1);
    CHECK(-grid.extent + pi * h == doctest::Approx(2.0).epsilon(0.03));
    CHECK(std::abs(-grid.extent + pj * h) < h);
    CHECK(grid.values.maxCoeff() == doctest::Approx(1.0).epsilon(1e-3));
    CHECK_THROWS_AS((void)q_function(st, 1.0, 11), std::invalid_argument);
}

TEST_CASE("Q grids are deterministic across thread counts") {
    const ProbeState st = coherent(Complex(1.5, 0.5));
    const QGrid a = q_function(st, 4.0, 101, 1);
    const QGrid b = q_function(st, 4.0, 101, 4);
    CHECK((a.values - b.values).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("distinguishability bookkeeping") {
    const MaterialParams m = nv_preset();
    const auto d = distinguishability(m, Complex(1.0, 0.0), {0.0, 1.0, 2.0});
    REQUIRE(d.overlaps.rows() == 3);
    for (int i = 0; i < 3; ++i) CHECK(d.overlaps(i, i) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(d.overlaps(0, 1) == doctest::Approx(d.overlaps(1, 0)).epsilon(1e-12));
    CHECK(d.peak_phases[0] == doctest::Approx(0.0).epsilon(1e-12));
    // larger n3, larger accumulated phase magnitude
    CHECK(std::abs(d.peak_phases[2]) > std::abs(d.peak_phases[1]));
}

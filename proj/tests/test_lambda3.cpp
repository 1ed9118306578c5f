#include "eitqnd/lambda3.hpp"
#include "eitqnd/qnd.hpp"

#include <doctest.h>

#include <random>

using namespace eitqnd;

namespace {

LambdaParams make(double w1, double w2, double mutual = 0.0, double two_photon = 0.0) {
    LambdaParams p;
    p.omega1 = w1;
    p.omega2 = w2;
    p.delta_mutual = mutual;
    p.delta_two_photon = two_photon;
    return p;
}

}  // namespace

TEST_CASE("resonant Hamiltonian eigenvalues are 0, +-sqrt(W1^2 + W2^2)") {
    const ComplexMatrix h = hamiltonian3(make(1.0, 1.0));
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
    REQUIRE(es.info() == Eigen::Success);
    const double s = std::sqrt(2.0);
    CHECK(es.eigenvalues()(0) == doctest::Approx(-s).epsilon(1e-14));
    CHECK(es.eigenvalues()(1) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(es.eigenvalues()(2) == doctest::Approx(s).epsilon(1e-14));
}

TEST_CASE("steady state at two-photon resonance is the dark state") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> omega(0.05, 2.0), det(-5.0, 5.0);
    for (int rep = 0; rep < 25; ++rep) {
        const LambdaParams p = make(omega(rng), omega(rng), det(rng), 0.0);
        const DensityMatrix rho = steady_state(generator3(p));
        CHECK(rho.is_physical());
        const double s = p.omega1 * p.omega1 + p.omega2 * p.omega2;
        CHECK(std::abs(rho(0, 0) - p.omega2 * p.omega2 / s) < 1e-10);
        CHECK(std::abs(rho(1, 1)) < 1e-10);
        CHECK(std::abs(rho(2, 2) - p.omega1 * p.omega1 / s) < 1e-10);
        CHECK(std::abs(rho(0, 2) - Complex(-p.omega1 * p.omega2 / s, 0.0)) < 1e-10);
    }
}

TEST_CASE("rho_cb series converges quadratically (order 1) and cubically (order 2)") {
    const LambdaParams base = make(0.5, 0.1, 1.3);
    auto exact = [&](double delta) {
        LambdaParams p = base;
        p.delta_two_photon = delta;
        return steady_state(generator3(p)).m(2, 1);
    };
    auto series = [&](double delta, int order) {
        LambdaParams p = base;
        p.delta_two_photon = delta;
        return rho_cb_series(p, order);
    };
    const double d1 = 1e-3, d2 = 5e-4;
    const double e1_first = std::abs(exact(d1) - series(d1, 1));
    const double e2_first = std::abs(exact(d2) - series(d2, 1));
    CHECK(e1_first / e2_first == doctest::Approx(4.0).epsilon(0.15));
    const double e1_second = std::abs(exact(d1) - series(d1, 2));
    const double e2_second = std::abs(exact(d2) - series(d2, 2));
    CHECK(e1_second < e1_first);
    CHECK(e1_second / e2_second == doctest::Approx(8.0).epsilon(0.25));
    CHECK_THROWS_AS((void)rho_cb_series(base, 3), std::invalid_argument);
}

TEST_CASE("first-order dispersion: mutual-detuning independence and maximum") {
    const double w2 = 0.2;
    // series slope equals the closed form for any Delta
    for (double w1 : {0.1, 0.35, 1.2}) {
        const double s = w1 * w1 + w2 * w2;
        CHECK(dispersion_rcb(w1, w2) == doctest::Approx(-w1 * w1 * w2 / (s * s)).epsilon(1e-14));
    }
    // grid argmax of |R_cb| over w2 at fixed w1 lands where w1 = sqrt(3) w2
    const double w1_fixed = 0.4;
    double best_w2 = 0.0, best = 0.0;
    for (int i = 0; i <= 4000; ++i) {
        const double w2s = 0.01 + i * (2.0 - 0.01) / 4000.0;
        const double v = std::abs(dispersion_rcb(w1_fixed, w2s));
        if (v > best) {
            best = v;
            best_w2 = w2s;
        }
    }
    CHECK(w1_fixed / best_w2 == doctest::Approx(std::sqrt(3.0)).epsilon(0.01));
    // ridge value: -3 sqrt(3) / (16 w1)
    CHECK(dispersion_rcb(w1_fixed, w1_fixed / std::sqrt(3.0)) ==
          doctest::Approx(-3.0 * std::sqrt(3.0) / (16.0 * w1_fixed)).epsilon(1e-13));
}

TEST_CASE("pulse absorption and bandwidth inverse") {
    const double w1 = 0.1, w2 = 0.1, gamma = 1.0;
    const double f = bandwidth_for_absorption(w1, w2, gamma, 0.01);
    CHECK(pulse_absorption(w1, w2, gamma, f) == doctest::Approx(0.01).epsilon(1e-12));
    // frozen number: 8.94e-3 Gamma at the symmetric 0.1 Gamma point
    CHECK(f == doctest::Approx(8.94e-3).epsilon(5e-3));
    CHECK_THROWS_AS((void)bandwidth_for_absorption(w1, w2, gamma, 0.0), std::domain_error);
    CHECK_THROWS_AS((void)bandwidth_for_absorption(w1, w2, gamma, 1.5), std::domain_error);
}

TEST_CASE("group velocity: photon-number dependence and NV magnitude") {
    const MaterialParams m = nv_preset();
    const double w1 = m.single_photon_omega1();
    const double v0 = group_velocity(m, m.omega2, w1, 0.0);
    // deep subluminal regime
    CHECK(v0 > 1.0);
    CHECK(v0 < 1e3);
    // v_g(n)/v_g(0) = (kappa^2 n + 1)^2 exactly
    for (double n : {1.0, 10.0, 625.0}) {
        const double expect = std::pow(m.kappa * m.kappa * n + 1.0, 2);
        CHECK(group_velocity(m, m.omega2, w1, n) / v0 == doctest::Approx(expect).epsilon(1e-12));
    }
}

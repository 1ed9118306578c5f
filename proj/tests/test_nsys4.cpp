#include "eitqnd/nsys4.hpp"

#include <doctest.h>

using namespace eitqnd;

namespace {

NParams make(double w1, double w2, double w3, double d3) {
    NParams p;
    p.lambda.omega1 = w1;
    p.lambda.omega2 = w2;
    p.omega3 = w3;
    p.delta3 = d3;
    return p;
}

}  // namespace

TEST_CASE("four-level Hamiltonian structure") {
    const NParams p = make(0.5, 0.1, 0.3, 5.0);
    const ComplexMatrix h = hamiltonian4(p);
    REQUIRE(h.rows() == 4);
    CHECK((h - h.adjoint()).norm() < 1e-15);
    CHECK(std::abs(h(0, 1) - Complex(0.5, 0.0)) < 1e-15);
    CHECK(std::abs(h(2, 1) - Complex(0.1, 0.0)) < 1e-15);
    CHECK(std::abs(h(2, 3) - Complex(0.3, 0.0)) < 1e-15);
    CHECK(std::abs(h(3, 3) - Complex(5.0, 0.0)) < 1e-15);
    CHECK(std::abs(h(0, 2)) < 1e-15);  // no direct a-c coupling
}

TEST_CASE("light shift") {
    CHECK(light_shift(0.3, 5.0) == doctest::Approx(-0.09 / 5.0).epsilon(1e-14));
    CHECK_THROWS_AS((void)light_shift(0.3, 0.0), std::domain_error);
}

TEST_CASE("perturbative validity flag") {
    CHECK(make(0.5, 0.1, 0.01, 5.0).perturbative_valid());
    CHECK_FALSE(make(0.5, 0.1, 1.0, 5.0).perturbative_valid());
}

TEST_CASE("perturbative coherences track the exact steady state, error ~ Omega3^2") {
    const double w1 = 0.5, w2 = 0.1, d3 = 5.0;
    auto rel_errors = [&](double w3) {
        const NParams p = make(w1, w2, w3, d3);
        const DensityMatrix rho = steady_state(generator4(p));
        CHECK(rho.is_physical());
        const auto c = coherences_perturbative(p);
        return std::array<double, 3>{
            std::abs(rho(0, 1) - c.rho_ab) / std::abs(c.rho_ab),
            std::abs(rho(2, 3) - c.rho_cd) / std::abs(c.rho_cd),
            std::abs(rho(2, 1) - c.rho_cb) / std::abs(c.rho_cb),
        };
    };
    const auto coarse = rel_errors(0.04);
    const auto fine = rel_errors(0.01);
    for (int i = 0; i < 3; ++i) {
        CHECK(fine[i] < 1e-2);
        // quartering Omega3 should cut the relative error ~16x
        CHECK(coarse[i] / fine[i] > 8.0);
    }
}

TEST_CASE("perturbative populations: formula vs exact, quadratic shrinkage") {
    const double w1 = 0.5, w2 = 0.1, d3 = 5.0;
    double prev_dd = 0.0, prev_bb = 0.0;
    bool first = true;
    for (double w3 : {0.04, 0.02, 0.01}) {
        const NParams p = make(w1, w2, w3, d3);
        const DensityMatrix rho = steady_state(generator4(p));
        const auto pop = populations_perturbative(p);
        const double err_dd = std::abs(rho(3, 3).real() - pop.rho_dd) / pop.rho_dd;
        const double err_bb = std::abs(rho(1, 1).real() - pop.rho_bb) / pop.rho_bb;
        if (!first) {
            CHECK(prev_dd / err_dd == doctest::Approx(4.0).epsilon(0.5));
            CHECK(prev_bb / err_bb == doctest::Approx(4.0).epsilon(0.5));
        }
        prev_dd = err_dd;
        prev_bb = err_bb;
        first = false;
    }
    CHECK(prev_dd < 1e-2);
    CHECK(prev_bb < 1e-2);
}

TEST_CASE("signal off reduces the N system to the Lambda dark state") {
    const NParams p = make(0.5, 0.1, 0.0, 5.0);
    const DensityMatrix rho = steady_state(generator4(p));
    const double s = 0.5 * 0.5 + 0.1 * 0.1;
    CHECK(std::abs(rho(0, 0) - 0.1 * 0.1 / s) < 1e-10);
    CHECK(std::abs(rho(3, 3)) < 1e-10);
    CHECK(std::abs(rho(1, 1)) < 1e-10);
}

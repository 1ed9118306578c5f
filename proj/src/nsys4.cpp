#include "eitqnd/nsys4.hpp"

namespace eitqnd {

namespace {

ComplexMatrix lowering(Eigen::Index to, Eigen::Index from, Eigen::Index dim) {
    ComplexMatrix s = ComplexMatrix::Zero(dim, dim);
    s(to, from) = 1.0;
    return s;
}

}  // namespace

ComplexMatrix hamiltonian4(const NParams& p) {
    p.validate();
    ComplexMatrix h = ComplexMatrix::Zero(4, 4);
    h(1, 1) = p.lambda.delta_mutual;
    h(2, 2) = p.lambda.delta_two_photon;
    h(3, 3) = p.delta3;
    h(0, 1) = h(1, 0) = p.lambda.omega1;
    h(1, 2) = h(2, 1) = p.lambda.omega2;
    h(2, 3) = h(3, 2) = p.omega3;
    return h;
}

Superoperator generator4(const NParams& p) {
    const double g = p.lambda.gamma_sp;
    Superoperator gen = hamiltonian_superoperator(hamiltonian4(p));
    gen += liouvillian_term(lowering(0, 1, 4), g / 2.0);
    gen += liouvillian_term(lowering(2, 1, 4), g / 2.0);
    gen += liouvillian_term(lowering(2, 3, 4), g);
    return gen;
}

double light_shift(double omega3, double delta3) {
    if (delta3 == 0.0) {
        throw std::domain_error("light_shift: delta3 = 0 (resonant signal) is out of scope");
    }
    return -omega3 * omega3 / delta3;
}

PerturbativeCoherences coherences_perturbative(const NParams& p) {
    p.validate();
    const double w1 = p.lambda.omega1;
    const double w2 = p.lambda.omega2;
    const double w3 = p.omega3;
    const double g = p.lambda.gamma_sp;
    const double s = w1 * w1 + w2 * w2;
    const Complex den_plus(2.0 * p.delta3, g);
    const Complex den_minus(2.0 * p.delta3, -g);
    PerturbativeCoherences c;
    c.rho_ab = -2.0 * w1 * w2 * w2 * w3 * w3 / (den_plus * s * s);
    c.rho_cd = -2.0 * w1 * w1 * w3 / (den_plus * s);
    c.rho_cb = 2.0 * w1 * w1 * w2 * w3 * w3 / (den_minus * s * s);
    return c;
}

PerturbativePopulations populations_perturbative(const NParams& p) {
    p.validate();
    const double w1 = p.lambda.omega1;
    const double w2 = p.lambda.omega2;
    const double w3 = p.omega3;
    const double g = p.lambda.gamma_sp;
    const double s = w1 * w1 + w2 * w2;
    const double lorentz = w3 * w3 / (p.delta3 * p.delta3 + 0.25 * g * g);
    PerturbativePopulations pops;
    pops.rho_dd = w1 * w1 / s * lorentz;
    pops.rho_bb = 2.0 * w1 * w1 * w2 * w2 / (s * s) * lorentz;
    return pops;
}

}  // namespace eitqnd

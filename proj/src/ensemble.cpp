#include "eitqnd/ensemble.hpp"

#include <cmath>

namespace eitqnd {

namespace {

double j_prefactor(const InhomLine& line) {
    return std::sqrt(M_PI / (2.0 * line.gamma_inh * line.gamma_inh));
}

double reduced_detuning(const InhomLine& line) {
    return line.delta0 / (std::sqrt(2.0) * line.gamma_inh);
}

}  // namespace

Complex ensemble_rho_cb_second_order(const LambdaParams& p, const InhomLine& line) {
    line.validate();
    LambdaParams averaged = p;
    averaged.delta_mutual = line.delta0;
    return rho_cb_series(averaged, 2);
}

EnsembleCoherence ensemble_coherence_ab(const NParams& p, const InhomLine& line) {
    p.validate();
    line.validate();
    const double w1 = p.lambda.omega1;
    const double w2 = p.lambda.omega2;
    const double w3 = p.omega3;
    const double s = w1 * w1 + w2 * w2;
    const double value =
        -j_prefactor(line) * w1 * w2 * w2 * w3 * w3 / (s * s) * j_curve(reduced_detuning(line));
    return {Complex(value, 0.0), std::abs(line.delta0) >= 3.0 * line.gamma_inh};
}

EnsembleCoherence ensemble_coherence_cd(const NParams& p, const InhomLine& line) {
    p.validate();
    line.validate();
    const double w1 = p.lambda.omega1;
    const double w2 = p.lambda.omega2;
    const double s = w1 * w1 + w2 * w2;
    const double value =
        -j_prefactor(line) * w1 * w1 * p.omega3 / s * j_curve(reduced_detuning(line));
    return {Complex(value, 0.0), std::abs(line.delta0) >= 3.0 * line.gamma_inh};
}

Complex ensemble_coherence_ab_quadrature(const NParams& p, const InhomLine& line) {
    p.validate();
    line.validate();
    if (std::abs(line.delta0) < 3.0 * line.gamma_inh) {
        throw std::domain_error(
            "ensemble_coherence_ab_quadrature: |Delta_0| < 3 gamma is the principal-value "
            "regime; use the closed (erfi) form");
    }
    const double w1 = p.lambda.omega1;
    const double w2 = p.lambda.omega2;
    const double w3 = p.omega3;
    const double s = w1 * w1 + w2 * w2;
    const double c = -w1 * w2 * w2 * w3 * w3 / (s * s);
    return gauss_hermite_average([c](double delta) { return Complex(c / delta, 0.0); }, line);
}

double j_curve(double d) { return 1.1283791670955126 * dawson(d); }  // 2/sqrt(pi)

double optimal_detuning() {
    // Golden-section maximization of J on [0.5, 1.5].
    const double inv_phi = 0.6180339887498949;
    double a = 0.5, b = 1.5;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = j_curve(c), fd = j_curve(d);
    while (b - a > 1e-6) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = j_curve(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = j_curve(d);
        }
    }
    return 0.5 * (a + b);
}

DetuningComparison detuning_comparison(double d) {
    DetuningComparison cmp;
    cmp.d = d;
    cmp.j_at_d = j_curve(d);
    cmp.j_at_optimum = j_curve(optimal_detuning());
    cmp.ratio_to_optimum = cmp.j_at_d / cmp.j_at_optimum;
    cmp.ratio_to_homogeneous = std::sqrt(M_PI) * d * cmp.j_at_d;
    return cmp;
}

}  // namespace eitqnd

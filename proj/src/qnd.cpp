#include "eitqnd/qnd.hpp"

#include "eitqnd/ensemble.hpp"

#include <cmath>
#include <limits>
#include <thread>

namespace eitqnd {

MaterialParams nv_preset() {
    MaterialParams m;
    m.wavelength = 637e-9;
    m.gamma_sp = 83e6;
    m.gamma_inh = 10e9;
    m.density = 4e20;
    m.length = 200e-6;
    m.dipole = 1e-30;
    m.eps_r = 10.0;
    m.bulk_index = 2.4;
    m.bandwidth = 740e3;
    m.omega2 = m.gamma_sp / 10.0;
    m.kappa = 1.0 / 50.0;
    m.j_scaling = 1.0 / 6.0;

    // Invert J(d) = j_scaling by bisection on the decreasing branch past the
    // optimum, so the stored mean detuning is consistent with the scaling.
    double lo = optimal_detuning(), hi = 30.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (j_curve(mid) > m.j_scaling ? lo : hi) = mid;
    }
    m.mean_detuning = std::sqrt(2.0) * m.gamma_inh * 0.5 * (lo + hi);
    return m;
}

double single_photon_rabi(const MaterialParams& m) {
    m.validate();
    return m.wavelength / (4.0 * M_PI) *
           std::sqrt(3.0 * m.gamma_sp * m.bandwidth * m.density * m.length);
}

namespace {

Complex kerr_line_factor(const MaterialParams& m, KerrMode mode) {
    // Lossless: sqrt(pi/(2 gamma^2)) * J, real. Lossy: the homogeneous
    // (2 Delta_3 + i Gamma) denominator evaluated at the mean detuning,
    // normalized so its modulus matches the lossless factor as Gamma -> 0.
    const double lossless = std::sqrt(M_PI / (2.0 * m.gamma_inh * m.gamma_inh)) * m.j_scaling;
    if (mode == KerrMode::lossless) return Complex(lossless, 0.0);
    const Complex den(2.0 * m.mean_detuning, m.gamma_sp);
    return lossless * (2.0 * m.mean_detuning) / den;
}

}  // namespace

Complex phase_shift_kab(const MaterialParams& m, double n1, double n3, KerrMode mode) {
    m.validate();
    if (n1 < 0.0 || n3 < 0.0) throw std::invalid_argument("phase_shift_kab: n1, n3 must be >= 0");
    const double w1 = m.single_photon_omega1();
    const double w3 = single_photon_rabi(m);
    const double den = w1 * w1 * n1 + m.omega2 * m.omega2;
    return -kerr_line_factor(m, mode) * w1 * w1 * m.omega2 * m.omega2 * w3 * w3 * n1 * n3 /
           (den * den);
}

Complex phase_shift_kcd(const MaterialParams& m, double n1, double n3, KerrMode mode) {
    m.validate();
    if (n1 < 0.0 || n3 < 0.0) throw std::invalid_argument("phase_shift_kcd: n1, n3 must be >= 0");
    const double w1 = m.single_photon_omega1();
    const double w3 = single_photon_rabi(m);
    const double den = w1 * w1 * n1 + m.omega2 * m.omega2;
    return -kerr_line_factor(m, mode) * w1 * w1 * w3 * w3 * n1 * n3 / den;
}

TScalings t_scalings(double kappa, double n1) {
    if (!(kappa > 0.0)) throw std::invalid_argument("t_scalings: kappa must be > 0");
    if (n1 < 0.0) throw std::invalid_argument("t_scalings: n1 must be >= 0");
    const double x = kappa * kappa * n1;
    return {x / ((x + 1.0) * (x + 1.0)), x / (x + 1.0)};
}

ProbeState evolve_probe(const MaterialParams& m, Complex alpha, double n3,
                        TimeModel time_model, KerrMode mode) {
    m.validate();
    const double a2 = std::norm(alpha);
    const int n_max = static_cast<int>(std::ceil(a2 + 8.0 * std::abs(alpha) + 20.0));

    const double w1 = m.single_photon_omega1();
    const double t_fixed =
        m.length / group_velocity(m, m.omega2, w1, std::floor(a2));

    ProbeState state;
    state.alpha = alpha;
    state.n_max = n_max;
    state.amplitudes.resize(n_max + 1);

    const double log_abs_alpha = a2 > 0.0 ? std::log(std::abs(alpha)) : 0.0;
    const double arg_alpha = a2 > 0.0 ? std::arg(alpha) : 0.0;
    for (int n = 0; n <= n_max; ++n) {
        // log-space coherent amplitude: avoids n! overflow at large alpha
        Complex c;
        if (a2 == 0.0) {
            c = n == 0 ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
        } else {
            const double log_mag = -0.5 * a2 + n * log_abs_alpha - 0.5 * std::lgamma(n + 1.0);
            c = std::exp(Complex(log_mag, n * arg_alpha));
        }
        if (n3 > 0.0 && n > 0) {
            const double t_n =
                time_model == TimeModel::fixed
                    ? t_fixed
                    : m.length / group_velocity(m, m.omega2, w1, static_cast<double>(n));
            const Complex k = phase_shift_kab(m, static_cast<double>(n), n3, mode);
            c *= std::exp(Complex(0.0, 1.0) * k * t_n);
        }
        state.amplitudes(n) = c;
    }

    const double total = state.norm_squared();
    if (std::norm(state.amplitudes(n_max)) >= 1e-12 * total) {
        throw TruncationError("evolve_probe: truncation tail exceeds 1e-12 of total weight; "
                              "n_max too small for |alpha| = " +
                              std::to_string(std::abs(alpha)));
    }
    return state;
}

double QGrid::total_mass() const {
    const double h = 2.0 * extent / (resolution - 1);
    return values.sum() * h * h / M_PI;
}

QGrid q_function(const ProbeState& state, double extent, int resolution, int jobs) {
    if (resolution < 2) throw std::invalid_argument("q_function: resolution must be >= 2");
    if (!(extent >= 1.5 * std::abs(state.alpha))) {
        throw std::invalid_argument("q_function: window must cover 1.5 * |alpha|");
    }
    QGrid grid;
    grid.extent = extent;
    grid.resolution = resolution;
    grid.values.resize(resolution, resolution);

    const int n_max = state.n_max;
    std::vector<double> half_lgamma(n_max + 1), log_amp(n_max + 1), arg_amp(n_max + 1);
    for (int n = 0; n <= n_max; ++n) {
        half_lgamma[n] = 0.5 * std::lgamma(n + 1.0);
        const double mag = std::abs(state.amplitudes(n));
        log_amp[n] = mag > 0.0 ? std::log(mag) : -std::numeric_limits<double>::infinity();
        arg_amp[n] = std::arg(state.amplitudes(n));
    }

    const double h = 2.0 * extent / (resolution - 1);
    auto eval_rows = [&](int row_begin, int row_end) {
        for (int i = row_begin; i < row_end; ++i) {
            const double re = -extent + i * h;
            for (int j = 0; j < resolution; ++j) {
                const double im = -extent + j * h;
                const Complex beta(re, im);
                const double b2 = std::norm(beta);
                if (b2 == 0.0) {
                    grid.values(i, j) = std::norm(state.amplitudes(0));
                    continue;
                }
                const double log_abs_beta = std::log(std::abs(beta));
                const double arg_beta = b2 > 0.0 ? std::arg(beta) : 0.0;
                // <beta|state> = sum_n conj(<n|beta>) c_n accumulated in
                // log-space with a max-shift to dodge under/overflow.
                double max_log = -std::numeric_limits<double>::infinity();
                for (int n = 0; n <= n_max; ++n) {
                    const double lm = -0.5 * b2 + n * log_abs_beta - half_lgamma[n] + log_amp[n];
                    if (lm > max_log) max_log = lm;
                }
                double q = 0.0;
                if (std::isfinite(max_log)) {
                    Complex acc(0.0, 0.0);
                    for (int n = 0; n <= n_max; ++n) {
                        const double lm =
                            -0.5 * b2 + n * log_abs_beta - half_lgamma[n] + log_amp[n];
                        if (lm - max_log < -40.0) continue;
                        acc += std::exp(Complex(lm - max_log, -n * arg_beta + arg_amp[n]));
                    }
                    q = std::norm(acc) * std::exp(2.0 * max_log);
                }
                grid.values(i, j) = q;
            }
        }
    };

    const int workers = std::max(1, jobs);
    if (workers == 1) {
        eval_rows(0, resolution);
    } else {
        std::vector<std::thread> pool;
        const int chunk = (resolution + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            const int b = std::min(w * chunk, resolution);
            const int e = std::min(b + chunk, resolution);
            if (b < e) pool.emplace_back(eval_rows, b, e);
        }
        for (auto& t : pool) t.join();
    }
    return grid;
}

double state_overlap(const ProbeState& a, const ProbeState& b) {
    const int n = std::min<int>(a.amplitudes.size(), b.amplitudes.size());
    const Complex ip = a.amplitudes.head(n).dot(b.amplitudes.head(n));
    return std::norm(ip);
}

Distinguishability distinguishability(const MaterialParams& m, Complex alpha,
                                      const std::vector<double>& n3_list,
                                      TimeModel time_model, KerrMode mode) {
    if (n3_list.empty()) throw std::invalid_argument("distinguishability: empty n3 list");
    std::vector<ProbeState> states;
    states.reserve(n3_list.size());
    for (double n3 : n3_list) states.push_back(evolve_probe(m, alpha, n3, time_model, mode));

    Distinguishability result;
    result.n3_values = n3_list;
    const int k = static_cast<int>(states.size());
    result.overlaps.resize(k, k);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            result.overlaps(i, j) = state_overlap(states[i], states[j]);
        }
    }
    for (const auto& st : states) {
        // <a> locates the Q-function peak; its argument is the peak phase.
        Complex mean_a(0.0, 0.0);
        for (int n = 0; n + 1 <= st.n_max; ++n) {
            mean_a += std::conj(st.amplitudes(n)) * st.amplitudes(n + 1) * std::sqrt(n + 1.0);
        }
        result.peak_phases.push_back(std::arg(mean_a));
    }
    return result;
}

}  // namespace eitqnd
